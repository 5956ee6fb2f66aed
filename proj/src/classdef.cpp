#include "wrightlens/classdef.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace wrightlens {

namespace {

std::string format_point(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

// Constants of A = k1 - k2 (1+w)/(1-w).
struct AConstants {
  Complex k1;
  Complex k2;
};

AConstants a_constants(const ClassParams& cp) {
  const double c = std::cos(cp.theta);
  const double s = std::sin(cp.theta);
  const double l = cp.lambda;
  const Complex rot_inv = std::polar(1.0, -cp.theta);
  return {rot_inv * Complex(cp.gamma * c, -s / (1.0 - 2.0 * l)),
          rot_inv * c * (1.0 / (1.0 - 2.0 * l) + cp.gamma)};
}

// Number of zeros of w(z) - target in the unit disk, by the winding of
// w - target along |z| = 1.
int zeros_inside(const SchwarzFunction& w, Complex target) {
  constexpr int kSamples = 4096;
  double winding = 0.0;
  Complex prev = w(Complex(1.0, 0.0)) - target;
  for (int k = 1; k <= kSamples; ++k) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * k / kSamples);
    const Complex cur = w(z) - target;
    winding += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(winding / (2.0 * std::numbers::pi)));
}

// Throws if 1 - lambda A(z) has a zero in |z| < 1.
void check_mix_denominator(const ClassParams& cp, const SchwarzFunction& w) {
  if (cp.lambda == 0.0) return;
  const auto [k1, k2] = a_constants(cp);
  // 1 - lambda A = 0  <=>  (1+w)/(1-w) = t  <=>  w = (t-1)/(t+1).
  const Complex t = (k1 - 1.0 / cp.lambda) / k2;
  if (t == Complex(-1.0, 0.0)) return;
  const Complex w_star = (t - 1.0) / (t + 1.0);
  if (std::abs(w_star) >= 1.0 || w.coefficient_mass() < std::abs(w_star)) {
    return;
  }
  if (zeros_inside(w, w_star) > 0) {
    throw DivisionError("1 - lambda A(z) vanishes inside the unit disk (w(z) = " +
                        format_point(w_star) + ")");
  }
}

}  // namespace

// -- SchwarzFunction ---------------------------------------------------------

SchwarzFunction::SchwarzFunction(ComplexVector<double> coeffs)
    : c_(std::move(coeffs)) {
  if (!detail::all_finite(c_)) {
    throw ParameterError("Schwarz coefficients must be finite");
  }
  if (!(coefficient_mass() < 1.0)) {
    throw ParameterError("Schwarz polynomial needs sum |c_k| < 1");
  }
}

SchwarzFunction::SchwarzFunction(std::initializer_list<Complex> coeffs)
    : SchwarzFunction([&] {
        ComplexVector<double> v(static_cast<Eigen::Index>(coeffs.size()));
        std::copy(coeffs.begin(), coeffs.end(), v.data());
        return v;
      }()) {}

SchwarzFunction SchwarzFunction::monomial(Complex c, int power) {
  if (power < 1) throw ParameterError("Schwarz monomial power must be >= 1");
  ComplexVector<double> v = ComplexVector<double>::Zero(power);
  v[power - 1] = c;
  return SchwarzFunction(std::move(v));
}

double SchwarzFunction::coefficient_mass() const {
  return c_.cwiseAbs().sum();
}

Complex SchwarzFunction::operator()(Complex z) const {
  Complex acc{0.0, 0.0};
  for (Eigen::Index k = c_.size() - 1; k >= 0; --k) acc = acc * z + c_[k];
  return acc * z;
}

Taylor SchwarzFunction::taylor(int order) const {
  ComplexVector<double> t = ComplexVector<double>::Zero(order + 1);
  const Eigen::Index m = std::min<Eigen::Index>(c_.size(), order);
  t.segment(1, m) = c_.head(m);
  return Taylor(std::move(t));
}

// -- tau ---------------------------------------------------------------------

TauEvaluator::TauEvaluator(const Laurent& f, const ClassParams& cp,
                           const Wright& wp)
    : cp_(cp) {
  const Laurent h = apply_operator(wp, f);
  zh_prime_ = z_derivative(h);
  mixed_ = lambda_mix(h, cp.lambda);
}

Complex TauEvaluator::ratio(Complex z) const {
  const Complex num = eval(zh_prime_, z);
  const Complex den = eval(mixed_, z);
  // Judge cancellation against the sum of the term moduli.
  const double r = std::abs(z);
  double scale = 0.0;
  for (int n = mixed_.truncation(); n >= 1; --n) {
    scale = scale * r + std::abs(mixed_.coeff(n));
  }
  scale = scale * r + std::abs(mixed_.principal()) / r;
  if (std::abs(den) <= 1e-13 * scale || !std::isfinite(std::abs(num / den))) {
    throw DivisionError("(1-lambda) H + lambda z H' vanishes at z = " +
                        format_point(z));
  }
  return num / den;
}

Complex TauEvaluator::tau(Complex z) const {
  const double c = std::cos(cp_.theta);
  const double s = std::sin(cp_.theta);
  const double l = cp_.lambda;
  const Complex numerator = std::polar(1.0, cp_.theta) * ratio(z) -
                            cp_.gamma * c + Complex(0.0, s / (1.0 - 2.0 * l));
  return numerator / (-c * (1.0 / (1.0 - 2.0 * l) + cp_.gamma));
}

Complex tau_transform(const Laurent& f, const ClassParams& cp, const Wright& wp,
                      Complex z) {
  return TauEvaluator(f, cp, wp).tau(z);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Member:
      return "Member";
    case Verdict::NotMember:
      return "NotMember";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

MembershipReport membership_check(const Laurent& f, const ClassParams& cp,
                                  const Wright& wp, const GridSpec& grid,
                                  double tol) {
  grid.validate_membership();
  wp.check_indices(f.truncation());
  const TauEvaluator tau(f, cp, wp);

  MembershipReport report;
  report.grid = grid;
  report.min_re_tau = std::numeric_limits<double>::infinity();
  bool division_failure = false;
  for (const Complex& z : grid.points()) {
    try {
      const double re = tau.tau(z).real();
      report.samples.push_back({z, re});
      if (re < report.min_re_tau) {
        report.min_re_tau = re;
        report.argmin_z = z;
      }
    } catch (const DivisionError& e) {
      if (!division_failure) report.diagnostic = e.what();
      division_failure = true;
    }
  }

  if (report.min_re_tau < -tol) {
    report.verdict = Verdict::NotMember;
  } else if (division_failure) {
    report.verdict = Verdict::Inconclusive;
  } else if (report.min_re_tau > tol) {
    report.verdict = Verdict::Member;
  } else {
    report.verdict = Verdict::Inconclusive;
    report.diagnostic = "min Re tau within tolerance of 0";
  }
  return report;
}

// -- Schwarz-driven generation -------------------------------------------------

Complex a_of_t(const ClassParams& cp, const SchwarzFunction& w, Complex t) {
  const auto [k1, k2] = a_constants(cp);
  const Complex wt = w(t);
  return k1 - k2 * (1.0 + wt) / (1.0 - wt);
}

Complex log_derivative_target(const ClassParams& cp, const SchwarzFunction& w,
                              Complex t) {
  const Complex a = a_of_t(cp, w, t);
  return (1.0 - cp.lambda) * a / (1.0 - cp.lambda * a);
}

GeneratedFunction schwarz_generate(const ClassParams& cp, const Wright& wp,
                                   const SchwarzFunction& w, int n_max) {
  if (n_max < 1) throw ParameterError("n_max must be >= 1");
  wp.check_indices(n_max);
  check_mix_denominator(cp, w);

  // g_0 .. g_{n_max+1} are needed for h_1 .. h_{n_max}.
  const int order = n_max + 1;
  const auto [k1, k2] = a_constants(cp);
  const Taylor wt = w.taylor(order);
  const Taylor one = Taylor::constant(1.0, order);
  const Taylor tau = (one + wt) / (one - wt);
  const Taylor a = Taylor::constant(k1, order) - k2 * tau;
  const Taylor g = (Complex(1.0 - cp.lambda) * a) / (one - Complex(cp.lambda) * a);

  if (std::abs(g[0] + 1.0) > 1e-10) {
    std::ostringstream os;
    os.precision(17);
    os << "G(0) = " << g[0].real() << "+" << g[0].imag()
       << "i, expected -1; the construction is inconsistent";
    throw SingularError(os.str());
  }

  // H = z^{-1} sum_m e_m z^m with e_0 = 1 and e_1 = 0 (no constant term).
  // Coefficient z^{m-1} of z H' = G H:  (m - 1 - g_0) e_m = sum_{j=1}^{m} g_j e_{m-j}.
  ComplexVector<double> e = ComplexVector<double>::Zero(order + 1);
  e[0] = 1.0;
  for (int m = 2; m <= order; ++m) {
    Complex acc{0.0, 0.0};
    for (int j = 1; j <= m; ++j) acc += g[j] * e[m - j];
    e[m] = acc / (double(m - 1) - g[0]);
  }

  ComplexVector<double> h = e.segment(2, n_max);
  ComplexVector<double> a_coeffs(n_max);
  for (int n = 1; n <= n_max; ++n) {
    a_coeffs[n - 1] = h[n - 1] / phi(wp, n);
    if (!std::isfinite(std::abs(a_coeffs[n - 1]))) {
      std::ostringstream os;
      os << "a_" << n << " = h_n / phi_n overflows; reduce n_max";
      throw OverflowError(os.str());
    }
  }
  return {Laurent(std::move(a_coeffs)), Laurent(std::move(h)), g[1]};
}

// -- convolution ---------------------------------------------------------------

Complex convolution_constant(const ClassParams& cp, Complex eta) {
  const double c = std::cos(cp.theta);
  const double s = std::sin(cp.theta);
  const double l = cp.lambda;
  return -cp.gamma * c * (1.0 - 2.0 * l) * (1.0 - eta) +
         Complex(0.0, s) * (1.0 - eta) +
         (1.0 + eta) * c * (1.0 + cp.gamma * (1.0 - 2.0 * l));
}

Laurent convolution_kernel(const ClassParams& cp, const Wright& wp, Complex eta,
                           int n_max) {
  if (std::abs(std::abs(eta) - 1.0) > 1e-12) {
    throw ParameterError("convolution kernel needs |eta| = 1");
  }
  if (std::abs(eta - 1.0) <= 1e-12) {
    throw ParameterError("convolution kernel needs eta != 1");
  }
  const Laurent kw = wright_kernel(wp, n_max);
  const Complex first = (1.0 - 2.0 * cp.lambda) * (1.0 - eta);
  const Complex second = std::polar(1.0, -cp.theta) * convolution_constant(cp, eta);
  return scale(first, z_derivative(kw)) + scale(second, lambda_mix(kw, cp.lambda));
}

ScanReport convolution_scan(const Laurent& f, const ClassParams& cp,
                            const Wright& wp, int eta_count,
                            const GridSpec& grid, double tol) {
  if (eta_count < 8) throw ParameterError("eta_count must be >= 8");
  grid.validate_membership();
  const auto points = grid.points();

  ScanReport report;
  report.min_modulus = std::numeric_limits<double>::infinity();
  for (int j = 1; j < eta_count; ++j) {
    const Complex eta = std::polar(1.0, 2.0 * std::numbers::pi * j / eta_count);
    const Laurent conv = hadamard(f, convolution_kernel(cp, wp, eta, f.truncation()));
    EtaMinimum em{eta, std::numeric_limits<double>::infinity(), {}};
    for (const Complex& z : points) {
      const double m = std::abs(eval(conv, z));
      if (m < em.min_modulus) {
        em.min_modulus = m;
        em.argmin_z = z;
      }
    }
    if (em.min_modulus < report.min_modulus) {
      report.min_modulus = em.min_modulus;
      report.argmin_z = em.argmin_z;
      report.argmin_eta = eta;
    }
    report.per_eta.push_back(em);
  }
  report.vanishes = report.min_modulus < tol;
  return report;
}

// -- sufficiency ---------------------------------------------------------------

SufficiencyResult sufficiency_predicate(const Laurent& f, const ClassParams& cp,
                                        const Wright& wp, const GridSpec& grid) {
  grid.validate_membership();
  const TauEvaluator tau(f, cp, wp);
  SufficiencyResult result;
  result.threshold = (1.0 + cp.gamma) * std::cos(cp.theta);
  for (const Complex& z : grid.points()) {
    const double lhs = std::abs(tau.ratio(z) + 1.0);
    if (lhs > result.max_lhs) {
      result.max_lhs = lhs;
      result.argmax_z = z;
    }
  }
  result.holds = result.max_lhs <= result.threshold;
  return result;
}

bool epsilon_sufficiency_hypothesis(const ClassParams& cp, double eps) {
  return std::cos(cp.theta) <= (eps - 1.0) / (1.0 + cp.gamma);
}

}  // namespace wrightlens
