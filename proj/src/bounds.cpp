#include "wrightlens/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace wrightlens {

namespace {

// (k+1)(1-lambda) + 2 (1 - lambda + k lambda) Lambda
double product_numerator(const ClassParams& cp, int k) {
  const double l = cp.lambda;
  return (k + 1) * (1.0 - l) + 2.0 * (1.0 - l + k * l) * cp.big_lambda();
}

void require_n_max(int n_max) {
  if (n_max < 1) throw ParameterError("n_max must be >= 1");
}

[[noreturn]] void throw_overflow(int n) {
  std::ostringstream os;
  os << "bound sequence leaves the double range at n = " << n;
  throw OverflowError(os.str());
}

}  // namespace

ClassParams ClassParams::make(double theta, double lambda, double gamma,
                              bool relaxed) {
  if (!std::isfinite(theta) || !(std::abs(theta) < std::numbers::pi / 2)) {
    throw ParameterError("theta must satisfy |theta| < pi/2");
  }
  if (!std::isfinite(lambda) || lambda < 0.0 || !(lambda < 0.5)) {
    throw ParameterError("lambda must satisfy 0 <= lambda < 1/2");
  }
  if (!std::isfinite(gamma)) throw ParameterError("gamma must be finite");
  if (relaxed) {
    if (!(gamma > 0.0)) {
      throw ParameterError("gamma must satisfy gamma > 0 (relaxed mode)");
    }
  } else if (!(gamma > 1.0)) {
    throw ParameterError(
        "gamma must satisfy gamma > 1 (pass the relaxed flag to allow 0 < "
        "gamma <= 1)");
  }
  ClassParams cp{theta, lambda, gamma, relaxed};
  if (!(cp.big_lambda() > 0.0)) {
    throw ParameterError("cos(theta)(1 + gamma(1 - 2 lambda)) must be > 0");
  }
  return cp;
}

double ClassParams::big_lambda() const {
  return std::cos(theta) * (1.0 + gamma * (1.0 - 2.0 * lambda));
}

BoundSequence bound_sequence_recursive(const ClassParams& cp, const Wright& wp,
                                       int n_max) {
  require_n_max(n_max);
  wp.check_indices(n_max);
  const double l = cp.lambda;
  const double big = cp.big_lambda();

  Eigen::VectorXd a(n_max);
  double phi_prev = std::abs(phi(wp, 1));
  a[0] = (1.0 - 2.0 * l) * big / ((1.0 - l) * phi_prev);
  // 1 - 2 lambda + sum_{k<=n} |phi_k| (1 - lambda + k lambda) A_k
  double running = (1.0 - 2.0 * l) + phi_prev * (1.0 - l + l) * a[0];
  for (int n = 1; n < n_max; ++n) {
    const double phi_next = std::abs(phi(wp, n + 1));
    a[n] = 2.0 * big / ((n + 2) * (1.0 - l) * phi_next) * running;
    if (!std::isfinite(a[n])) throw_overflow(n + 1);
    running += phi_next * (1.0 - l + (n + 1) * l) * a[n];
  }
  return {std::move(a), cp, wp, BoundMethod::Recursive};
}

BoundSequence bound_sequence_closed(const ClassParams& cp, const Wright& wp,
                                    int n_max) {
  require_n_max(n_max);
  wp.check_indices(n_max);
  const double l = cp.lambda;
  const double prefactor = cp.big_lambda() * (1.0 - 2.0 * l);

  Eigen::VectorXd a(n_max);
  if (n_max <= 50) {
    double product = 1.0;
    double one_minus_pow = 1.0;
    for (int n = 1; n <= n_max; ++n) {
      if (n >= 2) product *= product_numerator(cp, n - 1) / (n + 1);
      one_minus_pow *= (1.0 - l);
      a[n - 1] = prefactor / (one_minus_pow * std::abs(phi(wp, n))) * product;
      if (!std::isfinite(a[n - 1])) throw_overflow(n);
    }
  } else {
    const double log_prefactor = std::log(prefactor);
    const double log_one_minus = std::log1p(-l);
    double log_product = 0.0;
    for (int n = 1; n <= n_max; ++n) {
      if (n >= 2) {
        log_product += std::log(product_numerator(cp, n - 1) / (n + 1));
      }
      const double log_a =
          log_prefactor - n * log_one_minus - log_abs_phi(wp, n) + log_product;
      a[n - 1] = std::exp(log_a);
      if (!std::isfinite(a[n - 1])) throw_overflow(n);
    }
  }
  return {std::move(a), cp, wp, BoundMethod::ClosedForm};
}

Eigen::VectorXd scaled_bounds(const ClassParams& cp, int n_max) {
  require_n_max(n_max);
  const double l = cp.lambda;
  Eigen::VectorXd s(n_max);
  s[0] = cp.big_lambda() * (1.0 - 2.0 * l) / (1.0 - l);
  for (int n = 1; n < n_max; ++n) {
    s[n] = s[n - 1] * product_numerator(cp, n) / ((n + 2) * (1.0 - l));
    if (!std::isfinite(s[n])) throw_overflow(n + 1);
  }
  return s;
}

double bound_ratio(const ClassParams& cp, const Wright& wp, int n) {
  if (n < 1) throw ParameterError("bound_ratio: n must be >= 1");
  const double l = cp.lambda;
  return product_numerator(cp, n) / ((n + 2) * (1.0 - l)) *
         std::exp(log_abs_phi(wp, n) - log_abs_phi(wp, n + 1));
}

BoundReport coefficient_bound_check(const Laurent& f, const ClassParams& cp,
                                    const Wright& wp, double rel_slack) {
  BoundReport report;
  const int n_max = f.truncation();
  if (n_max == 0) return report;
  wp.check_indices(n_max);
  const Eigen::VectorXd scaled = scaled_bounds(cp, n_max);
  report.records.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    // A_n = (|phi_n| A_n) / |phi_n|, formed in log space; +inf is a vacuous
    // bound rather than an error here.
    const double bound = std::exp(std::log(scaled[n - 1]) - log_abs_phi(wp, n));
    const double abs_a = std::abs(f.coeff(n));
    const bool ok = abs_a <= bound * (1.0 + rel_slack);
    report.records.push_back({n, abs_a, bound, ok});
    if (!ok && report.all_satisfied) {
      report.all_satisfied = false;
      report.first_violation = n;
    }
  }
  return report;
}

IdentityResiduals series_identity_oracle(const Laurent& f, const Taylor& tau,
                                         const ClassParams& cp,
                                         const Wright& wp) {
  const int n_max = f.truncation();
  const double l = cp.lambda;
  const double c = std::cos(cp.theta);
  const double s = std::sin(cp.theta);
  const Complex rot = std::polar(1.0, cp.theta);
  const Laurent h = apply_operator(wp, f);

  // Both sides multiplied by z: index m carries the power z^{m-1}.
  ComplexVector<double> lhs = ComplexVector<double>::Zero(n_max + 2);
  ComplexVector<double> mix = ComplexVector<double>::Zero(n_max + 2);
  lhs[0] = -h.principal();
  mix[0] = (1.0 - 2.0 * l) * h.principal();
  for (int n = 1; n <= n_max; ++n) {
    lhs[n + 1] = double(n) * h.coeff(n);
    mix[n + 1] = (1.0 - l + n * l) * h.coeff(n);
  }
  lhs *= rot;

  const double tau_scale = c * (1.0 / (1.0 - 2.0 * l) + cp.gamma);
  ComplexVector<double> bracket = -tau_scale * tau.coeffs();
  bracket[0] += Complex(cp.gamma * c, -s / (1.0 - 2.0 * l));

  const Taylor rhs = Taylor(mix) * Taylor(bracket);
  const Eigen::Index len = rhs.coeffs().size();
  return {-1, lhs.head(len) - rhs.coeffs()};
}

ComplexVector<double> phased_extraction_residuals(const Laurent& f,
                                                   const Taylor& tau,
                                                   const ClassParams& cp,
                                                   const Wright& wp) {
  const double l = cp.lambda;
  const double big = cp.big_lambda();
  const Complex rot = std::polar(1.0, cp.theta);
  const Complex rot_inv = std::conj(rot);
  const int n_max = std::min(f.truncation(), tau.order() - 1);
  if (n_max < 1) return {};

  ComplexVector<double> h(n_max);  // phi_k a_k
  for (int k = 1; k <= n_max; ++k) h[k - 1] = phi(wp, k) * f.coeff(k);

  ComplexVector<double> res(n_max);
  res[0] = 2.0 * rot * (1.0 - l) * h[0] + big * (1.0 - 2.0 * l) * tau[2];
  for (int n = 2; n <= n_max; ++n) {
    Complex inner = (1.0 - 2.0 * l) * tau[n + 1];
    for (int k = 1; k <= n - 1; ++k) {
      inner += (1.0 - l + k * l) * h[k - 1] * tau[n - k];
    }
    res[n - 1] = rot * double(n + 1) * (1.0 - l) * h[n - 1] + rot_inv * big * inner;
  }
  return res;
}

}  // namespace wrightlens
