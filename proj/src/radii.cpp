#include "wrightlens/radii.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace wrightlens {

namespace {

constexpr double kPredicateSlack = 1e-12;

RadiusResult bisect(const RadiusQuery& q) {
  RadiusResult res;
  res.truncation_used = q.n_max;
  const double top = constraint_sum(q, kRadiusCeiling);
  if (std::isfinite(top) && top <= 1.0) {
    res.radius = res.bracket_lo = res.bracket_hi = kRadiusCeiling;
    res.residual = top;
    res.unconstrained = true;
    return res;
  }
  double lo = 0.0;
  double hi = kRadiusCeiling;
  while (hi - lo > q.tol) {
    const double mid = 0.5 * (lo + hi);
    const double s = constraint_sum(q, mid);
    // An overflowed sum lies above 1: the upper end moves down past it.
    if (std::isfinite(s) && s <= 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  res.radius = lo;
  res.bracket_lo = lo;
  res.bracket_hi = hi;
  res.residual = constraint_sum(q, lo);
  return res;
}

// Evaluates sum_{n} coeff(n) c_n z^{n+1} for n = 1..N by Horner.
template <typename Weight>
Complex weighted_tail(const Laurent& h, Complex z, Weight weight) {
  Complex acc{0.0, 0.0};
  for (int n = h.truncation(); n >= 1; --n) {
    acc = acc * z + weight(n) * h.coeff(n);
  }
  return acc * z * z;
}

// Sum of the moduli of the terms in weighted_tail: the scale against which
// cancellation to zero is judged.
template <typename Weight>
double tail_scale(const Laurent& h, double r, Weight weight) {
  double acc = 0.0;
  for (int n = h.truncation(); n >= 1; --n) {
    acc = acc * r + std::abs(weight(n) * h.coeff(n));
  }
  return acc * r * r;
}

constexpr double kVanishing = 1e-13;

template <typename Ratio>
PredicateResult scan_predicate(double rho, double r, const GridSpec& grid,
                               Ratio ratio) {
  if (!(r > 0.0) || !(r < 1.0)) {
    throw ParameterError("predicate radius must satisfy 0 < r < 1");
  }
  if (!(rho >= 0.0) || !(rho < 1.0)) {
    throw ParameterError("rho must satisfy 0 <= rho < 1");
  }
  const GridSpec disk = GridSpec::disk(r, grid.radii, grid.angles);
  disk.validate();

  PredicateResult res;
  res.min_defining = std::numeric_limits<double>::infinity();
  for (const Complex& z : disk.points()) {
    // q = shifted ratio; the defining quantity is 1 - Re q.
    const Complex q = ratio(z);
    const double mod = std::abs(q);
    if (mod > res.max_modulus) {
      res.max_modulus = mod;
      res.witness = z;
    }
    const double defining = 1.0 - q.real();
    if (defining < res.min_defining) {
      res.min_defining = defining;
      res.defining_witness = z;
    }
  }
  res.holds = res.max_modulus <= (1.0 - rho) * (1.0 + kPredicateSlack);
  res.defining_holds = res.min_defining > rho;
  return res;
}

[[noreturn]] void throw_vanishing(const char* what, Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << what << " vanishes at z = " << z.real() << (z.imag() < 0 ? "-" : "+")
     << std::abs(z.imag()) << "i";
  throw DivisionError(os.str());
}

}  // namespace

std::string to_string(RadiusKind kind) {
  return kind == RadiusKind::Starlike ? "star" : "convex";
}

void RadiusQuery::validate() const {
  if (!(rho >= 0.0) || !(rho < 1.0)) {
    throw ParameterError("rho must satisfy 0 <= rho < 1");
  }
  if (!(tol >= 1e-12) || !std::isfinite(tol)) {
    throw ParameterError("tol must be >= 1e-12");
  }
  if (n_max < 1) throw ParameterError("n_max must be >= 1");
  if (weights.size() < n_max) {
    throw ParameterError("fewer weights than n_max");
  }
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw ParameterError("weights must be finite and nonnegative");
    }
  }
  if (!(weights.head(n_max).maxCoeff() > 0.0)) {
    throw ParameterError("at least one weight must be positive");
  }
}

double radius_multiplier(RadiusKind kind, int n, double rho) {
  const double m = (n + 2 - rho) / (1.0 - rho);
  return kind == RadiusKind::Starlike ? m : n * m;
}

double constraint_sum(const RadiusQuery& q, double r) {
  const int n_max = std::min<int>(q.n_max, static_cast<int>(q.weights.size()));
  double sum = 0.0;
  double power = r;  // r^{n+1}
  for (int n = 1; n <= n_max; ++n) {
    power *= r;
    const double w = q.weights[n - 1];
    if (w != 0.0) sum += radius_multiplier(q.kind, n, q.rho) * (w * power);
  }
  return sum;
}

RadiusResult solve_radius(const RadiusQuery& q) {
  q.validate();
  RadiusResult res = bisect(q);
  RadiusQuery doubled = q;
  doubled.n_max = std::min<int>(2 * q.n_max, static_cast<int>(q.weights.size()));
  res.radius_doubled = doubled.n_max == q.n_max ? res.radius : bisect(doubled).radius;
  res.truncation_warning = std::abs(res.radius - res.radius_doubled) > 10.0 * q.tol;
  return res;
}

double extremal_radius(RadiusKind kind, double rho, int dominant_n) {
  if (!(rho >= 0.0) || !(rho < 1.0)) {
    throw ParameterError("rho must satisfy 0 <= rho < 1");
  }
  if (dominant_n < 1) throw ParameterError("dominant_n must be >= 1");
  return std::pow(radius_multiplier(kind, dominant_n, rho),
                  -1.0 / (dominant_n + 1));
}

std::vector<std::pair<double, double>> extremal_curve(
    RadiusKind kind, const std::vector<double>& rho_samples, int dominant_n) {
  std::vector<std::pair<double, double>> curve;
  curve.reserve(rho_samples.size());
  for (double rho : rho_samples) {
    curve.emplace_back(rho, extremal_radius(kind, rho, dominant_n));
  }
  return curve;
}

Eigen::VectorXd single_weight(int n) {
  if (n < 1) throw ParameterError("weight index must be >= 1");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  w[n - 1] = 1.0;
  return w;
}

Eigen::VectorXd function_weights(const Laurent& f, const Wright& wp) {
  Eigen::VectorXd w(f.truncation());
  for (int n = 1; n <= f.truncation(); ++n) {
    w[n - 1] = std::abs(phi(wp, n) * f.coeff(n));
  }
  return w;
}

PredicateResult starlike_predicate(const Laurent& h, double rho, double r,
                                   const GridSpec& grid) {
  return scan_predicate(rho, r, grid, [&h](Complex z) {
    // z (z H' + H) = sum (n+1) c_n z^{n+1},  z H = p + sum c_n z^{n+1}.
    const Complex num = weighted_tail(h, z, [](int n) { return double(n + 1); });
    const auto one = [](int) { return 1.0; };
    const Complex den = h.principal() + weighted_tail(h, z, one);
    const double scale = std::abs(h.principal()) + tail_scale(h, std::abs(z), one);
    if (std::abs(den) <= kVanishing * scale) throw_vanishing("H", z);
    return num / den;
  });
}

PredicateResult convex_predicate(const Laurent& h, double rho, double r,
                                 const GridSpec& grid) {
  return scan_predicate(rho, r, grid, [&h](Complex z) {
    // z^2 (z H'' + 2 H') = sum n(n+1) c_n z^{n+1},  z^2 H' = -p + sum n c_n z^{n+1}.
    const Complex num =
        weighted_tail(h, z, [](int n) { return double(n) * (n + 1); });
    const auto nth = [](int n) { return double(n); };
    const Complex den = -h.principal() + weighted_tail(h, z, nth);
    const double scale = std::abs(h.principal()) + tail_scale(h, std::abs(z), nth);
    if (std::abs(den) <= kVanishing * scale) throw_vanishing("H'", z);
    return num / den;
  });
}

}  // namespace wrightlens
