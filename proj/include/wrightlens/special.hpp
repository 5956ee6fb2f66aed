#pragma once

// Real-argument gamma function, the Wright series and its coefficients
// phi_n(alpha, beta) = 1 / (Gamma(alpha n + beta) n!).

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>

#include "wrightlens/errors.hpp"

namespace wrightlens {

/// Distance to a non-positive integer below which gamma reports a pole.
inline constexpr double kPoleTolerance = 1e-12;

namespace detail {

// Lanczos coefficients for g = 7, nine terms.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

template <typename Scalar>
bool near_pole(Scalar x) {
  if (x > Scalar(kPoleTolerance)) return false;
  return std::abs(x - std::round(x)) < Scalar(kPoleTolerance);
}

template <typename Scalar>
[[noreturn]] void throw_pole(Scalar x) {
  std::ostringstream os;
  os.precision(17);
  os << "gamma pole: argument " << x << " is a non-positive integer";
  throw PoleError(os.str());
}

// sin(pi x) with the argument reduced first so that values near integers
// keep their relative accuracy.
template <typename Scalar>
Scalar sin_pi(Scalar x) {
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Scalar r = std::fmod(x, Scalar(2));  // r in (-2, 2)
  if (r > Scalar(1)) r -= Scalar(2);
  if (r < Scalar(-1)) r += Scalar(2);
  // r in [-1, 1]; fold onto [-1/2, 1/2] using sin(pi(1-r)) = sin(pi r).
  if (r > Scalar(0.5)) r = Scalar(1) - r;
  if (r < Scalar(-0.5)) r = Scalar(-1) - r;
  return std::sin(pi * r);
}

// Lanczos partial sum and shifted base for x >= 1/2.
template <typename Scalar>
void lanczos_parts(Scalar x, Scalar& series, Scalar& t) {
  const Scalar xm1 = x - Scalar(1);
  series = Scalar(kLanczosCoeffs[0]);
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    series += Scalar(kLanczosCoeffs[i]) / (xm1 + Scalar(i));
  }
  t = xm1 + Scalar(kLanczosG) + Scalar(0.5);
}

}  // namespace detail

/// Gamma function of a real argument.
///
/// Lanczos approximation on [1/2, inf) and the reflection formula below 1/2.
/// Throws PoleError within kPoleTolerance of a non-positive integer.
/// Overflows to +inf beyond x ~ 171.6.
template <typename Scalar>
Scalar gamma(Scalar x) {
  if (detail::near_pole(x)) detail::throw_pole(x);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  if (x < Scalar(0.5)) {
    return pi / (detail::sin_pi(x) * gamma(Scalar(1) - x));
  }
  Scalar series, t;
  detail::lanczos_parts(x, series, t);
  // t^(x - 1/2) split in two halves so that the power does not overflow
  // before exp(-t) has scaled it down.
  const Scalar half_pow = std::pow(t, (x - Scalar(0.5)) / Scalar(2));
  return std::sqrt(Scalar(2) * pi) * series * (half_pow * std::exp(-t)) *
         half_pow;
}

/// log|Gamma(x)| together with the sign of Gamma(x).
template <typename Scalar>
struct LogGamma {
  Scalar log_abs;
  int sign;
};

template <typename Scalar>
LogGamma<Scalar> log_gamma(Scalar x) {
  if (detail::near_pole(x)) detail::throw_pole(x);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  if (x < Scalar(0.5)) {
    const Scalar s = detail::sin_pi(x);
    const auto reflected = log_gamma(Scalar(1) - x);
    return {std::log(pi / std::abs(s)) - reflected.log_abs,
            (s < 0 ? -1 : 1) * reflected.sign};
  }
  Scalar series, t;
  detail::lanczos_parts(x, series, t);
  return {Scalar(0.5) * std::log(Scalar(2) * pi) + std::log(series) +
              (x - Scalar(0.5)) * std::log(t) - t,
          1};
}

/// Parameters (alpha, beta) of the Wright operator.
template <typename Scalar>
struct WrightParams {
  Scalar alpha{0};
  Scalar beta{1};

  /// Validates alpha > -1 and beta > 0, and that alpha n + beta avoids the
  /// gamma poles for n = 1..max_index.
  static WrightParams make(Scalar alpha, Scalar beta, int max_index = 0) {
    if (!std::isfinite(alpha) || !(alpha > Scalar(-1))) {
      throw ParameterError("alpha must satisfy alpha > -1");
    }
    if (!std::isfinite(beta) || !(beta > Scalar(0))) {
      throw ParameterError("beta must satisfy beta > 0");
    }
    WrightParams p{alpha, beta};
    p.check_indices(max_index);
    return p;
  }

  /// Throws PoleError if alpha n + beta is a gamma pole for some n <= n_max.
  void check_indices(int n_max) const {
    for (int n = 1; n <= n_max; ++n) {
      const Scalar x = alpha * Scalar(n) + beta;
      if (detail::near_pole(x)) {
        std::ostringstream os;
        os.precision(17);
        os << "alpha*n + beta = " << x << " hits a gamma pole at n = " << n;
        throw PoleError(os.str());
      }
    }
  }
};

/// phi_n(alpha, beta) = 1 / (Gamma(alpha n + beta) n!), n >= 1.
template <typename Scalar>
Scalar phi(const WrightParams<Scalar>& params, int n) {
  if (n < 1) throw ParameterError("phi: index must be >= 1");
  const Scalar x = params.alpha * Scalar(n) + params.beta;
  if (n <= 20 && std::abs(x) < Scalar(150)) {
    Scalar factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= Scalar(k);
    return Scalar(1) / (gamma(x) * factorial);
  }
  const auto lg = log_gamma(x);
  const auto lf = log_gamma(Scalar(n + 1));
  return Scalar(lg.sign) * std::exp(-lg.log_abs - lf.log_abs);
}

/// log |phi_n(alpha, beta)|, finite well past the range where phi_n itself
/// underflows.
template <typename Scalar>
Scalar log_abs_phi(const WrightParams<Scalar>& params, int n) {
  if (n < 1) throw ParameterError("phi: index must be >= 1");
  const auto lg = log_gamma(params.alpha * Scalar(n) + params.beta);
  return -lg.log_abs - log_gamma(Scalar(n + 1)).log_abs;
}

/// Result of a Wright series evaluation.
template <typename Scalar>
struct WrightValue {
  std::complex<Scalar> value;
  int terms_used;
};

inline constexpr int kWrightTermCap = 500;

/// Wright series sum_{n >= 1} z^n / (Gamma(alpha n + beta) n!).
///
/// The sum starts at n = 1 (no constant term). Summation stops once a term
/// falls below 1e-16 * (1 + |partial sum|); ConvergenceError after 500 terms.
template <typename Scalar>
WrightValue<Scalar> wright_eval(const WrightParams<Scalar>& params,
                                std::complex<Scalar> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("wright_eval: argument must be finite");
  }
  std::complex<Scalar> sum{0};
  std::complex<Scalar> power{1};
  for (int n = 1; n <= kWrightTermCap; ++n) {
    power *= z;
    const std::complex<Scalar> term = power * phi(params, n);
    sum += term;
    if (std::abs(term) < Scalar(1e-16) * (Scalar(1) + std::abs(sum))) {
      return {sum, n};
    }
  }
  throw ConvergenceError("wright_eval: term cap of 500 reached");
}

}  // namespace wrightlens
