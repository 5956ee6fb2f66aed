#pragma once

// Truncated series 1/z * principal + sum_{n=1}^{N} a_n z^n (members of the
// meromorphic family), plain Taylor series, and the coefficient operators
// built on them.

#include <Eigen/Core>

#include <algorithm>
#include <complex>
#include <initializer_list>
#include <sstream>

#include "wrightlens/errors.hpp"
#include "wrightlens/special.hpp"

namespace wrightlens {

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

namespace detail {

template <typename Scalar>
bool all_finite(const ComplexVector<Scalar>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Truncated Laurent series principal/z + a_1 z + ... + a_N z^N.
///
/// An empty tail (N = 0) stands for the bare pole principal/z.
template <typename Scalar>
class LaurentSeries {
 public:
  using Complex = std::complex<Scalar>;
  using Coeffs = ComplexVector<Scalar>;

  LaurentSeries() = default;

  explicit LaurentSeries(Coeffs tail, Complex principal = Complex(1))
      : principal_(principal), tail_(std::move(tail)) {
    if (!std::isfinite(principal_.real()) ||
        !std::isfinite(principal_.imag()) || !detail::all_finite(tail_)) {
      throw ParameterError("LaurentSeries: coefficients must be finite");
    }
  }

  LaurentSeries(std::initializer_list<Complex> tail,
                Complex principal = Complex(1))
      : LaurentSeries(from_list(tail), principal) {}

  /// 1/z with an empty tail.
  static LaurentSeries pole() { return LaurentSeries(); }

  const Complex& principal() const { return principal_; }
  const Coeffs& coeffs() const { return tail_; }
  int truncation() const { return static_cast<int>(tail_.size()); }

  /// a_n for 1 <= n <= N.
  const Complex& coeff(int n) const { return tail_[n - 1]; }

 private:
  static Coeffs from_list(std::initializer_list<Complex> tail) {
    Coeffs c(static_cast<Eigen::Index>(tail.size()));
    std::copy(tail.begin(), tail.end(), c.data());
    return c;
  }

  Complex principal_{1};
  Coeffs tail_;
};

/// Truncated power series c_0 + c_1 z + ... + c_N z^N.
template <typename Scalar>
class TaylorSeries {
 public:
  using Complex = std::complex<Scalar>;
  using Coeffs = ComplexVector<Scalar>;

  TaylorSeries() : c_(Coeffs::Zero(1)) {}

  explicit TaylorSeries(Coeffs c) : c_(std::move(c)) {
    if (c_.size() == 0) throw ParameterError("TaylorSeries: empty");
    if (!detail::all_finite(c_)) {
      throw ParameterError("TaylorSeries: coefficients must be finite");
    }
  }

  TaylorSeries(std::initializer_list<Complex> c) : TaylorSeries(from_list(c)) {}

  /// Constant series of the given order.
  static TaylorSeries constant(Complex value, int order) {
    Coeffs c = Coeffs::Zero(order + 1);
    c[0] = value;
    return TaylorSeries(std::move(c));
  }

  const Coeffs& coeffs() const { return c_; }
  const Complex& operator[](Eigen::Index k) const { return c_[k]; }
  int order() const { return static_cast<int>(c_.size()) - 1; }

  Complex eval(Complex z) const {
    Complex acc{0};
    for (Eigen::Index k = c_.size() - 1; k >= 0; --k) acc = acc * z + c_[k];
    return acc;
  }

 private:
  static Coeffs from_list(std::initializer_list<Complex> c) {
    Coeffs v(static_cast<Eigen::Index>(c.size()));
    std::copy(c.begin(), c.end(), v.data());
    return v;
  }

  Coeffs c_;
};

// -- Taylor arithmetic. Binary operations truncate to the shorter operand. --

template <typename Scalar>
TaylorSeries<Scalar> operator+(const TaylorSeries<Scalar>& a,
                               const TaylorSeries<Scalar>& b) {
  const Eigen::Index n = std::min(a.coeffs().size(), b.coeffs().size());
  return TaylorSeries<Scalar>(a.coeffs().head(n) + b.coeffs().head(n));
}

template <typename Scalar>
TaylorSeries<Scalar> operator-(const TaylorSeries<Scalar>& a,
                               const TaylorSeries<Scalar>& b) {
  const Eigen::Index n = std::min(a.coeffs().size(), b.coeffs().size());
  return TaylorSeries<Scalar>(a.coeffs().head(n) - b.coeffs().head(n));
}

template <typename Scalar>
TaylorSeries<Scalar> operator*(std::complex<Scalar> s,
                               const TaylorSeries<Scalar>& a) {
  return TaylorSeries<Scalar>(s * a.coeffs());
}

/// Cauchy product.
template <typename Scalar>
TaylorSeries<Scalar> operator*(const TaylorSeries<Scalar>& a,
                               const TaylorSeries<Scalar>& b) {
  const Eigen::Index n = std::min(a.coeffs().size(), b.coeffs().size());
  ComplexVector<Scalar> c = ComplexVector<Scalar>::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j <= k; ++j) c[k] += a[j] * b[k - j];
  }
  return TaylorSeries<Scalar>(std::move(c));
}

/// Series quotient a / b; b must have a nonzero constant term.
template <typename Scalar>
TaylorSeries<Scalar> operator/(const TaylorSeries<Scalar>& a,
                               const TaylorSeries<Scalar>& b) {
  if (b[0] == std::complex<Scalar>(0)) {
    throw DivisionError("TaylorSeries division: divisor has zero constant term");
  }
  const Eigen::Index n = std::min(a.coeffs().size(), b.coeffs().size());
  ComplexVector<Scalar> q(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    std::complex<Scalar> acc = a[k];
    for (Eigen::Index j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return TaylorSeries<Scalar>(std::move(q));
}

// -- Laurent operators. --

/// Coefficientwise (Hadamard) product; truncation is the shorter of the two.
template <typename Scalar>
LaurentSeries<Scalar> hadamard(const LaurentSeries<Scalar>& f,
                               const LaurentSeries<Scalar>& g) {
  const Eigen::Index n = std::min(f.coeffs().size(), g.coeffs().size());
  return LaurentSeries<Scalar>(
      f.coeffs().head(n).cwiseProduct(g.coeffs().head(n)),
      f.principal() * g.principal());
}

/// Kernel series 1/z + sum phi_n z^n of the Wright operator.
template <typename Scalar>
LaurentSeries<Scalar> wright_kernel(const WrightParams<Scalar>& params,
                                    int truncation) {
  ComplexVector<Scalar> k(truncation);
  for (int n = 1; n <= truncation; ++n) k[n - 1] = phi(params, n);
  return LaurentSeries<Scalar>(std::move(k));
}

/// W_{alpha,beta} f: coefficient n becomes phi_n a_n, principal unchanged.
template <typename Scalar>
LaurentSeries<Scalar> apply_operator(const WrightParams<Scalar>& params,
                                     const LaurentSeries<Scalar>& f) {
  ComplexVector<Scalar> c(f.truncation());
  for (int n = 1; n <= f.truncation(); ++n) {
    c[n - 1] = phi(params, n) * f.coeff(n);
  }
  return LaurentSeries<Scalar>(std::move(c), f.principal());
}

/// z f'(z) = -principal/z + sum n a_n z^n.
template <typename Scalar>
LaurentSeries<Scalar> z_derivative(const LaurentSeries<Scalar>& f) {
  ComplexVector<Scalar> c(f.truncation());
  for (int n = 1; n <= f.truncation(); ++n) c[n - 1] = Scalar(n) * f.coeff(n);
  return LaurentSeries<Scalar>(std::move(c), -f.principal());
}

/// (1 - lambda) f + lambda z f'(z).
template <typename Scalar>
LaurentSeries<Scalar> lambda_mix(const LaurentSeries<Scalar>& f,
                                 Scalar lambda) {
  ComplexVector<Scalar> c(f.truncation());
  for (int n = 1; n <= f.truncation(); ++n) {
    c[n - 1] = (Scalar(1) - lambda + Scalar(n) * lambda) * f.coeff(n);
  }
  return LaurentSeries<Scalar>(
      std::move(c), (Scalar(1) - Scalar(2) * lambda) * f.principal());
}

/// Multiplies principal part and every coefficient by s.
template <typename Scalar>
LaurentSeries<Scalar> scale(std::complex<Scalar> s,
                            const LaurentSeries<Scalar>& f) {
  return LaurentSeries<Scalar>(s * f.coeffs(), s * f.principal());
}

/// Termwise sum; truncation is the shorter of the two.
template <typename Scalar>
LaurentSeries<Scalar> operator+(const LaurentSeries<Scalar>& f,
                                const LaurentSeries<Scalar>& g) {
  const Eigen::Index n = std::min(f.coeffs().size(), g.coeffs().size());
  return LaurentSeries<Scalar>(f.coeffs().head(n) + g.coeffs().head(n),
                               f.principal() + g.principal());
}

/// Evaluates f at a point of the punctured unit disk.
template <typename Scalar>
std::complex<Scalar> eval(const LaurentSeries<Scalar>& f,
                          std::complex<Scalar> z) {
  const Scalar r = std::abs(z);
  if (!(r > Scalar(0)) || !(r < Scalar(1))) {
    std::ostringstream os;
    os << "eval: |z| = " << r << " is outside 0 < |z| < 1";
    throw DomainError(os.str());
  }
  // Horner on a_1 + a_2 z + ... then one more factor of z.
  std::complex<Scalar> acc{0};
  for (int n = f.truncation(); n >= 1; --n) acc = acc * z + f.coeff(n);
  return f.principal() / z + acc * z;
}

using Laurent = LaurentSeries<double>;
using Taylor = TaylorSeries<double>;
using Complex = std::complex<double>;
using Wright = WrightParams<double>;

}  // namespace wrightlens
