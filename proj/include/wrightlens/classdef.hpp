#pragma once

// Membership machinery for Sigma(theta, lambda, gamma): the Caratheodory
// transform tau(z), grid-certified membership, generation of members from a
// Schwarz function, the convolution kernel and the sufficiency test.

#include <string>
#include <vector>

#include "wrightlens/bounds.hpp"
#include "wrightlens/grid.hpp"
#include "wrightlens/laurent.hpp"

namespace wrightlens {

/// Polynomial Schwarz function w(z) = c_1 z + ... + c_m z^m.
///
/// Accepted only when sum |c_k| < 1, which gives |w| < 1 on the closed disk.
class SchwarzFunction {
 public:
  /// Identically zero.
  SchwarzFunction() = default;

  /// Coefficients c_1 ... c_m.
  explicit SchwarzFunction(ComplexVector<double> coeffs);
  SchwarzFunction(std::initializer_list<Complex> coeffs);

  /// c z^power.
  static SchwarzFunction monomial(Complex c, int power);

  const ComplexVector<double>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()); }
  double coefficient_mass() const;

  Complex operator()(Complex z) const;
  /// w as a Taylor series of the given order (constant term zero).
  Taylor taylor(int order) const;

 private:
  ComplexVector<double> c_;
};

/// tau(z) for the function f, i.e.
///   [e^{i theta} R(z) - gamma cos + i sin/(1-2 lambda)] /
///   [-cos (1/(1-2 lambda) + gamma)],
/// R = z H' / ((1-lambda) H + lambda z H'), H = W f.
Complex tau_transform(const Laurent& f, const ClassParams& cp, const Wright& wp,
                      Complex z);

/// Evaluates R(z) and tau(z) for one function at many points without
/// rebuilding the series each time.
class TauEvaluator {
 public:
  TauEvaluator(const Laurent& f, const ClassParams& cp, const Wright& wp);

  /// z H'(z) / ((1-lambda) H(z) + lambda z H'(z)); DivisionError if the
  /// denominator vanishes at z.
  Complex ratio(Complex z) const;
  Complex tau(Complex z) const;

 private:
  ClassParams cp_;
  Laurent zh_prime_;
  Laurent mixed_;
};

enum class Verdict { Member, NotMember, Inconclusive };

std::string to_string(Verdict v);

struct TauSample {
  Complex z;
  double re_tau;
};

struct MembershipReport {
  double min_re_tau = 0.0;
  Complex argmin_z{0.0, 0.0};
  GridSpec grid;
  Verdict verdict = Verdict::Inconclusive;
  std::string diagnostic;
  std::vector<TauSample> samples;
};

inline constexpr double kMembershipTolerance = 1e-9;

/// Samples Re tau over the polar grid. Member if min Re tau > tol, NotMember
/// if min Re tau < -tol, Inconclusive otherwise or when tau cannot be
/// evaluated somewhere on the grid.
MembershipReport membership_check(const Laurent& f, const ClassParams& cp,
                                  const Wright& wp, const GridSpec& grid = {},
                                  double tol = kMembershipTolerance);

/// A(t) = e^{-i theta}[gamma cos - i sin/(1-2 lambda)]
///        - e^{-i theta} cos (1/(1-2 lambda) + gamma) (1+w(t))/(1-w(t)).
/// A(0) = -1/(1-2 lambda).
Complex a_of_t(const ClassParams& cp, const SchwarzFunction& w, Complex t);

/// (1-lambda) A(t) / (1 - lambda A(t)), the logarithmic derivative z H'/H
/// of the generated operator image.
Complex log_derivative_target(const ClassParams& cp, const SchwarzFunction& w,
                              Complex t);

struct GeneratedFunction {
  Laurent f;      // a_n = h_n / phi_n
  Laurent image;  // H = W f = 1/z + sum h_n z^n
  /// Coefficient g_1 of G = (1-lambda)A/(1-lambda A). The z^0 equation of
  /// z H' = G H reads g_1 = 0, which a series without constant term can only
  /// meet when w'(0) = 0; otherwise H solves every other coefficient
  /// equation and this value is the leftover defect.
  Complex constant_defect{0.0, 0.0};
};

/// Solves z H'(z) = G(z) H(z) for H = 1/z + sum_{n<=n_max} h_n z^n, then
/// inverts the Wright operator. Throws DivisionError if 1 - lambda A(z)
/// vanishes inside the unit disk.
GeneratedFunction schwarz_generate(const ClassParams& cp, const Wright& wp,
                                   const SchwarzFunction& w, int n_max);

/// Convolution kernel
///   K = (1-2 lambda)(1-eta) z (k_W)' + e^{-i theta} C(eta) [(1-lambda) k_W + lambda z (k_W)'],
/// k_W = 1/z + sum phi_n z^n,
/// C(eta) = -gamma cos (1-2 lambda)(1-eta) + i sin (1-eta)
///          + (1+eta) cos (1 + gamma (1-2 lambda)).
/// (f * K)(z) vanishes exactly where tau(z) = (1+eta)/(1-eta).
Laurent convolution_kernel(const ClassParams& cp, const Wright& wp, Complex eta,
                           int n_max);

/// C(eta) above.
Complex convolution_constant(const ClassParams& cp, Complex eta);

struct EtaMinimum {
  Complex eta;
  double min_modulus;
  Complex argmin_z;
};

struct ScanReport {
  double min_modulus = 0.0;
  Complex argmin_z{0.0, 0.0};
  Complex argmin_eta{0.0, 0.0};
  std::vector<EtaMinimum> per_eta;
  /// True when min_modulus < tol, which certifies f is not in the class.
  bool vanishes = false;
};

/// eta_j = exp(2 pi i j / eta_count), j = 1 .. eta_count-1.
ScanReport convolution_scan(const Laurent& f, const ClassParams& cp,
                            const Wright& wp, int eta_count,
                            const GridSpec& grid = {},
                            double tol = kMembershipTolerance);

struct SufficiencyResult {
  double max_lhs = 0.0;
  Complex argmax_z{0.0, 0.0};
  double threshold = 0.0;
  bool holds = false;
};

/// max over the grid of |R(z) + 1| against the threshold (1 + gamma) cos theta.
SufficiencyResult sufficiency_predicate(const Laurent& f, const ClassParams& cp,
                                        const Wright& wp,
                                        const GridSpec& grid = {});

/// cos theta <= (eps - 1)/(1 + gamma): the hypothesis of the epsilon form of
/// the sufficiency test, exposed for reference. It cannot hold for
/// |theta| < pi/2 and gamma > 0.
bool epsilon_sufficiency_hypothesis(const ClassParams& cp, double eps);

}  // namespace wrightlens
