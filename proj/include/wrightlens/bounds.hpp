#pragma once

// Coefficient-bound sequence {A_n} for the class Sigma(theta, lambda, gamma):
// the recursive definition, the closed product, the coefficient-bound check
// and a Cauchy-product oracle for the defining series relation.

#include <Eigen/Core>

#include <vector>

#include "wrightlens/laurent.hpp"

namespace wrightlens {

/// Class parameters (theta, lambda, gamma).
///
/// |theta| < pi/2, 0 <= lambda < 1/2, gamma > 1. With `relaxed` set, any
/// gamma > 0 is accepted.
struct ClassParams {
  double theta = 0.0;
  double lambda = 0.0;
  double gamma = 2.0;
  bool relaxed = false;

  static ClassParams make(double theta, double lambda, double gamma,
                          bool relaxed = false);

  /// cos(theta) (1 + gamma (1 - 2 lambda)).
  double big_lambda() const;
};

enum class BoundMethod { Recursive, ClosedForm };

struct BoundSequence {
  Eigen::VectorXd values;  // A_1 ... A_N at index 0 ... N-1
  ClassParams params;
  Wright wright;
  BoundMethod method = BoundMethod::Recursive;

  int size() const { return static_cast<int>(values.size()); }
  /// A_n, 1-based.
  double operator()(int n) const { return values[n - 1]; }
};

/// A_1 from its defining relation and A_{n+1} from the running weighted sum.
/// |phi_n| is used throughout so that the bound stays meaningful when some
/// Gamma(alpha n + beta) is negative; for phi_n > 0 this is the usual form.
BoundSequence bound_sequence_recursive(const ClassParams& cp, const Wright& wp,
                                       int n_max);

/// Closed product form of A_n. Accumulated in log space when n_max > 50.
/// Throws OverflowError if some A_n leaves the double range.
BoundSequence bound_sequence_closed(const ClassParams& cp, const Wright& wp,
                                    int n_max);

/// |phi_n| A_n for n = 1..n_max. This product does not depend on (alpha, beta)
/// and is what the radius inequalities consume as weights.
Eigen::VectorXd scaled_bounds(const ClassParams& cp, int n_max);

/// A_{n+1} / A_n from the closed ratio identity.
double bound_ratio(const ClassParams& cp, const Wright& wp, int n);

struct BoundRecord {
  int n;
  double abs_coeff;
  double bound;
  bool satisfied;
};

struct BoundReport {
  std::vector<BoundRecord> records;
  bool all_satisfied = true;
  /// First violating index, 0 if none.
  int first_violation = 0;
};

/// Compares |a_n| against A_n for every stored coefficient of f. A bound is
/// counted as satisfied when |a_n| <= A_n (1 + rel_slack).
BoundReport coefficient_bound_check(const Laurent& f, const ClassParams& cp,
                                    const Wright& wp, double rel_slack = 1e-12);

/// Residuals LHS - RHS of the series relation
///   e^{i theta} z H'(z) = ((1-lambda) H + lambda z H') *
///       (gamma cos - i sin/(1-2 lambda) - cos (1/(1-2 lambda) + gamma) tau(z))
/// with H = W f, both sides expanded by Cauchy products.
struct IdentityResiduals {
  int lowest_power = -1;  // power of z carried by residuals[0]
  ComplexVector<double> residuals;

  Complex at_power(int p) const { return residuals[p - lowest_power]; }
  int highest_power() const {
    return lowest_power + static_cast<int>(residuals.size()) - 1;
  }
};

IdentityResiduals series_identity_oracle(const Laurent& f, const Taylor& tau,
                                         const ClassParams& cp,
                                         const Wright& wp);

/// Residuals of the phased coefficient-extraction formulas, index n
/// from 1 up to the largest n for which tau_{n+1} and a_n are both known:
///   n = 1:  2 e^{i theta} (1-lambda) phi_1 a_1 + Lambda (1-2 lambda) tau_2
///   n >= 2: e^{i theta} (n+1)(1-lambda) phi_n a_n
///           + e^{-i theta} Lambda [(1-2 lambda) tau_{n+1}
///                                  + sum_k phi_k (1-lambda+k lambda) a_k tau_{n-k}]
ComplexVector<double> phased_extraction_residuals(const Laurent& f,
                                                   const Taylor& tau,
                                                   const ClassParams& cp,
                                                   const Wright& wp);

}  // namespace wrightlens
