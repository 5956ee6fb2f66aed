#pragma once

// Radii of meromorphic starlikeness and convexity of order rho from the
// coefficient inequalities
//   Starlike: sum (n+2-rho)/(1-rho)   w_n r^{n+1} <= 1
//   Convex:   sum n(n+2-rho)/(1-rho) w_n r^{n+1} <= 1
// with weights w_n = phi_n A_n (class bound) or phi_n |a_n| (one function).

#include <Eigen/Core>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wrightlens/grid.hpp"
#include "wrightlens/laurent.hpp"

namespace wrightlens {

enum class RadiusKind { Starlike, Convex };

std::string to_string(RadiusKind kind);

struct RadiusQuery {
  double rho = 0.0;
  RadiusKind kind = RadiusKind::Starlike;
  Eigen::VectorXd weights;  // w_1 ... w_M, M >= n_max
  int n_max = 50;
  double tol = 1e-9;

  /// Throws ParameterError on 0 <= rho < 1, tol >= 1e-12, nonnegative finite
  /// weights with at least one positive among the first n_max, n_max >= 1.
  void validate() const;
};

/// (n+2-rho)/(1-rho) or n (n+2-rho)/(1-rho).
double radius_multiplier(RadiusKind kind, int n, double rho);

/// Left-hand side of the radius inequality over the first n_max weights.
double constraint_sum(const RadiusQuery& q, double r);

struct RadiusResult {
  double radius = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int truncation_used = 0;
  double residual = 0.0;  // constraint_sum at radius
  /// The inequality still holds at r = 1 - 1e-9.
  bool unconstrained = false;
  /// Radius re-solved over min(2 n_max, M) weights.
  double radius_doubled = 0.0;
  /// |radius - radius_doubled| > 10 tol.
  bool truncation_warning = false;
};

inline constexpr double kRadiusCeiling = 1.0 - 1e-9;

/// Largest r in [0, 1) satisfying the inequality, by bisection to bracket
/// width tol. Returns the lower bracket end, where the inequality holds.
RadiusResult solve_radius(const RadiusQuery& q);

/// Single-term closed form r = m_n(rho)^{-1/(n+1)}.
double extremal_radius(RadiusKind kind, double rho, int dominant_n);

/// (rho, r) along the single-term closed form.
std::vector<std::pair<double, double>> extremal_curve(
    RadiusKind kind, const std::vector<double>& rho_samples, int dominant_n);

/// Weights with a single unit entry at index n.
Eigen::VectorXd single_weight(int n);

/// |phi_n a_n| for a concrete function.
Eigen::VectorXd function_weights(const Laurent& f, const Wright& wp);

struct PredicateResult {
  /// Sufficient condition |...| <= 1 - rho held at every grid point.
  bool holds = true;
  double max_modulus = 0.0;
  Complex witness{0.0, 0.0};  // point of max_modulus
  /// Defining condition -Re(...) > rho held at every grid point.
  bool defining_holds = true;
  double min_defining = 0.0;
  Complex defining_witness{0.0, 0.0};
};

/// |z H'/H + 1| <= 1 - rho and -Re(z H'/H) > rho on |z| <= r.
/// `grid` supplies ring and angle counts; its radii are replaced by the disk
/// of radius r. Throws DivisionError if H vanishes on the grid.
PredicateResult starlike_predicate(const Laurent& h, double rho, double r,
                                   const GridSpec& grid = {});

/// |z H''/H' + 2| <= 1 - rho and -Re(1 + z H''/H') > rho on |z| <= r.
PredicateResult convex_predicate(const Laurent& h, double rho, double r,
                                 const GridSpec& grid = {});

}  // namespace wrightlens
