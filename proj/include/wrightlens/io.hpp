#pragma once

// Flat-file formats and small text helpers shared by the CLI and the tests.

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "wrightlens/laurent.hpp"

namespace wrightlens {

/// Shortest decimal string that reads back to the same double.
std::string format_real(double x);

/// Parses "a", "a+bi", "a-bi", "bi", "i" (also with 'j').
/// Throws ParameterError on anything else.
Complex parse_complex(std::string_view text);

/// "c1,c2,..." of complex entries.
ComplexVector<double> parse_complex_list(std::string_view text);

/// Coefficient CSV: header `n,re,im`, one row per n >= 1, principal part 1.
/// Lines starting with '#' and blank lines are skipped. Indices missing
/// below the largest n read as zero. Throws InputFormatError with the
/// offending line number.
Laurent read_coefficients(std::istream& in);
Laurent read_coefficients_file(const std::string& path);

void write_coefficients(std::ostream& out, const Laurent& f);

/// Weight CSV: header `n,weight`.
Eigen::VectorXd read_weights(std::istream& in);
Eigen::VectorXd read_weights_file(const std::string& path);

/// Seed for randomized sweeps: WRIGHTLENS_SEED if set, else a fixed default.
std::uint64_t sweep_seed();

inline constexpr std::uint64_t kDefaultSeed = 20251018;

}  // namespace wrightlens
