#include "wrightlens/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <vector>

namespace wrightlens {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_int(std::string_view s, long& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void format_error(int line, const std::string& what) {
  throw InputFormatError("line " + std::to_string(line) + ": " + what);
}

// Reads the data rows of a CSV with the given header into column strings.
template <typename RowFn>
void read_table(std::istream& in, std::string_view header, std::size_t columns,
                RowFn on_row) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!have_header) {
      if (t != header) {
        format_error(line_no, "expected header '" + std::string(header) + "'");
      }
      have_header = true;
      continue;
    }
    const auto cells = split(t, ',');
    if (cells.size() != columns) {
      format_error(line_no, "expected " + std::to_string(columns) + " fields");
    }
    on_row(line_no, cells);
  }
  if (in.bad()) throw InputFormatError("read error");
  if (!have_header) {
    format_error(line_no + 1, "missing header '" + std::string(header) + "'");
  }
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

Complex parse_complex(std::string_view text) {
  const auto s = trim(text);
  if (s.empty()) throw ParameterError("empty complex number");
  const auto bad = [&] {
    return ParameterError("cannot parse complex number '" + std::string(s) +
                          "' (expected a+bi)");
  };
  if (s.back() != 'i' && s.back() != 'j') {
    double re;
    if (!parse_double(s, re)) throw bad();
    return {re, 0.0};
  }
  const auto body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not leading and not part of an exponent.
  std::size_t split_at = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' &&
        body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const auto real_part = split_at == std::string_view::npos
                             ? std::string_view{}
                             : body.substr(0, split_at);
  auto imag_part = split_at == std::string_view::npos ? body : body.substr(split_at);
  double re = 0.0;
  if (!real_part.empty() && !parse_double(real_part, re)) throw bad();
  double im;
  if (imag_part.empty() || imag_part == "+") {
    im = 1.0;
  } else if (imag_part == "-") {
    im = -1.0;
  } else if (!parse_double(imag_part, im)) {
    throw bad();
  }
  return {re, im};
}

ComplexVector<double> parse_complex_list(std::string_view text) {
  const auto cells = split(trim(text), ',');
  ComplexVector<double> v(static_cast<Eigen::Index>(cells.size()));
  for (std::size_t i = 0; i < cells.size(); ++i) v[i] = parse_complex(cells[i]);
  return v;
}

Laurent read_coefficients(std::istream& in) {
  std::map<long, Complex> rows;
  read_table(in, "n,re,im", 3, [&](int line, const auto& cells) {
    long n;
    double re, im;
    if (!parse_int(cells[0], n) || n < 1) format_error(line, "n must be an integer >= 1");
    if (!parse_double(cells[1], re) || !parse_double(cells[2], im)) {
      format_error(line, "re and im must be numbers");
    }
    if (!std::isfinite(re) || !std::isfinite(im)) {
      format_error(line, "coefficients must be finite");
    }
    if (!rows.emplace(n, Complex(re, im)).second) {
      format_error(line, "duplicate index n = " + std::to_string(n));
    }
  });
  const long n_max = rows.empty() ? 0 : rows.rbegin()->first;
  if (n_max > 100000) throw InputFormatError("coefficient index too large");
  ComplexVector<double> c = ComplexVector<double>::Zero(n_max);
  for (const auto& [n, v] : rows) c[n - 1] = v;
  return Laurent(std::move(c));
}

Laurent read_coefficients_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputFormatError("cannot open coefficient file '" + path + "'");
  return read_coefficients(in);
}

void write_coefficients(std::ostream& out, const Laurent& f) {
  out << "n,re,im\n";
  for (int n = 1; n <= f.truncation(); ++n) {
    out << n << ',' << format_real(f.coeff(n).real()) << ','
        << format_real(f.coeff(n).imag()) << '\n';
  }
}

Eigen::VectorXd read_weights(std::istream& in) {
  std::map<long, double> rows;
  read_table(in, "n,weight", 2, [&](int line, const auto& cells) {
    long n;
    double w;
    if (!parse_int(cells[0], n) || n < 1) format_error(line, "n must be an integer >= 1");
    if (!parse_double(cells[1], w) || !std::isfinite(w) || w < 0.0) {
      format_error(line, "weight must be a finite number >= 0");
    }
    if (!rows.emplace(n, w).second) {
      format_error(line, "duplicate index n = " + std::to_string(n));
    }
  });
  const long n_max = rows.empty() ? 0 : rows.rbegin()->first;
  if (n_max > 100000) throw InputFormatError("weight index too large");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n_max);
  for (const auto& [n, v] : rows) w[n - 1] = v;
  return w;
}

Eigen::VectorXd read_weights_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputFormatError("cannot open weight file '" + path + "'");
  return read_weights(in);
}

std::uint64_t sweep_seed() {
  if (const char* env = std::getenv("WRIGHTLENS_SEED")) {
    std::uint64_t seed;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
    if (ec == std::errc() && ptr == s.data() + s.size()) return seed;
  }
  return kDefaultSeed;
}

}  // namespace wrightlens
