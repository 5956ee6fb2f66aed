#include "wrightlens/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "wrightlens/bounds.hpp"
#include "wrightlens/classdef.hpp"
#include "wrightlens/io.hpp"
#include "wrightlens/radii.hpp"

namespace wrightlens::cli {

namespace {

struct Config {
  // Wright operator
  double alpha = 0.0;
  double beta = 1.0;
  // class
  double theta = 0.0;
  double lambda = 0.0;
  double gamma = 2.0;
  bool relaxed = false;
  // sizes
  int n_max = 50;
  double tol = 1e-9;
  // grid
  int radii = 16;
  int angles = 64;
  double r_min = 0.05;
  double r_max = 0.95;
  // wright
  std::string z = "0";
  // radius
  std::string kind;
  double rho = 0.0;
  int extremal_n = 0;
  std::string weights_path;
  bool curve = false;
  int steps = 50;
  bool strict = false;
  // member / identities
  std::string coeffs_path;
  std::string out_path;
  int eta_count = 0;
  std::string schwarz;
  std::string tau;
};

using Params = std::vector<std::pair<std::string, std::string>>;

std::string real(double x) { return format_real(x); }

std::string complex_text(Complex z) {
  return real(z.real()) + (std::signbit(z.imag()) ? "-" : "+") +
         real(std::abs(z.imag())) + "i";
}

void write_params(std::ostream& out, const std::string& sub, const Params& p) {
  out << "# params: subcommand=" << sub;
  for (const auto& [k, v] : p) out << ' ' << k << '=' << v;
  out << '\n';
}

Params wright_params(const Config& c) {
  return {{"alpha", real(c.alpha)}, {"beta", real(c.beta)}};
}

Params class_params(const Config& c) {
  return {{"theta", real(c.theta)},
          {"lambda", real(c.lambda)},
          {"gamma", real(c.gamma)},
          {"relaxed", c.relaxed ? "true" : "false"}};
}

Params grid_params(const Config& c) {
  return {{"radii", std::to_string(c.radii)},
          {"angles", std::to_string(c.angles)},
          {"r_min", real(c.r_min)},
          {"r_max", real(c.r_max)}};
}

Params concat(std::initializer_list<Params> parts) {
  Params all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

GridSpec make_grid(const Config& c) {
  GridSpec g;
  g.radii = c.radii;
  g.angles = c.angles;
  g.r_min = c.r_min;
  g.r_max = c.r_max;
  g.validate_membership();
  return g;
}

ClassParams make_class(const Config& c) {
  return ClassParams::make(c.theta, c.lambda, c.gamma, c.relaxed);
}

Wright make_wright(const Config& c, int n_max) {
  return Wright::make(c.alpha, c.beta, n_max);
}

// Output sink: a file when a path other than "-" is given, else `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputFormatError("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }
  bool is_file() const { return file_ != nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

// -- subcommands --------------------------------------------------------------

int cmd_wright(const Config& c, std::ostream& out) {
  const Wright wp = make_wright(c, 0);
  const Complex z = parse_complex(c.z);
  const auto value = wright_eval(wp, z);
  write_params(out, "wright", concat({wright_params(c), {{"z", complex_text(z)}}}));
  out << "re,im,terms_used\n"
      << real(value.value.real()) << ',' << real(value.value.imag()) << ','
      << value.terms_used << '\n';
  return kOk;
}

int cmd_phi_table(const Config& c, std::ostream& out) {
  if (c.n_max < 1) throw ParameterError("n_max must be >= 1");
  const Wright wp = make_wright(c, c.n_max);
  write_params(out, "phi-table",
               concat({wright_params(c), {{"n_max", std::to_string(c.n_max)}}}));
  out << "n,phi_n\n";
  for (int n = 1; n <= c.n_max; ++n) out << n << ',' << real(phi(wp, n)) << '\n';
  return kOk;
}

int cmd_bounds(const Config& c, std::ostream& out) {
  const ClassParams cp = make_class(c);
  const Wright wp = make_wright(c, c.n_max);
  const BoundSequence rec = bound_sequence_recursive(cp, wp, c.n_max);
  const BoundSequence closed = bound_sequence_closed(cp, wp, c.n_max);
  write_params(out, "bounds",
               concat({class_params(c), wright_params(c),
                       {{"n_max", std::to_string(c.n_max)}}}));
  out << "n,A_n_recursive,A_n_closed,rel_diff\n";
  for (int n = 1; n <= c.n_max; ++n) {
    const double rel = std::abs(rec(n) - closed(n)) / std::abs(rec(n));
    out << n << ',' << real(rec(n)) << ',' << real(closed(n)) << ',' << real(rel)
        << '\n';
  }
  return kOk;
}

int cmd_radius(const Config& c, std::ostream& out, std::ostream& err) {
  RadiusQuery q;
  if (c.kind == "star") {
    q.kind = RadiusKind::Starlike;
  } else if (c.kind == "convex") {
    q.kind = RadiusKind::Convex;
  } else {
    throw ParameterError("radius kind must be 'star' or 'convex'");
  }
  q.rho = c.rho;
  q.tol = c.tol;

  Params params{{"kind", c.kind}};
  if (c.extremal_n > 0 && !c.weights_path.empty()) {
    throw ParameterError("--extremal-n and --weights are mutually exclusive");
  }
  if (c.extremal_n > 0) {
    q.weights = single_weight(c.extremal_n);
    q.n_max = c.extremal_n;
    params.push_back({"weights", "extremal"});
    params.push_back({"dominant_n", std::to_string(c.extremal_n)});
  } else if (c.extremal_n < 0) {
    throw ParameterError("--extremal-n must be >= 1");
  } else if (!c.weights_path.empty()) {
    q.weights = read_weights_file(c.weights_path);
    if (q.weights.size() == 0) throw InputFormatError("weight file has no rows");
    if (c.n_max < 1) throw ParameterError("n_max must be >= 1");
    q.n_max = std::min<int>(c.n_max, static_cast<int>(q.weights.size()));
    params.push_back({"weights", "file:" + c.weights_path});
  } else {
    if (c.n_max < 1) throw ParameterError("n_max must be >= 1");
    const ClassParams cp = make_class(c);
    make_wright(c, 2 * c.n_max);
    q.weights = scaled_bounds(cp, 2 * c.n_max);
    q.n_max = c.n_max;
    params.push_back({"weights", "class_bound"});
    params = concat({params, class_params(c), wright_params(c)});
  }
  params.push_back({"n_max", std::to_string(q.n_max)});
  params.push_back({"tol", real(q.tol)});

  bool truncated = false;
  auto note_truncation = [&](const RadiusResult& r, double rho) {
    if (!r.truncation_warning) return;
    truncated = true;
    err << "warning: truncation at rho=" << real(rho) << ": radius "
        << real(r.radius) << " at n_max=" << q.n_max << " vs "
        << real(r.radius_doubled) << " with doubled truncation\n";
  };

  if (c.curve) {
    if (c.steps < 1) throw ParameterError("--steps must be >= 1");
    params.push_back({"steps", std::to_string(c.steps)});
    write_params(out, "radius", params);
    out << "rho,radius\n";
    for (int i = 0; i < c.steps; ++i) {
      q.rho = double(i) / c.steps;
      const RadiusResult r = solve_radius(q);
      note_truncation(r, q.rho);
      out << real(q.rho) << ',' << real(r.radius) << '\n';
    }
  } else {
    params.push_back({"rho", real(q.rho)});
    write_params(out, "radius", params);
    const RadiusResult r = solve_radius(q);
    note_truncation(r, q.rho);
    if (r.unconstrained) err << "note: inequality holds on all of the unit disk\n";
    out << "radius,bracket_lo,bracket_hi,n_max_used\n"
        << real(r.radius) << ',' << real(r.bracket_lo) << ','
        << real(r.bracket_hi) << ',' << r.truncation_used << '\n';
  }
  return truncated && c.strict ? kTruncation : kOk;
}

int cmd_member(const Config& c, std::ostream& out) {
  if (c.coeffs_path.empty()) throw ParameterError("--coeffs is required");
  const Laurent f = read_coefficients_file(c.coeffs_path);
  const ClassParams cp = make_class(c);
  const Wright wp = make_wright(c, f.truncation());
  const GridSpec grid = make_grid(c);
  if (c.eta_count != 0 && c.eta_count < 8) {
    throw ParameterError("--eta-count must be >= 8 (or 0 to skip the scan)");
  }

  const MembershipReport member = membership_check(f, cp, wp, grid);
  const BoundReport bounds = coefficient_bound_check(f, cp, wp);

  const Params params =
      concat({class_params(c), wright_params(c), grid_params(c),
              {{"coeffs", c.coeffs_path},
               {"truncation", std::to_string(f.truncation())},
               {"eta_count", std::to_string(c.eta_count)}}});
  write_params(out, "member", params);

  Verdict overall = member.verdict;
  out << "membership: " << to_string(member.verdict) << '\n'
      << "min_re_tau: " << real(member.min_re_tau) << '\n'
      << "argmin_z: " << complex_text(member.argmin_z) << '\n';
  if (!member.diagnostic.empty()) out << "diagnostic: " << member.diagnostic << '\n';

  if (bounds.all_satisfied) {
    out << "coefficient_bounds: satisfied\n";
  } else {
    const BoundRecord& r = bounds.records[bounds.first_violation - 1];
    out << "coefficient_bounds: violated at n=" << r.n << " (|a_n|="
        << real(r.abs_coeff) << " > A_n=" << real(r.bound) << ")\n";
    overall = Verdict::NotMember;
  }

  try {
    const SufficiencyResult suff = sufficiency_predicate(f, cp, wp, grid);
    out << "sufficiency: max_lhs=" << real(suff.max_lhs)
        << " threshold=" << real(suff.threshold)
        << " holds=" << (suff.holds ? "true" : "false") << '\n';
  } catch (const DivisionError& e) {
    out << "sufficiency: undefined (" << e.what() << ")\n";
  }

  if (c.eta_count > 0) {
    const ScanReport scan = convolution_scan(f, cp, wp, c.eta_count, grid);
    out << "convolution: min_modulus=" << real(scan.min_modulus)
        << " at z=" << complex_text(scan.argmin_z)
        << " eta=" << complex_text(scan.argmin_eta)
        << " vanishes=" << (scan.vanishes ? "true" : "false") << '\n';
    if (scan.vanishes) overall = Verdict::NotMember;
  }
  out << "verdict: " << to_string(overall) << '\n';

  if (!c.out_path.empty()) {
    Sink sink(c.out_path, out);
    std::ostream& csv = sink.get();
    write_params(csv, "member", params);
    csv << "z_re,z_im,re_tau\n";
    for (const auto& s : member.samples) {
      csv << real(s.z.real()) << ',' << real(s.z.imag()) << ',' << real(s.re_tau)
          << '\n';
    }
    csv << "# summary: min_re_tau=" << real(member.min_re_tau)
        << " argmin_z=" << complex_text(member.argmin_z)
        << " verdict=" << to_string(member.verdict) << '\n';
  }
  return kOk;
}

int cmd_generate(const Config& c, std::ostream& out) {
  if (c.schwarz.empty()) throw ParameterError("--schwarz is required");
  const SchwarzFunction w(parse_complex_list(c.schwarz));
  const ClassParams cp = make_class(c);
  const Wright wp = make_wright(c, c.n_max);
  const GeneratedFunction gen = schwarz_generate(cp, wp, w, c.n_max);
  const BoundReport bounds = coefficient_bound_check(gen.f, cp, wp, 1e-9);

  const Params params =
      concat({class_params(c), wright_params(c),
              {{"schwarz", c.schwarz}, {"n_max", std::to_string(c.n_max)}}});
  Sink sink(c.out_path, out);
  write_params(sink.get(), "generate", params);
  write_coefficients(sink.get(), gen.f);

  if (sink.is_file()) write_params(out, "generate", params);
  out << "# constant_defect: " << complex_text(gen.constant_defect) << '\n'
      << "# compare: n,abs_a_n,A_n,within_bound\n";
  for (const auto& r : bounds.records) {
    out << "# " << r.n << ',' << real(r.abs_coeff) << ',' << real(r.bound) << ','
        << (r.satisfied ? 1 : 0) << '\n';
  }
  return kOk;
}

int cmd_verify_identities(const Config& c, std::ostream& out) {
  const ClassParams cp = make_class(c);
  Laurent f;
  Taylor tau;
  Params params = concat({class_params(c), wright_params(c)});
  if (!c.coeffs_path.empty()) {
    if (c.tau.empty()) throw ParameterError("--coeffs needs --tau \"1,t1,t2,...\"");
    f = read_coefficients_file(c.coeffs_path);
    tau = Taylor(parse_complex_list(c.tau));
    if (std::abs(tau[0] - 1.0) > 1e-12) throw ParameterError("tau must start with 1");
    params.push_back({"coeffs", c.coeffs_path});
    params.push_back({"tau", c.tau});
  } else {
    const std::string coeffs = c.schwarz.empty() ? "0,0.5" : c.schwarz;
    const SchwarzFunction w(parse_complex_list(coeffs));
    f = schwarz_generate(cp, make_wright(c, c.n_max), w, c.n_max).f;
    const Taylor wt = w.taylor(c.n_max + 1);
    const Taylor one = Taylor::constant(1.0, c.n_max + 1);
    tau = (one + wt) / (one - wt);
    params.push_back({"schwarz", coeffs});
    params.push_back({"n_max", std::to_string(c.n_max)});
  }
  const Wright wp = make_wright(c, f.truncation());
  const IdentityResiduals oracle = series_identity_oracle(f, tau, cp, wp);
  const ComplexVector<double> phased = phased_extraction_residuals(f, tau, cp, wp);

  write_params(out, "verify-identities", params);
  out << "power,oracle_residual_abs,phased_residual_abs\n";
  for (int p = oracle.lowest_power; p <= oracle.highest_power(); ++p) {
    out << p << ',' << real(std::abs(oracle.at_power(p))) << ',';
    if (p >= 1 && p <= phased.size()) out << real(std::abs(phased[p - 1]));
    out << '\n';
  }
  return kOk;
}

void add_wright_flags(CLI::App* app, Config& c) {
  app->add_option("--alpha", c.alpha, "Wright parameter alpha (> -1)")->capture_default_str();
  app->add_option("--beta", c.beta, "Wright parameter beta (> 0)")->capture_default_str();
}

void add_class_flags(CLI::App* app, Config& c) {
  app->add_option("--theta", c.theta, "class parameter theta, |theta| < pi/2")->capture_default_str();
  app->add_option("--lambda", c.lambda, "class parameter lambda in [0, 1/2)")->capture_default_str();
  app->add_option("--gamma", c.gamma, "class parameter gamma (> 1)")->capture_default_str();
  app->add_flag("--relaxed", c.relaxed, "accept 0 < gamma <= 1");
}

void add_grid_flags(CLI::App* app, Config& c) {
  app->add_option("--radii", c.radii, "grid ring count")->capture_default_str();
  app->add_option("--angles", c.angles, "grid angle count")->capture_default_str();
  app->add_option("--r-min", c.r_min, "smallest grid radius")->capture_default_str();
  app->add_option("--r-max", c.r_max, "largest grid radius")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"wrightlens: Wright-operator meromorphic class toolkit"};
  app.require_subcommand(1);

  auto* wright = app.add_subcommand("wright", "evaluate the Wright series");
  add_wright_flags(wright, c);
  wright->add_option("--z", c.z, "argument, a+bi")->capture_default_str();

  auto* phi_table = app.add_subcommand("phi-table", "operator coefficients phi_n");
  add_wright_flags(phi_table, c);
  phi_table->add_option("--n-max", c.n_max)->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "coefficient-bound sequence A_n");
  add_class_flags(bounds, c);
  add_wright_flags(bounds, c);
  bounds->add_option("--n-max", c.n_max)->capture_default_str();

  auto* radius = app.add_subcommand("radius", "radius of starlikeness / convexity");
  radius->add_option("kind", c.kind, "star | convex")->required();
  add_class_flags(radius, c);
  add_wright_flags(radius, c);
  radius->add_option("--rho", c.rho, "order rho in [0, 1)")->capture_default_str();
  radius->add_option("--extremal-n", c.extremal_n, "single unit weight at index n");
  radius->add_option("--weights", c.weights_path, "CSV n,weight");
  radius->add_option("--n-max", c.n_max)->capture_default_str();
  radius->add_option("--tol", c.tol)->capture_default_str();
  radius->add_flag("--curve", c.curve, "sweep rho over [0, 1)");
  radius->add_option("--steps", c.steps, "rho samples for --curve")->capture_default_str();
  radius->add_flag("--strict", c.strict, "exit 4 on a truncation warning");

  auto* member = app.add_subcommand("member", "grid-certified membership test");
  member->add_option("--coeffs", c.coeffs_path, "coefficient CSV n,re,im")->required();
  add_class_flags(member, c);
  add_wright_flags(member, c);
  add_grid_flags(member, c);
  member->add_option("--eta-count", c.eta_count, "convolution scan size (0 = skip)")
      ->capture_default_str();
  member->add_option("--out", c.out_path, "grid CSV z_re,z_im,re_tau");

  auto* generate = app.add_subcommand("generate", "member from a Schwarz polynomial");
  generate->add_option("--schwarz", c.schwarz, "c1,c2,... with sum |c_k| < 1")->required();
  add_class_flags(generate, c);
  add_wright_flags(generate, c);
  generate->add_option("--n-max", c.n_max)->capture_default_str();
  generate->add_option("--out", c.out_path, "coefficient CSV path ('-' = stdout)");

  auto* identities =
      app.add_subcommand("verify-identities", "series relation residuals");
  add_class_flags(identities, c);
  add_wright_flags(identities, c);
  identities->add_option("--schwarz", c.schwarz, "Schwarz polynomial (default 0,0.5)");
  identities->add_option("--coeffs", c.coeffs_path, "coefficient CSV instead of --schwarz");
  identities->add_option("--tau", c.tau, "tau coefficients 1,t1,t2,... with --coeffs");
  identities->add_option("--n-max", c.n_max)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  }

  try {
    if (wright->parsed()) return cmd_wright(c, out);
    if (phi_table->parsed()) return cmd_phi_table(c, out);
    if (bounds->parsed()) return cmd_bounds(c, out);
    if (radius->parsed()) return cmd_radius(c, out, err);
    if (member->parsed()) return cmd_member(c, out);
    if (generate->parsed()) return cmd_generate(c, out);
    if (identities->parsed()) return cmd_verify_identities(c, out);
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kParameterError;
  } catch (const PoleError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kParameterError;
  } catch (const InputFormatError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputFormat;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kParameterError;
}

}  // namespace wrightlens::cli
