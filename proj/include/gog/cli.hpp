#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gog/counting.hpp"
#include "gog/enumeration.hpp"
#include "gog/io.hpp"
#include "gog/lattice.hpp"
#include "gog/meet_census.hpp"
#include "gog/verify.hpp"

namespace gog::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct CommandSpec {
  std::string name;
  std::optional<int> n;
  std::optional<int> r;
  std::optional<int> n_max;
  std::optional<int> count;
  std::optional<std::uint64_t> seed;
  std::string method;
  std::string suite = "all";
  std::string from;
  std::string to;
  std::string input = "-";
  std::optional<std::string> cache_dir;
  int workers = 1;
  bool json = false;
  bool count_only = false;
  bool trivial = false;
  bool histogram = false;
  std::string help;  // set instead of a command when --help was requested
};

inline CommandSpec parse_command(const std::vector<std::string>& args) {
  CommandSpec spec;
  CLI::App app{"Monotone triangle lattice toolkit", "gog"};
  app.require_subcommand(1);

  auto workers = [&](CLI::App* sub) {
    sub->add_option("--workers", spec.workers, "Parallel workers")->check(CLI::PositiveNumber);
  };
  const auto formats = CLI::IsMember({"triangle", "column-sum", "asm"});

  auto* asm_count = app.add_subcommand("asm-count", "Exact A(n)");
  asm_count->add_option("--n", spec.n)->required()->check(CLI::NonNegativeNumber);
  asm_count->add_option("--method", spec.method)->check(CLI::IsMember({"formula", "dp"}));

  auto* enumerate = app.add_subcommand("enumerate", "All triangles of size n in lexicographic order");
  enumerate->add_option("--n", spec.n)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--count-only", spec.count_only, "Print only the number of triangles");
  workers(enumerate);

  auto* convert = app.add_subcommand("convert", "Convert between triangle, column-sum and ASM forms");
  convert->add_option("--from", spec.from)->required()->check(formats);
  convert->add_option("--to", spec.to)->required()->check(formats);
  convert->add_option("--input", spec.input, "Input path, '-' for stdin");

  for (const char* op : {"meet", "join"}) {
    auto* sub = app.add_subcommand(op, std::string("Entry-wise ") + (op[0] == 'm' ? "minimum" : "maximum") + " of the input triangles");
    sub->add_option("--input", spec.input, "Input path, '-' for stdin");
    sub->add_flag("--trivial", spec.trivial, "Print whether the result is the extremal triangle");
  }

  auto* census = app.add_subcommand("census", "Exact distinguished-set census (cached)");
  census->add_option("--n", spec.n)->required()->check(CLI::PositiveNumber);
  census->add_option("--cache-dir", spec.cache_dir);
  census->add_flag("--histogram", spec.histogram, "Print the longest-block histogram instead");
  workers(census);

  auto* pmin = app.add_subcommand("pmin", "Exact trivial-meet probability");
  pmin->add_option("--n", spec.n)->required()->check(CLI::PositiveNumber);
  pmin->add_option("--r", spec.r)->required()->check(CLI::PositiveNumber);
  pmin->add_option("--method", spec.method)->check(CLI::IsMember({"ie", "census"}));
  pmin->add_flag("--json", spec.json);
  pmin->add_option("--cache-dir", spec.cache_dir);
  workers(pmin);

  for (const char* th : {"theorem1", "theorem2"}) {
    auto* sub = app.add_subcommand(th, std::string(th[7] == '1' ? "Ratio p_min A(n)/r" : "Second-order decomposition") + " for n = 2..n-max");
    sub->add_option("--r", spec.r)->required()->check(CLI::PositiveNumber);
    sub->add_option("--n-max", spec.n_max)->required()->check(CLI::Range(2, kDefaultInclusionExclusionLimit));
    workers(sub);
  }

  auto* classes = app.add_subcommand("classes", "Sizes of the longest-block classes of trivial-meet tuples");
  classes->add_option("--n", spec.n)->required()->check(CLI::PositiveNumber);
  classes->add_option("--r", spec.r)->required()->check(CLI::PositiveNumber);
  classes->add_option("--cache-dir", spec.cache_dir);

  auto* sample = app.add_subcommand("sample", "Exactly uniform random triangles");
  sample->add_option("--n", spec.n)->required()->check(CLI::PositiveNumber);
  sample->add_option("--count", spec.count)->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", spec.seed)->required();

  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--suite", spec.suite)->check(CLI::IsMember({"bijections", "lattice", "lemmas", "census", "theorems", "all"}));
  verify->add_option("--n-max", spec.n_max)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    spec.help = app.help();
    for (auto* sub : app.get_subcommands()) spec.help = sub->help();
    return spec;
  } catch (const CLI::ParseError& e) {
    throw Error(Errc::UsageError, e.what());
  }
  spec.name = app.get_subcommands().front()->get_name();
  if (spec.method.empty()) spec.method = spec.name == "asm-count" ? "formula" : "ie";
  return spec;
}

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  std::stringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(Errc::ParseError, "cannot open " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

inline MonotoneTriangle to_triangle(const std::vector<std::vector<int>>& block, const std::string& form) {
  if (form == "triangle") return validate_triangle(static_cast<int>(block.size()), block);
  if (form == "column-sum") return from_column_sum(block);
  return from_asm(block);
}

inline std::string from_triangle(const MonotoneTriangle& t, const std::string& form) {
  if (form == "triangle") return format_triangle(t);
  if (form == "column-sum") return format_matrix(to_column_sum(t));
  return format_matrix(to_asm(t));
}

inline std::string decimal(const BigRational& q) { return to_decimal(q, 12); }

}  // namespace detail

inline int execute(const CommandSpec& spec, std::ostream& out, std::istream& in) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const std::string& cmd = spec.name;

  if (cmd == "asm-count") {
    const int n = *spec.n;
    out << (spec.method == "dp" ? asm_number_dp(n) : asm_number(n)).str() << '\n';
  } else if (cmd == "enumerate") {
    if (spec.count_only) {
      std::uint64_t total = 0;
      for_each_triangle(*spec.n, [&](const MonotoneTriangle&) { ++total; }, spec.workers);
      out << total << '\n';
    } else {
      bool first = true;
      for_each_triangle(*spec.n, [&](const MonotoneTriangle& t) {
        if (!first) out << '\n';
        first = false;
        out << format_triangle(t);
      }, spec.workers);
    }
  } else if (cmd == "convert") {
    std::vector<std::string> outputs;
    for (const auto& block : parse_blocks(detail::read_input(spec.input, in)))
      outputs.push_back(detail::from_triangle(detail::to_triangle(block, spec.from), spec.to));
    out << format_all(outputs, [](const std::string& s) { return s; });
  } else if (cmd == "meet" || cmd == "join") {
    const auto ts = parse_triangles(detail::read_input(spec.input, in));
    const auto op = cmd == "meet" ? LatticeOp::Meet : LatticeOp::Join;
    if (spec.trivial)
      out << (is_trivial(ts, op) ? "true" : "false") << '\n';
    else
      out << format_triangle(op == LatticeOp::Meet ? meet(ts) : join(ts));
  } else if (cmd == "census") {
    const auto table = load_or_build_census(*spec.n, resolve_cache_dir(spec.cache_dir), spec.workers);
    if (spec.histogram) {
      const auto rep = run_histogram_report(table);
      out << "run\tcount\n";
      for (const auto& [run, c] : rep.histogram.counts) out << run << '\t' << c.str() << '\n';
      out << "# at_most_n_minus_3=" << rep.at_most_n_minus_3.str() << " top_counts_1_1_6=" << (rep.top_counts_match ? "yes" : "no")
          << " tail_A(n)-8=" << (rep.tail_matches ? "yes" : "no") << '\n';
    } else {
      out << format_census(table);
    }
  } else if (cmd == "pmin") {
    const int n = *spec.n;
    const int r = *spec.r;
    const BigCount hits = spec.method == "census"
                              ? n_min_census(n, r, load_or_build_census(n, resolve_cache_dir(spec.cache_dir), spec.workers))
                              : n_min_exact(n, r, spec.workers);
    const BigRational p(hits, pow(asm_number(n), static_cast<unsigned>(r)));
    if (spec.json) {
      nlohmann::json j;
      j["n"] = n;
      j["r"] = r;
      j["n_min"] = hits.str();
      j["p_min_num"] = BigInt(numerator(p)).str();
      j["p_min_den"] = BigInt(denominator(p)).str();
      j["p_min_decimal"] = detail::decimal(p);
      out << j.dump() << '\n';
    } else {
      out << "n\tr\tn_min\tp_min_num\tp_min_den\tp_min_decimal\n"
          << n << '\t' << r << '\t' << hits.str() << '\t' << BigInt(numerator(p)).str() << '\t' << BigInt(denominator(p)).str()
          << '\t' << detail::decimal(p) << '\n';
    }
  } else if (cmd == "theorem1") {
    out << "n\tn_min\tp_min_num\tp_min_den\tratio_num\tratio_den\tratio_decimal\ttolerance_decimal\twithin_tolerance\n";
    for (const auto& rep : theorem_report(*spec.n_max, *spec.r, spec.workers)) {
      const BigRational dev = abs(rep.ratio - 1);
      const BigRational tol = theorem1_tolerance(rep.n, rep.r);
      out << rep.n << '\t' << rep.n_min.str() << '\t' << BigInt(numerator(rep.p_min)).str() << '\t'
          << BigInt(denominator(rep.p_min)).str() << '\t' << BigInt(numerator(rep.ratio)).str() << '\t'
          << BigInt(denominator(rep.ratio)).str() << '\t' << detail::decimal(rep.ratio) << '\t' << detail::decimal(tol) << '\t'
          << (dev <= tol ? "yes" : "no") << '\n';
    }
  } else if (cmd == "theorem2") {
    out << "n\tn_min\tmain\tsecond\tE\ttheta_ratio_decimal\ttheta_ratio_num\ttheta_ratio_den\n";
    for (const auto& rep : theorem_report(*spec.n_max, *spec.r, spec.workers)) {
      out << rep.n << '\t' << rep.n_min.str() << '\t' << rep.main_term.str() << '\t' << rep.second_term.str() << '\t'
          << rep.error_term.str() << '\t' << detail::decimal(rep.theta_ratio) << '\t' << BigInt(numerator(rep.theta_ratio)).str()
          << '\t' << BigInt(denominator(rep.theta_ratio)).str() << '\n';
    }
  } else if (cmd == "classes") {
    const int n = *spec.n;
    const int r = *spec.r;
    const auto sizes = class_sizes(n, r, load_or_build_census(n, resolve_cache_dir(spec.cache_dir)));
    out << "class\tsize\tbound\tsize_over_bound_decimal\n";
    for (const auto& [run, size] : sizes.exact) {
      const auto bound = class_bound(n, r, n - run);
      out << "C_" << run << '\t' << size.str() << '\t' << (bound ? bound->str() : "-") << '\t'
          << (bound && *bound > 0 ? detail::decimal(BigRational(size, *bound)) : "-") << '\n';
    }
    out << "C_<=" << sizes.at_most_run << '\t' << sizes.at_most.str() << "\t-\t-\n";
  } else if (cmd == "sample") {
    out << format_triangles(sample_uniform(*spec.n, *spec.count, *spec.seed));
  } else if (cmd == "verify") {
    std::vector<Suite> suites;
    if (spec.suite == "all")
      suites = {Suite::Bijections, Suite::Lattice, Suite::Lemmas, Suite::Census, Suite::Theorems};
    for (Suite s : {Suite::Bijections, Suite::Lattice, Suite::Lemmas, Suite::Census, Suite::Theorems})
      if (spec.suite == suite_name(s)) suites = {s};
    bool ok = true;
    for (Suite s : suites) {
      const auto res = verify_suite(s, spec.n_max.value_or(suite_default_n_max(s)));
      out << res.summary() << '\n';
      ok &= res.ok();
    }
    if (!ok) return kExitDomain;
  } else {
    throw Error(Errc::UsageError, "unknown command " + cmd);
  }
  return kExitOk;
}

/// parse_command + execute with the exit-code contract applied.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CommandSpec spec;
  try {
    spec = parse_command(args);
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!spec.help.empty()) {
    out << spec.help;
    return kExitOk;
  }
  try {
    return execute(spec, out, in);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::UsageError ? kExitUsage : kExitDomain;
  }
}

}  // namespace gog::cli
