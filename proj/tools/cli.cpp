#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "prook/algebra.hpp"
#include "prook/bratteli.hpp"
#include "prook/repr.hpp"
#include "prook/verify.hpp"

namespace prook::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty()) {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  file << data;
  if (!file) throw Error("failed writing '" + path + "'");
}

void require_shape(int n, int c) {
  if (n < 0) throw UsageError("-n must be non-negative");
  if (c < 1) throw UsageError("-c must be at least 1");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the colored planar rook algebra", "prook"};
  app.require_subcommand(1);

  int n = -1;
  int c = -1;
  std::string format;
  std::string out_path;
  std::size_t cap = kDefaultDiagramCap;

  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", cap, "Largest number of diagrams an exhaustive mode may visit")
        ->envname("PROOK_CAP")
        ->capture_default_str();
  };

  // count
  bool breakdown = false;
  auto* count = app.add_subcommand("count", "Print |P_{n,c}|");
  count->add_option("-n", n, "Vertices per row")->required();
  count->add_option("-c", c, "Number of colors")->required();
  count->add_flag("--breakdown", breakdown, "Also print multinomial^2 per composition");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List P_{n,c} in enumeration order");
  enumerate->add_option("-n", n, "Vertices per row")->required();
  enumerate->add_option("-c", c, "Number of colors")->required();
  enumerate->add_option("--format", format, "text or json")->default_str("text");
  enumerate->add_option("--out", out_path, "Output file");
  add_cap(enumerate);

  // mul
  std::vector<std::string> literals;
  bool as_matrix = false;
  std::size_t spot_checks = 0;
  std::uint64_t seed = 1;
  auto* mul_cmd = app.add_subcommand("mul", "Multiply two diagrams");
  mul_cmd->add_option("diagrams", literals, "Two diagram literals, e.g. 'n=3 c=2 [1-2:1]'");
  mul_cmd->add_flag("--as-matrix", as_matrix, "Print the product as a matrix over Z_2^c");
  mul_cmd->add_option("--spot-check", spot_checks,
                      "Check associativity on this many random triples of P_{n,c}");
  mul_cmd->add_option("-n", n, "Vertices per row (spot-check mode)");
  mul_cmd->add_option("-c", c, "Number of colors (spot-check mode)");
  mul_cmd->add_option("--seed", seed, "Seed for spot-check mode");
  add_cap(mul_cmd);

  // xbasis
  std::string x_literal;
  bool coords = false;
  auto* xbasis = app.add_subcommand("xbasis", "Expand x_d, or give the x-coordinates of d");
  xbasis->add_option("diagram", x_literal, "Planar diagram literal")->required();
  xbasis->add_flag("--coords", coords, "Print d in the x-basis instead");

  // chartable
  bool verify_table = false;
  auto* chartable = app.add_subcommand("chartable", "Character table as CSV");
  chartable->add_option("-n", n, "Vertices per row")->required();
  chartable->add_option("-c", c, "Number of colors")->required();
  chartable->add_option("--format", format, "csv")->default_str("csv");
  chartable->add_option("--out", out_path, "Output file");
  chartable->add_flag("--verify", verify_table, "Recompute every entry as a trace");
  add_cap(chartable);

  // bratteli
  auto* bratteli = app.add_subcommand("bratteli", "Bratteli diagram up to level n");
  bratteli->add_option("-c", c, "Number of colors")->required();
  bratteli->add_option("-n", n, "Top level")->required();
  bratteli->add_option("--format", format, "dot or json")->default_str("dot");
  bratteli->add_option("--out", out_path, "Output file");

  // verify
  int n_cap = 3;
  int c_cap = 2;
  bool inject_mutant = false;
  std::size_t samples = VerifyOptions{}.samples;
  auto* verify = app.add_subcommand("verify", "Run every structural check up to the caps");
  verify->add_option("-n", n_cap, "Largest n")->envname("PROOK_N_CAP")->capture_default_str();
  verify->add_option("-c", c_cap, "Largest c")->envname("PROOK_C_CAP")->capture_default_str();
  verify->add_option("--samples", samples, "Random samples for large pair loops")
      ->capture_default_str();
  verify->add_option("--out", out_path, "Write the JSON report here");
  verify->add_flag("--inject-mutant", inject_mutant,
                   "Replace x_d by a sign-flipped expansion (self-test of the checks)");
  add_cap(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) {
      require_shape(n, c);
      out << cardinality(n, c).str() << '\n';
      if (breakdown) {
        for (const auto& comp : compositions(n, c + 1)) {
          const BigInt m = multinomial(comp);
          out << join_bar(comp) << ' ' << BigInt(m * m).str() << '\n';
        }
      }
      return kExitOk;
    }

    if (enumerate->parsed()) {
      require_shape(n, c);
      require_within_cap(n, c, cap);
      if (format.empty()) format = "text";
      std::string data;
      if (format == "text") {
        for (const auto& d : enumerate_planar(n, c)) data += to_string(d) + "\n";
      } else if (format == "json") {
        auto list = nlohmann::ordered_json::array();
        for (const auto& d : enumerate_planar(n, c)) list.push_back(to_string(d));
        data = list.dump(2) + "\n";
      } else {
        throw UsageError("unknown format '" + format + "' (expected text or json)");
      }
      write_output(out_path, data, out);
      return kExitOk;
    }

    if (mul_cmd->parsed()) {
      if (spot_checks > 0) {
        require_shape(n, c);
        require_within_cap(n, c, cap);
        const auto ds = enumerate_planar(n, c);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
        for (std::size_t s = 0; s < spot_checks; ++s) {
          const Diagram &a = ds[pick(rng)], &b = ds[pick(rng)], &d = ds[pick(rng)];
          if (multiply(multiply(a, b), d) != multiply(a, multiply(b, d))) {
            out << "FAIL associativity: " << to_string(a) << " ; " << to_string(b) << " ; "
                << to_string(d) << '\n';
            return kExitVerificationFailed;
          }
        }
        out << "PASS associativity on " << spot_checks << " random triples\n";
        return kExitOk;
      }
      if (literals.size() != 2) throw UsageError("mul needs exactly two diagram literals");
      const Diagram product = multiply(parse_diagram(literals[0]), parse_diagram(literals[1]));
      out << (as_matrix ? matrix_to_string(product) : to_string(product) + "\n");
      return kExitOk;
    }

    if (xbasis->parsed()) {
      const Diagram d = parse_diagram(x_literal);
      if (!coords) {
        out << to_string(x_of(d)) << '\n';
        return kExitOk;
      }
      std::vector<std::pair<Diagram, Rational>> terms;
      for (const auto& [a, mu] : to_x_coordinates(Element(d))) terms.emplace_back(a, mu);
      std::sort(terms.begin(), terms.end(),
                [](const auto& x, const auto& y) { return enumeration_less(x.first, y.first); });
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out << " + ";
        out << terms[i].second.str() << " * x[" << to_string(terms[i].first) << "]";
      }
      out << '\n';
      return kExitOk;
    }

    if (chartable->parsed()) {
      require_shape(n, c);
      if (format.empty()) format = "csv";
      if (format != "csv") throw UsageError("unknown format '" + format + "' (expected csv)");
      const CharacterTable table = character_table(n, c);
      if (verify_table) {
        const CheckResult check = verify_character_table(table, cap);
        if (!check.passed) {
          err << "character table verification failed: " << to_string(*check.witness) << '\n';
          return kExitVerificationFailed;
        }
        err << "verified " << check.cases << " entries by trace\n";
      }
      write_output(out_path, to_csv(table), out);
      return kExitOk;
    }

    if (bratteli->parsed()) {
      if (c < 1) throw UsageError("-c must be at least 1");
      if (n < 0) throw UsageError("-n must be non-negative");
      if (format.empty()) format = "dot";
      GraphFormat fmt;
      try {
        fmt = parse_graph_format(format);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      write_output(out_path, emit(build(c, n), fmt), out);
      return kExitOk;
    }

    if (verify->parsed()) {
      VerifyOptions opt;
      opt.n_cap = n_cap;
      opt.c_cap = c_cap;
      opt.diagram_cap = cap;
      opt.samples = samples;
      if (inject_mutant) opt.expansion = mutant_x_of;
      if (n_cap < 0 || c_cap < 1) throw UsageError("verify needs -n >= 0 and -c >= 1");
      const VerifyReport report = run_verification(opt);
      for (const auto& named : report.checks) {
        err << (named.result.passed ? "PASS " : "FAIL ") << named.name << " (" << named.result.cases
            << " cases)";
        if (named.result.witness) err << ": " << to_string(*named.result.witness);
        err << '\n';
      }
      write_output(out_path, to_json(report), out);
      return report.passed() ? kExitOk : kExitVerificationFailed;
    }
  } catch (const CapExceeded& e) {
    err << "error: cap exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace prook::cli
