#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twistalg.hpp"

namespace twistalg::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("TWISTALG_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("TWISTALG_SEED is not an unsigned integer: ") + env);
    }
  }
  return kDefaultSeed;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

inline TwistTable load_twist_table(const std::string& path) {
  const auto text = read_file(path);
  if (looks_like_json(text)) {
    try {
      return twist_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::MalformedTable, e.what());
    }
  }
  std::istringstream in(text);
  return read_twist_csv(in);
}

/// Options shared by the subcommands that build an algebra.
struct AlgebraOptions {
  std::string twist = "cyd";
  unsigned n = 2;
  std::string twist_file;
  std::string group_file;

  void attach(CLI::App* cmd, bool allow_group_file = false) {
    cmd->add_option("--twist", twist, "cyd|clf|hadamard|trivial|grade-parity|xor-parity");
    cmd->add_option("--n", n, "dimension exponent (algebra of dimension 2^n)");
    cmd->add_option("--twist-file", twist_file, "sign table as CSV or JSON");
    if (allow_group_file) cmd->add_option("--group-file", group_file, "Cayley table as CSV");
  }

  FiniteGroup group(unsigned cap) const {
    if (!group_file.empty()) {
      std::istringstream in(read_file(group_file));
      return read_group_csv(in);
    }
    if (!twist_file.empty()) {
      const auto table = load_twist_table(twist_file);
      const int e = table.exponent();
      if (e < 0) throw UsageError("a non-dyadic sign table needs --group-file");
      require_exponent(static_cast<unsigned>(e), cap, "--twist-file");
      return FiniteGroup::dyadic(static_cast<unsigned>(e));
    }
    require_exponent(n, cap, "--n");
    return FiniteGroup::dyadic(n);
  }

  Twist make_twist(const FiniteGroup& g) const {
    if (!twist_file.empty()) return to_twist(load_twist_table(twist_file), g);
    const auto kind = parse_twist_kind(twist);
    if (!kind || *kind == TwistKind::Table) throw UsageError("unknown twist '" + twist + "'");
    return Twist::of(*kind);
  }

  AlgebraContext context(unsigned cap) const {
    auto g = group(cap);
    auto t = make_twist(g);
    return AlgebraContext(std::move(g), std::move(t));
  }
};

inline void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format '" + format + "'");
}

inline Element read_element_arg(const std::string& text, std::size_t dimension) {
  if (looks_like_json(text)) {
    auto x = element_from_json(json::parse(text));
    if (x.size() != dimension) throw Error(ErrorCode::DimensionMismatch, "element dimension differs from --n");
    return x;
  }
  return parse_element(text, dimension);
}

/// Translates one e-notation or i-notation term into the other notation.
inline std::string translate_term(const std::string& term) {
  if (!term.empty() && term.front() == 'i') {
    GroupElement p = 0;
    auto [ptr, ec] = std::from_chars(term.data() + 1, term.data() + term.size(), p);
    if (ec != std::errc{} || ptr != term.data() + term.size() || term.size() == 1)
      throw Error(ErrorCode::MalformedENotation, "'" + term + "' is not i<index>");
    return format_e(Blade{p});
  }
  return "i" + std::to_string(parse_e(term).index);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted group algebra toolkit: Cayley-Dickson and Clifford algebras over XOR groups"};
  app.require_subcommand(1);
  std::string format = "text";

  // twist-table
  AlgebraOptions tt;
  auto* twist_table = app.add_subcommand("twist-table", "print the sign matrix of a twist");
  tt.attach(twist_table);
  twist_table->add_option("--format", format, "text|csv|json");

  // mul-table
  AlgebraOptions mt;
  auto* mul_table_cmd = app.add_subcommand("mul-table", "print the basis multiplication table");
  mt.attach(mul_table_cmd);
  mul_table_cmd->add_option("--format", format, "text|csv|json");

  // mul
  AlgebraOptions mo;
  std::string lhs, rhs;
  auto* mul_cmd = app.add_subcommand("mul", "multiply two elements");
  mo.attach(mul_cmd);
  mul_cmd->add_option("x", lhs, "left factor, e.g. \"1 - 2*i3\" (use -- before a leading minus)")
      ->required();
  mul_cmd->add_option("y", rhs, "right factor")->required();
  mul_cmd->add_option("--format", format, "text|json");

  // translate
  std::vector<std::string> terms;
  auto* translate = app.add_subcommand("translate", "convert between e-notation and i-notation");
  translate->add_option("terms", terms, "e.g. e134, e[10,12], i13, 1")->required();

  // check-properties
  AlgebraOptions co;
  std::vector<std::string> required_props;
  auto* check = app.add_subcommand("check-properties", "report the twist axioms");
  co.attach(check, true);
  check->add_option("--require", required_props, "exit 1 unless these properties hold");
  check->add_option("--format", format, "text|json");

  // oracle-check
  unsigned oracle_n = 5;
  auto* oracle = app.add_subcommand("oracle-check", "compare twists against the brute-force oracles");
  oracle->add_option("--n", oracle_n, "sweep all pairs in G_n (n <= 8)");

  // matrix-rep
  AlgebraOptions ro;
  GroupElement rep_p = 0;
  auto* matrix = app.add_subcommand("matrix-rep", "left-regular matrix L_p");
  ro.attach(matrix);
  matrix->add_option("--p", rep_p, "basis index")->required();
  matrix->add_option("--format", format, "text|csv|json");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "numerical experiments on truncated sequences");
  experiment->require_subcommand(1);
  std::size_t trials = kDefaultTrials;
  std::optional<std::uint64_t> seed;
  unsigned n_min = 1, n_max = 3;
  std::optional<unsigned> single_n;
  auto* ortho = experiment->add_subcommand("orthogonality", "orthogonality of the family i_p x");
  ortho->add_option("--n", single_n, "single dimension exponent");
  ortho->add_option("--n-min", n_min);
  ortho->add_option("--n-max", n_max);
  ortho->add_option("--trials", trials);
  ortho->add_option("--seed", seed);
  ortho->add_option("--format", format, "text|json");

  std::string product = "convolution";
  std::string decay = "geometric";
  std::optional<double> rate;
  unsigned growth_min = 4, growth_max = 10;
  auto* growth = experiment->add_subcommand("norm-growth", "norm ratio of products as n grows");
  growth->add_option("--product", product, "convolution or a twist name");
  growth->add_option("--n-min", growth_min);
  growth->add_option("--n-max", growth_max);
  growth->add_option("--decay", decay, "geometric|power");
  growth->add_option("--rate", rate, "ratio r (geometric, default 0.5) or exponent s (power, default 1)");
  growth->add_option("--trials", trials);
  growth->add_option("--seed", seed);
  growth->add_option("--format", format, "text|json");

  std::vector<const char*> argv;
  argv.push_back("twistalg");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*twist_table) {
      check_format(format, {"text", "csv", "json"});
      const auto ctx = tt.context(TwistTable::kMaxExponent);
      const auto& table = ctx.table();
      if (format == "json") {
        out << twist_to_json(table).dump() << '\n';
      } else if (format == "csv") {
        write_twist_csv(out, table);
      } else {
        for (GroupElement p = 0; p < table.order(); ++p) {
          for (GroupElement q = 0; q < table.order(); ++q)
            out << (q ? " " : "") << (table(p, q) > 0 ? "+1" : "-1");
          out << '\n';
        }
      }
      return kOk;
    }

    if (*mul_table_cmd) {
      check_format(format, {"text", "csv", "json"});
      const auto t = mul_table(mt.context(TwistTable::kMaxExponent));
      if (format == "json") {
        out << mul_table_to_json(t).dump() << '\n';
      } else if (format == "csv") {
        write_mul_table_csv(out, t);
      } else {
        const auto width = format_mul_cell(1, static_cast<long>(t.order - 1)).size();
        for (std::size_t p = 0; p < t.order; ++p) {
          for (std::size_t q = 0; q < t.order; ++q)
            out << (q ? " " : "") << std::setw(static_cast<int>(width))
                << format_mul_cell(t.signs[p][q], t.cells[p][q]);
          out << '\n';
        }
      }
      return kOk;
    }

    if (*mul_cmd) {
      check_format(format, {"text", "json"});
      const auto ctx = mo.context(TwistTable::kMaxExponent);
      const auto x = read_element_arg(lhs, ctx.dimension());
      const auto y = read_element_arg(rhs, ctx.dimension());
      const auto z = mul(ctx, x, y);
      if (format == "json")
        out << element_to_json(z).dump() << '\n';
      else
        out << format_element(z) << '\n';
      return kOk;
    }

    if (*translate) {
      for (const auto& term : terms) out << translate_term(term) << '\n';
      return kOk;
    }

    if (*check) {
      check_format(format, {"text", "json"});
      const auto g = co.group(16);
      const auto report = check_properties(co.make_twist(g), g);
      out << (format == "json" ? report_to_json(report).dump() + "\n" : format_report(report));
      PropertySet wanted;
      for (const auto& name : required_props) {
        const auto p = parse_property(name);
        if (!p) throw UsageError("unknown property '" + name + "'");
        wanted.insert(*p);
      }
      return report.satisfies(wanted) ? kOk : kCheckFailed;
    }

    if (*oracle) {
      require_exponent(oracle_n, kMaxOracleExponent, "oracle-check --n");
      const auto dim = static_cast<GroupElement>(dyadic_order(oracle_n));
      std::size_t cd_ok = 0, had_ok = 0, clf_ok = 0;
      for (GroupElement p = 0; p < dim; ++p)
        for (GroupElement q = 0; q < dim; ++q) {
          cd_ok += oracle_twist(p, q, oracle_n) == cyd(p, q);
          had_ok += hadamard_oracle_twist(p, q, oracle_n) == named(TwistKind::Hadamard, p, q);
          clf_ok += blade_mul_oracle(Blade{p}, Blade{q}) == SignedBlade{clf(p, q), Blade{p ^ q}};
        }
      const std::size_t total = std::size_t{dim} * dim;
      auto line = [&](const char* name, std::size_t ok) {
        out << name << ": " << ok << "/" << total << " pairs agree " << (ok == total ? "PASS" : "FAIL")
            << '\n';
      };
      line("cayley-dickson pair product vs cyd", cd_ok);
      line("hadamard pair product vs (-1)^sob(p&q)", had_ok);
      line("blade factorization vs clf", clf_ok);
      return cd_ok == total && had_ok == total && clf_ok == total ? kOk : kCheckFailed;
    }

    if (*matrix) {
      check_format(format, {"text", "csv", "json"});
      const auto ctx = ro.context(8);
      const auto m = matrix_rep(ctx, rep_p);
      if (format == "json") {
        std::vector<std::vector<int>> rows(m.size, std::vector<int>(m.size));
        for (std::size_t r = 0; r < m.size; ++r)
          for (std::size_t c = 0; c < m.size; ++c) rows[r][c] = m(r, c);
        out << json{{"twist", std::string(ctx.twist().name())}, {"p", rep_p}, {"matrix", rows}}.dump()
            << '\n';
      } else {
        const char* sep = format == "csv" ? "," : " ";
        for (std::size_t r = 0; r < m.size; ++r) {
          for (std::size_t c = 0; c < m.size; ++c) {
            out << (c ? sep : "");
            if (format == "text") out << std::setw(2);
            out << m(r, c);
          }
          out << '\n';
        }
      }
      return kOk;
    }

    if (*ortho) {
      check_format(format, {"text", "json"});
      const auto s = seed.value_or(default_seed());
      if (single_n) n_min = n_max = *single_n;
      if (n_min > n_max) throw UsageError("--n-min exceeds --n-max");
      require_exponent(n_max, kMaxOrthogonalityExponent, "orthogonality --n");
      auto report = orthogonality_scan(n_min, trials, s);
      for (unsigned n = n_min + 1; n <= n_max; ++n) report.append(orthogonality_scan(n, trials, s));
      out << (format == "json" ? report_to_json(report).dump() + "\n" : format_report(report));
      return report.passed ? kOk : kCheckFailed;
    }

    if (*growth) {
      check_format(format, {"text", "json"});
      GrowthProduct prod = GrowthProduct::dyadic_convolution();
      if (product != "convolution") {
        const auto kind = parse_twist_kind(product);
        if (!kind || *kind == TwistKind::Table) throw UsageError("unknown --product '" + product + "'");
        prod = GrowthProduct::twisted(*kind);
      }
      DecayProfile profile;
      if (decay == "geometric")
        profile = DecayProfile::geometric(rate.value_or(0.5));
      else if (decay == "power")
        profile = DecayProfile::power_law(rate.value_or(1.0));
      else
        throw UsageError("unknown --decay '" + decay + "'");
      const auto report =
          norm_growth(prod, growth_min, growth_max, profile, trials, seed.value_or(default_seed()));
      out << (format == "json" ? report_to_json(report).dump() + "\n" : format_report(report));
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::NotSignedBasis:
      case ErrorCode::InconsistentResult: return kCheckFailed;
      default: return kUsage;
    }
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace twistalg::cli
