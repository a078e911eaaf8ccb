#pragma once

// Command-line front end: every table, bound and census as TSV or JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "quokka/acceptance.hpp"
#include "quokka/bounds.hpp"
#include "quokka/census.hpp"
#include "quokka/involution.hpp"
#include "quokka/table1.hpp"
#include "quokka/weyl.hpp"

namespace quokka::cli {

struct Float {
  double v;
};

using Cell = std::variant<std::string, Rational, Float, BigInt>;

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool always_title = false;  // sampled output must carry its label even alone
};

struct OutputOptions {
  bool json = false;
  bool exact = false;  // rationals as num/den in TSV
};

inline std::string cell_text(const Cell& c, const OutputOptions& opt) {
  if (auto s = std::get_if<std::string>(&c)) return *s;
  if (auto r = std::get_if<Rational>(&c)) return opt.exact ? to_string(*r) : format_float(to_double(*r));
  if (auto f = std::get_if<Float>(&c)) return format_float(f->v);
  return to_string(std::get<BigInt>(c));
}

inline nlohmann::ordered_json cell_json(const Cell& c) {
  using J = nlohmann::ordered_json;
  if (auto s = std::get_if<std::string>(&c)) return *s;
  if (auto r = std::get_if<Rational>(&c)) {
    J j;
    j["num"] = r->get_num().get_str();
    j["den"] = r->get_den().get_str();
    return j;
  }
  if (auto f = std::get_if<Float>(&c)) return std::stod(format_float(f->v));
  const BigInt& z = std::get<BigInt>(c);
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline void emit(std::ostream& out, const std::vector<Table>& tables, const OutputOptions& opt) {
  if (opt.json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& t : tables) {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
        arr.push_back(obj);
      }
      doc[t.title] = arr;
    }
    out << doc.dump(2) << "\n";
    return;
  }
  bool first = true;
  for (const auto& t : tables) {
    if (!first) out << "\n";
    first = false;
    if (tables.size() > 1 || t.always_title) out << "# " << t.title << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "\t" : "") << t.columns[i];
    out << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << cell_text(row[i], opt);
      out << "\n";
    }
  }
}

inline Cell opt_exact(const BoundReport& b) {
  if (!b.applicable) return std::string("n/a");
  if (b.exact) return *b.exact;
  return Float{b.value};
}

// ---------------------------------------------------------------- table builders

inline Table table1_table(const std::string& fixture) {
  Table t{"table1", {"interval", "N_I", "symmetric", "N_prime_I", "linear", "other"}, {}};
  for (const auto& r : load_table1(fixture))
    t.rows.push_back({r.interval, BigInt(r.n_i), r.sym, BigInt(r.n_prime_i), r.linear, r.other});
  return t;
}

inline Table table2_table(const std::string& fixture, bool upper) {
  const auto tb = table2(load_table1(fixture), upper);
  Table t{upper ? "table2_upper" : "table2", {"interval", "alpha_over_a", "factor", "symmetric_bound", "contribution"}, {}};
  for (const auto& r : tb.rows) t.rows.push_back({r.interval, Float{r.alpha_factor}, Float{r.factor}, r.sym_bound, Float{r.contribution}});
  t.rows.push_back({std::string("total"), std::string(""), std::string(""), std::string(""), Float{tb.total}});
  return t;
}

inline Table table4_table(int qmod4, std::uint64_t q) {
  if (qmod4 == 0) {
    Table t{"table4", {"group", "exponent", "q_1_mod_4", "q_3_mod_4", "lower_bound"}, {}};
    for (const auto& r : table4_combined()) t.rows.push_back({r.group, r.exponent, r.q1, r.q3, r.lower_bound});
    return t;
  }
  Table t{"table4", {"group", "exponent", "proportion", "lower_bound"}, {}};
  for (const auto& r : table4(qmod4, q)) t.rows.push_back({r.group, r.exponent, r.proportion, Rational(r.proportion / 2)});
  return t;
}

inline Table formula_table(bool linear) {
  Table t{linear ? "table3" : "table5", {"family", "range", "coef_s8", "coef_s4", "coef_s2", "coef_sqrt", "chi", "formula"}, {}};
  for (const auto& r : formula_rows()) {
    if ((r.table == "GL") != linear) continue;
    const std::string var = linear ? "m" : "k";
    const std::string range = r.lo == r.hi ? var + "=" + std::to_string(r.lo) : std::to_string(r.lo) + "<=" + var + "<=" + std::to_string(r.hi);
    t.rows.push_back({r.table, range, r.c8, r.c4, r.c2, r.sqrt_coef, std::string(r.chi ? "yes" : "no"), r.text});
  }
  return t;
}

inline GroupSpec spec_from(const std::string& family, int rank, std::uint64_t q, bool projective) {
  const FamilyToken tok = parse_family(family);
  return make_spec(tok.family, rank, q, tok.projective || projective, tok.omega);
}

inline Table bound_table(const GroupSpec& spec, std::uint64_t target, BoundMode mode) {
  if (!is_power_of_two(target)) throw domain_error("target must be a power of 2, got " + std::to_string(target));
  Table t{"bound", {"kind", "group", "target", "mode", "bound", "provenance", "note"}, {}};
  BoundReport qb;
  if (spec.omega)
    qb = detail::not_applicable(spec, target, "torus sums are stated for the full orthogonal groups; see odd-bounds for Omega");
  else if (spec.projective)
    qb = projective_adjust(quokka_lower_bound(spec.base(), target, mode), spec);
  else
    qb = quokka_lower_bound(spec, target, mode);
  t.rows.push_back({std::string("quokka"), spec.name(), BigInt(static_cast<unsigned long>(target)), std::string(mode_name(mode)), opt_exact(qb), qb.provenance, qb.note});
  const auto nb = named_bound(spec, target);
  t.rows.push_back({std::string("named"), spec.name(), BigInt(static_cast<unsigned long>(target)), std::string("-"), opt_exact(nb), nb.provenance, nb.note});
  return t;
}

inline Table odd_table(const GroupSpec& spec) {
  const auto r = odd_twice_odd(spec);
  Table t{"odd_bounds", {"group", "target", "bound", "simplified", "scaled", "delta", "note"}, {}};
  t.rows.push_back({spec.name(), BigInt(1), opt_exact(r.odd), Float{r.odd_simplified}, Float{r.odd_scaled}, BigInt(r.delta1), r.odd.note});
  t.rows.push_back({spec.name(), BigInt(2), opt_exact(r.twice), Float{r.twice_simplified}, Float{r.twice_scaled}, BigInt(r.delta2), r.twice.note});
  return t;
}

inline Table pm_table(const CentralizerSpec& cs, const std::string& fixture) {
  Table t{"pm", {"kind", "ambient", "m", "bound", "detail"}, {}};
  const std::string amb = cs.ambient.name();
  const BigInt m(cs.m);
  try {
    const auto b = pm_balanced_bound(cs, load_table1(fixture));
    t.rows.push_back({std::string("balanced"), amb, m, Float{b.value},
                      b.method + "; computed " + format_float(b.computed) + ", floor " + format_float(b.floor)});
  } catch (const domain_error& e) {
    t.rows.push_back({std::string("balanced"), amb, m, std::string("n/a"), std::string(e.what())});
  }
  const auto g = pm_general_bound(cs);
  if (g.covered)
    t.rows.push_back({std::string("general"), amb, m, Float{g.value}, g.row});
  else
    t.rows.push_back({std::string("general"), amb, m, std::string("n/a"), g.note});
  const auto c = corollary_bound(cs.d());
  t.rows.push_back({std::string("uniform"), amb, m, Float{c.value}, "K/sqrt(d), K = " + format_float(c.K) + " from " + c.binding_row});
  return t;
}

inline MatrixGroupInput group_from_arg(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_group_file(arg);
  std::vector<std::string> parts;
  std::stringstream ss(arg);
  for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
  if (parts.size() != 3) throw domain_error("'" + arg + "' is neither a group file nor a builtin FAMILY,DIM,P");
  int dim = 0;
  unsigned long p = 0;
  try {
    dim = std::stoi(parts[1]);
    p = std::stoul(parts[2]);
  } catch (const std::exception&) {
    throw domain_error("builtin group needs integer DIM and P, got '" + arg + "'");
  }
  return builtin_generators(parts[0], dim, static_cast<std::uint32_t>(p));
}

inline Table census_table(const std::string& label, const CensusTable& c, bool approximate) {
  Table t{approximate ? "census_APPROXIMATE" : "census", {"group", "two_part_order", "count", "proportion"}, {}, approximate};
  for (const auto& [o, n] : c.by_two_part) t.rows.push_back({label, BigInt(static_cast<unsigned long>(o)), n, make_rational(n, c.total)});
  t.rows.push_back({label, std::string("total"), c.total, Rational(1)});
  return t;
}

inline Table verify_table(const std::vector<CriterionResult>& rs) {
  Table t{"verify", {"criterion", "result", "name", "detail"}, {}};
  for (const auto& r : rs) t.rows.push_back({BigInt(r.id), std::string(r.pass ? "PASS" : "FAIL"), r.name, r.detail});
  return t;
}

// ---------------------------------------------------------------- entry point

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower bounds and exact censuses for 2-part orders in finite classical groups", "quokka"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "tsv";
  bool exact = false;
  std::uint64_t seed = 1;
  std::string fixture = default_table1_path();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_flag("--exact", exact, "Print rationals as num/den");
  app.add_option("--seed", seed, "Seed for the random-word sampler");
  app.add_option("--table1-fixture", fixture, "Path of the symmetric-group constants fixture");

  auto* tables = app.add_subcommand("tables", "Emit a derived or published table");
  std::string which;
  int qmod4 = 0;
  std::uint64_t table_q = 0;
  bool upper = false;
  tables->add_option("table", which, "table1, table2, table3, table4 or table5")->required()->check(CLI::IsMember({"table1", "table2", "table3", "table4", "table5"}));
  tables->add_option("--qmod4", qmod4, "table4: residue of q mod 4 (1 or 3); omit for both")->check(CLI::IsMember({1, 3}));
  tables->add_option("--q", table_q, "table4: field size in the chosen residue class");
  tables->add_flag("--upper", upper, "table2: the d/2 <= m <= 2d/3 range");

  auto* bound = app.add_subcommand("bound", "Lower bounds on the proportion with a given 2-part order");
  std::string family;
  int rank = 0;
  std::uint64_t q = 0, target = 1;
  std::string mode = "paper";
  bool projective = false;
  bound->add_option("--family", family, "GL, SL, GU, SU, Sp, SO, SO+, SO-, Omega+, ...; prefix P for projective")->required();
  bound->add_option("--rank", rank, "n for linear/unitary, l otherwise")->required();
  bound->add_option("--q", q, "odd prime power")->required();
  bound->add_option("--target", target, "2-part order 2^a")->required();
  bound->add_option("--mode", mode, "Torus fractions: paper or exact")->check(CLI::IsMember({"paper", "exact"}));
  bound->add_flag("--projective", projective, "Quotient by the centre");

  auto* odd = app.add_subcommand("odd-bounds", "Odd and twice-odd order bounds for Sp and SO");
  odd->add_option("--family", family, "Sp, SO, SO+, SO-, Omega..., with optional P prefix")->required();
  odd->add_option("--rank", rank, "l")->required();
  odd->add_option("--q", q, "odd prime power")->required();
  odd->add_flag("--projective", projective, "Quotient by the centre");

  auto* pm = app.add_subcommand("pm", "Bounds on P(|x|_2 > |y|_2) in an involution centralizer");
  int d = 0, m = 0;
  pm->add_option("--family", family, "GL, GU, Sp or SO (ambient)")->required();
  pm->add_option("--d", d, "ambient dimension")->required();
  pm->add_option("--m", m, "dimension of the first factor")->required();
  pm->add_option("--q", q, "odd prime power")->required();

  auto* cen = app.add_subcommand("census", "Exact census of 2-part orders by enumeration");
  std::string file, builtin, against;
  std::uint64_t sample_length = 0, sample_count = 0;
  std::size_t cap = kDefaultElementCap;
  auto* file_opt = cen->add_option("--file", file, "group file")->check(CLI::ExistingFile);
  auto* builtin_opt = cen->add_option("--builtin", builtin, "FAMILY,DIM,P with FAMILY in GL, SL, Sp");
  file_opt->excludes(builtin_opt);
  cen->add_option("--pm-against", against, "second group (file or FAMILY,DIM,P) for P(|x|_2 > |y|_2)");
  cen->add_option("--sample-length", sample_length, "random-word length (approximate mode)");
  cen->add_option("--sample-count", sample_count, "number of random words (approximate mode)");
  cen->add_option("--cap", cap, "element budget for enumeration");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return 0;
    err << app.help();
    return 2;
  }

  const OutputOptions opt{format == "json", exact};
  try {
    std::vector<Table> result;
    int status = 0;
    if (*tables) {
      if (which == "table1") result.push_back(table1_table(fixture));
      else if (which == "table2") result.push_back(table2_table(fixture, upper));
      else if (which == "table3") result.push_back(formula_table(true));
      else if (which == "table5") result.push_back(formula_table(false));
      else result.push_back(table4_table(qmod4, table_q));
    } else if (*bound) {
      result.push_back(bound_table(spec_from(family, rank, q, projective), target, mode == "exact" ? BoundMode::exact : BoundMode::paper));
    } else if (*odd) {
      result.push_back(odd_table(spec_from(family, rank, q, projective)));
    } else if (*pm) {
      result.push_back(pm_table(make_centralizer(parse_family(family).family, d, m, q), fixture));
    } else if (*cen) {
      if (file.empty() && builtin.empty()) throw domain_error("census needs --file or --builtin");
      const MatrixGroupInput in = file.empty() ? group_from_arg(builtin) : load_group_file(file);
      const std::string label = in.label.empty() ? (file.empty() ? builtin : file) : in.label;
      if (sample_length || sample_count) {
        if (!sample_length || !sample_count) throw domain_error("sampling needs both --sample-length and --sample-count");
        const auto s = random_word_sample(in, sample_length, sample_count, seed);
        result.push_back(census_table(label, s.table, true));
      } else {
        const auto cx = census(in, cap);
        result.push_back(census_table(label, cx, false));
        if (!against.empty()) {
          const MatrixGroupInput other = group_from_arg(against);
          const auto cy = census(other, cap);
          const Rational p = pm_exact(cx, cy);
          Table t{"pm_exact", {"x_group", "y_group", "probability", "decimal"}, {}};
          t.rows.push_back({label, other.label.empty() ? against : other.label, p, Float{to_double(p)}});
          result.push_back(t);
        }
      }
    } else if (*verify) {
      const auto rs = run_acceptance(fixture);
      result.push_back(verify_table(rs));
      for (const auto& r : rs)
        if (!r.pass) status = 1;
    }
    emit(out, result, opt);
    return status;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const unsupported_error& e) {
    err << "unsupported: " << e.what() << "\n";
  } catch (const overflow_error& e) {
    err << "overflow: " << e.what() << "\n";
  } catch (const consistency_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace quokka::cli
