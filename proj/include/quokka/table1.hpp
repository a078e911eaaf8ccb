#pragma once

// Published constant lower bounds per alpha-interval (symmetric, linear and other
// classical groups), loaded from a TSV fixture, plus the internal consistency checks.

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "quokka/errors.hpp"

namespace quokka {

struct Table1Row {
  std::string interval;  // e.g. "[a/2,a)"
  double lo_factor = 0;  // interval is [lo_factor * a, hi_factor * a)
  double hi_factor = 0;
  long n_i = 0;
  std::string sym;  // symmetric-group bound, digits as printed
  long n_prime_i = 0;
  std::string linear;  // GL/SL/GU/SU bound
  std::string other;   // Sp/SO bound

  double sym_value() const { return std::stod(sym); }
  double linear_value() const { return std::stod(linear); }
  double other_value() const { return std::stod(other); }
};

inline std::string default_table1_path() {
#ifdef QUOKKA_DATA_DIR
  return std::string(QUOKKA_DATA_DIR) + "/table1.tsv";
#else
  return "data/table1.tsv";
#endif
}

namespace detail {

inline double parse_factor(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return std::stod(s);
  return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
}

}  // namespace detail

inline std::vector<Table1Row> load_table1(const std::string& path = default_table1_path()) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open table fixture " + path);
  std::vector<Table1Row> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Table1Row r;
    std::string lo, hi;
    if (!(ls >> r.interval >> lo >> hi >> r.n_i >> r.sym >> r.n_prime_i >> r.linear >> r.other))
      throw domain_error(path + " line " + std::to_string(lineno) + ": expected 8 tab-separated fields");
    try {
      r.lo_factor = detail::parse_factor(lo);
      r.hi_factor = detail::parse_factor(hi);
      (void)r.sym_value();
      (void)r.linear_value();
      (void)r.other_value();
    } catch (const std::exception&) {
      throw domain_error(path + " line " + std::to_string(lineno) + ": malformed number");
    }
    rows.push_back(r);
  }
  if (rows.size() != 8) throw domain_error(path + ": expected 8 rows, found " + std::to_string(rows.size()));
  return rows;
}

struct Table1Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Table1Report {
  std::vector<Table1Check> checks;
  double sum_linear_mid = 0;  // rows 3..5, linear column
  double sum_other_mid = 0;   // rows 3..5, other column

  bool ok() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline constexpr double kTable1Tolerance = 1e-9;

/// Checks other = linear / 2 per row and the two headline sums over rows 3-5.
inline Table1Report check_table1(const std::vector<Table1Row>& rows) {
  if (rows.size() != 8) throw domain_error("table needs 8 rows");
  Table1Report rep;
  for (const auto& r : rows) {
    const double want = r.linear_value() / 2, got = r.other_value();
    std::ostringstream d;
    d.precision(12);
    d << r.other << " vs " << r.linear << "/2 = " << want << " (diff " << got - want << ")";
    rep.checks.push_back({"half of linear column " + r.interval, std::fabs(got - want) <= kTable1Tolerance, d.str()});
  }
  for (std::size_t i = 2; i <= 4; ++i) {
    rep.sum_linear_mid += rows[i].linear_value();
    rep.sum_other_mid += rows[i].other_value();
  }
  std::ostringstream a, b;
  a.precision(11);
  b.precision(11);
  a << rep.sum_linear_mid;
  b << rep.sum_other_mid;
  rep.checks.push_back({"linear rows 3-5 sum >= 0.22", rep.sum_linear_mid >= 0.22, a.str()});
  rep.checks.push_back({"other rows 3-5 sum >= 0.11", rep.sum_other_mid >= 0.11, b.str()});
  return rep;
}

}  // namespace quokka
