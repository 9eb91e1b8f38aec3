#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fano/invariants.hpp"
#include "fano/schubert.hpp"
#include "fano/unirationality.hpp"

namespace fano {

/// Everything `report` prints for one problem.
struct FullReport {
  FanoProblem problem;
  InvariantReport invariants;
  FanoClass cls;
  std::optional<BigInt> degree;  // absent when delta < 0
  std::vector<std::string> notes;
};

FullReport make_report(const FanoProblem& p);

/// JSON layout:
///   input      {n, d[], r}
///   invariants {delta, delta_minus, classification, canonical_twist, fano_index, is_fano}
///   predicates {name: {holds, bound[, value]}}
///   class      [{lambda[], coeff}]
///   degree     decimal string or null
///   notes      [string]
/// Big integers are decimal strings.
nlohmann::ordered_json report_to_json(const FullReport& report);
std::string render_report_text(const FullReport& report);

struct TableRow {
  int r;
  int d;
  int n;
  BigInt dim;
  BigInt degree;
};

/// (d, n) pairs of the lines table, r = 1.
std::vector<FanoProblem> lines_table_problems();
/// (r, d, n) triples of the planes table, r = 2, 3, 4.
std::vector<FanoProblem> planes_table_problems();

/// Computes the rows on up to `workers` threads; output order follows input.
std::vector<TableRow> compute_table(const std::vector<FanoProblem>& problems, unsigned workers);

/// Fixed-width text table. with_r adds the leading r column.
std::string render_table(const std::vector<TableRow>& rows, bool with_r);

nlohmann::ordered_json bound_to_json(const FanoBound& bound, int r, const MultiDegree& d);
std::string render_bound_text(const FanoBound& bound, int r, const MultiDegree& d);

}  // namespace fano
