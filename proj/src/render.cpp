#include "fano/render.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

namespace fano {

namespace {

std::string betti_list(const FanoProblem& p, long count) {
  std::ostringstream out;
  for (long i = 0; i < count; ++i) {
    if (i) out << ", ";
    out << hodge_number(p, i).value.get_str();
  }
  return out.str();
}

}  // namespace

FullReport make_report(const FanoProblem& p) {
  FullReport rep{p, invariant_report(p), fano_class(p), std::nullopt, {}};
  const auto& inv = rep.invariants;

  if (inv.delta < 0) {
    rep.notes.push_back("expected dimension " + inv.delta.get_str() +
                        " is negative: degree omitted; the class shown is the top Chern class "
                        "of Sym^d S*, not the class of a scheme of expected dimension");
  } else {
    rep.degree = fano_degree(p);
  }

  if (inv.classification == Classification::QuadricTwoComponents) {
    rep.notes.push_back("r-planes on a smooth quadric of dimension 2r form two connected components");
  }

  if (inv.delta_minus > 0) {
    constexpr long kMaxListed = 16;
    const long exact = std::min(to_long(inv.delta_minus), kMaxListed);
    rep.notes.push_back("Betti numbers b_0..b_" + std::to_string(exact - 1) +
                        " equal those of G(r,P^n): " + betti_list(p, exact) +
                        " (all classes of type (p,p))");
  }
  if (inv.delta_minus >= 0) {
    const long i = to_long(inv.delta_minus);
    if (i <= 64) {
      rep.notes.push_back("b_" + std::to_string(i) + " >= " + hodge_number(p, i).value.get_str());
    }
  }

  const BigInt lines_bound = binom_sum(p.d(), p.r(), p.r() + 1) + p.r() + 1;
  if (p.n() >= lines_bound) {
    const auto split = splitting_type(p);
    rep.notes.push_back("normal bundle along a general line splits as O^" +
                        split.trivial_count.get_str() + " + O(1)^" +
                        split.twisted_count.get_str());
  }
  rep.notes.push_back("predicates report whether a sufficient bound on n is met; "
                      "false does not mean the property fails");
  return rep;
}

nlohmann::ordered_json report_to_json(const FullReport& report) {
  using nlohmann::ordered_json;
  const auto& p = report.problem;
  const auto& inv = report.invariants;

  ordered_json j;
  j["input"] = {{"n", p.n()}, {"d", p.d().degrees()}, {"r", p.r()}};
  j["invariants"] = {
      {"delta", inv.delta.get_str()},
      {"delta_minus", inv.delta_minus.get_str()},
      {"classification", std::string(to_string(inv.classification))},
      {"canonical_twist", inv.canonical_twist.get_str()},
      {"fano_index", inv.fano_index.get_str()},
      {"is_fano", inv.is_fano},
  };
  ordered_json preds = ordered_json::object();
  for (const auto& pr : inv.predicates) {
    ordered_json entry = {{"holds", pr.holds}, {"bound", pr.bound.get_str()}};
    if (pr.value) entry["value"] = pr.value->get_str();
    preds[pr.name] = std::move(entry);
  }
  j["predicates"] = std::move(preds);
  ordered_json cls = ordered_json::array();
  for (const auto& [lambda, c] : report.cls.coefficients) {
    std::vector<int> parts = lambda.parts();
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    cls.push_back({{"lambda", parts}, {"coeff", c.get_str()}});
  }
  j["class"] = std::move(cls);
  j["degree"] = report.degree ? ordered_json(report.degree->get_str()) : ordered_json(nullptr);
  j["notes"] = report.notes;
  return j;
}

std::string render_report_text(const FullReport& report) {
  const auto& p = report.problem;
  const auto& inv = report.invariants;
  std::ostringstream out;
  out << "Fano scheme of " << p.r() << "-planes on X_(" << p.d().to_string() << ") in P^"
      << p.n() << "\n";
  out << "  expected dimension   " << inv.delta.get_str() << "\n";
  out << "  delta_minus          " << inv.delta_minus.get_str() << "\n";
  out << "  classification       " << to_string(inv.classification) << "\n";
  out << "  canonical sheaf      O(" << inv.canonical_twist.get_str() << ")\n";
  out << "  fano index           " << inv.fano_index.get_str()
      << (inv.is_fano ? "  (Fano)" : "") << "\n";
  out << "  degree (Plucker)     " << (report.degree ? report.degree->get_str() : "-") << "\n";
  out << "  class                " << render_class(report.cls) << "\n";
  out << "  bounds on n:\n";
  for (const auto& pr : inv.predicates) {
    out << "    " << std::left << std::setw(28) << pr.name << std::right
        << (pr.holds ? "met    " : "not met") << "  n >= " << pr.bound.get_str();
    if (pr.value) out << "  value " << pr.value->get_str();
    out << "\n";
  }
  for (const auto& note : report.notes) out << "  note: " << note << "\n";
  return out.str();
}

std::vector<FanoProblem> lines_table_problems() {
  const std::pair<int, int> rows[] = {{3, 3}, {3, 4}, {3, 5}, {4, 4}, {4, 5}, {4, 6},
                                      {4, 7}, {5, 4}, {5, 5}, {5, 6}, {5, 7}, {6, 5},
                                      {6, 6}, {7, 5}, {7, 6}, {9, 6}};
  std::vector<FanoProblem> out;
  for (auto [d, n] : rows) out.emplace_back(n, MultiDegree({d}), 1);
  return out;
}

std::vector<FanoProblem> planes_table_problems() {
  const int rows[][3] = {{2, 3, 6}, {2, 3, 7}, {2, 3, 8}, {2, 4, 7},
                         {2, 5, 9}, {3, 3, 8}, {3, 3, 9}, {4, 3, 11}};
  std::vector<FanoProblem> out;
  for (const auto& row : rows) out.emplace_back(row[2], MultiDegree({row[1]}), row[0]);
  return out;
}

std::vector<TableRow> compute_table(const std::vector<FanoProblem>& problems, unsigned workers) {
  std::vector<TableRow> rows(problems.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < problems.size(); i = next++) {
      const auto& p = problems[i];
      rows[i] = TableRow{p.r(), p.d()[0], p.n(), delta(p), fano_degree(p)};
    }
  };
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(1, problems.size())));
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  return rows;
}

std::string render_table(const std::vector<TableRow>& rows, bool with_r) {
  std::ostringstream out;
  if (with_r) out << std::setw(2) << "r" << "  ";
  out << std::setw(2) << "d" << "  " << std::setw(3) << "n" << "  " << std::setw(5) << "dim F"
      << "  " << std::setw(16) << "deg F" << "\n";
  for (const auto& row : rows) {
    if (with_r) out << std::setw(2) << row.r << "  ";
    out << std::setw(2) << row.d << "  " << std::setw(3) << row.n << "  " << std::setw(5)
        << row.dim.get_str() << "  " << std::setw(16) << row.degree.get_str() << "\n";
  }
  return out.str();
}

nlohmann::ordered_json bound_to_json(const FanoBound& bound, int r, const MultiDegree& d) {
  using nlohmann::ordered_json;
  ordered_json used = ordered_json::array();
  for (const auto& [key, value] : bound.overrides_used) {
    used.push_back({{"d", key}, {"r", value.get_str()}});
  }
  // D is summarized as (degree, multiplicity) pairs; it can be long.
  ordered_json expanded = ordered_json::array();
  for (int di : d) {
    expanded.push_back({{"degree", di}, {"count", binom(di + r, r).get_str()}});
  }
  return ordered_json{
      {"input", {{"d", d.degrees()}, {"r", r}}},
      {"D", std::move(expanded)},
      {"r_D", bound.r_D.get_str()},
      {"r1", bound.r1.get_str()},
      {"bound", bound.bound.get_str()},
      {"overrides_used", std::move(used)},
  };
}

std::string render_bound_text(const FanoBound& bound, int r, const MultiDegree& d) {
  std::ostringstream out;
  out << "unirationality bound for " << r << "-planes on X_(" << d.to_string() << ")\n";
  out << "  D       ";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out << ", ";
    out << d[i] << " x " << binom(d[i] + r, r).get_str();
  }
  out << "\n";
  out << "  r(D)    " << bound.r_D.get_str() << "\n";
  out << "  r1      " << bound.r1.get_str() << "\n";
  out << "  n(d,r)  " << bound.bound.get_str() << "\n";
  for (const auto& [key, value] : bound.overrides_used) {
    out << "  override used: r(";
    for (std::size_t i = 0; i < key.size(); ++i) out << (i ? "," : "") << key[i];
    out << ") = " << value.get_str() << "\n";
  }
  out << "  F_r(X) is unirational for a generic X when n >= " << bound.bound.get_str() << "\n";
  return out.str();
}

}  // namespace fano
