// fanocalc: invariants, degrees and Schubert classes of Fano schemes of
// r-planes on complete intersections.
//
// Exit codes: 0 success, 2 usage or parse error, 3 domain precondition.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "fano/invariants.hpp"
#include "fano/render.hpp"
#include "fano/schubert.hpp"
#include "fano/unirationality.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fano::MultiDegree parse_degrees(const std::string& text) {
  std::vector<int> degrees;
  std::stringstream list(text);
  std::string token;
  while (std::getline(list, token, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw UsageError("--d: invalid degree token '" + token + "'");
    }
    if (used != token.size() || value < 1) {
      throw UsageError("--d: invalid degree token '" + token + "'");
    }
    degrees.push_back(value);
  }
  if (degrees.empty() || (!text.empty() && text.back() == ',')) {
    throw UsageError("--d: expected a comma-separated list of degrees, got '" + text + "'");
  }
  return fano::MultiDegree(std::move(degrees));
}

fano::FanoProblem make_problem(int n, const std::string& d, int r) {
  auto degrees = parse_degrees(d);
  try {
    return fano::FanoProblem(n, std::move(degrees), r);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--n/--r: ") + e.what());
  }
}

unsigned worker_count() {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FANO_WORKERS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) workers = std::min(workers, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring FANO_WORKERS='" << env << "'\n";
    }
  }
  return workers;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of Fano schemes of r-planes on complete intersections"};
  app.require_subcommand(1);

  int n = 0;
  int r = 0;
  std::string d;
  bool json = false;

  auto* report = app.add_subcommand("report", "invariants, class, degree and bounds");
  report->add_option("--n", n, "ambient projective dimension")->required();
  report->add_option("--d", d, "comma-separated degrees")->required();
  report->add_option("--r", r, "plane dimension")->required();
  report->add_flag("--json", json, "JSON output");

  bool abstract = false;
  bool factored = false;
  std::optional<int> class_n;
  auto* cls = app.add_subcommand("class", "Schubert decomposition of [F_r(X)]");
  auto* n_opt = cls->add_option("--n", class_n, "ambient projective dimension");
  cls->add_option("--d", d, "comma-separated degrees")->required();
  cls->add_option("--r", r, "plane dimension")->required();
  cls->add_flag("--abstract", abstract, "no truncation to G(r,P^n), as for n large")
      ->excludes(n_opt);
  cls->add_flag("--factored", factored, "pull out the gcd of the coefficients");
  cls->add_flag("--json", json, "JSON output");

  auto* degree = app.add_subcommand("degree", "Plucker degree of F_r(X)");
  degree->add_option("--n", n, "ambient projective dimension")->required();
  degree->add_option("--d", d, "comma-separated degrees")->required();
  degree->add_option("--r", r, "plane dimension")->required();
  degree->add_flag("--json", json, "JSON output");

  bool lines = false;
  bool planes = false;
  auto* table = app.add_subcommand("table", "degree tables for lines or planes on hypersurfaces");
  auto* lines_flag = table->add_flag("--lines", lines, "r = 1");
  auto* planes_flag = table->add_flag("--planes", planes, "r = 2, 3, 4");
  lines_flag->excludes(planes_flag);
  table->add_flag("--json", json, "JSON output");

  std::string overrides_path;
  auto* unirat = app.add_subcommand("unirat", "explicit unirationality bound n(d, r)");
  unirat->add_option("--d", d, "comma-separated degrees")->required();
  unirat->add_option("--r", r, "plane dimension")->required();
  unirat->add_option("--overrides", overrides_path, "file of lines 'd=<degrees> r=<integer>'");
  unirat->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (report->parsed()) {
      const auto rep = fano::make_report(make_problem(n, d, r));
      if (json) {
        std::cout << fano::report_to_json(rep).dump(2) << "\n";
      } else {
        std::cout << fano::render_report_text(rep);
      }
    } else if (cls->parsed()) {
      fano::FanoClass result;
      if (abstract) {
        if (r < 0) throw UsageError("--r: must be >= 0");
        result = fano::fano_class_abstract(r, parse_degrees(d));
      } else {
        if (!class_n) throw UsageError("class: give --n or --abstract");
        result = fano::fano_class(make_problem(*class_n, d, r));
      }
      if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& [lambda, c] : result.coefficients) {
          std::vector<int> parts = lambda.parts();
          while (!parts.empty() && parts.back() == 0) parts.pop_back();
          j.push_back({{"lambda", parts}, {"coeff", c.get_str()}});
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (factored ? fano::render_class_factored(result) : fano::render_class(result))
                  << "\n";
      }
    } else if (degree->parsed()) {
      const auto deg = fano::fano_degree(make_problem(n, d, r));
      if (json) {
        std::cout << nlohmann::ordered_json{{"degree", deg.get_str()}}.dump(2) << "\n";
      } else {
        std::cout << deg.get_str() << "\n";
      }
    } else if (table->parsed()) {
      if (!lines && !planes) throw UsageError("table: give --lines or --planes");
      const auto problems = lines ? fano::lines_table_problems() : fano::planes_table_problems();
      const auto rows = fano::compute_table(problems, worker_count());
      if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
          j.push_back({{"r", row.r},
                       {"d", row.d},
                       {"n", row.n},
                       {"dim", row.dim.get_str()},
                       {"degree", row.degree.get_str()}});
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << fano::render_table(rows, planes);
      }
    } else if (unirat->parsed()) {
      const auto degrees = parse_degrees(d);
      if (r < 0) throw UsageError("--r: must be >= 0");
      fano::RecursionOverrides overrides;
      if (!overrides_path.empty()) {
        std::ifstream in(overrides_path);
        if (!in) throw UsageError("--overrides: cannot open '" + overrides_path + "'");
        try {
          overrides = fano::parse_overrides(in);
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--overrides: ") + e.what());
        }
      }
      const auto bound = fano::fano_unirationality_bound(degrees, r, overrides);
      if (json) {
        std::cout << fano::bound_to_json(bound, r, degrees).dump(2) << "\n";
      } else {
        std::cout << fano::render_bound_text(bound, r, degrees);
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
