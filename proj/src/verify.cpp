#include "ckc/verify.hpp"

#include <algorithm>

#include "ckc/errors.hpp"

namespace ckc {

namespace {

std::vector<int> read_centers(const Json& value, int n, std::vector<std::string>& problems,
                              const std::string& where) {
  std::vector<int> centers;
  if (!value.is_array()) {
    problems.push_back(where + ": centers must be an array");
    return centers;
  }
  for (const auto& c : value) {
    if (!c.is_number_integer() || c.get<long>() < 0 || c.get<long>() >= n) {
      problems.push_back(where + ": center " + c.dump() + " is not a point index");
      continue;
    }
    centers.push_back(c.get<int>());
  }
  auto sorted = centers;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    problems.push_back(where + ": repeated center");
  }
  return sorted;
}

void verify_colorful(const Instance& inst, const Json& doc, const Rational& radius,
                     std::vector<std::string>& problems) {
  const auto centers = read_centers(doc.at("centers"), inst.size(), problems, "solution");
  if (!problems.empty()) return;
  if (static_cast<int>(centers.size()) > inst.k()) {
    problems.push_back("solution opens " + std::to_string(centers.size()) + " centers, k = " +
                       std::to_string(inst.k()));
  }
  const CoverageReport rep = check_feasible(inst, centers, radius);
  for (int l = 0; l < inst.num_colors(); ++l) {
    if (rep.covered[l] < inst.colors()[l].demand) {
      problems.push_back("color " + std::to_string(l) + " covered " +
                         std::to_string(rep.covered[l]) + " times, demand " +
                         std::to_string(inst.colors()[l].demand));
    }
  }
  if (doc.contains("coverage")) {
    const auto& cov = doc.at("coverage");
    if (!cov.is_array() || static_cast<int>(cov.size()) != inst.num_colors()) {
      problems.emplace_back("coverage list does not match the colors");
      return;
    }
    for (int l = 0; l < inst.num_colors(); ++l) {
      if (cov[l].value("covered", -1L) != rep.covered[l] ||
          cov[l].value("demand", -1L) != inst.colors()[l].demand) {
        problems.push_back("coverage entry " + std::to_string(l) + " is wrong");
      }
    }
  }
}

void verify_fair(const LoadedInstance& loaded, const Json& doc, const Rational& radius,
                 std::vector<std::string>& problems) {
  Distribution dist;
  dist.radius = radius;
  const auto& entries = doc.at("distribution");
  if (!entries.is_array()) {
    problems.emplace_back("distribution must be an array");
    return;
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "support entry " + std::to_string(i);
    auto centers = read_centers(entries[i].at("centers"), loaded.instance.size(), problems, where);
    dist.support.emplace_back(std::move(centers), rational_from_json(entries[i].at("prob")));
  }
  if (!problems.empty()) return;
  for (auto& line : distribution_violations(loaded.fair(), dist)) problems.push_back(std::move(line));
}

}  // namespace

std::vector<std::string> verify_solution(const LoadedInstance& loaded, const Json& solution) {
  std::vector<std::string> problems;
  const Instance& inst = loaded.instance;
  try {
    if (solution.contains("status") && solution.at("status") == "infeasible") {
      const Rational far = inst.radii().back();
      const std::vector<int> one{0};
      if (check_feasible(inst, one, far).feasible) {
        problems.emplace_back("claimed infeasible, but {0} meets every demand at radius " +
                              to_string(far));
      }
      return problems;
    }
    const Rational radius = rational_from_json(solution.at("radius"));
    if (sgn(radius) < 0) {
      problems.emplace_back("negative radius");
      return problems;
    }
    if (solution.contains("distribution")) {
      verify_fair(loaded, solution, radius, problems);
    } else {
      verify_colorful(inst, solution, radius, problems);
    }
  } catch (const Json::exception& e) {
    problems.push_back(std::string("malformed solution: ") + e.what());
  } catch (const InvalidInput& e) {
    problems.push_back(std::string("malformed solution: ") + e.what());
  }
  return problems;
}

}  // namespace ckc
