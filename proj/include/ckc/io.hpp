#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ckc/colorful.hpp"
#include "ckc/fair.hpp"
#include "ckc/instance.hpp"
#include "ckc/oracles.hpp"

namespace ckc {

using Json = nlohmann::ordered_json;

struct LoadedInstance {
  Instance instance;
  std::optional<std::vector<Rational>> p;

  /// p defaults to all zeros.
  FairInstance fair() const;
};

/// Byte-stable text form; "p" is written only when given.
std::string serialize_instance(const Instance& inst, const std::vector<Rational>* p = nullptr);

/// Throws InvalidInput on malformed text or an invalid instance.
LoadedInstance parse_instance(std::string_view text);
LoadedInstance load_instance(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

/// A rational given as "p/q", "p" or a JSON integer.
Rational rational_from_json(const Json& value);

/// Edge list: first line is the vertex count, then one "u v" pair per line.
/// '#' starts a comment.
Graph parse_graph(std::string_view text);

/// {"universe": n, "sets": [[e, ...], ...]}, elements 0-indexed.
SetCoverInstance parse_setcover(std::string_view text);

Json coverage_json(const Instance& inst, const std::vector<int>& centers, const Rational& r);
Json colorful_solution_json(const Instance& inst, const CenterSet& sol);
Json trace_json(const ColorfulSolution& sol);
Json distribution_json(const Distribution& dist);
Json fair_trace_json(const FairSolution& sol);

}  // namespace ckc
