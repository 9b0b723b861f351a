#pragma once

#include <string>
#include <vector>

#include "ckc/io.hpp"

namespace ckc {

/// Re-checks a solution document produced by solve, solve-fair or brute
/// against the instance using only core-model operations. Returns one line
/// per violation; empty means ok.
///
/// Colorful documents carry "radius" and "centers" (and optionally
/// "coverage", which must match); fair ones carry "radius" and
/// "distribution". A document claiming {"status": "infeasible"} is refuted
/// whenever one center already meets every demand at the largest radius.
std::vector<std::string> verify_solution(const LoadedInstance& loaded, const Json& solution);

}  // namespace ckc
