#include "ckc/io.hpp"

#include <fstream>
#include <sstream>

#include "ckc/errors.hpp"

namespace ckc {

FairInstance LoadedInstance::fair() const {
  return FairInstance(instance, p ? *p : std::vector<Rational>(instance.size()));
}

namespace {

void write_ints(std::ostringstream& out, const std::vector<int>& values) {
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
  out << ']';
}

void write_rationals(std::ostringstream& out, const std::vector<Rational>& values) {
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << (i ? ", " : "") << '"' << to_string(values[i]) << '"';
  }
  out << ']';
}

}  // namespace

std::string serialize_instance(const Instance& inst, const std::vector<Rational>* p) {
  std::ostringstream out;
  out << "{\n  \"n\": " << inst.size() << ",\n  \"k\": " << inst.k() << ",\n  \"dist\": [\n";
  for (int u = 0; u < inst.size(); ++u) {
    out << "    ";
    write_rationals(out, inst.distances()[u]);
    out << (u + 1 < inst.size() ? ",\n" : "\n");
  }
  out << "  ],\n  \"colors\": [\n";
  for (int l = 0; l < inst.num_colors(); ++l) {
    const auto& c = inst.colors()[l];
    out << "    {\"members\": ";
    write_ints(out, c.members);
    out << ", \"demand\": " << c.demand << '}' << (l + 1 < inst.num_colors() ? ",\n" : "\n");
  }
  out << "  ]";
  if (p != nullptr) {
    out << ",\n  \"p\": ";
    write_rationals(out, *p);
  }
  out << "\n}\n";
  return out.str();
}

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(mpz_class(value.dump()));
  throw InvalidInput("expected a rational string or an integer, got " + value.dump());
}

LoadedInstance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("instance is not valid JSON: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    const auto& rows = doc.at("dist");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
      throw InvalidInput("dist must have n rows");
    }
    DistanceMatrix dist;
    for (const auto& row : rows) {
      if (!row.is_array()) throw InvalidInput("dist rows must be arrays");
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(rational_from_json(v));
      dist.push_back(std::move(r));
    }
    std::vector<ColorClass> colors;
    for (const auto& c : doc.at("colors")) {
      ColorClass cc;
      cc.members = c.at("members").get<std::vector<int>>();
      cc.demand = c.at("demand").get<long>();
      colors.push_back(std::move(cc));
    }
    LoadedInstance out{Instance(std::move(dist), doc.at("k").get<int>(), std::move(colors)),
                       std::nullopt};
    if (doc.contains("p")) {
      std::vector<Rational> p;
      for (const auto& v : doc.at("p")) p.push_back(rational_from_json(v));
      FairInstance check(out.instance, p);
      out.p = std::move(p);
    }
    return out;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed instance: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

LoadedInstance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Graph g;
  bool have_count = false;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<long> values;
    long v = 0;
    while (fields >> v) values.push_back(v);
    if (!fields.eof()) throw InvalidInput("graph file: bad line '" + line + "'");
    if (values.empty()) continue;
    if (!have_count) {
      if (values.size() != 1 || values[0] < 1) throw InvalidInput("graph file: bad vertex count");
      g.vertices = static_cast<int>(values[0]);
      have_count = true;
      continue;
    }
    if (values.size() != 2) throw InvalidInput("graph file: edge lines need two vertices");
    const int a = static_cast<int>(values[0]);
    const int b = static_cast<int>(values[1]);
    if (a < 0 || b < 0 || a >= g.vertices || b >= g.vertices || a == b) {
      throw InvalidInput("graph file: bad edge '" + line + "'");
    }
    const auto e = std::minmax(a, b);
    for (const auto& f : g.edges) {
      if (f == std::pair<int, int>(e)) throw InvalidInput("graph file: repeated edge");
    }
    g.edges.emplace_back(e);
  }
  if (!have_count) throw InvalidInput("graph file: missing vertex count");
  return g;
}

SetCoverInstance parse_setcover(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    SetCoverInstance sc;
    sc.universe = doc.at("universe").get<int>();
    sc.sets = doc.at("sets").get<std::vector<std::vector<int>>>();
    if (sc.universe < 0) throw InvalidInput("set cover: negative universe");
    return sc;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed set cover instance: ") + e.what());
  }
}

Json coverage_json(const Instance& inst, const std::vector<int>& centers, const Rational& r) {
  const CoverageReport rep = check_feasible(inst, centers, r);
  Json out = Json::array();
  for (int l = 0; l < inst.num_colors(); ++l) {
    out.push_back({{"color", l}, {"covered", rep.covered[l]}, {"demand", inst.colors()[l].demand}});
  }
  return out;
}

Json colorful_solution_json(const Instance& inst, const CenterSet& sol) {
  Json out;
  out["radius"] = to_string(sol.radius);
  out["centers"] = sol.centers;
  out["coverage"] = coverage_json(inst, sol.centers, sol.radius);
  return out;
}

Json trace_json(const ColorfulSolution& sol) {
  Json radii = Json::array();
  for (const auto& rec : sol.trace.records) {
    Json cuts = Json::array();
    for (const auto& c : rec.cuts) cuts.push_back({{"S", c.S}, {"bound", c.bound}});
    radii.push_back({{"radius", to_string(rec.radius)},
                     {"outcome", outcome_name(rec.outcome)},
                     {"cuts", std::move(cuts)},
                     {"lp_solves", rec.lp_solves},
                     {"dp_calls", rec.dp_calls},
                     {"sparse_rounds", rec.sparse_rounds}});
    if (rec.centers) radii.back()["centers"] = *rec.centers;
  }
  return {{"probe_radius", to_string(sol.probe_radius)}, {"radii", std::move(radii)}};
}

Json distribution_json(const Distribution& dist) {
  Json out = Json::array();
  for (const auto& [centers, prob] : dist.support) {
    out.push_back({{"centers", centers}, {"prob", to_string(prob)}});
  }
  return out;
}

Json fair_trace_json(const FairSolution& sol) {
  Json radii = Json::array();
  for (const auto& rec : sol.trace) {
    radii.push_back({{"radius", to_string(rec.radius)},
                     {"feasible", rec.feasible},
                     {"enumerated", rec.enumerated},
                     {"pricing_rounds", rec.pricing_rounds},
                     {"columns", rec.columns},
                     {"cuts", rec.cuts.size()},
                     {"lp_solves", rec.lp_solves},
                     {"dp_calls", rec.dp_calls},
                     {"sparse_rounds", rec.sparse_rounds}});
  }
  return {{"probe_radius", to_string(sol.probe_radius)}, {"radii", std::move(radii)}};
}

}  // namespace ckc
