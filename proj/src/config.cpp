#include "ulearn/config.hpp"

#include <fstream>
#include <sstream>

namespace ulearn {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

long line_of_byte(const std::string& text, size_t byte) {
  long line = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

Vector parse_distribution(const json& arr, const std::string& field) {
  if (!arr.is_array() || arr.empty()) fail(field + ": expected an array of probabilities");
  Vector v(static_cast<Eigen::Index>(arr.size()));
  Eigen::Index i = 0;
  for (const auto& e : arr) {
    if (!e.is_number()) fail(field + ": expected a number");
    v[i++] = e.get<double>();
  }
  return v;
}

EvidenceSpec parse_evidence(const json& j) {
  EvidenceSpec spec;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "low") spec.regime = EvidenceRegime::kLow;
    else if (s == "high") spec.regime = EvidenceRegime::kHigh;
    else fail("evidence: unknown regime '" + s + "' (use \"low\" or \"high\")");
    return spec;
  }
  if (!j.is_object()) fail("evidence: expected a regime string or {min, max}");
  if (j.contains("regime")) {
    const auto s = j.at("regime").get<std::string>();
    if (s == "low") spec.regime = EvidenceRegime::kLow;
    else if (s == "high") spec.regime = EvidenceRegime::kHigh;
    else fail("evidence.regime: unknown regime '" + s + "'");
    return spec;
  }
  spec.regime = EvidenceRegime::kExplicit;
  if (!j.contains("min") || !j.contains("max"))
    fail("evidence: explicit range needs both min and max");
  if (!j.at("min").is_number_integer() || j.at("min").get<std::int64_t>() < 0)
    fail("evidence.min: must be a nonnegative integer");
  if (!j.at("max").is_number_integer() || j.at("max").get<std::int64_t>() < 0)
    fail("evidence.max: must be a nonnegative integer");
  spec.min_trials = j.at("min").get<std::int64_t>();
  spec.max_trials = j.at("max").get<std::int64_t>();
  if (spec.max_trials < spec.min_trials) fail("evidence.max: must be >= evidence.min");
  return spec;
}

GraphSpec parse_graph(const json& j) {
  GraphSpec spec;
  if (!j.is_object() || !j.contains("type")) fail("graph: expected {type, ...}");
  const auto type = j.at("type").get<std::string>();
  if (type == "ring") spec.kind = GraphKind::kRing;
  else if (type == "complete") spec.kind = GraphKind::kComplete;
  else if (type == "star") spec.kind = GraphKind::kStar;
  else if (type == "cliques") spec.kind = GraphKind::kCliques;
  else if (type == "random") spec.kind = GraphKind::kRandom;
  else if (type == "cyclic") spec.kind = GraphKind::kCyclic;
  else fail("graph.type: unknown type '" + type + "'");
  if (spec.kind == GraphKind::kCyclic) {
    if (!j.contains("phases") || !j.at("phases").is_array() || j.at("phases").empty())
      fail("graph.phases: expected a nonempty array of edge lists");
    for (const auto& phase : j.at("phases")) {
      if (!phase.is_array()) fail("graph.phases: each phase is an array of [from, to] pairs");
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : phase) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
          fail("graph.phases: each edge is a [from, to] integer pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      spec.phases.push_back(std::move(edges));
    }
  }
  if (j.contains("window")) {
    if (!j.at("window").is_number_integer() || j.at("window").get<int>() < 1)
      fail("graph.window: must be a positive integer");
    spec.window = j.at("window").get<int>();
  }
  if (j.contains("clique_size")) {
    if (!j.at("clique_size").is_number_integer() || j.at("clique_size").get<int>() < 1)
      fail("graph.clique_size: must be a positive integer");
    spec.clique_size = j.at("clique_size").get<int>();
  }
  return spec;
}

int require_positive_int(const json& j, const std::string& field) {
  if (!j.contains(field)) fail(field + ": missing");
  const auto& v = j.at(field);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
    fail(field + ": must be a positive integer");
  return v.get<int>();
}

}  // namespace

ExperimentConfig parse_config(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(name + ":" + std::to_string(line_of_byte(text, e.byte)) +
         ": parse error: " + e.what());
  }
  if (!j.is_object()) fail(name + ": top level must be an object");

  ExperimentConfig config;
  try {
    config.agents = require_positive_int(j, "agents");
    config.symbols = require_positive_int(j, "symbols");
    if (config.symbols < 2) fail("symbols: must be >= 2");

    if (!j.contains("hypotheses") || !j.at("hypotheses").is_array() ||
        j.at("hypotheses").empty())
      fail("hypotheses: expected a nonempty array");
    config.hypothesis_dists.clear();
    int t = 0;
    for (const auto& hyp : j.at("hypotheses")) {
      const std::string field = "hypotheses[" + std::to_string(t) + "]";
      Matrix rows(config.agents, config.symbols);
      if (hyp.is_object() && hyp.contains("per_agent")) {
        const auto& pa = hyp.at("per_agent");
        if (!pa.is_array() || static_cast<int>(pa.size()) != config.agents)
          fail(field + ".per_agent: expected one distribution per agent");
        for (int i = 0; i < config.agents; ++i) {
          const Vector row = parse_distribution(pa[static_cast<size_t>(i)],
                                                field + ".per_agent");
          if (row.size() != config.symbols) fail(field + ".per_agent: wrong length");
          rows.row(i) = row.transpose();
        }
      } else {
        const json& dist = hyp.is_object() ? hyp.at("distribution") : hyp;
        const Vector row = parse_distribution(dist, field + ".distribution");
        if (row.size() != config.symbols)
          fail(field + ".distribution: length must equal symbols");
        rows.rowwise() = row.transpose();
      }
      config.hypothesis_dists.push_back(std::move(rows));
      ++t;
    }

    if (!j.contains("true_hypothesis") || !j.at("true_hypothesis").is_number_integer())
      fail("true_hypothesis: missing or not an integer");
    config.true_hypothesis = j.at("true_hypothesis").get<int>();

    config.evidence = j.contains("evidence") ? parse_evidence(j.at("evidence"))
                                             : EvidenceSpec{};
    config.graph = j.contains("graph") ? parse_graph(j.at("graph")) : GraphSpec{};

    if (j.contains("steps"))
      config.steps = static_cast<long>(require_positive_int(j, "steps"));
    if (j.contains("trials")) config.trials = require_positive_int(j, "trials");
    if (j.contains("seed")) {
      if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
        fail("seed: must be an integer");
      config.seed = j.at("seed").get<std::uint64_t>();
    }
  } catch (const json::exception& e) {
    fail(name + ": " + e.what());
  }

  try {
    config.validate();
  } catch (const std::exception& e) {
    fail(name + ": " + e.what());
  }
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

json config_to_json(const ExperimentConfig& config) {
  json j;
  j["agents"] = config.agents;
  j["symbols"] = config.symbols;
  j["true_hypothesis"] = config.true_hypothesis;
  json hyps = json::array();
  for (const Matrix& d : config.hypothesis_dists) {
    json per_agent = json::array();
    for (int i = 0; i < d.rows(); ++i) {
      json row = json::array();
      for (int s = 0; s < d.cols(); ++s) row.push_back(d(i, s));
      per_agent.push_back(std::move(row));
    }
    hyps.push_back(json{{"per_agent", std::move(per_agent)}});
  }
  j["hypotheses"] = std::move(hyps);
  switch (config.evidence.regime) {
    case EvidenceRegime::kLow: j["evidence"] = "low"; break;
    case EvidenceRegime::kHigh: j["evidence"] = "high"; break;
    case EvidenceRegime::kExplicit:
      j["evidence"] = json{{"min", config.evidence.min_trials},
                           {"max", config.evidence.max_trials}};
      break;
  }
  json graph;
  switch (config.graph.kind) {
    case GraphKind::kRing: graph["type"] = "ring"; break;
    case GraphKind::kComplete: graph["type"] = "complete"; break;
    case GraphKind::kStar: graph["type"] = "star"; break;
    case GraphKind::kCliques:
      graph["type"] = "cliques";
      graph["clique_size"] = config.graph.clique_size;
      break;
    case GraphKind::kRandom:
      graph["type"] = "random";
      graph["window"] = config.graph.window;
      break;
    case GraphKind::kCyclic: {
      graph["type"] = "cyclic";
      graph["window"] = config.graph.window;
      json phases = json::array();
      for (const auto& phase : config.graph.phases) {
        json edges = json::array();
        for (const auto& [from, to] : phase) edges.push_back(json::array({from, to}));
        phases.push_back(std::move(edges));
      }
      graph["phases"] = std::move(phases);
      break;
    }
  }
  j["graph"] = std::move(graph);
  j["steps"] = config.steps;
  j["trials"] = config.trials;
  j["seed"] = config.seed;
  return j;
}

}  // namespace ulearn
