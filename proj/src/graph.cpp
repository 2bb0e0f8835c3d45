// Copyright 2026 the falqon authors.
//
// SPDX-License-Identifier: Apache-2.0

#include "falqon/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace falqon {

void Graph::validate() const {
  if (n < 1) {
    throw std::invalid_argument("graph must have at least one vertex");
  }
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    if (e.i == e.j) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(e.i));
    }
    if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                                  ") out of range for n = " + std::to_string(n));
    }
    if (e.i > e.j) {
      throw std::invalid_argument("edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                                  ") must be listed with i < j");
    }
    if (!std::isfinite(e.w)) {
      throw std::invalid_argument("non-finite weight on edge (" + std::to_string(e.i) + ", " +
                                  std::to_string(e.j) + ")");
    }
    if (!seen.insert({e.i, e.j}).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.i) + ", " +
                                  std::to_string(e.j) + ")");
    }
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n, 0);
  for (const Edge& e : edges) {
    ++deg[e.i];
    ++deg[e.j];
  }
  return deg;
}

bool Graph::is_connected() const {
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  std::vector<bool> visited(n, false);
  std::vector<int> stack{0};
  visited[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : adj[v]) {
      if (!visited[u]) {
        visited[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

bool Graph::is_regular(int d) const {
  const auto deg = degrees();
  return std::all_of(deg.begin(), deg.end(), [d](int x) { return x == d; });
}

double Graph::total_weight() const {
  double w = 0.0;
  for (const Edge& e : edges) w += e.w;
  return w;
}

double cut_energy(const Graph& g, std::uint64_t z) {
  double e = 0.0;
  for (const Edge& edge : g.edges) {
    const double si = ((z >> edge.i) & 1) ? -1.0 : 1.0;
    const double sj = ((z >> edge.j) & 1) ? -1.0 : 1.0;
    e += -0.5 * edge.w * (1.0 - si * sj);
  }
  return e;
}

GroundStateSet brute_force_maxcut(const Graph& g, int max_qubits) {
  g.validate();
  check_qubit_count(g.n, max_qubits);
  const std::uint64_t dim = state_count(g.n);

  double min_energy = 0.0;
  const auto idim = static_cast<long long>(dim);
#pragma omp parallel for reduction(min : min_energy) schedule(static)
  for (long long z = 0; z < idim; ++z) {
    const double e = cut_energy(g, static_cast<std::uint64_t>(z));
    if (e < min_energy) min_energy = e;
  }

  // Continuous weights make exact ties measure-zero; collect within a fixed
  // absolute tolerance (exact for integer-energy unweighted instances).
  constexpr double kTieTol = 1e-9;
  GroundStateSet result;
  result.min_energy = min_energy;
  for (std::uint64_t z = 0; z < dim; ++z) {
    if (cut_energy(g, z) <= min_energy + kTieTol) {
      result.states.push_back(z);
    }
  }
  return result;
}

namespace {

Graph graph_from_json(const nlohmann::json& j) {
  Graph g;
  g.name = j.value("name", std::string{});
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw std::runtime_error("instance is missing an integer field \"n\"");
  }
  g.n = j["n"].get<int>();
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw std::runtime_error("instance is missing an \"edges\" array");
  }
  for (const auto& entry : j["edges"]) {
    if (!entry.is_array() || entry.size() != 3) {
      throw std::runtime_error("each edge must be a [i, j, w] triple");
    }
    g.edges.push_back(Edge{entry[0].get<int>(), entry[1].get<int>(), entry[2].get<double>()});
  }
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("invalid instance: ") + e.what());
  }
  return g;
}

}  // namespace

Graph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("malformed instance JSON: ") + e.what());
  }
  return graph_from_json(j);
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["name"] = g.name;
  j["n"] = g.n;
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges) {
    edges.push_back({e.i, e.j, e.w});
  }
  return j.dump(2) + "\n";
}

Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open instance file: " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph_json(buf.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_graph(const Graph& g, const std::string& path) {
  g.validate();
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write instance file: " + path);
  }
  out << graph_to_json(g);
}

}  // namespace falqon
