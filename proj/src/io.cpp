#include "hyturan/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hyturan {

std::string to_text(const Hypergraph& h) {
  std::ostringstream out;
  out << h.n() << ' ' << h.k() << '\n';
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

Hypergraph hypergraph_from_text(std::istream& in) {
  int n, k;
  if (!(in >> n >> k)) throw std::invalid_argument("text hypergraph: missing n k header");
  std::vector<Edge> edges;
  while (true) {
    int first;
    if (!(in >> first)) break;
    Edge e = {first};
    for (int i = 1; i < k; ++i) {
      int v;
      if (!(in >> v)) throw std::invalid_argument("text hypergraph: truncated edge");
      e.push_back(v);
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, k, std::move(edges));
}

Hypergraph hypergraph_from_text(const std::string& text) {
  std::istringstream in(text);
  return hypergraph_from_text(in);
}

nlohmann::json to_json(const Hypergraph& h) {
  return nlohmann::json{{"n", h.n()}, {"k", h.k()}, {"edges", h.edges()}};
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("edges"))
    throw std::invalid_argument("json hypergraph: need fields n, k, edges");
  return Hypergraph(j.at("n").get<int>(), j.at("k").get<int>(),
                    j.at("edges").get<std::vector<Edge>>());
}

nlohmann::json to_json(const Pattern& p) {
  return nlohmann::json{{"l", p.l}, {"edges", p.edges}};
}

Pattern pattern_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("l") || !j.contains("edges"))
    throw std::invalid_argument("json pattern: need fields l, edges");
  return Pattern(j.at("l").get<int>(),
                 j.at("edges").get<std::vector<std::vector<int>>>());
}

Hypergraph hypergraph_from_string(const std::string& data) {
  for (char c : data) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(data);
      } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed json input: ") + e.what());
      }
      return hypergraph_from_json(j);
    }
    break;
  }
  return hypergraph_from_text(data);
}

Hypergraph load_hypergraph(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return hypergraph_from_string(buf.str());
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return hypergraph_from_string(buf.str());
}

nlohmann::json round_floats(const nlohmann::json& j) {
  if (j.is_object()) {
    nlohmann::json out = nlohmann::json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = round_floats(it.value());
    return out;
  }
  if (j.is_array()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : j) out.push_back(round_floats(v));
    return out;
  }
  if (j.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
    return nlohmann::json(std::strtod(buf, nullptr));
  }
  return j;
}

}  // namespace hyturan
