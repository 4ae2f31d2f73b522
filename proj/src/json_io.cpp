#include "spechtlab/json_io.hpp"

#include <cctype>

#include "spechtlab/error.hpp"

namespace spechtlab {

json to_json(const Partition& lambda) { return json(lambda.parts()); }

json to_json(const PartitionPair& pair) { return {{"left", to_json(pair.left)}, {"right", to_json(pair.right)}}; }

json to_json(const SignedLabel& label) {
  return {{"lambda", to_json(label.lambda)},
          {"mu", to_json(label.mu)},
          {"p_mu", to_json(scale(label.p.value(), label.mu))},
          {"p", label.p.value()}};
}

json to_json(const PadicExpansion& e) {
  json parts = json::array();
  for (const auto& t : e.parts) parts.push_back(to_json(t));
  return parts;
}

json to_json(const VertexDescriptor& v) {
  json factors = json::array();
  for (const auto& f : v.normalizer)
    factors.push_back({{"level", f.level}, {"degree", f.degree}, {"multiplicity", f.multiplicity}});
  return {{"rho", v.rho.parts()},
          {"multiplicities", v.multiplicities},
          {"normalizer", factors},
          {"normalizer_name", v.normalizer_str()}};
}

json to_json(const CorrespondentDescriptor& d) {
  json out = json::array();
  for (const auto& f : d.factors) {
    json item{{"level", f.level}, {"regular", to_json(f.regular_label)}};
    item["restricted"] = f.restricted_label ? to_json(*f.restricted_label) : json(nullptr);
    out.push_back(std::move(item));
  }
  return out;
}

json to_json(const AdjacencyStep& step) {
  return {{"source", to_json(step.source)}, {"target", to_json(step.target)},
          {"runner", step.runner},          {"beads", step.bead_count},
          {"nodes_added", step.nodes_added}, {"residue", step.residue}};
}

json to_json(const ResolutionDescriptor& r) {
  json labels = json::array();
  for (const auto& l : r.labels) labels.push_back(to_json(l));
  json terms = json::array();
  for (const auto& t : r.terms) terms.push_back(to_json(t));
  json heller = json::array();
  for (std::size_t i = 0; i < r.heller.size(); ++i) {
    const auto& h = r.heller[i];
    json entry{{"i", i + 1}};
    if (h.self) {
      entry["self"] = true;
    } else {
      json layers = json::array();
      for (const auto& l : h.layers) layers.push_back(to_json(l));
      entry["layers"] = layers;
    }
    heller.push_back(std::move(entry));
  }
  return {{"core", to_json(r.core)}, {"p", r.p.value()}, {"labels", labels}, {"terms", terms}, {"heller", heller}};
}

json to_json(const SignedTableau& t) {
  json cells = json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = 0; j < t.rows[i].size(); ++j)
      cells.push_back({{"row", i + 1}, {"col", j + 1}, {"entry", t.rows[i][j].str()}});
  return cells;
}

json to_json(const SpechtReport& r) {
  json out{{"lambda", to_json(r.lambda)},
           {"p", r.p.value()},
           {"simple", r.simple},
           {"regularization", to_json(r.regularization)},
           {"core", to_json(r.block.core)},
           {"weight", r.block.weight}};
  out["label"] = r.label ? to_json(*r.label) : json(nullptr);
  out["vertex"] = r.vertex ? to_json(*r.vertex) : json(nullptr);
  out["correspondent"] = r.correspondent ? to_json(*r.correspondent) : json(nullptr);
  out["complexity"] = r.complexity ? json(*r.complexity) : json(nullptr);
  out["class"] = r.classification ? json(std::string(class_name(*r.classification))) : json(nullptr);
  out["periodic"] = r.periodic ? json(*r.periodic) : json(nullptr);
  out["period"] = r.period ? json(*r.period) : json(nullptr);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_brackets(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && ((s.front() == '[' && s.back() == ']') || (s.front() == '(' && s.back() == ')')))
    s = trim(s.substr(1, s.size() - 2));
  return s;
}

}  // namespace

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(Errc::ParseError, "partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  for (int x : parts)
    if (x <= 0) throw Error(Errc::InvalidPartition, "parts must be positive");
  return Partition(std::move(parts));
}

Partition parse_partition(std::string_view text) {
  const std::string_view body = strip_brackets(text);
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < body.size()) {
    const std::size_t comma = body.find(',', pos);
    const std::string_view item =
        trim(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (item.empty()) throw Error(Errc::ParseError, "empty part in '" + std::string(text) + "'");
    int value = 0;
    for (char c : item) {
      if (c == '-') throw Error(Errc::InvalidPartition, "negative part in '" + std::string(text) + "'");
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(Errc::ParseError, "bad character in '" + std::string(text) + "'");
      value = value * 10 + (c - '0');
      if (value > 1000000) throw Error(Errc::ParseError, "part too large in '" + std::string(text) + "'");
    }
    if (value == 0) throw Error(Errc::InvalidPartition, "zero part in '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == body.size()) throw Error(Errc::ParseError, "trailing comma in '" + std::string(text) + "'");
  }
  return Partition(std::move(parts));
}

PartitionPair parse_pair(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '{') {
    try {
      const json j = json::parse(s);
      return {partition_from_json(j.at("left")), partition_from_json(j.at("right"))};
    } catch (const json::exception& e) {
      throw Error(Errc::ParseError, e.what());
    }
  }
  const std::size_t bar = s.find('|');
  if (bar == std::string_view::npos || s.find('|', bar + 1) != std::string_view::npos)
    throw Error(Errc::ParseError, "pair needs exactly one '|': '" + std::string(text) + "'");
  std::string_view left = trim(s.substr(0, bar));
  std::string_view right = trim(s.substr(bar + 1));
  // "(3,3,1|2,2)": the outer parentheses belong to the pair.
  if (!left.empty() && !right.empty() && left.front() == '(' && right.back() == ')') {
    const bool inner_left = left.size() > 1 && left[1] == '(';
    if (inner_left || left.back() != ')') {
      left.remove_prefix(1);
      right.remove_suffix(1);
    }
  }
  return {parse_partition(left), parse_partition(right)};
}

SignedLabel parse_label(std::string_view text, std::optional<int> fallback_p) {
  try {
    const json j = json::parse(text);
    int p = 0;
    if (j.contains("p"))
      p = j.at("p").get<int>();
    else if (fallback_p)
      p = *fallback_p;
    else
      throw Error(Errc::ParseError, "label has no prime");
    return {partition_from_json(j.at("lambda")), partition_from_json(j.value("mu", json::array())), OddPrime(p)};
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace spechtlab
