#include "rgt/group.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace rgt {

const char* to_string(Relation r) {
  return r == Relation::Alliance ? "alliance" : "conflict";
}

namespace {

RelationshipGraph::Edge make_edge(std::string a, std::string b) {
  if (a == b) throw ValidationError("self edge on subject '" + a + "'");
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace

RelationshipGraph::RelationshipGraph(std::vector<std::string> subjects,
                                     std::map<Edge, Relation> edges)
    : subjects_(std::move(subjects)), edges_(std::move(edges)) {
  std::sort(subjects_.begin(), subjects_.end());
  if (subjects_.empty() || subjects_.size() > kMaxSubjects)
    throw ValidationError("group must have between 1 and 8 subjects");
  if (std::adjacent_find(subjects_.begin(), subjects_.end()) !=
      subjects_.end())
    throw ValidationError("duplicate subject in group");

  std::size_t expected = subjects_.size() * (subjects_.size() - 1) / 2;
  if (edges_.size() != expected)
    throw ValidationError("relationship graph must be complete");
  for (const auto& [edge, rel] : edges_) {
    (void)rel;
    if (edge.first >= edge.second)
      throw ValidationError("edge endpoints must be distinct and ordered");
    if (!std::binary_search(subjects_.begin(), subjects_.end(), edge.first) ||
        !std::binary_search(subjects_.begin(), subjects_.end(), edge.second))
      throw ValidationError("edge references unknown subject");
  }
}

Relation RelationshipGraph::relation(const std::string& a,
                                     const std::string& b) const {
  const auto it = edges_.find(make_edge(a, b));
  if (it == edges_.end())
    throw ValidationError("no relation between '" + a + "' and '" + b + "'");
  return it->second;
}

RelationshipGraph RelationshipGraph::without(const std::string& subject) const {
  std::vector<std::string> subjects;
  for (const auto& s : subjects_)
    if (s != subject) subjects.push_back(s);
  std::map<Edge, Relation> edges;
  for (const auto& [edge, rel] : edges_)
    if (edge.first != subject && edge.second != subject) edges[edge] = rel;
  return {std::move(subjects), std::move(edges)};
}

RelationshipGraph RelationshipGraph::with_relation(const std::string& a,
                                                   const std::string& b,
                                                   Relation r) const {
  std::map<Edge, Relation> edges = edges_;
  const Edge e = make_edge(a, b);
  if (!edges.count(e))
    throw ValidationError("no relation between '" + a + "' and '" + b + "'");
  edges[e] = r;
  return {subjects_, std::move(edges)};
}

bool RelationshipGraph::operator==(const RelationshipGraph& other) const {
  return subjects_ == other.subjects_ && edges_ == other.edges_;
}

namespace {

/// Connected components of the subgraph keeping only edges of `kind`.
std::vector<std::vector<std::string>> components(
    const RelationshipGraph& g, const std::vector<std::string>& vertices,
    Relation kind) {
  std::vector<std::vector<std::string>> out;
  std::set<std::string> seen;
  for (const auto& start : vertices) {
    if (seen.count(start)) continue;
    std::vector<std::string> component{start};
    seen.insert(start);
    for (std::size_t i = 0; i < component.size(); ++i)
      for (const auto& v : vertices) {
        if (seen.count(v)) continue;
        if (g.relation(component[i], v) == kind) {
          component.push_back(v);
          seen.insert(v);
        }
      }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

std::optional<Polynomial> decompose_subset(
    const RelationshipGraph& g, const std::vector<std::string>& vertices) {
  if (vertices.size() == 1) return Polynomial::variable(vertices.front());

  auto build = [&](Relation split_kind,
                   Polynomial (*join)(std::vector<Polynomial>))
      -> std::optional<Polynomial> {
    const auto parts = components(g, vertices, split_kind);
    if (parts.size() < 2) return std::nullopt;
    std::vector<Polynomial> children;
    for (const auto& part : parts) {
      auto sub = decompose_subset(g, part);
      if (!sub) return std::nullopt;
      children.push_back(std::move(*sub));
    }
    return join(std::move(children));
  };

  // Disconnected conflict subgraph: the components are allied blocks.
  if (auto p = build(Relation::Conflict, &Polynomial::product)) return p;
  if (auto p = build(Relation::Alliance, &Polynomial::sum)) return p;
  return std::nullopt;
}

void leaf_names(const Polynomial& p, std::vector<std::string>& out) {
  if (p.kind() == Polynomial::Kind::Variable) {
    out.push_back(p.name());
    return;
  }
  for (const auto& child : p.children()) leaf_names(child, out);
}

void add_edges(const Polynomial& p,
               std::map<RelationshipGraph::Edge, Relation>& edges) {
  if (p.kind() == Polynomial::Kind::Variable) return;
  const Relation rel = p.kind() == Polynomial::Kind::Product
                           ? Relation::Alliance
                           : Relation::Conflict;
  std::vector<std::vector<std::string>> groups;
  for (const auto& child : p.children()) {
    std::vector<std::string> names;
    leaf_names(child, names);
    groups.push_back(std::move(names));
    add_edges(child, edges);
  }
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      for (const auto& a : groups[i])
        for (const auto& b : groups[j]) edges[make_edge(a, b)] = rel;
}

}  // namespace

std::optional<Polynomial> decompose(const RelationshipGraph& g) {
  return decompose_subset(g, g.subjects());
}

RelationshipGraph graph_of(const Polynomial& p) {
  // Read-once construction already guarantees distinct variables.
  std::vector<std::string> subjects = p.variables();
  std::map<RelationshipGraph::Edge, Relation> edges;
  add_edges(p, edges);
  return {std::move(subjects), std::move(edges)};
}

ExclusionResult exclude_until_decomposable(
    const RelationshipGraph& g, const std::vector<std::string>& importance) {
  if (auto p = decompose(g)) return {std::move(*p), {}};

  if (importance.empty())
    throw NotDecomposableError(
        "graph is not decomposable and no importance ranking was given");
  std::vector<std::string> ranking = importance;
  std::vector<std::string> sorted_ranking = ranking;
  std::sort(sorted_ranking.begin(), sorted_ranking.end());
  if (sorted_ranking != g.subjects())
    throw ValidationError(
        "importance ranking must be a permutation of the subjects");

  RelationshipGraph current = g;
  std::vector<std::string> excluded;
  while (true) {
    excluded.push_back(ranking.back());
    current = current.without(ranking.back());
    ranking.pop_back();
    if (auto p = decompose(current)) return {std::move(*p), excluded};
  }
}

}  // namespace rgt
