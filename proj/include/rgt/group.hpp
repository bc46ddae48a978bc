#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgt/polynomial.hpp"

namespace rgt {

enum class Relation { Alliance, Conflict };

const char* to_string(Relation r);

/// A complete 2-colored graph over the subjects of a group: every pair of
/// distinct subjects is either in alliance or in conflict.
class RelationshipGraph {
 public:
  static constexpr std::size_t kMaxSubjects = 8;

  using Edge = std::pair<std::string, std::string>;  // names sorted

  RelationshipGraph(std::vector<std::string> subjects,
                    std::map<Edge, Relation> edges);

  const std::vector<std::string>& subjects() const { return subjects_; }
  Relation relation(const std::string& a, const std::string& b) const;

  RelationshipGraph without(const std::string& subject) const;
  RelationshipGraph with_relation(const std::string& a, const std::string& b,
                                  Relation r) const;

  bool operator==(const RelationshipGraph& other) const;

 private:
  std::vector<std::string> subjects_;  // sorted
  std::map<Edge, Relation> edges_;
};

/// Recursive uniform partition: a single vertex is a variable; a graph
/// whose conflict subgraph is disconnected is the product of its conflict
/// components; one whose alliance subgraph is disconnected is the sum of
/// its alliance components. Anything else has no polynomial.
std::optional<Polynomial> decompose(const RelationshipGraph& g);

/// The complete graph in which a pair is allied exactly when the nearest
/// common ancestor of the two variables in the polynomial is a product.
RelationshipGraph graph_of(const Polynomial& p);

struct ExclusionResult {
  Polynomial polynomial;
  std::vector<std::string> excluded;
};

/// Removes subjects from the back of the importance ranking (least
/// important last) until the remaining graph decomposes. The ranking must
/// be a permutation of the subjects; it may be empty only when the graph
/// is already decomposable.
ExclusionResult exclude_until_decomposable(
    const RelationshipGraph& g, const std::vector<std::string>& importance);

}  // namespace rgt
