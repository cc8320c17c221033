#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mscg/word_graph.hpp"

namespace mscg {

struct WeightedPath {
  std::vector<NodeId> nodes;
  double weight = 0.0;  // edge weights summed left to right

  bool operator==(const WeightedPath&) const = default;
};

// Total order used everywhere paths are ranked: weight, then the node id
// sequence lexicographically.
bool path_less(const WeightedPath& a, const WeightedPath& b);

// Loopless source -> target paths of a digraph in nondecreasing weight,
// produced one at a time with Yen's algorithm. Arc weights must be
// positive.
class KShortestPaths {
 public:
  explicit KShortestPaths(Digraph g);

  // The next path, or nullopt once every loopless path has been produced.
  // Throws PipelineError("disconnected graph") when the target is
  // unreachable.
  std::optional<WeightedPath> next();
  std::size_t produced() const { return accepted_.size(); }

 private:
  struct Less {
    bool operator()(const WeightedPath& a, const WeightedPath& b) const { return path_less(a, b); }
  };

  void add_spur_candidates(const WeightedPath& last);

  Digraph g_;
  std::vector<WeightedPath> accepted_;
  std::set<WeightedPath, Less> candidates_;
  std::set<std::vector<NodeId>> seen_;
  bool exhausted_ = false;
};

std::vector<WeightedPath> yen_k_shortest(const Digraph& g, std::size_t k);
std::vector<WeightedPath> yen_k_shortest(const WordGraph& g, std::size_t k);

}  // namespace mscg
