#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mscg/word_graph.hpp"

namespace mscg {

struct CoreDecomposition {
  std::vector<std::size_t> core_number;  // indexed by node id
  std::size_t degeneracy = 0;
};

// Exact core numbers of the undirected, unweighted projection of `g`
// (arc direction and multiplicity ignored, self-loops dropped), by
// minimum-degree peeling in O(V + E).
CoreDecomposition core_decompose(const Digraph& g);
CoreDecomposition core_decompose(const WordGraph& g);

// Neighbour sets of the undirected projection.
std::vector<std::vector<NodeId>> undirected_projection(const Digraph& g);

struct KeywordSet {
  std::vector<NodeId> members;  // sorted by node id
  std::set<std::pair<std::string, Tag>> source_words;
  std::size_t core_level = 0;  // core number shared by every member

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool contains(NodeId id) const;
  // Words of the members in node-id order.
  std::vector<std::string> words(const WordGraph& g) const;
};

// Non-stopword, non-META nodes of the main core. When the main core holds
// only stopwords, descends to the highest core level that has a
// non-stopword node. Throws PipelineError("no candidate keywords") when the
// graph has no eligible node at all.
KeywordSet extract_keywords(const WordGraph& g, const CoreDecomposition& d, const Stopwords& stopwords);

}  // namespace mscg
