#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "mscg/kcore.hpp"
#include "mscg/word_graph.hpp"

namespace mscg {

struct PathScore {
  std::vector<NodeId> path;
  double score = 0.0;
  std::vector<NodeId> covered;  // distinct keyword nodes on the path, sorted
};

struct Threshold {
  double t = 0.0;
  std::map<std::size_t, double> per_sentence_scores;
};

// |distinct path nodes in KW| / |KW|. Throws PipelineError on an empty KW.
PathScore score_path(std::span<const NodeId> path, const KeywordSet& kw);

// Mean coverage score over the sentence paths of `g`; for a speaker
// subgraph or a segment graph only that scope's sentences take part.
Threshold compute_threshold(const WordGraph& g, const KeywordSet& kw);

}  // namespace mscg
