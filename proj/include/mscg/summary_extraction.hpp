#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mscg/kcore.hpp"
#include "mscg/path_scoring.hpp"
#include "mscg/word_graph.hpp"

namespace mscg {

struct SearchConfig {
  std::size_t k_paths = 100;       // paths the enumerator prepares per batch
  std::size_t search_depth = 100;  // candidate paths examined at most
  std::size_t min_tokens = 3;      // non-META tokens an accepted path needs
  bool require_verb = true;

  void validate() const;
};

struct SummaryPath {
  std::vector<NodeId> nodes;
  std::vector<TaggedToken> tokens;  // non-META tokens of the path
  std::string text;
  PathScore score;
  double total_weight = 0.0;
  std::string speaker;
  std::size_t segment = 0;
  bool fallback = false;  // an original sentence emitted verbatim
};

struct ExtractionResult {
  std::vector<SummaryPath> paths;  // in acceptance order
  std::size_t iterations = 0;
  bool keywords_covered = false;
  std::vector<std::string> warnings;
};

// Walks bos -> eos paths of `g` in weight order and keeps those with
// coverage >= t (plus the verb and length gates) until the accepted paths
// cover every keyword present in `g`, or search_depth candidates have been
// examined. An empty result carries a warning; see best_original_sentence.
ExtractionResult extract_summaries(const WordGraph& g, const KeywordSet& kw, const Threshold& t,
                                   const SearchConfig& cfg);

// The original sentence of `g` with the highest coverage score (earliest on
// ties), as a SummaryPath flagged `fallback`.
SummaryPath best_original_sentence(const WordGraph& g, const KeywordSet& kw);

SummaryPath make_summary_path(const WordGraph& g, std::vector<NodeId> nodes, const KeywordSet& kw);

}  // namespace mscg
