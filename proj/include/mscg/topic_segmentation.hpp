#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "mscg/kcore.hpp"
#include "mscg/word_graph.hpp"

namespace mscg {

// Binary keyword-presence vector of one sentence; column j refers to the
// j-th keyword in node-id order.
struct TopicVector {
  std::vector<std::uint8_t> bits;
  std::size_t sentence_id = 0;

  std::size_t popcount() const;
};

struct Segmentation {
  std::vector<std::size_t> boundaries;  // split after these sentence indices
  std::size_t p = 1;
  std::vector<double> distances;  // distances[i] is between sentence i and i + 1
};

// One vector per sentence of `g`, in document order.
std::vector<TopicVector> topic_vectors(const WordGraph& g, const KeywordSet& kw);

// Negative cosine similarity in [-1, 0]; 0 when either vector is all zero.
// Throws PipelineError on a length mismatch.
double topic_distance(const TopicVector& a, const TopicVector& b);

std::vector<double> gap_distances(const std::vector<TopicVector>& vectors);

// Splits at the p - 1 gaps with the largest distance; ties go to the
// earlier gap. Requires 1 <= p <= vectors.size().
Segmentation segment(const std::vector<TopicVector>& vectors, std::size_t p);

// Splits at every gap whose distance exceeds `threshold`.
Segmentation segment_by_threshold(const std::vector<TopicVector>& vectors, double threshold);

// Half-open sentence index ranges described by a segmentation of n sentences.
std::vector<std::pair<std::size_t, std::size_t>> segment_ranges(const Segmentation& s, std::size_t n);

}  // namespace mscg
