#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mscg/tagger.hpp"

namespace mscg {

using NodeId = std::size_t;

// How w' combines the summed positional distance D of an edge's endpoints.
//   Paper:     w' = (freq(a) + freq(b)) * D
//   Filippova: w' = (freq(a) + freq(b)) / sum(1 / diff)
// In both modes the final weight is w' / (freq(a) * freq(b)).
enum class EdgeWeightMode { Paper, Filippova };

struct Occurrence {
  std::size_t sentence_id = 0;
  std::size_t position = 0;
  std::string speaker;

  bool operator==(const Occurrence&) const = default;
};

struct Node {
  NodeId id = 0;
  std::string word;
  Tag tag = Tag::X;
  std::vector<Occurrence> occurrences;

  std::size_t freq() const { return occurrences.size(); }
  bool operator==(const Node&) const = default;
};

struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  double weight = 0.0;
  std::vector<std::size_t> support;  // sentence ids with from, to adjacent

  bool operator==(const Edge&) const = default;
};

struct SentencePath {
  std::size_t sentence_id = 0;
  std::string speaker;
  std::vector<NodeId> nodes;

  bool operator==(const SentencePath&) const = default;
};

// Plain weighted adjacency used by the path search and the core
// decomposition. Node ids index `out`; nodes absent from a subgraph simply
// have no arcs.
struct Digraph {
  struct Arc {
    NodeId to;
    double weight;
  };
  NodeId source = 0;
  NodeId target = 1;
  std::vector<std::vector<Arc>> out;

  std::size_t size() const { return out.size(); }
  void add_arc(NodeId from, NodeId to, double weight);
};

// Multi-sentence compression graph. Nodes 0 and 1 are the unique bos and
// eos nodes. Node ids are stable across speaker subgraphs.
class WordGraph {
 public:
  WordGraph();

  // `s` must be wrapped (see wrap_meta) and carry a sentence id not yet in
  // the graph. Non-stopwords are mapped before stopwords.
  void add_sentence(const TaggedSentence& s, const Stopwords& stopwords);
  void compute_edge_weights(EdgeWeightMode mode);
  bool weighted() const { return weighted_; }

  NodeId bos() const { return 0; }
  NodeId eos() const { return 1; }

  // Indexed by node id; includes entries for nodes not present in this
  // (sub)graph, check contains().
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  bool contains(NodeId id) const { return id < present_.size() && present_[id]; }
  std::size_t node_count() const;
  std::vector<NodeId> node_ids() const;

  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> find_edge(NodeId from, NodeId to) const;
  const Edge& edge(NodeId from, NodeId to) const;
  const std::vector<std::size_t>& out_edges(NodeId id) const { return out_.at(id); }

  const std::vector<SentencePath>& sentences() const { return sentences_; }
  const SentencePath& sentence(std::size_t sentence_id) const;
  std::vector<std::string> speakers() const;

  Digraph digraph() const;
  // Lowercase words of the non-META nodes, space separated.
  std::string realize(std::span<const NodeId> path) const;
  // Sum of edge weights along the path, left to right.
  double path_weight(std::span<const NodeId> path) const;

  bool operator==(const WordGraph& other) const;

  friend WordGraph speaker_subgraph(const WordGraph& g, const std::string& speaker);

 private:
  NodeId new_node(const std::string& word, Tag tag);
  void rebuild_edge_index();

  std::vector<Node> nodes_;
  std::vector<bool> present_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::unordered_map<std::uint64_t, std::size_t> edge_index_;
  std::vector<SentencePath> sentences_;
  std::unordered_map<std::size_t, std::size_t> sentence_index_;
  std::map<std::pair<std::string, Tag>, std::vector<NodeId>> by_key_;
  std::vector<std::unordered_set<std::string>> left_context_;
  std::vector<std::unordered_set<std::string>> right_context_;
  bool weighted_ = false;
};

// Builds a graph from wrapped sentences and computes its weights.
WordGraph build_word_graph(const std::vector<TaggedSentence>& sentences, const Stopwords& stopwords,
                           EdgeWeightMode mode = EdgeWeightMode::Paper);

// Nodes and edges used by `speaker`'s sentences, with the parent graph's
// weights. Throws PipelineError for a speaker with no sentences.
WordGraph speaker_subgraph(const WordGraph& g, const std::string& speaker);

std::string export_dot(const WordGraph& g);
std::string export_json(const WordGraph& g);

}  // namespace mscg
