#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mscg/pov.hpp"
#include "mscg/rouge.hpp"
#include "mscg/summary_extraction.hpp"
#include "mscg/tagger.hpp"
#include "mscg/topic_segmentation.hpp"
#include "mscg/transcript.hpp"
#include "mscg/word_graph.hpp"

namespace mscg {

enum class SegmentMode { TopP, Threshold };
enum class Baseline { None, Lead3 };

struct PipelineConfig {
  EdgeWeightMode edge_weight_mode = EdgeWeightMode::Paper;
  std::size_t topics_p = 8;
  std::size_t segment_threshold_chars = 5000;
  SegmentMode segment_mode = SegmentMode::TopP;
  double segment_distance_threshold = -0.5;
  SearchConfig search;
  bool pov_enabled = true;
  bool pov_keep_possessives = false;
  std::string stopword_path;  // empty: bundled English list
  std::string pov_rules_path;  // empty: built-in English rules
  Baseline baseline = Baseline::None;
  RougeOptions rouge;

  void validate() const;
  // Sets one option from its key (same names as the long CLI flags, with
  // '_' or '-'). Throws ConfigError on unknown keys or bad values.
  void set(std::string_view key, std::string_view value);
  // "key = value" lines; '#' starts a comment.
  static PipelineConfig parse(std::string_view text);
  static PipelineConfig parse(std::string_view text, PipelineConfig base);
  std::string to_text() const;
};

// Stopwords, tagger and POV rules resolved from a config. Immutable and
// shareable across threads.
struct PipelineResources {
  Stopwords stopwords;
  const Tagger* tagger = &Tagger::english();
  PovRuleSet pov_rules;

  static PipelineResources load(const PipelineConfig& cfg);
};

struct ScopeDiagnostics {
  std::size_t segment = 0;
  std::string speaker;
  double threshold = 0.0;
  std::map<std::size_t, double> scores;
  std::size_t iterations = 0;
  bool fallback = false;
  std::size_t sentences = 0;  // summary sentences this scope contributed
};

struct SummaryBundle {
  std::string doc_id;
  std::vector<std::string> sentences;
  std::string summary;
  std::vector<std::string> keywords;
  double threshold = 0.0;  // mean over (segment, speaker) scopes
  std::size_t segments = 1;
  std::vector<std::vector<std::string>> segment_keywords;
  std::vector<ScopeDiagnostics> scopes;
  std::optional<Segmentation> segmentation;
  std::vector<std::string> warnings;
  std::string error;  // set by batch runs when the document failed

  std::string to_json_line() const;
};

// Wrapped, tagged sentences of a transcript in document order with
// sentence ids 0, 1, ...; utterances that yield no tokens are skipped.
std::vector<TaggedSentence> tag_transcript(const Transcript& t, const Tagger& tagger);

SummaryBundle summarize_document(const Transcript& t, const PipelineConfig& cfg, const PipelineResources& res);

// First three sentences, each utterance's first sentence prefixed with its
// speaker label.
std::vector<std::string> lead3_sentences(const Transcript& t);
std::string lead3(const Transcript& t);
SummaryBundle lead3_bundle(const Transcript& t);

struct DatasetStats {
  std::size_t files = 0;
  double dialogue_chars = 0.0;
  double dialogue_words = 0.0;
  std::size_t with_summary = 0;
  double summary_chars = 0.0;
  double summary_words = 0.0;

  std::string to_json() const;
};

// Mean character and whitespace-word lengths of the raw dialogues and of
// the first reference summary, when present.
DatasetStats compute_stats(const std::vector<Document>& docs);

}  // namespace mscg
