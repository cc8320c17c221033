#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mscg {

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const Prf&) const = default;
};

Prf make_prf(double precision, double recall);

struct RougeScore {
  Prf r1, r2, rl;

  bool operator==(const RougeScore&) const = default;
};

enum class LcsMode { Whole, Union };

struct RougeOptions {
  bool stem = false;
  bool remove_stopwords = false;
  LcsMode lcs_mode = LcsMode::Whole;
};

// Lowercases and splits on non-alphanumeric characters.
std::vector<std::string> rouge_tokenize(std::string_view text, const RougeOptions& opts = {});

// n-gram multiset overlap. n must be 1 or 2 (larger n works but is not
// part of the reported metrics).
Prf rouge_n(std::string_view system, std::string_view reference, std::size_t n, const RougeOptions& opts = {});
Prf rouge_n_tokens(const std::vector<std::string>& system, const std::vector<std::string>& reference, std::size_t n);

// Whole-summary LCS by default; LcsMode::Union uses the sentence-level
// union LCS.
Prf rouge_l(std::string_view system, std::string_view reference, const RougeOptions& opts = {});
std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b);

RougeScore rouge(std::string_view system, std::string_view reference, const RougeOptions& opts = {});
// Best f1 per metric over the references.
RougeScore rouge_multi(std::string_view system, const std::vector<std::string>& references,
                       const RougeOptions& opts = {});

struct EvalPair {
  std::string id;
  std::string system;
  std::vector<std::string> references;
};

struct CorpusReport {
  std::vector<std::string> ids;
  std::vector<RougeScore> per_doc;
  RougeScore mean;
  // Population sigma / mean of the per-document f1, for R1, R2, RL.
  std::array<double, 3> normalized_std{};
};

// Per-document scoring runs in parallel (OpenMP); aggregation is ordered.
CorpusReport evaluate_corpus(const std::vector<EvalPair>& pairs, const RougeOptions& opts = {});
// Single-threaded reference implementation.
CorpusReport evaluate_corpus_serial(const std::vector<EvalPair>& pairs, const RougeOptions& opts = {});

// sigma / mean with population sigma; 0 when the mean is 0.
double normalized_std(const std::vector<double>& values);

std::string report_csv(const CorpusReport& report);
std::string report_json(const CorpusReport& report);

}  // namespace mscg
