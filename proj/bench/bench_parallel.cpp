// Serial reference vs OpenMP batch: document summarization and corpus ROUGE
// over a synthetic corpus. Prints wall time per stage and checks that both
// paths agree.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "mscg/batch.hpp"
#include "mscg/rouge.hpp"

namespace {

const std::vector<std::string> kWords{
    "i",     "you",   "we",     "the",    "a",     "to",     "and",    "is",     "my",    "your",
    "party", "car",   "report", "dinner", "mom",   "dog",    "house",  "movie",  "game",  "book",
    "take",  "bring", "finish", "tell",   "call",  "see",    "buy",    "cook",   "like",  "need",
    "big",   "new",   "late",   "happy",  "today", "later",  "now",    "there",  "not",   "home",
    "will",  "can",   "meet",   "send",   "ticket", "train", "office", "friday", "class", "lunch"};

std::string sentence(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> len(3, 12);
  std::uniform_int_distribution<std::size_t> pick(0, kWords.size() - 1);
  std::string s;
  for (std::size_t i = 0, n = len(rng); i < n; ++i) s += (i ? " " : "") + kWords[pick(rng)];
  return s + (std::bernoulli_distribution(0.2)(rng) ? "?" : ".");
}

std::vector<mscg::Document> corpus(std::size_t docs, std::size_t turns, unsigned seed) {
  static const std::vector<std::string> names{"Ann", "Bob", "Carl"};
  std::mt19937 rng(seed);
  std::vector<mscg::Document> out;
  for (std::size_t d = 0; d < docs; ++d) {
    std::vector<mscg::Utterance> us;
    for (std::size_t i = 0; i < turns; ++i) us.push_back({names[i % names.size()], sentence(rng), i, std::nullopt});
    out.push_back({mscg::Transcript("doc" + std::to_string(d), us), {sentence(rng) + " " + sentence(rng)}, ""});
  }
  return out;
}

template <class F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel timings"};
  std::size_t docs = 400;
  std::size_t turns = 14;
  std::size_t jobs = 0;
  unsigned seed = 7;
  app.add_option("--docs", docs, "Synthetic documents")->check(CLI::PositiveNumber);
  app.add_option("--turns", turns, "Utterances per document")->check(CLI::PositiveNumber);
  app.add_option("-j,--jobs", jobs, "Worker threads (0: all cores)");
  app.add_option("--seed", seed, "Corpus seed");
  CLI11_PARSE(app, argc, argv);

  const auto documents = corpus(docs, turns, seed);
  mscg::PipelineConfig cfg;
  const auto res = mscg::PipelineResources::load(cfg);

  std::vector<mscg::SummaryBundle> serial, parallel;
  const double sum_serial = time_ms([&] { serial = mscg::summarize_batch_serial(documents, cfg, res); });
  const double sum_parallel = time_ms([&] { parallel = mscg::summarize_batch(documents, cfg, res, jobs); });
  bool same = serial.size() == parallel.size();
  for (std::size_t i = 0; same && i < serial.size(); ++i) same = serial[i].to_json_line() == parallel[i].to_json_line();

  std::vector<mscg::EvalPair> pairs;
  for (std::size_t i = 0; i < documents.size(); ++i)
    pairs.push_back({documents[i].transcript.doc_id(), serial[i].summary, documents[i].references});
  // Repeat the scoring so the timing is not dominated by noise.
  const int rounds = 20;
  mscg::CorpusReport rs, rp;
  const double rouge_serial = time_ms([&] {
    for (int r = 0; r < rounds; ++r) rs = mscg::evaluate_corpus_serial(pairs);
  });
  const double rouge_parallel = time_ms([&] {
    for (int r = 0; r < rounds; ++r) rp = mscg::evaluate_corpus(pairs);
  });
  same = same && rs.per_doc == rp.per_doc && rs.mean == rp.mean;

  const int threads = jobs ? static_cast<int>(jobs) : omp_get_max_threads();
  std::cout << "documents " << docs << ", turns " << turns << ", threads " << threads << "\n";
  std::cout << "stage        serial_ms  parallel_ms  speedup\n";
  auto row = [](const char* name, double s, double p) {
    std::printf("%-12s %9.1f  %11.1f  %7.2f\n", name, s, p, p > 0 ? s / p : 0.0);
  };
  row("summarize", sum_serial, sum_parallel);
  row("rouge x20", rouge_serial, rouge_parallel);
  std::cout << "outputs " << (same ? "identical" : "DIFFER") << "\n";
  return same ? 0 : 1;
}
