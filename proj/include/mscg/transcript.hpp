#pragma once

#include <fstream>
#include <memory>

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mscg {

// A surface token with a tag name as supplied by an external tagger.
using PretaggedToken = std::pair<std::string, std::string>;

struct Utterance {
  std::string speaker;
  std::string text;
  std::size_t index = 0;
  // Present only for pre-tagged input ("tokens": [[surface, tag], ...]).
  std::optional<std::vector<PretaggedToken>> tokens;

  bool operator==(const Utterance&) const = default;
};

// Ordered, speaker-attributed dialogue. Immutable once parsed.
class Transcript {
 public:
  Transcript(std::string doc_id, std::vector<Utterance> utterances);

  const std::string& doc_id() const { return doc_id_; }
  const std::vector<Utterance>& utterances() const { return utterances_; }
  std::size_t size() const { return utterances_.size(); }

  // Speakers in order of first appearance.
  std::vector<std::string> speakers() const;

  // "Speaker: text" lines joined by newlines.
  std::string dialogue_text() const;

  bool operator==(const Transcript&) const = default;

 private:
  std::string doc_id_;
  std::vector<Utterance> utterances_;
};

// A transcript together with any reference summaries found next to it.
struct Document {
  Transcript transcript;
  std::vector<std::string> references;
  // Raw dialogue string when the source stored one ("dialogue" field or a
  // plain-text file); used for dataset statistics.
  std::string raw_dialogue;
};

// One utterance per line: {"speaker": ..., "text": ...} or pre-tagged
// {"speaker": ..., "tokens": [[surface, tag], ...]}. Optional "id" names the
// document.
Transcript parse_jsonl(std::istream& in, std::string doc_id = "doc");

// "Name: utterance" lines. Lines whose first whitespace-delimited word does
// not end in ':' continue the previous utterance.
Transcript parse_colon_dialogue(std::string_view text, std::string doc_id = "doc");

std::vector<std::string> split_sentences(const Utterance& u);
std::vector<std::string> split_sentences(std::string_view text);

// Inverse of parse_jsonl.
std::string to_jsonl(const Transcript& t);

enum class InputFormat { Auto, Utterances, Corpus, Colon };

// Reads a whole file, transparently inflating when the name ends in ".gz".
std::string read_file(const std::string& path);

// Parses a file (or its contents) into documents. Corpus JSONL carries one
// document per line with "dialogue" (colon text) or "utterances"; a JSON
// array of such objects is also accepted.
std::vector<Document> parse_documents(std::string_view contents, const std::string& name,
                                      InputFormat format = InputFormat::Auto);
std::vector<Document> load_documents(const std::string& path,
                                     InputFormat format = InputFormat::Auto);

// Reference summaries: JSONL with "id" and "summary" (string or array).
// Reads documents in bounded chunks. Uncompressed corpus JSONL is read line
// by line; every other input is parsed whole and handed out in slices.
class DocumentReader {
 public:
  explicit DocumentReader(std::string path, InputFormat format = InputFormat::Auto);
  // At most max_docs documents; empty once the input is exhausted.
  std::vector<Document> next(std::size_t max_docs);

 private:
  std::string path_;
  std::unique_ptr<std::ifstream> stream_;
  std::optional<std::string> pending_line_;
  std::vector<Document> loaded_;
  std::size_t offset_ = 0;
  std::size_t line_no_ = 0;
  std::size_t produced_ = 0;
};

std::vector<std::pair<std::string, std::vector<std::string>>> parse_references(
    std::string_view contents);

}  // namespace mscg
