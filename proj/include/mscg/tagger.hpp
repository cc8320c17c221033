#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace mscg {

enum class Tag { Noun, Verb, Adj, Adv, Pron, Det, Adp, Num, Part, Conj, Punct, Meta, X };

std::string_view tag_name(Tag tag);
// Accepts the coarse names ("NOUN", ...) case-insensitively; anything else
// maps to nullopt.
std::optional<Tag> parse_tag(std::string_view name);

struct TaggedToken {
  std::string surface;
  std::string lower;
  Tag tag = Tag::X;
  std::size_t position = 0;

  bool operator==(const TaggedToken&) const = default;
};

struct TaggedSentence {
  std::vector<TaggedToken> tokens;
  std::size_t sentence_id = 0;
  std::string speaker;

  bool is_wrapped() const;
  // Tokens other than bos/eos.
  std::size_t content_size() const;
};

std::string to_lower(std::string_view s);

// Whitespace split, then leading/trailing punctuation separated and English
// clitics split off ("I'll" -> "I", "'ll"). Tokens made only of punctuation
// (emoticons such as ":/") stay whole.
std::vector<std::string> tokenize(std::string_view sentence);

class Stopwords {
 public:
  Stopwords() = default;
  explicit Stopwords(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  static const Stopwords& english();
  // One lowercase word per line.
  static Stopwords parse(std::string_view text);
  static Stopwords load(const std::string& path);

  bool contains(std::string_view lower) const { return words_.count(std::string(lower)) > 0; }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Lexicon + suffix-rule tagger. Immutable after construction.
class Tagger {
 public:
  enum class VerbForm { None, Base, Past, Gerund, ThirdSingular };

  // Lexicon lines: word<TAB>TAG[<TAB>form].
  explicit Tagger(std::string_view lexicon_text);

  static const Tagger& english();

  Tag tag_word(std::string_view surface) const;
  TaggedSentence tag(const std::vector<std::string>& tokens) const;

  // Verb form recorded in the lexicon for a lowercase word.
  VerbForm verb_form(std::string_view lower) const;
  bool in_lexicon(std::string_view lower) const;
  std::size_t lexicon_size() const { return open_class_.size(); }

 private:
  struct Entry {
    Tag tag;
    VerbForm form;
  };
  std::unordered_map<std::string, Entry> open_class_;
};

// Prepends bos and appends eos; positions become 0..n+1.
TaggedSentence wrap_meta(TaggedSentence ts);

}  // namespace mscg
