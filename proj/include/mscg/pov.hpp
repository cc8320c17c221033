#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mscg/summary_extraction.hpp"
#include "mscg/tagger.hpp"

namespace mscg {

// Rules for turning first-person summary sentences into reported speech.
// Replacement strings may contain "{speaker}", which expands to the
// lowercased speaker label.
struct PovRuleSet {
  std::map<std::string, std::string> pronoun_map;
  std::map<std::string, std::string> modal_map;
  std::string question_template = "{speaker} asks {utterance}";
  // Auxiliary/clitic conjugations applied right after a substituted
  // singular subject.
  std::map<std::string, std::string> agreement_map;
  // First-person forms that act as singular subjects once replaced.
  std::set<std::string> singular_subjects;
  // Pronouns left alone under --pov-keep-possessives.
  std::set<std::string> possessives;
  bool keep_possessives = false;

  static PovRuleSet english();
  // Overrides any of "pronoun_map", "modal_map", "question_template",
  // "agreement_map", "singular_subjects" from a JSON object; other fields
  // keep their English defaults. Throws ConfigError on malformed input.
  static PovRuleSet from_json(std::string_view text);

  // Throws ConfigError when a key is a third-person pronoun or the template
  // lacks "{utterance}".
  void validate() const;
};

struct PovToken {
  std::string text;
  Tag tag = Tag::X;
  bool substituted_subject = false;

  bool operator==(const PovToken&) const = default;
};

std::vector<PovToken> to_pov_tokens(const std::vector<TaggedToken>& tokens);

// Applies the question template, or else the pronoun, modal and agreement
// rules in that order. Output tokens are lowercase. A sentence already in
// template form for this speaker is returned unchanged.
std::vector<PovToken> convert(const std::vector<PovToken>& tokens, const std::string& speaker,
                              const PovRuleSet& rules, const Tagger& tagger = Tagger::english());

std::string convert(const SummaryPath& sentence, const std::string& speaker, const PovRuleSet& rules,
                    const Tagger& tagger = Tagger::english());

// Tokenizes and tags raw text first.
std::string convert_text(std::string_view sentence, const std::string& speaker, const PovRuleSet& rules,
                         const Tagger& tagger = Tagger::english());

// Conjugates the token right after each substituted singular subject.
void fix_agreement(std::vector<PovToken>& tokens, const PovRuleSet& rules,
                   const Tagger& tagger = Tagger::english());

std::string join_tokens(const std::vector<PovToken>& tokens);

// Third person singular present of a base-form verb ("go" -> "goes").
std::string inflect_third_singular(std::string_view verb);

}  // namespace mscg
