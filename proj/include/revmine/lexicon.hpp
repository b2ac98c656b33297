#pragma once
// Closed word lists that parameterize the extraction patterns. Everything is
// loaded once from plain text files and treated as immutable afterwards.

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "revmine/core.hpp"

namespace revmine {

struct EmotionEntry {
  std::string category;
  char polarity = '+';  // '+' or '-'
  bool operator==(const EmotionEntry&) const = default;
};

// A suffix that marks a noun/adjective as verb-derived, e.g. "-ability".
// `replacement` is appended after stripping (usually empty).
struct AffordanceSuffix {
  std::string suffix;
  std::string replacement;
  bool operator==(const AffordanceSuffix&) const = default;
};

struct LexiconSet {
  std::map<std::string, EmotionEntry> emotion_words;
  std::set<std::string> stative_verbs;
  std::set<std::string> emotional_verbs;
  std::set<std::string> linking_verbs;
  std::set<std::string> non_product_actions;
  std::set<std::string> place_prepositions;
  std::set<std::pair<std::string, std::string>> antonym_pairs;  // stored sorted
  std::set<std::string> antonym_members;  // every lemma appearing in some pair
  std::set<std::string> human_refs;
  std::set<std::string> product_terms;
  std::vector<AffordanceSuffix> affordance_suffixes;  // longest suffix first
  std::map<std::string, std::string> suffix_repairs;  // stem -> repaired stem
  // Auxiliary lists; see docs/lexicons in the README.
  std::set<std::string> quantity_nouns;   // "amount", "number", ... for N-of-N chunks
  std::set<std::string> action_nouns;     // deverbal nouns treated as actions ("setup")
  std::set<std::string> degree_adverbs;   // absorbed into perception spans

  std::vector<std::string> warnings;  // non-fatal notes from loading

  void add_antonym_pair(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    antonym_pairs.insert({a, b});
    antonym_members.insert(a);
    antonym_members.insert(std::move(b));
  }

  bool has_antonym(const std::string& lemma) const {
    if (!antonym_members.empty() || antonym_pairs.empty())
      return antonym_members.count(lemma) > 0;
    // pairs populated directly, without add_antonym_pair
    for (const auto& [a, b] : antonym_pairs)
      if (a == lemma || b == lemma) return true;
    return false;
  }

  bool is_place_preposition(const std::string& lemma) const {
    return place_prepositions.count(lemma) > 0;
  }

  bool operator==(const LexiconSet& o) const {
    return emotion_words == o.emotion_words && stative_verbs == o.stative_verbs &&
           emotional_verbs == o.emotional_verbs && linking_verbs == o.linking_verbs &&
           non_product_actions == o.non_product_actions &&
           place_prepositions == o.place_prepositions && antonym_pairs == o.antonym_pairs &&
           human_refs == o.human_refs && product_terms == o.product_terms &&
           affordance_suffixes == o.affordance_suffixes && suffix_repairs == o.suffix_repairs &&
           quantity_nouns == o.quantity_nouns && action_nouns == o.action_nouns &&
           degree_adverbs == o.degree_adverbs;
  }
};

namespace detail {

inline const std::vector<AffordanceSuffix>& default_affordance_suffixes() {
  static const std::vector<AffordanceSuffix> kDefaults = {
      {"ability", ""}, {"ibility", ""}, {"ities", ""},
      {"able", ""},    {"ible", ""},    {"ity", ""},
  };
  return kDefaults;
}

inline std::vector<std::string> read_lines(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) fail("cannot open lexicon file: ", file.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view v = trim(line);
    if (v.empty() || v.front() == '#') continue;
    lines.emplace_back(v);
  }
  return lines;
}

inline std::set<std::string> load_word_set(const std::filesystem::path& file) {
  std::set<std::string> out;
  for (const auto& line : read_lines(file)) out.insert(to_lower(line));
  return out;
}

inline void load_optional_set(const std::filesystem::path& dir, const char* name,
                              std::set<std::string>& target, std::vector<std::string>& warnings) {
  auto file = dir / name;
  if (!std::filesystem::exists(file)) {
    warnings.push_back(std::string("missing optional lexicon file ") + name + "; list is empty");
    return;
  }
  target = load_word_set(file);
}

}  // namespace detail

inline const std::vector<std::pair<std::string, std::string>>& lexicon_filenames() {
  // (list name, file name); the first three files are mandatory.
  static const std::vector<std::pair<std::string, std::string>> kFiles = {
      {"emotion", "emotion.txt"},
      {"place_prepositions", "place_prepositions.txt"},
      {"antonyms", "antonyms.txt"},
      {"stative_verbs", "stative_verbs.txt"},
      {"emotional_verbs", "emotional_verbs.txt"},
      {"linking_verbs", "linking_verbs.txt"},
      {"non_product_actions", "non_product_actions.txt"},
      {"human_refs", "human_refs.txt"},
      {"product_terms", "product_terms.txt"},
      {"affordance_suffixes", "affordance_suffixes.txt"},
      {"suffix_repairs", "suffix_repairs.txt"},
      {"quantity_nouns", "quantity_nouns.txt"},
      {"action_nouns", "action_nouns.txt"},
      {"degree_adverbs", "degree_adverbs.txt"},
  };
  return kFiles;
}

inline void validate_lexicons(const LexiconSet& lex) {
  for (const auto& lemma : lex.stative_verbs)
    if (lex.linking_verbs.count(lemma))
      fail("lexicon conflict: '", lemma, "' appears in both stative_verbs and linking_verbs");
  for (const auto& [a, b] : lex.antonym_pairs) {
    if (a.empty() || b.empty()) fail("antonym pair with empty lemma");
    if (a == b) fail("antonym pair maps '", a, "' to itself");
  }
  for (const auto& s : lex.affordance_suffixes)
    if (s.suffix.empty()) fail("empty affordance suffix");
}

inline LexiconSet load_lexicons(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) fail("lexicon directory not found: ", dir.string());
  LexiconSet lex;

  auto emotion_file = dir / "emotion.txt";
  if (!fs::exists(emotion_file)) fail("missing mandatory lexicon file: ", emotion_file.string());
  int lineno = 0;
  for (const auto& line : detail::read_lines(emotion_file)) {
    ++lineno;
    auto fields = split(line, '\t');
    if (fields.size() != 3 || fields[0].empty())
      fail(emotion_file.string(), ": bad emotion entry '", line, "' (want lemma<TAB>category<TAB>polarity)");
    if (fields[2] != "+" && fields[2] != "-")
      fail(emotion_file.string(), ": polarity must be + or - in '", line, "'");
    lex.emotion_words[to_lower(fields[0])] = EmotionEntry{to_lower(fields[1]), fields[2][0]};
  }

  auto place_file = dir / "place_prepositions.txt";
  if (!fs::exists(place_file)) fail("missing mandatory lexicon file: ", place_file.string());
  lex.place_prepositions = detail::load_word_set(place_file);

  auto antonym_file = dir / "antonyms.txt";
  if (!fs::exists(antonym_file)) fail("missing mandatory lexicon file: ", antonym_file.string());
  for (const auto& line : detail::read_lines(antonym_file)) {
    auto fields = split(line, '\t');
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
      fail(antonym_file.string(), ": bad antonym pair '", line, "' (want lemma<TAB>lemma)");
    lex.add_antonym_pair(to_lower(fields[0]), to_lower(fields[1]));
  }

  detail::load_optional_set(dir, "stative_verbs.txt", lex.stative_verbs, lex.warnings);
  detail::load_optional_set(dir, "emotional_verbs.txt", lex.emotional_verbs, lex.warnings);
  detail::load_optional_set(dir, "linking_verbs.txt", lex.linking_verbs, lex.warnings);
  detail::load_optional_set(dir, "non_product_actions.txt", lex.non_product_actions, lex.warnings);
  detail::load_optional_set(dir, "human_refs.txt", lex.human_refs, lex.warnings);
  detail::load_optional_set(dir, "product_terms.txt", lex.product_terms, lex.warnings);
  detail::load_optional_set(dir, "quantity_nouns.txt", lex.quantity_nouns, lex.warnings);
  detail::load_optional_set(dir, "action_nouns.txt", lex.action_nouns, lex.warnings);
  detail::load_optional_set(dir, "degree_adverbs.txt", lex.degree_adverbs, lex.warnings);

  auto suffix_file = dir / "affordance_suffixes.txt";
  if (fs::exists(suffix_file)) {
    for (const auto& line : detail::read_lines(suffix_file)) {
      auto fields = split(line, '\t');
      std::string suffix = to_lower(fields[0]);
      if (!suffix.empty() && suffix.front() == '-') suffix.erase(0, 1);
      if (suffix.empty()) fail(suffix_file.string(), ": empty suffix in '", line, "'");
      lex.affordance_suffixes.push_back({suffix, fields.size() > 1 ? to_lower(fields[1]) : ""});
    }
  }
  // The standard verb-derivation suffixes are always present.
  for (const auto& def : detail::default_affordance_suffixes()) {
    bool found = false;
    for (const auto& s : lex.affordance_suffixes)
      if (s.suffix == def.suffix) found = true;
    if (!found) lex.affordance_suffixes.push_back(def);
  }
  std::stable_sort(lex.affordance_suffixes.begin(), lex.affordance_suffixes.end(),
                   [](const auto& a, const auto& b) { return a.suffix.size() > b.suffix.size(); });

  auto repair_file = dir / "suffix_repairs.txt";
  if (fs::exists(repair_file)) {
    for (const auto& line : detail::read_lines(repair_file)) {
      auto fields = split(line, '\t');
      if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
        fail(repair_file.string(), ": bad repair entry '", line, "' (want stem<TAB>repaired)");
      lex.suffix_repairs[to_lower(fields[0])] = to_lower(fields[1]);
    }
  } else {
    lex.warnings.push_back("missing optional lexicon file suffix_repairs.txt; list is empty");
  }

  validate_lexicons(lex);
  return lex;
}

inline void save_lexicons(const LexiconSet& lex, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto write_set = [&](const char* name, const std::set<std::string>& words) {
    std::ofstream out(dir / name);
    for (const auto& w : words) out << w << "\n";
  };
  {
    std::ofstream out(dir / "emotion.txt");
    for (const auto& [lemma, e] : lex.emotion_words)
      out << lemma << "\t" << e.category << "\t" << e.polarity << "\n";
  }
  {
    std::ofstream out(dir / "antonyms.txt");
    for (const auto& [a, b] : lex.antonym_pairs) out << a << "\t" << b << "\n";
  }
  write_set("place_prepositions.txt", lex.place_prepositions);
  write_set("stative_verbs.txt", lex.stative_verbs);
  write_set("emotional_verbs.txt", lex.emotional_verbs);
  write_set("linking_verbs.txt", lex.linking_verbs);
  write_set("non_product_actions.txt", lex.non_product_actions);
  write_set("human_refs.txt", lex.human_refs);
  write_set("product_terms.txt", lex.product_terms);
  write_set("quantity_nouns.txt", lex.quantity_nouns);
  write_set("action_nouns.txt", lex.action_nouns);
  write_set("degree_adverbs.txt", lex.degree_adverbs);
  {
    std::ofstream out(dir / "affordance_suffixes.txt");
    for (const auto& s : lex.affordance_suffixes) out << s.suffix << "\t" << s.replacement << "\n";
  }
  {
    std::ofstream out(dir / "suffix_repairs.txt");
    for (const auto& [stem, rep] : lex.suffix_repairs) out << stem << "\t" << rep << "\n";
  }
}

// Case-insensitive membership test against a named list.
inline bool lookup(const LexiconSet& lex, std::string_view kind, std::string_view lemma_raw) {
  std::string lemma = to_lower(lemma_raw);
  if (kind == "emotion") return lex.emotion_words.count(lemma) > 0;
  if (kind == "stative_verbs") return lex.stative_verbs.count(lemma) > 0;
  if (kind == "emotional_verbs") return lex.emotional_verbs.count(lemma) > 0;
  if (kind == "linking_verbs") return lex.linking_verbs.count(lemma) > 0;
  if (kind == "non_product_actions") return lex.non_product_actions.count(lemma) > 0;
  if (kind == "place_prepositions") return lex.place_prepositions.count(lemma) > 0;
  if (kind == "antonym" || kind == "antonyms") return lex.has_antonym(lemma);
  if (kind == "human_refs") return lex.human_refs.count(lemma) > 0;
  if (kind == "product_terms") return lex.product_terms.count(lemma) > 0;
  if (kind == "quantity_nouns") return lex.quantity_nouns.count(lemma) > 0;
  if (kind == "action_nouns") return lex.action_nouns.count(lemma) > 0;
  if (kind == "degree_adverbs") return lex.degree_adverbs.count(lemma) > 0;
  fail("unknown lexicon list: ", kind);
}

}  // namespace revmine
