#pragma once
// Shared value types for review corpora: tokens, sentences, reviews,
// concept kinds, and the small utilities the rest of the library leans on.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace revmine {

// Coarse part-of-speech tags. LINKV is split out of VERB because linking
// verbs behave differently in every extraction pattern.
enum class Pos { Noun, Propn, Verb, Linkv, Adj, Adv, Pron, Prep, Det, Neg, Num, Other };

inline constexpr std::array<std::pair<Pos, const char*>, 12> kPosNames{{
    {Pos::Noun, "NOUN"},
    {Pos::Propn, "PROPN"},
    {Pos::Verb, "VERB"},
    {Pos::Linkv, "LINKV"},
    {Pos::Adj, "ADJ"},
    {Pos::Adv, "ADV"},
    {Pos::Pron, "PRON"},
    {Pos::Prep, "PREP"},
    {Pos::Det, "DET"},
    {Pos::Neg, "NEG"},
    {Pos::Num, "NUM"},
    {Pos::Other, "OTHER"},
}};

inline const char* to_string(Pos p) {
  for (const auto& [pos, name] : kPosNames)
    if (pos == p) return name;
  return "OTHER";
}

inline std::optional<Pos> pos_from_string(std::string_view s) {
  for (const auto& [pos, name] : kPosNames)
    if (s == name) return pos;
  return std::nullopt;
}

// The five concept kinds of the summarization model. Enum order is also the
// canonical output order.
enum class ConceptKind { Feature, Affordance, Emotion, Perception, UsageCondition };

inline constexpr std::array<ConceptKind, 5> kAllKinds{
    ConceptKind::Feature, ConceptKind::Affordance, ConceptKind::Emotion,
    ConceptKind::Perception, ConceptKind::UsageCondition};

inline const char* to_string(ConceptKind k) {
  switch (k) {
    case ConceptKind::Feature: return "FEATURE";
    case ConceptKind::Affordance: return "AFFORDANCE";
    case ConceptKind::Emotion: return "EMOTION";
    case ConceptKind::Perception: return "PERCEPTION";
    case ConceptKind::UsageCondition: return "USAGE_CONDITION";
  }
  return "FEATURE";
}

inline std::optional<ConceptKind> kind_from_string(std::string_view s) {
  for (ConceptKind k : kAllKinds)
    if (s == to_string(k)) return k;
  return std::nullopt;
}

struct Token {
  int index = 0;
  std::string surface;
  std::string lemma;  // lowercase
  Pos pos = Pos::Other;
  bool is_article = false;  // lemma in {a, an, the}; always tagged DET

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::string review_id;
  int index = 0;  // 0-based within the review
  std::string text;
  std::vector<Token> tokens;

  bool operator==(const Sentence&) const = default;
};

struct Review {
  std::string id;
  int stars = 0;  // 1..5
  std::string date;  // ISO-8601, YYYY-MM-DD
  long helpful_votes = 0;
  std::string text;
  std::vector<Sentence> sentences;

  bool operator==(const Review&) const = default;
};

// ---- small string helpers ----

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.emplace_back(s.substr(pos));
      break;
    }
    out.emplace_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline bool is_all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// "300ppi" -> "300 ppi"; anything that is not digits-then-letters is unchanged.
inline std::string digit_split(std::string_view s) {
  size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == 0 || i == s.size()) return std::string(s);
  for (size_t j = i; j < s.size(); ++j)
    if (!std::isalpha(static_cast<unsigned char>(s[j]))) return std::string(s);
  std::string out(s.substr(0, i));
  out += ' ';
  out += s.substr(i);
  return out;
}

// Adjacency distance between token positions: one more than the number of
// non-article tokens strictly between them. Articles are invisible to every
// window rule. dist(i, i) == 0, immediate neighbours have distance 1.
inline int token_distance(const Sentence& s, int i, int j) {
  if (i == j) return 0;
  int lo = std::min(i, j), hi = std::max(i, j);
  int between = 0;
  for (int k = lo + 1; k < hi; ++k)
    if (!s.tokens[static_cast<size_t>(k)].is_article) ++between;
  return between + 1;
}

// FNV-1a 64-bit, used for lexicon checksums and corpus fingerprints.
inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ull) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view data) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

template <typename... Parts>
[[noreturn]] inline void fail(Parts&&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  throw std::runtime_error(os.str());
}

}  // namespace revmine
