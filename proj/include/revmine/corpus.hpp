#pragma once
// Corpus ingestion: raw review records (JSON lines), sentence segmentation,
// tokenization, a deterministic lexicon+suffix tagger, and the tab-separated
// pre-tagged corpus format that bypasses the built-in tagger entirely.

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "revmine/core.hpp"
#include "revmine/lexicon.hpp"

namespace revmine {

namespace detail {

inline const std::set<std::string>& article_lemmas() {
  static const std::set<std::string> kArticles{"a", "an", "the"};
  return kArticles;
}

inline const std::set<std::string>& negation_lemmas() {
  static const std::set<std::string> kNeg{"not", "cannot", "n't", "never", "without"};
  return kNeg;
}

inline const std::set<std::string>& demonstrative_lemmas() {
  static const std::set<std::string> kDem{"this", "that", "these", "those"};
  return kDem;
}

inline const std::set<std::string>& pronoun_lemmas() {
  static const std::set<std::string> kPron{
      "i", "me", "we", "us", "you", "he", "she", "it", "they", "them",
      "my", "our", "your", "his", "her", "its", "their", "mine", "ours", "yours",
      "himself", "herself", "itself", "themselves", "myself", "ourselves",
      "who", "whom", "there", "someone", "anyone", "everyone"};
  return kPron;
}

inline const std::set<std::string>& preposition_lemmas() {
  static const std::set<std::string> kPrep{
      "of", "in", "on", "at", "by", "with", "from", "for", "to", "under", "over",
      "above", "below", "into", "onto", "about", "after", "before", "between",
      "through", "during", "against", "across", "behind", "beside", "near",
      "inside", "outside", "within", "upon"};
  return kPrep;
}

inline const std::set<std::string>& modal_conj_lemmas() {
  static const std::set<std::string> kOther{
      "would", "could", "should", "can", "may", "might", "must", "will", "shall",
      "and", "or", "but", "because", "if", "while", "when", "than", "as", "so",
      "do", "does", "did", "have", "has", "had"};
  return kOther;
}

// Irregular surface forms resolved before suffix stripping.
inline const std::map<std::string, std::string>& special_lemmas() {
  static const std::map<std::string, std::string> kSpecial{
      {"'s", "be"},   {"'m", "be"},    {"'re", "be"}, {"is", "be"},   {"am", "be"},
      {"are", "be"},  {"was", "be"},   {"were", "be"}, {"been", "be"}, {"being", "be"},
      {"n't", "not"}, {"'ve", "have"}, {"'ll", "will"}, {"'d", "would"},
      {"bought", "buy"}, {"thought", "think"}, {"went", "go"}, {"got", "get"},
      {"made", "make"}, {"took", "take"}, {"gave", "give"}, {"came", "come"},
      {"said", "say"}, {"saw", "see"}, {"felt", "feel"}, {"kept", "keep"},
      {"held", "hold"}, {"found", "find"}, {"broke", "break"}, {"read", "read"}};
  return kSpecial;
}

inline bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '#';
}

}  // namespace detail

// Lowercase the surface and strip plural/verb suffixes. Purely rule-based;
// pre-tagged corpora carry authoritative lemmas and never go through this.
inline std::string lemmatize(std::string_view surface) {
  std::string w = to_lower(surface);
  const auto& special = detail::special_lemmas();
  if (auto it = special.find(w); it != special.end()) return it->second;

  auto repair = [](std::string stem) {
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2]) {
      char c = stem.back();
      if (c == 'p' || c == 't' || c == 'n' || c == 'm' || c == 'b' || c == 'd' || c == 'g')
        stem.pop_back();
      return stem;
    }
    char c = stem.empty() ? '\0' : stem.back();
    if (c == 'c' || c == 'u' || c == 'v' || c == 'z') stem += 'e';
    return stem;
  };

  if (w.size() > 4 && w.ends_with("ies")) return w.substr(0, w.size() - 3) + "y";
  if (w.size() > 4 && (w.ends_with("ches") || w.ends_with("shes") || w.ends_with("sses") ||
                       w.ends_with("xes") || w.ends_with("zes")))
    return w.substr(0, w.size() - 2);
  if (w.size() > 3 && w.ends_with("s") && !w.ends_with("ss") && !w.ends_with("us") &&
      !w.ends_with("is"))
    return w.substr(0, w.size() - 1);
  if (w.size() > 5 && w.ends_with("ing")) return repair(w.substr(0, w.size() - 3));
  if (w.size() > 4 && w.ends_with("ed")) return repair(w.substr(0, w.size() - 2));
  return w;
}

// Deterministic coarse tagging: closed classes, then suffix heuristics, then
// mid-sentence capitalization, then the noun default.
inline void tag(Sentence& sentence, const LexiconSet& lexicons) {
  for (auto& tok : sentence.tokens) {
    const std::string lower = to_lower(tok.surface);
    if (tok.lemma.empty()) tok.lemma = lemmatize(tok.surface);
    tok.is_article = detail::article_lemmas().count(tok.lemma) > 0;

    bool has_alnum = std::any_of(lower.begin(), lower.end(),
                                 [](unsigned char c) { return std::isalnum(c); });
    if (!has_alnum && lower != "n't" && lower != "'s" && lower != "'m" && lower != "'re") {
      tok.pos = Pos::Other;
      continue;
    }
    if (tok.is_article) {
      tok.pos = Pos::Det;
      continue;
    }
    if (detail::negation_lemmas().count(tok.lemma) || lower == "n't") {
      tok.pos = Pos::Neg;
      continue;
    }
    if (lexicons.linking_verbs.count(tok.lemma)) {
      tok.pos = Pos::Linkv;
      continue;
    }
    if (detail::demonstrative_lemmas().count(tok.lemma)) {
      tok.pos = Pos::Det;
      continue;
    }
    if (detail::pronoun_lemmas().count(tok.lemma)) {
      tok.pos = Pos::Pron;
      continue;
    }
    if (detail::preposition_lemmas().count(lower)) {
      tok.pos = Pos::Prep;
      continue;
    }
    if (detail::modal_conj_lemmas().count(lower)) {
      tok.pos = Pos::Other;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(lower[0]))) {
      tok.pos = Pos::Num;
      continue;
    }
    if (lower.ends_with("ly")) {
      tok.pos = Pos::Adv;
      continue;
    }
    if (lower.ends_with("able") || lower.ends_with("ible")) {
      tok.pos = Pos::Adj;
      continue;
    }
    if (lower.ends_with("ity") || lower.ends_with("ities") || lower.ends_with("ness") ||
        lower.ends_with("tion")) {
      tok.pos = Pos::Noun;
      continue;
    }
    if (lower.ends_with("ize") || lower.ends_with("ify")) {
      tok.pos = Pos::Verb;
      continue;
    }
    if (tok.index > 0 && std::isupper(static_cast<unsigned char>(tok.surface[0]))) {
      tok.pos = Pos::Propn;
      continue;
    }
    tok.pos = Pos::Noun;
  }
}

// Whitespace/punctuation tokenization. Intra-word hyphens and alphanumeric
// compounds stay whole; "'s" and "n't" split off as their own tokens.
inline std::vector<std::string> tokenize_text(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '\'' && i + 1 < text.size() &&
        std::isalpha(static_cast<unsigned char>(text[i + 1]))) {
      size_t j = i + 1;
      while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
      std::string clitic(text.substr(i, j - i));
      if ((clitic == "'t" || clitic == "'T") && !out.empty() &&
          (out.back().back() == 'n' || out.back().back() == 'N')) {
        out.back().pop_back();  // don't -> do + n't
        if (out.back().empty()) out.pop_back();
        out.push_back("n't");
      } else {
        out.push_back(std::move(clitic));
      }
      i = j;
      continue;
    }
    if (detail::is_word_char(c)) {
      size_t j = i;
      while (j < text.size() && detail::is_word_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      // strip stray leading/trailing hyphens
      while (!word.empty() && word.front() == '-') word.erase(word.begin());
      while (!word.empty() && word.back() == '-') word.pop_back();
      if (word.size() > 3 && to_lower(word).ends_with("n't")) {
        out.push_back(word.substr(0, word.size() - 3));
        out.push_back("n't");
      } else if (!word.empty()) {
        out.push_back(word);
      }
      i = j;
      continue;
    }
    out.emplace_back(1, c);
    ++i;
  }
  return out;
}

namespace detail {

inline bool ends_with_abbreviation(std::string_view text, size_t dot_pos) {
  static const std::vector<std::string> kAbbrev{"e.g", "i.e", "etc", "vs", "mr", "dr"};
  size_t start = dot_pos;
  while (start > 0) {
    char c = text[start - 1];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '.') --start;
    else break;
  }
  std::string word = to_lower(text.substr(start, dot_pos - start));
  if (word.size() == 1 && std::isalpha(static_cast<unsigned char>(word[0])))
    return true;  // initials and the inner dots of "e.g."
  for (const auto& a : kAbbrev)
    if (word == a) return true;
  return false;
}

}  // namespace detail

// Split review text into sentences on terminal punctuation, tokenize, and tag.
// Degenerate text yields zero sentences, never an error.
inline void segment_and_tokenize(Review& review, const LexiconSet& lexicons) {
  review.sentences.clear();
  const std::string& text = review.text;
  std::vector<std::string> pieces;
  size_t start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '!' || c == '?' || (c == '.' && !detail::ends_with_abbreviation(text, i))) {
      size_t end = i + 1;
      while (end < text.size() && (text[end] == '.' || text[end] == '!' || text[end] == '?'))
        ++end;
      pieces.emplace_back(text.substr(start, end - start));
      start = end;
      i = end - 1;
    }
  }
  if (start < text.size()) pieces.emplace_back(text.substr(start));

  int index = 0;
  for (const auto& piece : pieces) {
    auto words = tokenize_text(piece);
    if (words.empty()) continue;
    Sentence s;
    s.review_id = review.id;
    s.index = index;
    s.text = std::string(trim(piece));
    int ti = 0;
    for (auto& w : words) {
      Token t;
      t.index = ti++;
      t.surface = std::move(w);
      s.tokens.push_back(std::move(t));
    }
    tag(s, lexicons);
    review.sentences.push_back(std::move(s));
    ++index;
  }
}

namespace detail {

inline void validate_stars(int stars, const std::string& where) {
  if (stars < 1 || stars > 5) fail(where, ": stars out of range (", stars, ")");
}

inline void validate_date(const std::string& date, const std::string& where) {
  bool ok = date.size() == 10 && date[4] == '-' && date[7] == '-';
  for (size_t i = 0; ok && i < date.size(); ++i)
    if (i != 4 && i != 7) ok = std::isdigit(static_cast<unsigned char>(date[i]));
  if (!ok) fail(where, ": date is not ISO-8601 (YYYY-MM-DD): '", date, "'");
}

}  // namespace detail

// One JSON object per line with fields id, stars, date, votes, text.
inline std::vector<Review> load_reviews(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open review file: ", path.string());
  std::vector<Review> reviews;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v = trim(line);
    if (v.empty()) continue;
    std::string where = path.filename().string() + ":" + std::to_string(lineno);
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(v);
    } catch (const std::exception& e) {
      fail(where, ": malformed record: ", e.what());
    }
    for (const char* key : {"id", "stars", "date", "votes", "text"})
      if (!rec.contains(key)) fail(where, ": missing field '", key, "'");
    Review r;
    r.id = rec["id"].is_string() ? rec["id"].get<std::string>()
                                 : std::to_string(rec["id"].get<long>());
    if (!rec["stars"].is_number_integer()) fail(where, ": stars must be an integer");
    r.stars = rec["stars"].get<int>();
    detail::validate_stars(r.stars, where);
    r.date = rec["date"].get<std::string>();
    detail::validate_date(r.date, where);
    if (!rec["votes"].is_number_integer() || rec["votes"].get<long>() < 0)
      fail(where, ": votes must be a non-negative integer");
    r.helpful_votes = rec["votes"].get<long>();
    r.text = rec["text"].get<std::string>();
    reviews.push_back(std::move(r));
  }
  return reviews;
}

// Pre-tagged corpus format: "#review <id> <stars> <date> <votes>" starts a
// review, "surface<TAB>lemma<TAB>TAG" lines are tokens, a blank line ends a
// sentence. Tags are taken verbatim.
inline std::vector<Review> load_tagged(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open tagged corpus: ", path.string());
  std::vector<Review> reviews;
  Sentence current;
  std::string line;
  int lineno = 0;

  auto flush_sentence = [&]() {
    if (current.tokens.empty()) return;
    if (reviews.empty()) fail("token lines before any #review header");
    current.review_id = reviews.back().id;
    current.index = static_cast<int>(reviews.back().sentences.size());
    std::vector<std::string> surfaces;
    for (const auto& t : current.tokens) surfaces.push_back(t.surface);
    current.text = join(surfaces, " ");
    reviews.back().sentences.push_back(std::move(current));
    current = Sentence{};
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string where = path.filename().string() + ":" + std::to_string(lineno);
    if (trim(line).empty()) {
      flush_sentence();
      continue;
    }
    if (line.starts_with("#review")) {
      flush_sentence();
      std::istringstream is(line);
      std::string tag_word, id, date;
      int stars = 0;
      long votes = 0;
      if (!(is >> tag_word >> id >> stars >> date >> votes))
        fail(where, ": malformed #review header '", line, "'");
      detail::validate_stars(stars, where);
      detail::validate_date(date, where);
      Review r;
      r.id = id;
      r.stars = stars;
      r.date = date;
      r.helpful_votes = votes;
      reviews.push_back(std::move(r));
      continue;
    }
    // comment lines start with '#' and carry no tabs; "#1<TAB>..." is a token
    if (line.front() == '#' && line.find('\t') == std::string::npos) continue;
    auto fields = split(line, '\t');
    if (fields.size() != 3)
      fail(where, ": expected surface<TAB>lemma<TAB>tag, got '", line, "'");
    auto pos = pos_from_string(fields[2]);
    if (!pos) fail(where, ": unknown tag '", fields[2], "'");
    Token t;
    t.index = static_cast<int>(current.tokens.size());
    t.surface = fields[0];
    t.lemma = to_lower(fields[1]);
    t.pos = *pos;
    t.is_article = detail::article_lemmas().count(t.lemma) > 0;
    if (t.is_article && t.pos != Pos::Det)
      fail(where, ": article '", t.lemma, "' must carry tag DET");
    current.tokens.push_back(std::move(t));
  }
  flush_sentence();

  for (auto& r : reviews) {
    std::vector<std::string> texts;
    for (const auto& s : r.sentences) texts.push_back(s.text);
    r.text = join(texts, " ");
  }
  return reviews;
}

inline void export_tagged(const std::vector<Review>& reviews, std::ostream& out) {
  for (const auto& r : reviews) {
    out << "#review " << r.id << " " << r.stars << " " << r.date << " " << r.helpful_votes
        << "\n";
    for (const auto& s : r.sentences) {
      for (const auto& t : s.tokens)
        out << t.surface << "\t" << t.lemma << "\t" << to_string(t.pos) << "\n";
      out << "\n";
    }
  }
}

inline std::string corpus_fingerprint(const std::vector<Review>& reviews) {
  std::string buf;
  for (const auto& r : reviews) {
    buf += r.id;
    buf += '\x1d';
    for (const auto& s : r.sentences) {
      for (const auto& t : s.tokens) {
        buf += t.surface;
        buf += '\x1f';
        buf += t.lemma;
        buf += '\x1f';
        buf += to_string(t.pos);
        buf += '\x1e';
      }
      buf += '\x1d';
    }
  }
  return fnv1a64_hex(buf);
}

// Flat sentence view over a corpus; sentence numbers are global and 1-based,
// matching the standoff annotation format.
struct FlatCorpus {
  std::vector<const Sentence*> sentences;
  std::string fingerprint;

  static FlatCorpus from(const std::vector<Review>& reviews) {
    FlatCorpus fc;
    for (const auto& r : reviews)
      for (const auto& s : r.sentences) fc.sentences.push_back(&s);
    fc.fingerprint = corpus_fingerprint(reviews);
    return fc;
  }
};

}  // namespace revmine
