#pragma once
// The five concept extractors, pronoun resolution, affordance normalization,
// and the per-sentence orchestrator. Extraction is a pure function of
// (sentence, context, lexicons, config); all state lives in the arguments.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "revmine/core.hpp"
#include "revmine/corpus.hpp"
#include "revmine/lexicon.hpp"

namespace revmine {

struct ExtractConfig {
  int window = 3;    // adjacency window, articles not counted
  int min_freq = 3;  // corpus noun frequency threshold for features
};

// Link to another annotation in the same sentence, addressed by kind plus
// per-kind ordinal (the "f1"/"a2" ids in serialized output).
struct Link {
  std::string role;  // target, modifies, receiver, property_of
  ConceptKind kind = ConceptKind::Feature;
  int ordinal = 0;
  std::string display;

  bool operator==(const Link&) const = default;
};

struct ConceptAnnotation {
  ConceptKind kind = ConceptKind::Feature;
  int span_start = 0;
  int span_end = 0;
  int trigger = 0;  // the token that fired the pattern
  std::string normalized;
  std::string display;  // head surface for features, action lemma for affordances
  std::vector<Link> links;
  std::optional<int> resolved_from;
  std::optional<std::string> antecedent;
  bool noun_as_action = false;
  bool suffix_derived = false;
  int quantity_head = -1;  // features built from a quantity-of chunk
  int receiver_head = -1;  // affordances: head token index of the receiver
};

struct SentenceSummary {
  std::string review_id;
  int sentence_index = 0;  // 0-based within the review
  int global_index = 0;    // 1-based across the corpus ("s3")
  std::string text;
  std::vector<ConceptAnnotation> annotations;  // sorted by (kind, span start)

  std::vector<const ConceptAnnotation*> by_kind(ConceptKind k) const {
    std::vector<const ConceptAnnotation*> out;
    for (const auto& a : annotations)
      if (a.kind == k) out.push_back(&a);
    return out;
  }

  const ConceptAnnotation* resolve_link(const Link& link) const {
    int seen = 0;
    for (const auto& a : annotations) {
      if (a.kind != link.kind) continue;
      if (seen == link.ordinal) return &a;
      ++seen;
    }
    return nullptr;
  }
};

inline std::string annotation_id(ConceptKind kind, int ordinal) {
  static const char* prefix[] = {"f", "a", "e", "p", "u"};
  return std::string(prefix[static_cast<int>(kind)]) + std::to_string(ordinal + 1);
}

// Join token surfaces over [start, end], skipping articles, with numeric
// compounds split for display ("300ppi" -> "300 ppi").
inline std::string normalized_join(const Sentence& s, int start, int end) {
  std::vector<std::string> parts;
  for (int i = start; i <= end; ++i) {
    const Token& t = s.tokens[static_cast<size_t>(i)];
    if (t.is_article) continue;
    parts.push_back(digit_split(t.surface));
  }
  return join(parts, " ");
}

// ---- noun chunks ----

// A maximal nominal run: optional demonstrative, leading adjectives, then
// nouns/proper nouns/numerals, ending at the rightmost noun. Inside a
// prepositional complement the leading adjectives stay outside the chunk
// (they are perception material, not chunk members). A chunk headed by a
// quantity noun absorbs its "of" complement and takes that complement's
// head ("significant amount of dust" is one chunk headed by "dust").
struct Chunk {
  int start = 0;
  int end = 0;
  int head = 0;
  bool propn_head = false;
  bool pp_complement = false;
  int quantity_head = -1;
  std::vector<int> nums;  // numeral members other than the head
};

inline std::vector<Chunk> find_chunks(const Sentence& s, const LexiconSet& lexicons) {
  const auto& toks = s.tokens;
  const int n = static_cast<int>(toks.size());
  std::vector<Chunk> chunks;

  auto scan_core = [&](int from, int& core_start, int& core_end, int& head) {
    int j = from;
    while (j < n && toks[static_cast<size_t>(j)].pos == Pos::Adj) ++j;
    core_start = j;
    while (j < n && (toks[static_cast<size_t>(j)].pos == Pos::Noun ||
                     toks[static_cast<size_t>(j)].pos == Pos::Propn ||
                     toks[static_cast<size_t>(j)].pos == Pos::Num))
      ++j;
    core_end = j;
    head = -1;
    for (int k = core_end - 1; k >= core_start; --k) {
      Pos p = toks[static_cast<size_t>(k)].pos;
      if (p == Pos::Noun || p == Pos::Propn) {
        head = k;
        break;
      }
    }
    return head >= 0;
  };

  int i = 0;
  while (i < n) {
    const Token& tok = toks[static_cast<size_t>(i)];
    if (tok.is_article || (tok.pos != Pos::Det && tok.pos != Pos::Adj &&
                           tok.pos != Pos::Noun && tok.pos != Pos::Propn &&
                           tok.pos != Pos::Num)) {
      ++i;
      continue;
    }
    int dem = -1, j = i;
    if (tok.pos == Pos::Det) {
      if (detail::demonstrative_lemmas().count(tok.lemma)) dem = j++;
      else {
        ++i;
        continue;
      }
    }
    int adj_start = j, core_start = 0, core_end = 0, head = -1;
    if (!scan_core(j, core_start, core_end, head)) {
      i = std::max(i + 1, core_end);
      continue;
    }
    int first = dem >= 0 ? dem : (adj_start < core_start ? adj_start : core_start);
    int prev = first - 1;
    while (prev >= 0 && toks[static_cast<size_t>(prev)].is_article) --prev;
    bool pp = prev >= 0 && toks[static_cast<size_t>(prev)].pos == Pos::Prep;

    Chunk ch;
    ch.pp_complement = pp;
    ch.start = pp ? (dem >= 0 ? dem : core_start) : first;
    ch.head = head;
    ch.end = head;
    ch.propn_head = toks[static_cast<size_t>(head)].pos == Pos::Propn;
    int scanned_to = core_end;

    // quantity-of merge: "amount of dust", chained for nested quantities
    while (lexicons.quantity_nouns.count(toks[static_cast<size_t>(ch.head)].lemma)) {
      int t = ch.end + 1;
      if (t >= n || toks[static_cast<size_t>(t)].pos != Pos::Prep ||
          toks[static_cast<size_t>(t)].lemma != "of")
        break;
      int u = t + 1;
      while (u < n && toks[static_cast<size_t>(u)].is_article) ++u;
      int b_core_start = 0, b_core_end = 0, b_head = -1;
      if (!scan_core(u, b_core_start, b_core_end, b_head)) break;
      if (ch.quantity_head < 0) ch.quantity_head = ch.head;
      ch.head = b_head;
      ch.end = b_head;
      ch.propn_head = toks[static_cast<size_t>(b_head)].pos == Pos::Propn;
      scanned_to = b_core_end;
    }

    for (int k = ch.start; k <= ch.end; ++k)
      if (k != ch.head && toks[static_cast<size_t>(k)].pos == Pos::Num) ch.nums.push_back(k);

    chunks.push_back(ch);
    i = std::max(scanned_to, ch.end + 1);
  }
  return chunks;
}

inline bool chunk_qualifies(const Chunk& ch, const Sentence& s, const LexiconSet& lexicons,
                            const std::map<std::string, int>& noun_freq, int min_freq) {
  if (ch.propn_head) return true;
  const std::string& head_lemma = s.tokens[static_cast<size_t>(ch.head)].lemma;
  if (lexicons.product_terms.count(head_lemma)) return true;
  auto it = noun_freq.find(head_lemma);
  return it != noun_freq.end() && it->second >= min_freq;
}

// ---- pronoun resolution ----

inline const std::set<std::string>& resolvable_pronouns() {
  static const std::set<std::string> kThirdPerson{"it", "its", "they", "them", "itself",
                                                  "themselves"};
  return kThirdPerson;
}

// Third-person pronouns map to the most recent feature-qualifying chunk of
// the current sentence, then the previous sentence's last plain feature,
// then the literal "product".
inline std::map<int, std::string> resolve_pronouns(
    const Sentence& sentence, const SentenceSummary* context, const LexiconSet& lexicons,
    const std::map<std::string, int>& noun_freq = {}, int min_freq = 3) {
  std::map<int, std::string> out;
  auto chunks = find_chunks(sentence, lexicons);
  for (const Token& tok : sentence.tokens) {
    if (tok.pos != Pos::Pron || !resolvable_pronouns().count(tok.lemma)) continue;
    std::string antecedent;
    int best_end = -1;
    for (const auto& ch : chunks) {
      if (ch.end < tok.index && ch.end > best_end &&
          chunk_qualifies(ch, sentence, lexicons, noun_freq, min_freq)) {
        best_end = ch.end;
        antecedent = normalized_join(sentence, ch.start, ch.end);
      }
    }
    if (antecedent.empty() && context) {
      int best_start = -1;
      for (const auto& a : context->annotations) {
        if (a.kind != ConceptKind::Feature || a.resolved_from) continue;
        if (a.span_start >= best_start) {
          best_start = a.span_start;
          antecedent = a.normalized;
        }
      }
    }
    if (antecedent.empty()) antecedent = "product";
    out[tok.index] = antecedent;
  }
  return out;
}

// ---- features ----

// Noun chunks whose head is a product term, a proper noun, or a
// high-frequency noun; numeral attributes inside such chunks; linking verbs
// next to a product term; and resolved pronouns.
inline std::vector<ConceptAnnotation> extract_features(
    const Sentence& sentence, const LexiconSet& lexicons,
    const std::map<std::string, int>& noun_freq, int min_freq,
    const std::map<int, std::string>& resolved = {}, int window = 3) {
  std::vector<ConceptAnnotation> out;
  auto chunks = find_chunks(sentence, lexicons);

  for (const auto& ch : chunks) {
    if (!chunk_qualifies(ch, sentence, lexicons, noun_freq, min_freq)) continue;
    ConceptAnnotation f;
    f.kind = ConceptKind::Feature;
    f.span_start = ch.start;
    f.span_end = ch.end;
    f.trigger = ch.head;
    f.normalized = normalized_join(sentence, ch.start, ch.end);
    f.display = digit_split(sentence.tokens[static_cast<size_t>(ch.head)].surface);
    f.quantity_head = ch.quantity_head;
    int parent_ordinal = static_cast<int>(out.size());
    out.push_back(f);
    for (int num : ch.nums) {
      ConceptAnnotation sub;
      sub.kind = ConceptKind::Feature;
      sub.span_start = sub.span_end = sub.trigger = num;
      sub.normalized = digit_split(sentence.tokens[static_cast<size_t>(num)].surface);
      sub.display = sub.normalized;
      sub.links.push_back({"property_of", ConceptKind::Feature, parent_ordinal,
                           out[static_cast<size_t>(parent_ordinal)].display});
      out.push_back(sub);
    }
  }

  // A linking verb next to a product term names an appearance/state attribute.
  for (const Token& tok : sentence.tokens) {
    if (tok.pos != Pos::Linkv) continue;
    bool near_product = false;
    for (const Token& other : sentence.tokens) {
      if (lexicons.product_terms.count(other.lemma) &&
          token_distance(sentence, tok.index, other.index) <= window) {
        near_product = true;
        break;
      }
    }
    if (!near_product) continue;
    ConceptAnnotation f;
    f.kind = ConceptKind::Feature;
    f.span_start = f.span_end = f.trigger = tok.index;
    f.normalized = tok.lemma;
    f.display = tok.lemma;
    out.push_back(f);
  }

  for (const auto& [idx, antecedent] : resolved) {
    ConceptAnnotation f;
    f.kind = ConceptKind::Feature;
    f.span_start = f.span_end = f.trigger = idx;
    f.normalized = sentence.tokens[static_cast<size_t>(idx)].lemma;
    f.display = f.normalized;
    f.resolved_from = idx;
    f.antecedent = antecedent;
    out.push_back(f);
  }
  return out;
}

// ---- affordances ----

inline std::string normalize_affordance(const std::string& action,
                                        const std::optional<std::string>& receiver = {}) {
  if (action.empty()) fail("normalize_affordance: empty action word");
  std::string out = "ability to " + action;
  if (receiver && !receiver->empty()) out += " " + *receiver;
  return out;
}

// Strip a verb-derivation suffix from a noun/adjective lemma; returns the
// repaired action stem, or nullopt when the lemma bears no usable suffix.
inline std::optional<std::string> strip_affordance_suffix(const std::string& lemma,
                                                          const LexiconSet& lexicons) {
  for (const auto& s : lexicons.affordance_suffixes) {
    if (lemma.size() <= s.suffix.size() || !lemma.ends_with(s.suffix)) continue;
    std::string stem = lemma.substr(0, lemma.size() - s.suffix.size()) + s.replacement;
    while (!stem.empty() && stem.back() == '-') stem.pop_back();
    if (auto it = lexicons.suffix_repairs.find(stem); it != lexicons.suffix_repairs.end())
      stem = it->second;
    if (stem.size() < 2) return std::nullopt;
    return stem;
  }
  return std::nullopt;
}

namespace detail {

inline bool action_blacklisted(const std::string& lemma, const LexiconSet& lexicons) {
  return lexicons.stative_verbs.count(lemma) || lexicons.emotional_verbs.count(lemma) ||
         lexicons.linking_verbs.count(lemma) || lexicons.non_product_actions.count(lemma);
}

inline const std::set<std::string>& possessive_lemmas() {
  static const std::set<std::string> kPoss{"my", "your", "his", "her", "our", "their"};
  return kPoss;
}

inline const std::set<std::string>& particle_lemmas() {
  static const std::set<std::string> kParticles{"up", "down", "off", "out", "away"};
  return kParticles;
}

struct Receiver {
  int start = -1, end = -1, head = -1;
  std::string text;
};

// The object slot: the nearest following noun chunk (or third-person
// pronoun) before a preposition, verb, or clause break. Articles,
// possessives and adverbs are transparent; "of" complements extend the
// receiver; a trailing verb particle is absorbed ("keep husband up").
inline std::optional<Receiver> find_receiver(const Sentence& s, int action,
                                             const std::vector<Chunk>& chunks) {
  const auto& toks = s.tokens;
  const int n = static_cast<int>(toks.size());
  int pos = action + 1;
  while (pos < n) {
    const Token& tok = toks[static_cast<size_t>(pos)];
    if (tok.is_article || tok.pos == Pos::Adv || possessive_lemmas().count(tok.lemma)) {
      ++pos;
      continue;
    }
    break;
  }
  if (pos >= n) return std::nullopt;
  const Token& tok = toks[static_cast<size_t>(pos)];

  Receiver r;
  if (tok.pos == Pos::Pron && resolvable_pronouns().count(tok.lemma)) {
    r.start = r.end = r.head = pos;
    r.text = tok.lemma;
  } else {
    const Chunk* c = nullptr;
    for (const auto& ch : chunks)
      if (ch.start == pos) c = &ch;
    if (!c) return std::nullopt;
    r.start = c->start;
    r.end = c->end;
    r.head = c->head;
    // extend across "of" complements (any head, adjectives included in text)
    while (true) {
      int u = r.end + 1;
      if (u >= n || toks[static_cast<size_t>(u)].pos != Pos::Prep ||
          toks[static_cast<size_t>(u)].lemma != "of")
        break;
      const Chunk* next = nullptr;
      for (const auto& ch : chunks) {
        if (ch.start <= u) continue;
        bool contiguous = true;
        for (int k = u + 1; k < ch.start; ++k) {
          Pos p = toks[static_cast<size_t>(k)].pos;
          if (!toks[static_cast<size_t>(k)].is_article && p != Pos::Adj) contiguous = false;
        }
        if (contiguous) next = &ch;
        break;
      }
      if (!next) break;
      r.end = next->end;
      r.head = next->head;
    }
    r.text = normalized_join(s, r.start, r.end);
  }
  int v = r.end + 1;
  if (v < n && toks[static_cast<size_t>(v)].pos == Pos::Adv &&
      particle_lemmas().count(toks[static_cast<size_t>(v)].lemma)) {
    r.end = v;
    r.text = r.text.empty() ? toks[static_cast<size_t>(v)].lemma
                            : r.text + " " + toks[static_cast<size_t>(v)].surface;
  }
  return r;
}

}  // namespace detail

// Action verbs outside the stative/emotional/linking/non-product lists,
// suffix-derived action nouns and adjectives, and listed deverbal nouns.
inline std::vector<ConceptAnnotation> extract_affordances(const Sentence& sentence,
                                                          const LexiconSet& lexicons) {
  std::vector<ConceptAnnotation> out;
  auto chunks = find_chunks(sentence, lexicons);

  for (const Token& tok : sentence.tokens) {
    std::string action;
    bool suffix_derived = false, noun_as_action = false;
    if (tok.pos == Pos::Verb) {
      if (detail::action_blacklisted(tok.lemma, lexicons)) continue;
      action = tok.lemma;
    } else if (tok.pos == Pos::Noun || tok.pos == Pos::Adj) {
      if (auto stem = strip_affordance_suffix(tok.lemma, lexicons)) {
        if (detail::action_blacklisted(*stem, lexicons)) continue;
        action = *stem;
        suffix_derived = true;
      } else if (tok.pos == Pos::Noun && lexicons.action_nouns.count(tok.lemma)) {
        if (detail::action_blacklisted(tok.lemma, lexicons)) continue;
        action = tok.lemma;
        noun_as_action = true;
      } else {
        continue;
      }
    } else {
      continue;
    }

    ConceptAnnotation a;
    a.kind = ConceptKind::Affordance;
    a.trigger = tok.index;
    a.span_start = a.span_end = tok.index;
    a.display = action;
    a.suffix_derived = suffix_derived;
    a.noun_as_action = noun_as_action;
    std::optional<std::string> receiver_text;
    if (auto r = detail::find_receiver(sentence, tok.index, chunks)) {
      receiver_text = r->text;
      a.span_end = r->end;
      a.receiver_head = r->head;
    }
    a.normalized = normalize_affordance(action, receiver_text);
    out.push_back(std::move(a));
  }
  return out;
}

// ---- emotions ----

// Emotion-lexicon words with a human reference inside the window.
inline std::vector<ConceptAnnotation> extract_emotions(const Sentence& sentence,
                                                       const LexiconSet& lexicons,
                                                       int window = 3) {
  std::vector<ConceptAnnotation> out;
  for (const Token& tok : sentence.tokens) {
    if (tok.pos != Pos::Adj && tok.pos != Pos::Verb && tok.pos != Pos::Noun) continue;
    if (!lexicons.emotion_words.count(tok.lemma)) continue;
    bool near_human = false;
    for (const Token& other : sentence.tokens) {
      if (other.index == tok.index) continue;
      if (lexicons.human_refs.count(other.lemma) &&
          token_distance(sentence, tok.index, other.index) <= window) {
        near_human = true;
        break;
      }
    }
    if (!near_human) continue;
    ConceptAnnotation e;
    e.kind = ConceptKind::Emotion;
    e.span_start = e.span_end = e.trigger = tok.index;
    e.normalized = tok.surface;
    e.display = tok.surface;
    out.push_back(std::move(e));
  }
  return out;
}

// ---- perceptions ----

namespace detail {

inline int span_distance(const Sentence& s, int trigger, int start, int end) {
  int best = token_distance(s, trigger, start);
  for (int k = start + 1; k <= end; ++k)
    best = std::min(best, token_distance(s, trigger, k));
  return best;
}

}  // namespace detail

// Antonym-bearing adjectives near a feature (falling back to an affordance
// across a linking verb), antonym-bearing adverbs near an affordance, and
// negation tokens scoping over affordance actions. Adjectives inside a
// proper-noun chunk never qualify. Degree adverbs are absorbed into the
// span; an adjective modifying the quantity part of a quantity-of chunk
// reads as "<adj> <quantity noun>" targeting that chunk's feature.
inline std::vector<ConceptAnnotation> extract_perceptions(
    const Sentence& sentence, const std::vector<ConceptAnnotation>& features,
    const std::vector<ConceptAnnotation>& affordances, const LexiconSet& lexicons,
    int window = 3, const std::set<int>& claimed = {}) {
  std::vector<ConceptAnnotation> out;
  auto chunks = find_chunks(sentence, lexicons);
  const auto& toks = sentence.tokens;
  const int n = static_cast<int>(toks.size());

  auto inside_propn_chunk = [&](int idx) {
    for (const auto& ch : chunks)
      if (ch.propn_head && ch.start <= idx && idx <= ch.end) return true;
    return false;
  };

  auto absorb_degree = [&](int start) {
    while (start > 0 && toks[static_cast<size_t>(start - 1)].pos == Pos::Adv &&
           lexicons.degree_adverbs.count(toks[static_cast<size_t>(start - 1)].lemma))
      --start;
    return start;
  };

  for (const Token& tok : toks) {
    if (claimed.count(tok.index)) continue;

    if (tok.pos == Pos::Neg) {
      // negation scopes over the nearest affordance action and propagates
      // across coordination: "without killing my eyes or keeping ... up"
      int best = -1, best_dist = window + 1;
      for (size_t i = 0; i < affordances.size(); ++i) {
        int d = token_distance(sentence, tok.index, affordances[i].trigger);
        if (d <= window && (best < 0 || d < best_dist ||
                            (d == best_dist && affordances[i].trigger <
                                                   affordances[static_cast<size_t>(best)].trigger))) {
          best = static_cast<int>(i);
          best_dist = d;
        }
      }
      if (best < 0) continue;
      std::vector<int> targets{best};
      bool conj_seen = false;
      for (int j = affordances[static_cast<size_t>(best)].trigger + 1; j < n; ++j) {
        const Token& t = toks[static_cast<size_t>(j)];
        if (t.pos == Pos::Other && (t.lemma == "or" || t.lemma == "and")) {
          conj_seen = true;
          continue;
        }
        if (t.pos == Pos::Verb) {
          int hit = -1;
          for (size_t i = 0; i < affordances.size(); ++i)
            if (affordances[i].trigger == j) hit = static_cast<int>(i);
          if (hit >= 0 && conj_seen) {
            targets.push_back(hit);
            conj_seen = false;
            continue;
          }
          break;
        }
        if (t.pos == Pos::Pron || t.pos == Pos::Noun || t.pos == Pos::Propn ||
            t.pos == Pos::Det || t.pos == Pos::Adj || t.pos == Pos::Adv || t.pos == Pos::Num)
          continue;
        break;
      }
      for (int idx : targets) {
        ConceptAnnotation p;
        p.kind = ConceptKind::Perception;
        p.span_start = p.span_end = p.trigger = tok.index;
        p.normalized = "not";
        p.display = "not";
        p.links.push_back({"target", ConceptKind::Affordance, idx,
                           affordances[static_cast<size_t>(idx)].display});
        out.push_back(std::move(p));
      }
      continue;
    }

    if (tok.pos != Pos::Adj && tok.pos != Pos::Adv) continue;
    if (!lexicons.has_antonym(tok.lemma)) continue;
    if (tok.pos == Pos::Adj && inside_propn_chunk(tok.index)) continue;

    if (tok.pos == Pos::Adj) {
      // adjective heading the quantity part of a merged chunk
      const ConceptAnnotation* qf = nullptr;
      int qf_ordinal = -1;
      for (size_t i = 0; i < features.size(); ++i) {
        const auto& f = features[i];
        if (f.quantity_head >= 0 && f.span_start <= tok.index && tok.index < f.quantity_head) {
          qf = &f;
          qf_ordinal = static_cast<int>(i);
          break;
        }
      }
      if (qf) {
        ConceptAnnotation p;
        p.kind = ConceptKind::Perception;
        p.trigger = tok.index;
        p.span_start = absorb_degree(tok.index);
        p.span_end = qf->quantity_head;
        p.normalized = normalized_join(sentence, p.span_start, p.span_end);
        p.display = p.normalized;
        p.links.push_back({"target", ConceptKind::Feature, qf_ordinal, qf->display});
        out.push_back(std::move(p));
        continue;
      }
    }

    // nearest target: features for adjectives (affordance fallback), and
    // affordances only for adverbs
    struct Candidate {
      int dist;
      int is_affordance;
      int span_len;
      int span_start;
      int ordinal;
      ConceptKind kind;
      std::string display;
    };
    std::optional<Candidate> best;
    auto consider = [&](Candidate c) {
      if (c.dist > window) return;
      if (!best || std::tie(c.dist, c.is_affordance, c.span_len, c.span_start, c.ordinal) <
                       std::tie(best->dist, best->is_affordance, best->span_len,
                                best->span_start, best->ordinal))
        best = c;
    };
    if (tok.pos == Pos::Adj) {
      for (size_t i = 0; i < features.size(); ++i) {
        const auto& f = features[i];
        consider({detail::span_distance(sentence, tok.index, f.span_start, f.span_end), 0,
                  f.span_end - f.span_start, f.span_start, static_cast<int>(i),
                  ConceptKind::Feature, f.display});
      }
    }
    for (size_t i = 0; i < affordances.size(); ++i) {
      const auto& a = affordances[i];
      consider({token_distance(sentence, tok.index, a.trigger), 1, 0, a.trigger,
                static_cast<int>(i), ConceptKind::Affordance, a.display});
    }
    if (!best) continue;

    ConceptAnnotation p;
    p.kind = ConceptKind::Perception;
    p.trigger = tok.index;
    p.span_start = absorb_degree(tok.index);
    p.span_end = tok.index;
    p.normalized = normalized_join(sentence, p.span_start, p.span_end);
    p.display = p.normalized;
    p.links.push_back({"target", best->kind, best->ordinal, best->display});
    out.push_back(std::move(p));
  }
  return out;
}

// ---- usage conditions ----

// Place-prepositional phrases anchored to an affordance action inside the
// window. Consecutive place phrases chain into one condition ("in bed at
// night"); a bare place word extends the chain ("in the sun outside").
inline std::vector<ConceptAnnotation> extract_usage_conditions(
    const Sentence& sentence, const std::vector<ConceptAnnotation>& affordances,
    const LexiconSet& lexicons, int window = 3) {
  std::vector<ConceptAnnotation> out;
  auto chunks = find_chunks(sentence, lexicons);
  const auto& toks = sentence.tokens;
  const int n = static_cast<int>(toks.size());
  int consumed_to = -1;

  auto chunk_starting_at = [&](int pos) -> const Chunk* {
    for (const auto& ch : chunks)
      if (ch.start == pos) return &ch;
    return nullptr;
  };

  for (int i = 0; i < n; ++i) {
    if (i <= consumed_to) continue;
    const Token& tok = toks[static_cast<size_t>(i)];
    if (tok.pos != Pos::Prep || !lexicons.place_prepositions.count(tok.lemma)) continue;
    int p = i + 1;
    while (p < n && toks[static_cast<size_t>(p)].is_article) ++p;
    const Chunk* c = p < n ? chunk_starting_at(p) : nullptr;
    if (!c) continue;
    int end = c->end;
    while (true) {
      int t = end + 1;
      if (t >= n || !lexicons.place_prepositions.count(toks[static_cast<size_t>(t)].lemma))
        break;
      int q = t + 1;
      while (q < n && toks[static_cast<size_t>(q)].is_article) ++q;
      const Chunk* d = q < n ? chunk_starting_at(q) : nullptr;
      end = d ? d->end : t;
    }
    consumed_to = end;

    int best = -1, best_dist = window + 1;
    for (size_t a = 0; a < affordances.size(); ++a) {
      int d = token_distance(sentence, i, affordances[a].trigger);
      if (d <= window &&
          (best < 0 || d < best_dist ||
           (d == best_dist &&
            affordances[a].trigger < affordances[static_cast<size_t>(best)].trigger))) {
        best = static_cast<int>(a);
        best_dist = d;
      }
    }
    if (best < 0) continue;

    ConceptAnnotation u;
    u.kind = ConceptKind::UsageCondition;
    u.span_start = i;
    u.span_end = end;
    u.trigger = i;
    u.normalized = normalized_join(sentence, i, end);
    u.display = u.normalized;
    u.links.push_back({"modifies", ConceptKind::Affordance, best,
                       affordances[static_cast<size_t>(best)].display});
    out.push_back(std::move(u));
  }
  return out;
}

// ---- orchestration ----

namespace detail {

inline int kind_precedence(ConceptKind k) {
  switch (k) {
    case ConceptKind::Emotion: return 4;
    case ConceptKind::Perception: return 3;
    case ConceptKind::Affordance: return 2;
    case ConceptKind::Feature: return 1;
    case ConceptKind::UsageCondition: return 0;
  }
  return 0;
}

}  // namespace detail

// Runs the extractors in order, enforces kind exclusivity on trigger tokens
// (EMOTION > PERCEPTION > AFFORDANCE > FEATURE), prunes annotations whose
// link target lost, and emits a deterministically sorted summary.
inline SentenceSummary summarize_sentence(const Sentence& sentence,
                                          const SentenceSummary* context,
                                          const LexiconSet& lexicons,
                                          const ExtractConfig& config,
                                          const std::map<std::string, int>& noun_freq) {
  auto resolved = resolve_pronouns(sentence, context, lexicons, noun_freq, config.min_freq);
  auto features =
      extract_features(sentence, lexicons, noun_freq, config.min_freq, resolved, config.window);
  auto affordances = extract_affordances(sentence, lexicons);
  auto emotions = extract_emotions(sentence, lexicons, config.window);
  std::set<int> claimed;
  for (const auto& e : emotions) claimed.insert(e.trigger);
  auto perceptions =
      extract_perceptions(sentence, features, affordances, lexicons, config.window, claimed);
  auto usage = extract_usage_conditions(sentence, affordances, lexicons, config.window);

  // receiver links: affordance receiver head covered by a feature
  for (auto& a : affordances) {
    if (a.receiver_head < 0) continue;
    for (size_t i = 0; i < features.size(); ++i) {
      if (features[i].trigger == a.receiver_head) {
        a.links.push_back(
            {"receiver", ConceptKind::Feature, static_cast<int>(i), features[i].display});
        break;
      }
    }
  }

  // combine with working ids = (kind, input ordinal)
  struct Working {
    ConceptAnnotation ann;
    ConceptKind kind;
    int ordinal;
    bool alive = true;
  };
  std::vector<Working> all;
  auto add_all = [&](std::vector<ConceptAnnotation>& v, ConceptKind k) {
    for (size_t i = 0; i < v.size(); ++i) all.push_back({std::move(v[i]), k, static_cast<int>(i)});
  };
  add_all(features, ConceptKind::Feature);
  add_all(affordances, ConceptKind::Affordance);
  add_all(emotions, ConceptKind::Emotion);
  add_all(perceptions, ConceptKind::Perception);
  add_all(usage, ConceptKind::UsageCondition);

  // trigger exclusivity: per token, only the highest-precedence kind survives
  std::map<int, int> winner;  // trigger -> precedence
  for (const auto& w : all) {
    int p = detail::kind_precedence(w.ann.kind);
    auto [it, inserted] = winner.emplace(w.ann.trigger, p);
    if (!inserted) it->second = std::max(it->second, p);
  }
  for (auto& w : all)
    if (detail::kind_precedence(w.ann.kind) != winner[w.ann.trigger]) w.alive = false;

  // cascade: drop annotations whose required target is gone, detach
  // optional links to dead targets
  auto target_alive = [&](const Link& l) {
    for (const auto& w : all)
      if (w.kind == l.kind && w.ordinal == l.ordinal) return w.alive;
    return false;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& w : all) {
      if (!w.alive) continue;
      for (auto it = w.ann.links.begin(); it != w.ann.links.end();) {
        if (target_alive(*it)) {
          ++it;
          continue;
        }
        if (it->role == "target" || it->role == "modifies") {
          w.alive = false;
          changed = true;
          break;
        }
        it = w.ann.links.erase(it);
        changed = true;
      }
    }
  }

  // sort survivors and remap links to per-kind ordinals in the final order
  std::vector<const Working*> alive;
  for (const auto& w : all)
    if (w.alive) alive.push_back(&w);
  std::stable_sort(alive.begin(), alive.end(), [](const Working* a, const Working* b) {
    return std::tie(a->ann.kind, a->ann.span_start, a->ann.span_end, a->ann.normalized) <
           std::tie(b->ann.kind, b->ann.span_start, b->ann.span_end, b->ann.normalized);
  });
  std::map<std::pair<int, int>, int> final_ordinal;  // (kind, input ordinal) -> ordinal
  std::map<ConceptKind, int> counters;
  for (const Working* w : alive)
    final_ordinal[{static_cast<int>(w->kind), w->ordinal}] = counters[w->kind]++;

  SentenceSummary summary;
  summary.review_id = sentence.review_id;
  summary.sentence_index = sentence.index;
  summary.text = sentence.text;
  for (const Working* w : alive) {
    ConceptAnnotation ann = w->ann;
    for (auto& l : ann.links)
      l.ordinal = final_ordinal.at({static_cast<int>(l.kind), l.ordinal});
    summary.annotations.push_back(std::move(ann));
  }
  return summary;
}

struct CorpusSummary {
  std::vector<SentenceSummary> sentences;
  std::map<std::string, int> noun_freq;
  ExtractConfig config;
};

inline bool is_interrogative(const Sentence& s) {
  for (auto it = s.tokens.rbegin(); it != s.tokens.rend(); ++it) {
    if (it->surface == "?") return true;
    if (it->pos != Pos::Other) return false;
  }
  return false;
}

inline std::map<std::string, int> count_noun_frequencies(const std::vector<Review>& reviews,
                                                         bool filter_interrogative = false) {
  std::map<std::string, int> freq;
  for (const auto& r : reviews)
    for (const auto& s : r.sentences) {
      if (filter_interrogative && is_interrogative(s)) continue;
      for (const auto& t : s.tokens)
        if (t.pos == Pos::Noun || t.pos == Pos::Propn) ++freq[t.lemma];
    }
  return freq;
}

inline CorpusSummary summarize_corpus(const std::vector<Review>& reviews,
                                      const LexiconSet& lexicons, const ExtractConfig& config,
                                      bool filter_interrogative = false) {
  CorpusSummary out;
  out.config = config;
  out.noun_freq = count_noun_frequencies(reviews, filter_interrogative);
  // global sentence numbers are corpus positions, so standoff output stays
  // aligned with the corpus file even when sentences are filtered out
  int global = 0;
  for (const auto& review : reviews) {
    SentenceSummary previous;
    bool has_previous = false;
    for (const auto& sentence : review.sentences) {
      ++global;
      if (filter_interrogative && is_interrogative(sentence)) continue;
      SentenceSummary s = summarize_sentence(sentence, has_previous ? &previous : nullptr,
                                             lexicons, config, out.noun_freq);
      s.global_index = global;
      previous = s;
      has_previous = true;
      out.sentences.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace revmine
