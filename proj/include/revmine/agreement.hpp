#pragma once
// Multi-annotator agreement: standoff annotation files aligned to a tagged
// corpus, token-level rating matrices, Fleiss' kappa with the Landis-Koch
// interpretation scale, and a token-by-token disagreement report.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "revmine/core.hpp"
#include "revmine/corpus.hpp"

namespace revmine {

struct StandoffAnnotation {
  std::string id;
  ConceptKind kind = ConceptKind::Feature;
  int sentence = 0;  // global, 1-based
  int start = 0;
  int end = 0;
  std::string normalized;
  std::vector<std::pair<std::string, std::string>> attrs;
};

struct AnnotationSet {
  std::string path;
  std::optional<std::string> corpus_checksum;
  std::vector<StandoffAnnotation> annotations;
};

inline AnnotationSet load_annotations(const std::filesystem::path& path,
                                      const FlatCorpus& corpus) {
  std::ifstream in(path);
  if (!in) fail("cannot open annotation file: ", path.string());
  AnnotationSet set;
  set.path = path.string();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view v = trim(line);
    if (v.empty()) continue;
    if (v.starts_with("#corpus")) {
      auto fields = split(v, ' ');
      if (fields.size() >= 2) set.corpus_checksum = fields[1];
      continue;
    }
    if (v.front() == '#') continue;
    std::string where = path.filename().string() + ":" + std::to_string(lineno);
    auto fields = split(v, '\t');
    if (fields.size() < 4) fail(where, ": want id<TAB>KIND<TAB>s<N>:<a>-<b><TAB>normalized");
    StandoffAnnotation a;
    a.id = fields[0];
    auto kind = kind_from_string(fields[1]);
    if (!kind) fail(where, ": unknown concept kind '", fields[1], "'");
    a.kind = *kind;
    const std::string& ref = fields[2];
    size_t colon = ref.find(':'), dash = ref.find('-', colon);
    if (ref.empty() || ref[0] != 's' || colon == std::string::npos || dash == std::string::npos)
      fail(where, ": bad span reference '", ref, "'");
    try {
      a.sentence = std::stoi(ref.substr(1, colon - 1));
      a.start = std::stoi(ref.substr(colon + 1, dash - colon - 1));
      a.end = std::stoi(ref.substr(dash + 1));
    } catch (const std::exception&) {
      fail(where, ": bad span reference '", ref, "'");
    }
    a.normalized = fields[3];
    for (size_t i = 4; i < fields.size(); ++i) {
      auto eq = fields[i].find('=');
      if (eq == std::string::npos) fail(where, ": bad key=value field '", fields[i], "'");
      a.attrs.emplace_back(fields[i].substr(0, eq), fields[i].substr(eq + 1));
    }
    // validate against the corpus
    if (a.sentence < 1 || a.sentence > static_cast<int>(corpus.sentences.size()))
      fail("annotation ", a.id, ": sentence s", a.sentence, " out of range");
    int ntok = static_cast<int>(corpus.sentences[static_cast<size_t>(a.sentence - 1)]->tokens.size());
    if (a.start < 0 || a.end >= ntok || a.start > a.end)
      fail("annotation ", a.id, ": span ", a.start, "-", a.end, " out of bounds for s",
           a.sentence, " (", ntok, " tokens)");
    set.annotations.push_back(std::move(a));
  }
  if (set.corpus_checksum && *set.corpus_checksum != corpus.fingerprint)
    fail(path.string(), ": annotation set was made for a different corpus (checksum ",
         *set.corpus_checksum, " != ", corpus.fingerprint, ")");
  return set;
}

// ---- rating matrices ----

enum class RatingMode { SixWay, ConceptBinary };

struct RatingMatrix {
  std::vector<std::string> categories;
  std::vector<std::vector<int>> counts;  // N rows, k columns; rows sum to n
  int raters = 0;

  long items() const { return static_cast<long>(counts.size()); }
};

namespace detail {

// Higher-precedence kinds win when one rater covers a token twice.
inline int rating_precedence(ConceptKind k) {
  switch (k) {
    case ConceptKind::Emotion: return 4;
    case ConceptKind::Perception: return 3;
    case ConceptKind::Affordance: return 2;
    case ConceptKind::Feature: return 1;
    case ConceptKind::UsageCondition: return 0;
  }
  return 0;
}

// Category index per token for one annotation set: 0..4 are the concept
// kinds in declaration order, 5 is NONE.
inline std::vector<std::vector<int>> categorize_tokens(const AnnotationSet& set,
                                                       const FlatCorpus& corpus) {
  std::vector<std::vector<int>> cats;
  cats.reserve(corpus.sentences.size());
  for (const auto* s : corpus.sentences) cats.emplace_back(s->tokens.size(), 5);
  for (const auto& a : set.annotations) {
    auto& row = cats[static_cast<size_t>(a.sentence - 1)];
    for (int t = a.start; t <= a.end; ++t) {
      int cur = row[static_cast<size_t>(t)];
      if (cur == 5 || rating_precedence(a.kind) >
                          rating_precedence(static_cast<ConceptKind>(cur)))
        row[static_cast<size_t>(t)] = static_cast<int>(a.kind);
    }
  }
  return cats;
}

}  // namespace detail

inline RatingMatrix to_rating_matrix(const std::vector<AnnotationSet>& sets,
                                     const FlatCorpus& corpus, RatingMode mode,
                                     ConceptKind binary_kind = ConceptKind::Feature) {
  if (sets.size() < 2) fail("need at least two annotation sets, got ", sets.size());
  for (const auto& set : sets)
    if (set.corpus_checksum && *set.corpus_checksum != corpus.fingerprint)
      fail(set.path, ": annotation set was made for a different corpus");

  RatingMatrix m;
  m.raters = static_cast<int>(sets.size());
  if (mode == RatingMode::SixWay) {
    for (ConceptKind k : kAllKinds) m.categories.emplace_back(to_string(k));
    m.categories.emplace_back("NONE");
  } else {
    m.categories = {to_string(binary_kind), std::string("NOT_") + to_string(binary_kind)};
  }

  std::vector<std::vector<std::vector<int>>> per_set;
  per_set.reserve(sets.size());
  for (const auto& set : sets) per_set.push_back(detail::categorize_tokens(set, corpus));

  for (size_t si = 0; si < corpus.sentences.size(); ++si) {
    for (size_t ti = 0; ti < corpus.sentences[si]->tokens.size(); ++ti) {
      std::vector<int> row(m.categories.size(), 0);
      for (const auto& cats : per_set) {
        int c = cats[si][ti];
        if (mode == RatingMode::SixWay) ++row[static_cast<size_t>(c)];
        else ++row[c == static_cast<int>(binary_kind) ? 0 : 1];
      }
      m.counts.push_back(std::move(row));
    }
  }
  return m;
}

// ---- Fleiss' kappa ----

struct FleissResult {
  double kappa = 0.0;
  double pr_a = 0.0;
  double pr_e = 0.0;
  bool degenerate = false;  // every rating fell in a single category
};

inline FleissResult fleiss_kappa(const RatingMatrix& m) {
  const long N = m.items();
  const int n = m.raters;
  const size_t k = m.categories.size();
  if (n < 2) fail("fleiss_kappa: need at least 2 raters, got ", n);
  if (N < 1) fail("fleiss_kappa: empty rating matrix");
  if (k < 2) fail("fleiss_kappa: need at least 2 categories");
  for (const auto& row : m.counts) {
    int sum = 0;
    for (int c : row) sum += c;
    if (sum != n) fail("fleiss_kappa: row sum ", sum, " != raters ", n);
  }

  std::vector<double> p(k, 0.0);
  for (const auto& row : m.counts)
    for (size_t j = 0; j < k; ++j) p[j] += row[j];
  for (size_t j = 0; j < k; ++j) p[j] /= static_cast<double>(N) * n;

  double pr_a = 0.0;
  for (const auto& row : m.counts) {
    double sq = 0.0;
    for (int c : row) sq += static_cast<double>(c) * c;
    pr_a += (sq - n) / (static_cast<double>(n) * (n - 1));
  }
  pr_a /= static_cast<double>(N);

  double pr_e = 0.0;
  for (size_t j = 0; j < k; ++j) pr_e += p[j] * p[j];

  FleissResult r;
  r.pr_a = pr_a;
  r.pr_e = pr_e;
  if (pr_e >= 1.0 - 1e-12) {
    // all ratings in one category: observed agreement is forced to 1
    r.kappa = 1.0;
    r.degenerate = true;
  } else {
    r.kappa = (pr_a - pr_e) / (1.0 - pr_e);
  }
  return r;
}

// ---- Landis-Koch interpretation ----

enum class AgreementLevel { Poor, Slight, Fair, Moderate, Substantial, Perfect };

inline const char* to_string(AgreementLevel level) {
  switch (level) {
    case AgreementLevel::Poor: return "Poor";
    case AgreementLevel::Slight: return "Slight";
    case AgreementLevel::Fair: return "Fair";
    case AgreementLevel::Moderate: return "Moderate";
    case AgreementLevel::Substantial: return "Substantial";
    case AgreementLevel::Perfect: return "Perfect";
  }
  return "Poor";
}

// Half-open bands with inclusive upper bounds; kappa above 1 is impossible.
inline AgreementLevel interpret(double kappa) {
  if (kappa > 1.0 + 1e-12) fail("kappa ", kappa, " exceeds 1");
  if (kappa <= 0.0) return AgreementLevel::Poor;
  if (kappa <= 0.20) return AgreementLevel::Slight;
  if (kappa <= 0.40) return AgreementLevel::Fair;
  if (kappa <= 0.60) return AgreementLevel::Moderate;
  if (kappa <= 0.80) return AgreementLevel::Substantial;
  return AgreementLevel::Perfect;
}

struct AgreementReport {
  FleissResult overall;
  AgreementLevel level = AgreementLevel::Poor;
  std::map<ConceptKind, std::pair<FleissResult, AgreementLevel>> per_concept;
};

inline AgreementReport build_report(const std::vector<AnnotationSet>& sets,
                                    const FlatCorpus& corpus) {
  AgreementReport report;
  report.overall = fleiss_kappa(to_rating_matrix(sets, corpus, RatingMode::SixWay));
  report.level = interpret(report.overall.kappa);
  for (ConceptKind k : kAllKinds) {
    auto res = fleiss_kappa(to_rating_matrix(sets, corpus, RatingMode::ConceptBinary, k));
    report.per_concept[k] = {res, interpret(res.kappa)};
  }
  return report;
}

inline nlohmann::ordered_json report_to_json(const AgreementReport& r) {
  nlohmann::ordered_json j;
  j["overall"] = {{"kappa", r.overall.kappa},
                  {"pr_a", r.overall.pr_a},
                  {"pr_e", r.overall.pr_e},
                  {"level", to_string(r.level)},
                  {"degenerate", r.overall.degenerate}};
  nlohmann::ordered_json per;
  for (const auto& [kind, entry] : r.per_concept)
    per[to_string(kind)] = {{"kappa", entry.first.kappa},
                            {"pr_a", entry.first.pr_a},
                            {"pr_e", entry.first.pr_e},
                            {"level", to_string(entry.second)},
                            {"degenerate", entry.first.degenerate}};
  j["per_concept"] = per;
  return j;
}

inline void render_report(const AgreementReport& r, std::ostream& out) {
  out << std::fixed << std::setprecision(4);
  out << "overall (six-way)  K=" << r.overall.kappa << "  Pr(a)=" << r.overall.pr_a
      << "  Pr(e)=" << r.overall.pr_e << "  level=" << to_string(r.level)
      << (r.overall.degenerate ? "  [degenerate: single category]" : "") << "\n";
  out << "per concept (binary)\n";
  for (const auto& [kind, entry] : r.per_concept) {
    out << "  " << std::left << std::setw(17) << to_string(kind) << std::right
        << " K=" << entry.first.kappa << "  level=" << to_string(entry.second)
        << (entry.first.degenerate ? "  [degenerate]" : "") << "\n";
  }
}

// ---- disagreement report ----

struct Disagreement {
  int sentence = 0;  // global, 1-based
  int token = 0;
  std::string surface;
  std::vector<std::string> categories;  // one per annotation set
  std::string sentence_text;
};

struct DisagreementReport {
  std::vector<Disagreement> entries;
  std::map<std::pair<std::string, std::string>, int> pair_counts;
};

inline DisagreementReport disagreement_report(const std::vector<AnnotationSet>& sets,
                                              const FlatCorpus& corpus) {
  if (sets.size() < 2) fail("need at least two annotation sets, got ", sets.size());
  std::vector<std::vector<std::vector<int>>> per_set;
  per_set.reserve(sets.size());
  for (const auto& set : sets) per_set.push_back(detail::categorize_tokens(set, corpus));

  auto cat_name = [](int c) {
    return c == 5 ? std::string("NONE") : std::string(to_string(static_cast<ConceptKind>(c)));
  };

  DisagreementReport report;
  for (size_t si = 0; si < corpus.sentences.size(); ++si) {
    for (size_t ti = 0; ti < corpus.sentences[si]->tokens.size(); ++ti) {
      bool differ = false;
      for (size_t r = 1; r < per_set.size(); ++r)
        if (per_set[r][si][ti] != per_set[0][si][ti]) differ = true;
      if (!differ) continue;
      Disagreement d;
      d.sentence = static_cast<int>(si) + 1;
      d.token = static_cast<int>(ti);
      d.surface = corpus.sentences[si]->tokens[ti].surface;
      for (const auto& cats : per_set) d.categories.push_back(cat_name(cats[si][ti]));
      d.sentence_text = corpus.sentences[si]->text;
      std::set<std::string> distinct(d.categories.begin(), d.categories.end());
      for (auto it = distinct.begin(); it != distinct.end(); ++it)
        for (auto jt = std::next(it); jt != distinct.end(); ++jt)
          ++report.pair_counts[{*it, *jt}];
      report.entries.push_back(std::move(d));
    }
  }
  return report;
}

inline nlohmann::ordered_json disagreement_to_json(const Disagreement& d) {
  nlohmann::ordered_json j;
  j["sid"] = "s" + std::to_string(d.sentence);
  j["token"] = d.token;
  j["surface"] = d.surface;
  j["categories"] = d.categories;
  j["text"] = d.sentence_text;
  return j;
}

inline void render_disagreements(const DisagreementReport& r, std::ostream& out) {
  for (const auto& d : r.entries) {
    out << "s" << d.sentence << ":" << d.token << "\t" << d.surface << "\t";
    for (size_t i = 0; i < d.categories.size(); ++i) {
      if (i) out << "|";
      out << d.categories[i];
    }
    out << "\t" << d.sentence_text << "\n";
  }
  out << "\ndisagreeing kind pairs\n";
  for (const auto& [pair, count] : r.pair_counts)
    out << "  " << pair.first << " / " << pair.second << ": " << count << "\n";
}

}  // namespace revmine
