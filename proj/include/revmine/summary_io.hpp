#pragma once
// Serialization of sentence summaries: one JSON record per sentence, and the
// standoff annotation format consumed by the agreement module.

#include <ostream>

#include <json.hpp>

#include "revmine/extract.hpp"

namespace revmine {

using ordered_json = nlohmann::ordered_json;

inline const char* kind_field_name(ConceptKind k) {
  switch (k) {
    case ConceptKind::Feature: return "features";
    case ConceptKind::Affordance: return "affordances";
    case ConceptKind::Emotion: return "emotions";
    case ConceptKind::Perception: return "perceptions";
    case ConceptKind::UsageCondition: return "usage_conditions";
  }
  return "features";
}

inline ordered_json summary_to_json(const SentenceSummary& s) {
  ordered_json rec;
  rec["review"] = s.review_id;
  rec["sentence"] = s.sentence_index;
  rec["sid"] = "s" + std::to_string(s.global_index);
  rec["text"] = s.text;
  for (ConceptKind kind : kAllKinds) rec[kind_field_name(kind)] = ordered_json::array();
  std::map<ConceptKind, int> counters;
  for (const auto& a : s.annotations) {
    ordered_json j;
    j["id"] = annotation_id(a.kind, counters[a.kind]++);
    j["normalized"] = a.normalized;
    j["span"] = {a.span_start, a.span_end};
    j["trigger"] = a.trigger;
    if (!a.links.empty()) {
      ordered_json links = ordered_json::array();
      for (const auto& l : a.links) {
        ordered_json lj;
        lj["role"] = l.role;
        lj["to"] = annotation_id(l.kind, l.ordinal);
        lj["display"] = l.display;
        links.push_back(lj);
      }
      j["links"] = links;
    }
    if (a.resolved_from) {
      j["resolved_from"] = *a.resolved_from;
      j["antecedent"] = a.antecedent.value_or("");
    }
    std::vector<std::string> flags;
    if (a.noun_as_action) flags.push_back("noun_as_action");
    if (a.suffix_derived) flags.push_back("suffix_derived");
    if (!flags.empty()) j["flags"] = flags;
    rec[kind_field_name(a.kind)].push_back(j);
  }
  return rec;
}

inline void write_summaries_jsonl(const std::vector<SentenceSummary>& summaries,
                                  std::ostream& out) {
  for (const auto& s : summaries) out << summary_to_json(s).dump() << "\n";
}

// Standoff annotation lines:
//   id<TAB>KIND<TAB>s<sentence>:<start>-<end><TAB>normalized<TAB>key=value...
// Sentence numbers are global and 1-based. Ids are global per file.
inline void write_standoff(const std::vector<SentenceSummary>& summaries,
                           const std::string& corpus_fingerprint, std::ostream& out) {
  out << "#corpus " << corpus_fingerprint << "\n";
  int next_id = 0;
  std::vector<std::map<std::pair<int, int>, std::string>> ids(summaries.size());
  for (size_t si = 0; si < summaries.size(); ++si) {
    std::map<ConceptKind, int> counters;
    for (const auto& a : summaries[si].annotations) {
      int ordinal = counters[a.kind]++;
      ids[si][{static_cast<int>(a.kind), ordinal}] = "A" + std::to_string(++next_id);
    }
  }
  for (size_t si = 0; si < summaries.size(); ++si) {
    const auto& s = summaries[si];
    std::map<ConceptKind, int> counters;
    for (const auto& a : s.annotations) {
      int ordinal = counters[a.kind]++;
      out << ids[si].at({static_cast<int>(a.kind), ordinal}) << "\t" << to_string(a.kind)
          << "\ts" << s.global_index << ":" << a.span_start << "-" << a.span_end << "\t"
          << a.normalized;
      for (const auto& l : a.links) {
        auto it = ids[si].find({static_cast<int>(l.kind), l.ordinal});
        if (it != ids[si].end()) out << "\t" << l.role << "=" << it->second;
      }
      if (a.antecedent) out << "\tantecedent=" << *a.antecedent;
      if (a.noun_as_action) out << "\tflag=noun_as_action";
      out << "\n";
    }
  }
}

}  // namespace revmine
