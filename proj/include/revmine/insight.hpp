#pragma once
// Aggregation over sentence summaries: descriptive statistics and the
// sentence-level co-occurrence graph with DOT/CSV exports.

#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "revmine/extract.hpp"

namespace revmine {

// Node identity is (kind, case-folded normalized form). Node weight counts
// sentences containing the concept; edge weight counts sentences containing
// both endpoints. Duplicates within one sentence count once.
struct CooccurrenceGraph {
  using Node = std::pair<ConceptKind, std::string>;

  std::map<Node, int> nodes;
  std::map<std::pair<Node, Node>, int> edges;  // key pairs stored with first < second

  bool operator==(const CooccurrenceGraph&) const = default;
};

inline CooccurrenceGraph build_graph(const std::vector<SentenceSummary>& summaries) {
  CooccurrenceGraph g;
  for (const auto& s : summaries) {
    std::set<CooccurrenceGraph::Node> present;
    for (const auto& a : s.annotations) present.insert({a.kind, to_lower(a.normalized)});
    for (const auto& node : present) ++g.nodes[node];
    for (auto it = present.begin(); it != present.end(); ++it)
      for (auto jt = std::next(it); jt != present.end(); ++jt)
        ++g.edges[{*it, *jt}];
  }
  return g;
}

// Merging partial graphs sums weights; associative and commutative.
inline CooccurrenceGraph merge_graphs(const CooccurrenceGraph& a, const CooccurrenceGraph& b) {
  CooccurrenceGraph out = a;
  for (const auto& [node, w] : b.nodes) out.nodes[node] += w;
  for (const auto& [edge, w] : b.edges) out.edges[edge] += w;
  return out;
}

inline std::string node_key(const CooccurrenceGraph::Node& n) {
  return to_lower(to_string(n.first)) + ":" + n.second;
}

inline CooccurrenceGraph::Node parse_node_key(const std::string& key) {
  auto colon = key.find(':');
  if (colon == std::string::npos) fail("bad node key: ", key);
  std::string kind_name = key.substr(0, colon);
  std::transform(kind_name.begin(), kind_name.end(), kind_name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  auto kind = kind_from_string(kind_name);
  if (!kind) fail("bad node kind in key: ", key);
  return {*kind, key.substr(colon + 1)};
}

inline void export_graph_csv(const CooccurrenceGraph& g, std::ostream& out) {
  out << "source,target,weight\n";
  for (const auto& [edge, w] : g.edges)
    out << node_key(edge.first) << "," << node_key(edge.second) << "," << w << "\n";
}

inline std::map<std::pair<std::string, std::string>, int> import_edge_csv(std::istream& in) {
  std::map<std::pair<std::string, std::string>, int> edges;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (trim(line).empty()) continue;
    auto fields = split(line, ',');
    if (fields.size() != 3) fail("bad edge csv line: ", line);
    edges[{fields[0], fields[1]}] = std::stoi(fields[2]);
  }
  return edges;
}

inline void export_graph_dot(const CooccurrenceGraph& g, std::ostream& out) {
  auto escape = [](const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '"' || c == '\\') r += '\\';
      r += c;
    }
    return r;
  };
  std::map<CooccurrenceGraph::Node, int> ids;
  int next = 0;
  for (const auto& [node, w] : g.nodes) ids[node] = next++;
  out << "graph cooccurrence {\n";
  std::ostringstream num;
  num << std::fixed << std::setprecision(2);
  for (const auto& [node, w] : g.nodes) {
    num.str("");
    num << 0.5 * w;
    out << "  n" << ids[node] << " [label=\"" << escape(node.second) << "\", kind=\""
        << to_lower(to_string(node.first)) << "\", weight=" << w << ", width=" << num.str()
        << "];\n";
  }
  for (const auto& [edge, w] : g.edges) {
    num.str("");
    num << 1.0 * w;
    out << "  n" << ids[edge.first] << " -- n" << ids[edge.second] << " [weight=" << w
        << ", penwidth=" << num.str() << "];\n";
  }
  out << "}\n";
}

inline void export_graph(const CooccurrenceGraph& g, const std::string& format,
                         std::ostream& out) {
  if (format == "dot") export_graph_dot(g, out);
  else if (format == "csv" || format == "edge-csv") export_graph_csv(g, out);
  else fail("unknown graph format: ", format, " (want dot|csv)");
}

// ---- descriptive statistics ----

struct KindStats {
  long annotations = 0;      // raw annotation count
  long distinct_forms = 0;   // distinct normalized forms corpus-wide
  long mentions = 0;         // sentence-level occurrences of distinct items
  bool operator==(const KindStats&) const = default;
};

struct ConceptStats {
  std::map<ConceptKind, KindStats> per_kind;
  std::map<std::string, std::map<ConceptKind, long>> per_review;  // annotation counts
  long total_annotations = 0;
  long total_sentences = 0;
};

inline std::string mention_key(const ConceptAnnotation& a) {
  std::string target;
  for (const auto& l : a.links)
    if (l.role == "target" || l.role == "modifies") target = to_lower(l.display);
  return to_lower(a.normalized) + "\x1f" + target;
}

inline ConceptStats stats(const std::vector<SentenceSummary>& summaries) {
  ConceptStats st;
  for (ConceptKind k : kAllKinds) st.per_kind[k] = KindStats{};
  std::map<ConceptKind, std::set<std::string>> forms;
  st.total_sentences = static_cast<long>(summaries.size());
  for (const auto& s : summaries) {
    std::map<ConceptKind, std::set<std::string>> sentence_items;
    for (const auto& a : s.annotations) {
      ++st.per_kind[a.kind].annotations;
      ++st.per_review[s.review_id][a.kind];
      ++st.total_annotations;
      forms[a.kind].insert(to_lower(a.normalized));
      sentence_items[a.kind].insert(mention_key(a));
    }
    for (const auto& [kind, items] : sentence_items)
      st.per_kind[kind].mentions += static_cast<long>(items.size());
  }
  for (ConceptKind k : kAllKinds)
    st.per_kind[k].distinct_forms = static_cast<long>(forms[k].size());
  return st;
}

inline nlohmann::ordered_json stats_to_json(const ConceptStats& st) {
  nlohmann::ordered_json j;
  j["sentences"] = st.total_sentences;
  j["total_annotations"] = st.total_annotations;
  nlohmann::ordered_json kinds;
  for (ConceptKind k : kAllKinds) {
    const auto& ks = st.per_kind.at(k);
    kinds[to_string(k)] = {{"annotations", ks.annotations},
                           {"distinct_forms", ks.distinct_forms},
                           {"mentions", ks.mentions}};
  }
  j["per_kind"] = kinds;
  nlohmann::ordered_json reviews;
  for (const auto& [rid, counts] : st.per_review) {
    nlohmann::ordered_json rc;
    for (ConceptKind k : kAllKinds) {
      auto it = counts.find(k);
      rc[to_string(k)] = it == counts.end() ? 0 : it->second;
    }
    reviews[rid] = rc;
  }
  j["per_review"] = reviews;
  return j;
}

inline void render_stats_table(const ConceptStats& st, std::ostream& out) {
  out << std::left << std::setw(17) << "kind" << std::right << std::setw(12) << "annotations"
      << std::setw(10) << "distinct" << std::setw(10) << "mentions" << "\n";
  for (ConceptKind k : kAllKinds) {
    const auto& ks = st.per_kind.at(k);
    out << std::left << std::setw(17) << to_string(k) << std::right << std::setw(12)
        << ks.annotations << std::setw(10) << ks.distinct_forms << std::setw(10) << ks.mentions
        << "\n";
  }
  out << std::left << std::setw(17) << "TOTAL" << std::right << std::setw(12)
      << st.total_annotations << "\n\n";
  out << "per review (annotation counts)\n";
  for (const auto& [rid, counts] : st.per_review) {
    out << std::left << std::setw(17) << rid;
    for (ConceptKind k : kAllKinds) {
      auto it = counts.find(k);
      out << std::right << std::setw(8) << (it == counts.end() ? 0 : it->second);
    }
    out << "\n";
  }
}

}  // namespace revmine
