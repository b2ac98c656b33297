#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "revmine/insight.hpp"
#include "testutil.hpp"

using namespace revmine;

namespace {

SentenceSummary synthetic(int global, const std::vector<std::pair<ConceptKind, std::string>>& items) {
  SentenceSummary s;
  s.review_id = "r" + std::to_string(global);
  s.global_index = global;
  int pos = 0;
  for (const auto& [kind, normalized] : items) {
    ConceptAnnotation a;
    a.kind = kind;
    a.span_start = a.span_end = a.trigger = pos++;
    a.normalized = normalized;
    a.display = normalized;
    s.annotations.push_back(a);
  }
  return s;
}

std::vector<SentenceSummary> random_summaries(std::mt19937& rng, int max_sentences = 200) {
  static const std::vector<std::string> vocab{"screen", "read e-books", "brightness",
                                              "resolution", "in the dark", "not hurt eyes",
                                              "battery", "easy", "font", "excited"};
  std::uniform_int_distribution<int> n_sentences(0, max_sentences);
  std::uniform_int_distribution<int> n_items(0, 6);
  std::uniform_int_distribution<size_t> word(0, vocab.size() - 1);
  std::uniform_int_distribution<int> kind(0, 4);
  std::vector<SentenceSummary> out;
  int total = n_sentences(rng);
  for (int i = 0; i < total; ++i) {
    std::vector<std::pair<ConceptKind, std::string>> items;
    int m = n_items(rng);
    for (int j = 0; j < m; ++j)
      items.emplace_back(static_cast<ConceptKind>(kind(rng)), vocab[word(rng)]);
    out.push_back(synthetic(i + 1, items));
  }
  return out;
}

// brute-force oracle: recount node and edge weights with an independent
// dedupe strategy (sorted vectors instead of sets)
CooccurrenceGraph brute_force_graph(const std::vector<SentenceSummary>& summaries) {
  CooccurrenceGraph g;
  for (const auto& s : summaries) {
    std::vector<CooccurrenceGraph::Node> concepts;
    for (const auto& a : s.annotations) concepts.push_back({a.kind, to_lower(a.normalized)});
    std::sort(concepts.begin(), concepts.end());
    concepts.erase(std::unique(concepts.begin(), concepts.end()), concepts.end());
    for (size_t i = 0; i < concepts.size(); ++i) {
      ++g.nodes[concepts[i]];
      for (size_t j = i + 1; j < concepts.size(); ++j) ++g.edges[{concepts[i], concepts[j]}];
    }
  }
  return g;
}

}  // namespace

TEST_CASE("edge weights rank correlations: resolution over brightness") {
  std::vector<SentenceSummary> summaries{
      synthetic(1, {{ConceptKind::Affordance, "read e-books"}, {ConceptKind::Feature, "brightness"}}),
      synthetic(2, {{ConceptKind::Affordance, "read e-books"}, {ConceptKind::Feature, "resolution"}}),
      synthetic(3, {{ConceptKind::Affordance, "read e-books"}, {ConceptKind::Feature, "resolution"}}),
  };
  auto g = build_graph(summaries);
  CooccurrenceGraph::Node read{ConceptKind::Affordance, "read e-books"};
  CooccurrenceGraph::Node bright{ConceptKind::Feature, "brightness"};
  CooccurrenceGraph::Node reso{ConceptKind::Feature, "resolution"};
  CHECK(g.nodes[read] == 3);
  CHECK(g.edges[{bright, read}] + g.edges[{read, bright}] == 1);
  CHECK(g.edges[{reso, read}] + g.edges[{read, reso}] == 2);
}

TEST_CASE("empty summary list yields an empty graph") {
  auto g = build_graph({});
  CHECK(g.nodes.empty());
  CHECK(g.edges.empty());
}

TEST_CASE("graph weights equal the brute-force pairwise counter") {
  std::mt19937 rng(20250809);
  for (int round = 0; round < 25; ++round) {
    auto summaries = random_summaries(rng);
    CHECK(build_graph(summaries) == brute_force_graph(summaries));
  }
}

TEST_CASE("duplicate concepts in one sentence count once") {
  auto s = synthetic(1, {{ConceptKind::Feature, "screen"}, {ConceptKind::Feature, "screen"}});
  auto g = build_graph({s});
  CooccurrenceGraph::Node screen{ConceptKind::Feature, "screen"};
  CHECK(g.nodes[screen] == 1);
  CHECK(g.edges.empty());
}

TEST_CASE("edge weight never exceeds either endpoint weight") {
  std::mt19937 rng(7);
  auto summaries = random_summaries(rng);
  auto g = build_graph(summaries);
  for (const auto& [edge, w] : g.edges) {
    CHECK(w <= g.nodes.at(edge.first));
    CHECK(w <= g.nodes.at(edge.second));
  }
}

TEST_CASE("build_graph is permutation invariant and merge matches single pass") {
  std::mt19937 rng(99);
  auto summaries = random_summaries(rng);
  auto g = build_graph(summaries);

  auto shuffled = summaries;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(build_graph(shuffled) == g);

  size_t half = summaries.size() / 2;
  std::vector<SentenceSummary> a(summaries.begin(), summaries.begin() + half);
  std::vector<SentenceSummary> b(summaries.begin() + half, summaries.end());
  CHECK(merge_graphs(build_graph(a), build_graph(b)) == g);
}

TEST_CASE("removing a sentence decreases affected node weights by one") {
  std::mt19937 rng(123);
  auto summaries = random_summaries(rng, 40);
  if (summaries.empty()) return;
  auto g = build_graph(summaries);
  auto removed = summaries.back();
  summaries.pop_back();
  auto g2 = build_graph(summaries);
  std::set<CooccurrenceGraph::Node> affected;
  for (const auto& a : removed.annotations) affected.insert({a.kind, to_lower(a.normalized)});
  for (const auto& node : affected) {
    int before = g.nodes.at(node);
    int after = g2.nodes.count(node) ? g2.nodes.at(node) : 0;
    CHECK(before - after == 1);
  }
}

TEST_CASE("csv export round-trips edge weights") {
  std::mt19937 rng(42);
  auto summaries = random_summaries(rng, 60);
  auto g = build_graph(summaries);
  std::ostringstream os;
  export_graph(g, "csv", os);
  std::istringstream is(os.str());
  auto edges = import_edge_csv(is);
  REQUIRE(edges.size() == g.edges.size());
  for (const auto& [edge, w] : g.edges) {
    auto key = std::make_pair(node_key(edge.first), node_key(edge.second));
    REQUIRE(edges.count(key));
    CHECK(edges.at(key) == w);
  }
}

TEST_CASE("dot export parses and re-imports to equal weights") {
  std::vector<SentenceSummary> summaries{
      synthetic(1, {{ConceptKind::Affordance, "read e-books"}, {ConceptKind::Feature, "brightness"}}),
      synthetic(2, {{ConceptKind::Affordance, "read e-books"}, {ConceptKind::Feature, "resolution"}}),
      synthetic(3, {{ConceptKind::Affordance, "read e-books"}, {ConceptKind::Feature, "resolution"},
                    {ConceptKind::UsageCondition, "in the dark"}}),
  };
  auto g = build_graph(summaries);
  std::ostringstream os;
  export_graph(g, "dot", os);
  std::string dot = os.str();
  REQUIRE(dot.starts_with("graph"));

  // minimal DOT reader: node lines carry label/kind/weight, edge lines n -- m
  std::map<std::string, CooccurrenceGraph::Node> by_id;
  std::map<CooccurrenceGraph::Node, int> node_weights;
  std::map<std::pair<CooccurrenceGraph::Node, CooccurrenceGraph::Node>, int> edge_weights;
  std::istringstream is(dot);
  std::string line;
  auto attr = [](const std::string& l, const std::string& key) {
    auto pos = l.find(key + "=");
    REQUIRE(pos != std::string::npos);
    pos += key.size() + 1;
    bool quoted = l[pos] == '"';
    if (quoted) ++pos;
    auto end = quoted ? l.find('"', pos) : l.find_first_of(",]", pos);
    return l.substr(pos, end - pos);
  };
  while (std::getline(is, line)) {
    if (line.find("--") != std::string::npos) {
      std::string lhs_raw = line.substr(0, line.find("--"));
      std::string rhs_raw =
          line.substr(line.find("--") + 2, line.find('[') - line.find("--") - 2);
      auto u = by_id.at(std::string(trim(lhs_raw)));
      auto v = by_id.at(std::string(trim(rhs_raw)));
      edge_weights[{u, v}] = std::stoi(attr(line, "weight"));
    } else if (line.find("label=") != std::string::npos) {
      auto id = std::string(trim(line.substr(0, line.find('['))));
      std::string kind_name = attr(line, "kind");
      std::transform(kind_name.begin(), kind_name.end(), kind_name.begin(),
                     [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
      auto kind = kind_from_string(kind_name);
      REQUIRE(kind.has_value());
      CooccurrenceGraph::Node node{*kind, attr(line, "label")};
      by_id[id] = node;
      node_weights[node] = std::stoi(attr(line, "weight"));
    }
  }
  CHECK(node_weights == g.nodes);
  CHECK(edge_weights == g.edges);
}

TEST_CASE("unknown export format is an error") {
  std::ostringstream os;
  CHECK_THROWS(export_graph({}, "svg", os));
}

TEST_CASE("stats counts annotations, distinct forms, and mentions") {
  std::vector<SentenceSummary> summaries{
      synthetic(1, {{ConceptKind::Feature, "screen"}}),
  };
  auto st = stats(summaries);
  CHECK(st.per_kind[ConceptKind::Feature].annotations == 1);
  CHECK(st.per_kind[ConceptKind::Affordance].annotations == 0);
  CHECK(st.total_annotations == 1);

  auto empty = stats({});
  for (ConceptKind k : kAllKinds) CHECK(empty.per_kind[k].annotations == 0);
}

TEST_CASE("stats per-review totals sum to the overall totals") {
  std::vector<SentenceSummary> summaries{
      synthetic(1, {{ConceptKind::Feature, "screen"}, {ConceptKind::Emotion, "excited"}}),
      synthetic(2, {{ConceptKind::Feature, "screen"}}),
      synthetic(3, {{ConceptKind::Affordance, "ability to read"}}),
  };
  auto st = stats(summaries);
  long sum = 0;
  for (const auto& [rid, counts] : st.per_review)
    for (const auto& [kind, c] : counts) sum += c;
  CHECK(sum == st.total_annotations);
}
