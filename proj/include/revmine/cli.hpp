#pragma once
// Batch commands behind the command-line tool. Each run_* function does the
// work of one subcommand and returns a process exit code; the binary in
// tools/ only parses arguments. Outputs are byte-stable across runs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "revmine/agreement.hpp"
#include "revmine/corpus.hpp"
#include "revmine/extract.hpp"
#include "revmine/insight.hpp"
#include "revmine/lexicon.hpp"
#include "revmine/summary_io.hpp"

namespace revmine {

struct RunConfig {
  std::filesystem::path input;
  std::filesystem::path lexicon_dir;
  std::filesystem::path out_dir = "out";
  int window = 3;
  int min_freq = 3;
  bool tagged = false;
  bool filter_interrogative = false;
  unsigned seed = 0;
};

namespace detail {

inline std::string file_checksum(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a64_hex(buf.str());
}

inline std::vector<Review> load_input(const RunConfig& cfg, const LexiconSet& lexicons) {
  if (!std::filesystem::exists(cfg.input)) fail("input file not found: ", cfg.input.string());
  if (cfg.tagged) return load_tagged(cfg.input);
  auto reviews = load_reviews(cfg.input);
  for (auto& r : reviews) segment_and_tokenize(r, lexicons);
  return reviews;
}

inline nlohmann::ordered_json manifest_json(const RunConfig& cfg, const std::string& command,
                                            const std::string& corpus_fp) {
  nlohmann::ordered_json m;
  m["command"] = command;
  m["input"] = cfg.input.string();
  m["tagged"] = cfg.tagged;
  m["lexicons"] = cfg.lexicon_dir.string();
  m["window"] = cfg.window;
  m["min_freq"] = cfg.min_freq;
  m["filter_interrogative"] = cfg.filter_interrogative;
  m["seed"] = cfg.seed;
  m["out"] = cfg.out_dir.string();
  nlohmann::ordered_json sums;
  for (const auto& [list, file] : lexicon_filenames()) {
    auto p = cfg.lexicon_dir / file;
    if (std::filesystem::exists(p)) sums[file] = file_checksum(p);
  }
  m["lexicon_checksums"] = sums;
  m["corpus_fingerprint"] = corpus_fp;
  return m;
}

inline void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) fail("cannot write output file: ", p.string());
  out << content;
}

}  // namespace detail

inline int run_summarize(const RunConfig& cfg, std::ostream& log = std::cerr) {
  auto lexicons = load_lexicons(cfg.lexicon_dir);
  for (const auto& w : lexicons.warnings) log << "warning: " << w << "\n";
  auto reviews = detail::load_input(cfg, lexicons);
  ExtractConfig ec{cfg.window, cfg.min_freq};
  auto summary = summarize_corpus(reviews, lexicons, ec, cfg.filter_interrogative);
  auto fingerprint = corpus_fingerprint(reviews);

  std::filesystem::create_directories(cfg.out_dir);
  {
    std::ostringstream os;
    write_summaries_jsonl(summary.sentences, os);
    detail::write_file(cfg.out_dir / "summaries.jsonl", os.str());
  }
  {
    std::ostringstream os;
    write_standoff(summary.sentences, fingerprint, os);
    detail::write_file(cfg.out_dir / "annotations.ann", os.str());
  }
  auto st = stats(summary.sentences);
  detail::write_file(cfg.out_dir / "stats.json", stats_to_json(st).dump(2) + "\n");
  {
    std::ostringstream os;
    render_stats_table(st, os);
    detail::write_file(cfg.out_dir / "stats.txt", os.str());
  }
  detail::write_file(cfg.out_dir / "manifest.json",
                     detail::manifest_json(cfg, "summarize", fingerprint).dump(2) + "\n");
  return 0;
}

inline int run_stats(const RunConfig& cfg, std::ostream& out = std::cout,
                     std::ostream& log = std::cerr) {
  auto lexicons = load_lexicons(cfg.lexicon_dir);
  for (const auto& w : lexicons.warnings) log << "warning: " << w << "\n";
  auto reviews = detail::load_input(cfg, lexicons);
  ExtractConfig ec{cfg.window, cfg.min_freq};
  auto summary = summarize_corpus(reviews, lexicons, ec, cfg.filter_interrogative);
  render_stats_table(stats(summary.sentences), out);
  return 0;
}

inline int run_graph(const RunConfig& cfg, const std::string& format,
                     std::ostream& log = std::cerr) {
  if (format != "dot" && format != "csv")
    fail("unknown graph format: ", format, " (want dot|csv)");
  auto lexicons = load_lexicons(cfg.lexicon_dir);
  for (const auto& w : lexicons.warnings) log << "warning: " << w << "\n";
  auto reviews = detail::load_input(cfg, lexicons);
  ExtractConfig ec{cfg.window, cfg.min_freq};
  auto summary = summarize_corpus(reviews, lexicons, ec, cfg.filter_interrogative);
  auto graph = build_graph(summary.sentences);

  std::filesystem::create_directories(cfg.out_dir);
  std::ostringstream os;
  export_graph(graph, format, os);
  detail::write_file(cfg.out_dir / (format == "dot" ? "graph.dot" : "graph.csv"), os.str());
  detail::write_file(
      cfg.out_dir / "manifest.json",
      detail::manifest_json(cfg, "graph " + format, corpus_fingerprint(reviews)).dump(2) + "\n");
  return 0;
}

inline int run_kappa(const std::filesystem::path& corpus_path,
                     const std::vector<std::filesystem::path>& annotation_paths,
                     const std::string& mode, std::ostream& out = std::cout,
                     const std::filesystem::path& out_dir = {}) {
  if (annotation_paths.size() < 2)
    fail("kappa needs at least two annotation files, got ", annotation_paths.size());
  if (mode != "six-way" && mode != "per-concept")
    fail("unknown mode: ", mode, " (want six-way|per-concept)");
  auto reviews = load_tagged(corpus_path);
  auto corpus = FlatCorpus::from(reviews);
  std::vector<AnnotationSet> sets;
  for (const auto& p : annotation_paths) sets.push_back(load_annotations(p, corpus));

  auto report = build_report(sets, corpus);
  if (mode == "six-way") {
    render_report(report, out);
  } else {
    out << std::fixed << std::setprecision(4) << "per concept (binary)\n";
    for (const auto& [kind, entry] : report.per_concept)
      out << "  " << std::left << std::setw(17) << to_string(kind) << std::right
          << " K=" << entry.first.kappa << "  Pr(a)=" << entry.first.pr_a
          << "  Pr(e)=" << entry.first.pr_e << "  level=" << to_string(entry.second) << "\n";
  }
  auto dis = disagreement_report(sets, corpus);
  out << "\ndisagreements: " << dis.entries.size() << "\n";
  if (!dis.entries.empty()) render_disagreements(dis, out);

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    detail::write_file(out_dir / "kappa.json", report_to_json(report).dump(2) + "\n");
    std::ostringstream records;
    for (const auto& d : dis.entries) records << disagreement_to_json(d).dump() << "\n";
    detail::write_file(out_dir / "disagreements.jsonl", records.str());
  }
  return 0;
}

inline int run_validate_lexicons(const std::filesystem::path& dir, std::ostream& out = std::cout) {
  auto lexicons = load_lexicons(dir);
  for (const auto& w : lexicons.warnings) out << "warning: " << w << "\n";
  out << "emotion words:        " << lexicons.emotion_words.size() << "\n"
      << "antonym pairs:        " << lexicons.antonym_pairs.size() << "\n"
      << "place prepositions:   " << lexicons.place_prepositions.size() << "\n"
      << "stative verbs:        " << lexicons.stative_verbs.size() << "\n"
      << "emotional verbs:      " << lexicons.emotional_verbs.size() << "\n"
      << "linking verbs:        " << lexicons.linking_verbs.size() << "\n"
      << "non-product actions:  " << lexicons.non_product_actions.size() << "\n"
      << "human references:     " << lexicons.human_refs.size() << "\n"
      << "product terms:        " << lexicons.product_terms.size() << "\n"
      << "quantity nouns:       " << lexicons.quantity_nouns.size() << "\n"
      << "action nouns:         " << lexicons.action_nouns.size() << "\n"
      << "degree adverbs:       " << lexicons.degree_adverbs.size() << "\n"
      << "affordance suffixes:  " << lexicons.affordance_suffixes.size() << "\n"
      << "ok\n";
  return 0;
}

}  // namespace revmine
