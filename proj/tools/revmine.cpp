// revmine: structure product reviews into features, affordances, emotions,
// perceptions and usage conditions; build concept co-occurrence graphs; and
// score multi-annotator agreement with Fleiss' kappa.

#include <CLI11.hpp>

#include "revmine/cli.hpp"

namespace {

void add_corpus_options(CLI::App* cmd, revmine::RunConfig& cfg) {
  cmd->add_option("input", cfg.input, "review file (JSON lines) or tagged corpus")->required();
  cmd->add_option("--lexicons", cfg.lexicon_dir, "lexicon directory")->required();
  cmd->add_option("--window,-w", cfg.window, "adjacency window in tokens (articles not counted)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--min-freq", cfg.min_freq, "corpus noun frequency threshold for features")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--tagged", cfg.tagged, "input is a pre-tagged corpus");
  cmd->add_flag("--filter-interrogative", cfg.filter_interrogative,
                "drop sentences ending in '?' before extraction");
  cmd->add_option("--seed", cfg.seed, "random seed recorded in the run manifest")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"revmine: rule-based product review summarization"};
  app.require_subcommand(1);

  revmine::RunConfig cfg;
  std::string format = "dot";
  std::string mode = "six-way";
  std::filesystem::path corpus_path;
  std::filesystem::path lexicon_dir;
  std::vector<std::filesystem::path> annotation_paths;

  auto* summarize = app.add_subcommand("summarize", "extract concepts and write summaries");
  add_corpus_options(summarize, cfg);
  summarize->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();

  auto* stats_cmd = app.add_subcommand("stats", "print concept statistics");
  add_corpus_options(stats_cmd, cfg);

  auto* graph = app.add_subcommand("graph", "export the concept co-occurrence graph");
  add_corpus_options(graph, cfg);
  graph->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
  graph->add_option("--format", format, "dot|csv")->capture_default_str();

  std::filesystem::path kappa_out;
  auto* kappa = app.add_subcommand("kappa", "inter-annotator agreement over annotation files");
  kappa->add_option("--corpus", corpus_path, "tagged corpus the annotations reference")
      ->required();
  kappa->add_option("annotations", annotation_paths, "two or more standoff annotation files")
      ->required()
      ->expected(-2);
  kappa->add_option("--mode", mode, "six-way|per-concept")->capture_default_str();
  kappa->add_option("--out", kappa_out, "also write kappa.json and disagreements.jsonl here");

  auto* validate = app.add_subcommand("validate-lexicons", "load and validate a lexicon directory");
  validate->add_option("--lexicons", lexicon_dir, "lexicon directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (summarize->parsed()) return revmine::run_summarize(cfg);
    if (stats_cmd->parsed()) return revmine::run_stats(cfg);
    if (graph->parsed()) return revmine::run_graph(cfg, format);
    if (kappa->parsed())
      return revmine::run_kappa(corpus_path, annotation_paths, mode, std::cout, kappa_out);
    if (validate->parsed()) return revmine::run_validate_lexicons(lexicon_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
