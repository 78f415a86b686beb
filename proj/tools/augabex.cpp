// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <iostream>

#include <CLI11.hpp>

#include "augabex/cli.hpp"
#include "augabex/simd.hpp"

namespace {

using augabex::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg, std::string& entities, std::string& k_values) {
  sub->add_option("--input", cfg.input, "Input corpus JSONL (sample-review: paired CSV)")->required();
  sub->add_option("--teg", cfg.teg, "TEG JSONL produced by `transform`");
  sub->add_option("--out", cfg.out, "Output directory")->capture_default_str();
  sub->add_option("--k", cfg.k, "Candidates per summary sentence")->capture_default_str();
  sub->add_option("--lambda", cfg.lambda, "MMR relevance/redundancy trade-off")->capture_default_str();
  sub->add_option("--alpha", cfg.alpha, "Additive smoothing for KL divergence")->capture_default_str();
  sub->add_option("--stopwords", cfg.stopwords, "Stopword file, one term per line");
  sub->add_option("--entities", entities, "Entity source")
      ->check(CLI::IsMember({"pattern", "annotations"}))
      ->capture_default_str();
  sub->add_option("--embeddings", cfg.embeddings, "Embedding JSONL file");
  sub->add_option("--k-values", k_values, "Comma-separated k values for sweep-k")->capture_default_str();
  sub->add_option("--top", cfg.top, "Top-scoring ids to sample")->capture_default_str();
  sub->add_option("--bottom", cfg.bottom, "Lowest-scoring ids to sample")->capture_default_str();
  sub->add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"augabex: extractive gold summaries from abstractive ones, and their evaluation"};
  app.require_subcommand(0, 1);
  RunConfig cfg;
  std::string entities = "pattern";
  std::string k_values = "1,2,3";
  bool show_isa = false;
  app.add_flag("--simd-info", show_isa, "Print the selected kernel variant (stdout alone, stderr with a subcommand)");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"transform", "Build TEG summaries from the corpus"},
      {"evaluate", "Compare OAG and TEG summaries across all metric dimensions"},
      {"baseline-lsa", "Build LSA baseline summaries and compare them with the OAG (and TEG) summaries"},
      {"sweep-k", "Provision recall of TEG summaries for several k"},
      {"stats", "Corpus statistics (word/sentence counts, compression ratio)"},
      {"sample-review", "Pick top- and lowest-scoring ids from a ROUGE-L score table"},
  };
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), cfg, entities, k_values);

  try {
    app.parse(argc, argv);
    if (app.get_subcommands().empty()) {
      if (show_isa) {
        std::cout << "simd: " << augabex::simd::isa_name(augabex::simd::active_isa()) << '\n';
        return augabex::cli::kExitOk;
      }
      std::cerr << app.help() << "augabex: a subcommand is required\n";
      return augabex::cli::kExitUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.entities = entities == "annotations" ? augabex::EntitySource::kAnnotations : augabex::EntitySource::kPattern;
    cfg.k_values = augabex::cli::parse_k_values(k_values);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return augabex::cli::kExitUsage;
  } catch (const augabex::cli::UsageError& e) {
    std::cerr << "augabex: " << e.what() << '\n';
    return augabex::cli::kExitUsage;
  }
  if (show_isa) std::cerr << "simd: " << augabex::simd::isa_name(augabex::simd::active_isa()) << '\n';
  return augabex::cli::run(cfg, std::cout, std::cerr);
}
