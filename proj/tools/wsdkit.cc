// Copyright 2026 The wsdkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// wsdkit: build WSD evaluation data from a dictionary dump, run
// disambiguation engines over it and score the results.
//
//   wsdkit build dict.jsonl -o out/ [--k 4] [--seed 0] [--policy ...]
//   wsdkit disambiguate out/corpus.xml --dict dict.jsonl --engine mfs -o preds.txt
//   wsdkit score preds.txt out/gold.key [--corpus out/corpus.xml --per-pos]
//   wsdkit stats out/corpus.xml out/gold.key dict.jsonl [--layout full]

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsd/annotate.hpp"
#include "wsd/builder.hpp"
#include "wsd/corpus.hpp"
#include "wsd/engines.hpp"
#include "wsd/error.hpp"
#include "wsd/external.hpp"
#include "wsd/instances_io.hpp"
#include "wsd/inventory.hpp"
#include "wsd/manifest.hpp"
#include "wsd/metrics.hpp"
#include "wsd/report.hpp"
#include "wsd/text.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

bool json_errors = false;

int fail(int code, const std::string& message) {
  if (json_errors) {
    nlohmann::ordered_json j;
    j["error"] = message;
    j["exit_code"] = code;
    std::cerr << j.dump() << '\n';
  } else {
    std::cerr << "wsdkit: " << message << '\n';
  }
  return code;
}

struct BuildArgs {
  std::string dict;
  std::string out_dir;
  std::size_t k = 4;
  std::uint64_t seed = 0;
  bool skip_multiword = true;
  std::string policy = "same-lemma-first";
  std::string lexicon;
  std::string lang = "es";
  std::string doc_id = "d001";
  std::size_t first_sentence = 1;
};

int run_build(const BuildArgs& args) {
  wsd::BuildConfig config;
  config.k = args.k;
  config.seed = args.seed;
  config.skip_multiword = args.skip_multiword;
  config.policy = wsd::parse_distractor_policy(args.policy);
  config.lang = args.lang;
  config.document_id = args.doc_id;
  config.first_sentence = args.first_sentence;
  config.check();

  const wsd::SenseInventory inventory = wsd::load_dictionary_file(args.dict);
  std::unique_ptr<wsd::Annotator> annotator;
  if (!args.lexicon.empty()) {
    auto lexicon = std::make_unique<wsd::LexiconAnnotator>(&inventory);
    std::ifstream in(args.lexicon);
    if (!in) throw wsd::InputError("cannot open lexicon " + args.lexicon);
    wsd::load_lexicon(in, *lexicon);
    annotator = std::move(lexicon);
  } else {
    annotator = std::make_unique<wsd::NaiveAnnotator>(&inventory);
  }

  const wsd::EvalBuild build = wsd::build_eval_corpus(inventory, *annotator, config);
  const std::vector<wsd::ClassificationInstance> instances =
      wsd::build_classification_instances(build.corpus, build.gold, inventory, config);

  fs::create_directories(args.out_dir);
  const fs::path out(args.out_dir);
  std::ostringstream instance_text;
  wsd::write_instances(instance_text, instances);
  wsd::write_file(out / "corpus.xml", wsd::emit_corpus_xml(build.corpus));
  wsd::write_file(out / "gold.key", wsd::emit_gold(build.gold));
  wsd::write_file(out / "instances.jsonl", instance_text.str());
  std::string log = build.log.render();
  if (build.log.entries == 0) log += "note\tdictionary has zero entries\n";
  wsd::write_file(out / "build.log", log);

  wsd::RunManifest manifest;
  manifest.command = "build";
  manifest.add_input("dictionary", args.dict);
  if (!args.lexicon.empty()) manifest.add_input("lexicon", args.lexicon);
  manifest.set("k", std::to_string(config.k));
  manifest.set("seed", std::to_string(config.seed));
  manifest.set("skip_multiword", config.skip_multiword ? "true" : "false");
  manifest.set("policy", wsd::to_string(config.policy));
  manifest.set("lang", config.lang);
  manifest.set("document_id", config.document_id);
  manifest.set("first_sentence", std::to_string(config.first_sentence));
  manifest.outputs = {{"corpus", "corpus.xml"},
                      {"gold", "gold.key"},
                      {"instances", "instances.jsonl"},
                      {"log", "build.log"}};
  wsd::write_file(out / "manifest.json", manifest.render());

  std::cerr << "built " << build.log.sentences << " sentences, "
            << instances.size() << " instances, " << build.log.skips.size()
            << " skips\n";
  return kExitOk;
}

struct DisambiguateArgs {
  std::string corpus;
  std::string gold;
  std::string dict;
  std::string engine = "mfs";
  std::size_t k = 4;
  std::string mode = "global";
  std::string scorer_cmd;
  long timeout_ms = 30000;
  std::string embeddings;
  std::string instances;
  std::string stopwords;
  bool backoff = false;
  std::string output;
};

std::string format_score_value(double score) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", score);
  return buf;
}

int run_disambiguate(const DisambiguateArgs& args) {
  if (args.corpus.empty() && args.instances.empty()) {
    throw wsd::InputError("give a corpus or --instances");
  }
  const bool needs_dict = args.engine == "mfs" || args.engine == "lesk" ||
                          args.backoff || args.instances.empty();
  if (needs_dict && args.dict.empty()) {
    throw wsd::InputError("--dict is required for engine " + args.engine +
                          (args.instances.empty() ? " in evaluation mode" : ""));
  }
  if (args.engine == "vector" && args.embeddings.empty()) {
    throw wsd::InputError("--embeddings is required for engine vector");
  }
  if (args.engine == "external" && args.scorer_cmd.empty()) {
    throw wsd::InputError("--scorer-cmd is required for engine external");
  }
  if (args.engine != "mfs" && args.engine != "lesk" && args.engine != "vector" &&
      args.engine != "external") {
    throw wsd::InputError("unknown engine '" + args.engine + "'");
  }
  const wsd::ChunkMode mode = wsd::parse_chunk_mode(args.mode);
  if (args.k == 0) throw wsd::InputError("--k must be at least 1");

  wsd::SenseInventory inventory;
  if (!args.dict.empty()) inventory = wsd::load_dictionary_file(args.dict);

  std::vector<wsd::ClassificationInstance> instances;
  std::optional<wsd::Corpus> corpus;
  if (!args.instances.empty()) {
    std::ifstream in(args.instances);
    if (!in) throw wsd::InputError("cannot open " + args.instances);
    instances = wsd::read_instances(in);
  } else {
    corpus = wsd::parse_corpus_xml(wsd::read_file(args.corpus));
    instances = wsd::evaluation_instances(*corpus, inventory);
  }

  std::optional<wsd::EmbeddingTable> table;
  if (!args.embeddings.empty()) {
    std::ifstream in(args.embeddings);
    if (!in) throw wsd::InputError("cannot open " + args.embeddings);
    table = wsd::load_embeddings(in);
  }
  std::set<std::string, std::less<>> stopwords = wsd::default_spanish_stopwords();
  if (!args.stopwords.empty()) {
    std::ifstream in(args.stopwords);
    if (!in) throw wsd::InputError("cannot open " + args.stopwords);
    stopwords = wsd::load_stopwords(in);
  }

  std::unique_ptr<wsd::Scorer> engine;
  if (args.engine == "mfs") {
    engine = std::make_unique<wsd::MfsScorer>(inventory);
  } else if (args.engine == "lesk") {
    engine = std::make_unique<wsd::LeskScorer>(inventory, std::move(stopwords));
  } else if (args.engine == "vector") {
    engine = std::make_unique<wsd::VectorScorer>(
        *table, args.dict.empty() ? nullptr : &inventory);
  } else {
    wsd::ExternalScorerOptions options;
    options.command = args.scorer_cmd;
    options.timeout = std::chrono::milliseconds(args.timeout_ms);
    engine = std::make_unique<wsd::ExternalScorerClient>(options);
  }
  std::unique_ptr<wsd::Scorer> backoff;
  wsd::Scorer* scorer = engine.get();
  if (args.backoff) {
    backoff = std::make_unique<wsd::MfsBackoff>(*engine, inventory);
    scorer = backoff.get();
  }

  std::vector<wsd::Prediction> predictions;
  std::string lines;
  std::size_t abstained = 0;
  for (const wsd::ClassificationInstance& instance : instances) {
    wsd::Prediction p = wsd::disambiguate(*scorer, instance, args.k, mode);
    if (p.abstained) {
      ++abstained;
    } else {
      lines += p.instance_id + ' ' + p.sense_id + ' ' +
               format_score_value(p.score) + '\n';
    }
    predictions.push_back(std::move(p));
  }
  wsd::write_file(args.output, lines);

  wsd::RunManifest manifest;
  manifest.command = "disambiguate";
  if (!args.corpus.empty() && args.instances.empty()) {
    manifest.add_input("corpus", args.corpus);
  }
  if (!args.instances.empty()) manifest.add_input("instances", args.instances);
  if (!args.dict.empty()) manifest.add_input("dictionary", args.dict);
  if (!args.embeddings.empty()) manifest.add_input("embeddings", args.embeddings);
  if (!args.stopwords.empty()) manifest.add_input("stopwords", args.stopwords);
  if (!args.gold.empty()) manifest.add_input("gold", args.gold);
  manifest.set("engine", scorer->name());
  manifest.set("k", std::to_string(args.k));
  manifest.set("mode", wsd::to_string(mode));
  if (args.engine == "external") {
    manifest.set("scorer_cmd", args.scorer_cmd);
    manifest.set("timeout_ms", std::to_string(args.timeout_ms));
  }
  manifest.set("candidates", args.instances.empty() ? "inventory" : "instances");
  manifest.outputs = {{"predictions", fs::path(args.output).filename().string()}};
  wsd::write_file(args.output + ".manifest.json", manifest.render());

  std::cerr << "predicted " << predictions.size() - abstained << " of "
            << predictions.size() << " instances (" << abstained
            << " abstained)\n";
  if (!args.gold.empty()) {
    const wsd::GoldKeys gold = wsd::parse_gold(wsd::read_file(args.gold));
    const wsd::ScoreReport report = wsd::score(predictions, gold);
    std::cerr << wsd::format_score(report, wsd::ReportStyle::kPlain);
  }
  return kExitOk;
}

std::vector<wsd::Prediction> read_predictions(const std::string& path) {
  const std::string text = wsd::read_file(path);
  std::vector<wsd::Prediction> predictions;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> fields = wsd::split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() < 2 || fields.size() > 3) {
      throw wsd::FormatError(path + " line " + std::to_string(line_no) +
                             ": expected 'instance_id sense_id [score]'");
    }
    wsd::Prediction p;
    p.instance_id = fields[0];
    p.sense_id = fields[1];
    if (fields.size() == 3) {
      try {
        p.score = std::stod(fields[2]);
      } catch (const std::exception&) {
        throw wsd::FormatError(path + " line " + std::to_string(line_no) +
                               ": bad score '" + fields[2] + "'");
      }
    }
    predictions.push_back(std::move(p));
  }
  return predictions;
}

struct ScoreArgs {
  std::string predictions;
  std::string gold;
  std::string corpus;
  bool per_pos = false;
  std::string format = "plain";
};

int run_score(const ScoreArgs& args) {
  const wsd::ReportStyle style = wsd::parse_report_style(args.format);
  if (args.per_pos && args.corpus.empty()) {
    throw wsd::InputError("--per-pos needs --corpus for instance tags");
  }
  const std::vector<wsd::Prediction> predictions = read_predictions(args.predictions);
  const wsd::GoldKeys gold = wsd::parse_gold(wsd::read_file(args.gold));
  std::map<std::string, wsd::PosTag> tags;
  if (!args.corpus.empty()) {
    tags = wsd::instance_pos_map(wsd::parse_corpus_xml(wsd::read_file(args.corpus)));
  }
  const wsd::ScoreReport report =
      wsd::score(predictions, gold, args.corpus.empty() ? nullptr : &tags);
  std::cout << wsd::format_score(report, style, args.per_pos);
  return kExitOk;
}

struct StatsArgs {
  std::string corpus;
  std::string gold;
  std::string dict;
  std::string format = "plain";
  std::string layout = "full";
  std::string name;
};

int run_stats(const StatsArgs& args) {
  const wsd::ReportStyle style = wsd::parse_report_style(args.format);
  const wsd::StatsLayout layout = wsd::parse_stats_layout(args.layout);
  const wsd::Corpus corpus = wsd::parse_corpus_xml(wsd::read_file(args.corpus));
  const wsd::GoldKeys gold = wsd::parse_gold(wsd::read_file(args.gold));
  const wsd::SenseInventory inventory = wsd::load_dictionary_file(args.dict);
  const wsd::ValidationReport validation = wsd::validate(corpus, gold, &inventory);
  if (!validation.clean()) {
    std::string message = "corpus and gold keys disagree:";
    for (const wsd::Finding& f : validation.findings) {
      message += "\n  " + wsd::to_string(f.kind) + " " + f.instance_id + ": " + f.detail;
    }
    throw wsd::DataError(message);
  }
  const wsd::NamedStats row{
      args.name.empty() ? fs::path(args.corpus).stem().string() : args.name,
      wsd::corpus_stats(corpus, gold, inventory)};
  std::cout << wsd::format_stats(std::span(&row, 1), layout, style);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word sense disambiguation corpus toolkit"};
  app.set_version_flag("--version", std::string(wsd::kToolVersion));
  app.add_flag("--json-errors", json_errors,
               "Print diagnostics as JSON objects on standard error");
  app.require_subcommand(1);

  BuildArgs build;
  CLI::App* build_cmd =
      app.add_subcommand("build", "Build corpus, gold keys and instances from a dictionary dump");
  build_cmd->add_option("dict", build.dict, "Dictionary dump (JSON lines)")->required();
  build_cmd->add_option("-o,--out-dir", build.out_dir, "Output directory")->required();
  build_cmd->add_option("--k", build.k, "Candidates per classification instance")
      ->capture_default_str();
  build_cmd->add_option("--seed", build.seed, "RNG seed")->capture_default_str();
  build_cmd->add_flag("--skip-multiword,!--keep-multiword", build.skip_multiword,
                      "Skip multiword headwords (default on)");
  build_cmd->add_option("--policy", build.policy,
                        "Distractor policy: same-lemma-first | cross-lemma")
      ->capture_default_str();
  build_cmd->add_option("--lexicon", build.lexicon,
                        "form<TAB>lemma<TAB>POS table used before the naive annotator");
  build_cmd->add_option("--lang", build.lang, "corpus/@lang")->capture_default_str();
  build_cmd->add_option("--doc-id", build.doc_id, "Document id")->capture_default_str();
  build_cmd->add_option("--first-sentence", build.first_sentence,
                        "Number of the first sentence id")
      ->capture_default_str();

  DisambiguateArgs dis;
  CLI::App* dis_cmd =
      app.add_subcommand("disambiguate", "Predict a sense for every instance");
  dis_cmd->add_option("corpus", dis.corpus, "Corpus XML (evaluation mode)");
  dis_cmd->add_option("--gold", dis.gold, "Gold keys; prints a score summary");
  dis_cmd->add_option("--dict", dis.dict, "Dictionary dump");
  dis_cmd->add_option("--engine", dis.engine, "mfs | lesk | vector | external")
      ->capture_default_str();
  dis_cmd->add_option("--k", dis.k, "Candidates per scoring chunk")->capture_default_str();
  dis_cmd->add_option("--mode", dis.mode, "global | tournament")->capture_default_str();
  dis_cmd->add_option("--scorer-cmd", dis.scorer_cmd, "External scorer command");
  dis_cmd->add_option("--timeout-ms", dis.timeout_ms, "External scorer timeout")
      ->capture_default_str();
  dis_cmd->add_option("--embeddings", dis.embeddings, "Embedding table (word2vec text)");
  dis_cmd->add_option("--instances", dis.instances,
                      "Classification-instance file; uses its stored candidates");
  dis_cmd->add_option("--stopwords", dis.stopwords, "Stopword list for lesk");
  dis_cmd->add_flag("--backoff", dis.backoff, "Fall back to MFS when the engine abstains");
  dis_cmd->add_option("-o,--output", dis.output, "Predictions file")->required();

  ScoreArgs sc;
  CLI::App* score_cmd = app.add_subcommand("score", "Score predictions against gold keys");
  score_cmd->add_option("predictions", sc.predictions, "Predictions file")->required();
  score_cmd->add_option("gold", sc.gold, "Gold key file")->required();
  score_cmd->add_option("--corpus", sc.corpus, "Corpus XML, for per-pos splits");
  score_cmd->add_flag("--per-pos", sc.per_pos, "Add per part-of-speech rows");
  score_cmd->add_option("--format", sc.format, "plain | tsv | structured")
      ->capture_default_str();

  StatsArgs st;
  CLI::App* stats_cmd = app.add_subcommand("stats", "Corpus polysemy statistics");
  stats_cmd->add_option("corpus", st.corpus, "Corpus XML")->required();
  stats_cmd->add_option("gold", st.gold, "Gold key file")->required();
  stats_cmd->add_option("dict", st.dict, "Dictionary dump")->required();
  stats_cmd->add_option("--format", st.format, "plain | tsv | structured")
      ->capture_default_str();
  stats_cmd->add_option("--layout", st.layout, "polysemy | composition | full")
      ->capture_default_str();
  stats_cmd->add_option("--name", st.name, "Row label (default: corpus file stem)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*build_cmd) return run_build(build);
    if (*dis_cmd) return run_disambiguate(dis);
    if (*score_cmd) return run_score(sc);
    if (*stats_cmd) return run_stats(st);
  } catch (const wsd::InputError& e) {
    return fail(kExitInput, e.what());
  } catch (const wsd::EngineError& e) {
    return fail(kExitInternal, e.what());
  } catch (const std::exception& e) {
    return fail(kExitInternal, e.what());
  }
  return kExitInternal;
}
