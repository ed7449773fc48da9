// Copyright 2026 The AZP Augment Authors.
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

#include "azp/cli.h"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "azp/augment.h"
#include "azp/corpus.h"
#include "azp/eval.h"
#include "azp/morph.h"
#include "azp/normalize.h"
#include "azp/patterns.h"
#include "azp/pipeline.h"
#include "azp/sample_io.h"
#include "azp/subject.h"

#ifndef AZP_DEFAULT_LEXICON
#define AZP_DEFAULT_LEXICON "data/lexicon/seed.tsv"
#endif

namespace azp {
namespace {

namespace fs = std::filesystem;

int Report(ExitCode code, const absl::Status &status) {
  std::cerr << "azp: " << (code == kExitValidation ? "invalid: " : "error: ")
            << status.message() << "\n";
  return code;
}

absl::Status RequireFile(const char *flag, const std::string &path) {
  if (path.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(flag, " is required"));
  }
  if (!fs::is_regular_file(path)) {
    return absl::NotFoundError(absl::StrCat(flag, ": no such file: ", path));
  }
  return absl::OkStatus();
}

// Flags that mirror PipelineConfig fields. A flag given on the command line
// overrides the config file; endpoints also consult the environment.
class ConfigFlags {
 public:
  template <typename T>
  void Add(CLI::App *app, const std::string &name, T PipelineConfig::*field,
           const std::string &help) {
    auto value = std::make_shared<T>();
    CLI::Option *option = app->add_option(name, *value, help);
    appliers_.push_back(
        [option, value, field](PipelineConfig *config) -> absl::Status {
          if (option->count() > 0) config->*field = *value;
          return absl::OkStatus();
        });
  }

  void AddLenient(CLI::App *app) {
    CLI::Option *option =
        app->add_flag("--lenient", "treat unknown features as wildcards");
    appliers_.push_back([option](PipelineConfig *config) {
      if (option->count() > 0) config->lenient = true;
      return absl::OkStatus();
    });
  }

  void AddMethods(CLI::App *app, const std::string &help) {
    auto value = std::make_shared<std::string>();
    CLI::Option *option = app->add_option("--methods", *value, help);
    appliers_.push_back(
        [option, value](PipelineConfig *config) -> absl::Status {
          if (option->count() == 0) return absl::OkStatus();
          absl::StatusOr<std::set<Method>> methods = ParseMethods(*value);
          if (!methods.ok()) return methods.status();
          config->methods = *methods;
          return absl::OkStatus();
        });
  }

  void AddEndpoint(CLI::App *app, const std::string &name,
                   std::string PipelineConfig::*field, const char *env_var,
                   const std::string &help) {
    auto value = std::make_shared<std::string>();
    CLI::Option *option = app->add_option(name, *value, help);
    appliers_.push_back([option, value, field, env_var](PipelineConfig *config) {
      config->*field = ResolveEndpoint(option->count() > 0 ? *value : "",
                                       env_var, config->*field);
      return absl::OkStatus();
    });
  }

  absl::Status Apply(PipelineConfig *config) const {
    for (const auto &apply : appliers_) {
      if (absl::Status s = apply(config); !s.ok()) return s;
    }
    return absl::OkStatus();
  }

 private:
  std::vector<std::function<absl::Status(PipelineConfig *)>> appliers_;
};

struct Invocation {
  std::string config_path;
  PipelineConfig config;
};

absl::Status ResolveConfig(const Invocation &invocation,
                           const ConfigFlags &flags, PipelineConfig *out) {
  PipelineConfig config;
  config.lexicon = AZP_DEFAULT_LEXICON;
  if (!invocation.config_path.empty()) {
    if (absl::Status s = LoadConfigFile(invocation.config_path, &config);
        !s.ok()) {
      return s;
    }
  }
  if (absl::Status s = flags.Apply(&config); !s.ok()) return s;
  *out = std::move(config);
  return absl::OkStatus();
}

HttpOptions HttpOptionsFor(const PipelineConfig &config) {
  HttpOptions options;
  options.requests_per_second = config.rate_limit;
  options.max_in_flight = config.max_in_flight;
  return options;
}

absl::StatusOr<MorphLexicon> LoadLexicon(const PipelineConfig &config) {
  if (absl::Status s = RequireFile("--lexicon", config.lexicon); !s.ok()) {
    return s;
  }
  return MorphLexicon::FromFile(config.lexicon);
}

void PrintStatsTo(const std::vector<AzpSample> &samples, std::ostream &out) {
  out << RenderStats(CountByMethod(samples));
}

// ---- preprocess ------------------------------------------------------------

int Preprocess(const std::string &in, const std::string &out) {
  absl::StatusOr<std::string> text = ReadFileToString(in);
  if (!text.ok()) return Report(kExitValidation, text.status());
  if (absl::Status s = WriteStringToFile(out, NormalizeText(*text)); !s.ok()) {
    return Report(kExitRuntime, s);
  }
  return kExitOk;
}

// ---- mine-patterns ---------------------------------------------------------

int MinePatternsCommand(const PipelineConfig &config, const std::string &out) {
  if (config.k < 1 || config.window < 1) {
    return Report(kExitValidation,
                  absl::InvalidArgumentError("k and window must be at least 1"));
  }
  if (absl::Status s = RequireFile("--gold", config.gold); !s.ok()) {
    return Report(kExitValidation, s);
  }
  Tagset tagset = Tagset::ArabicPenn();
  if (!config.tagset.empty()) {
    absl::StatusOr<Tagset> loaded = Tagset::FromFile(config.tagset);
    if (!loaded.ok()) return Report(kExitValidation, loaded.status());
    tagset = *std::move(loaded);
  }
  absl::StatusOr<std::vector<TaggedDocument>> gold =
      ReadTaggedFile(config.gold, tagset);
  if (!gold.ok()) return Report(kExitValidation, gold.status());
  for (TaggedDocument &doc : *gold) {
    for (Sentence &sentence : doc.sentences) {
      for (Token &token : sentence.tokens) {
        token.surface = NormalizeText(token.surface);
      }
    }
  }
  absl::StatusOr<std::vector<PatternStats>> stats =
      MinePatterns(*gold, config.window);
  if (!stats.ok()) return Report(kExitRuntime, stats.status());
  stats->resize(std::min<size_t>(stats->size(), config.k));
  std::string text = SerializePatternStats(*stats);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else if (absl::Status s = WriteStringToFile(out, text); !s.ok()) {
    return Report(kExitRuntime, s);
  }
  return kExitOk;
}

// ---- detect ----------------------------------------------------------------

int DetectCommand(const PipelineConfig &config, const std::string &patterns_path,
                  const std::string &out) {
  if (absl::Status s = RequireFile("--pages", config.pages); !s.ok()) {
    return Report(kExitValidation, s);
  }
  if (out.empty()) {
    return Report(kExitValidation, absl::InvalidArgumentError("--out is required"));
  }
  DetectOptions options;
  options.onp = config.methods.count(Method::kOnp) > 0;
  options.rsm = config.methods.count(Method::kRsm) > 0;
  options.corpus_id = config.corpus_id;
  if (!options.onp && !options.rsm) {
    return Report(kExitValidation,
                  absl::InvalidArgumentError("detect runs onp and/or rsm"));
  }
  std::vector<PosPattern> patterns;
  if (options.onp) {
    if (absl::Status s = RequireFile("--patterns", patterns_path); !s.ok()) {
      return Report(kExitValidation, s);
    }
    absl::StatusOr<std::string> text = ReadFileToString(patterns_path);
    if (!text.ok()) return Report(kExitValidation, text.status());
    absl::StatusOr<std::vector<PatternStats>> stats = ParsePatternStats(*text);
    if (!stats.ok()) return Report(kExitValidation, stats.status());
    for (const PatternStats &s : *stats) patterns.push_back(s.pattern);
  }
  absl::StatusOr<MorphLexicon> lexicon = LoadLexicon(config);
  if (!lexicon.ok()) return Report(kExitValidation, lexicon.status());
  if (config.tagger.empty()) {
    return Report(kExitValidation,
                  absl::InvalidArgumentError("--tagger is required"));
  }
  absl::StatusOr<std::unique_ptr<TaggingProvider>> tagger =
      MakeTagger(config.tagger, HttpOptionsFor(config), config.default_tag);
  if (!tagger.ok()) return Report(kExitValidation, tagger.status());
  absl::StatusOr<std::vector<RawPage>> raw = ReadPages(config.pages);
  if (!raw.ok()) return Report(kExitValidation, raw.status());

  absl::StatusOr<std::vector<SummaryPage>> pages =
      TagPages(*raw, **tagger, config.workers);
  if (!pages.ok()) return Report(kExitRuntime, pages.status());
  absl::StatusOr<std::vector<AzpSample>> samples = DetectSamples(
      *pages, patterns, *lexicon, options, config.workers);
  if (!samples.ok()) return Report(kExitRuntime, samples.status());
  SortSamples(&*samples);
  if (absl::Status s = WriteSamples(*samples, out); !s.ok()) {
    return Report(kExitRuntime, s);
  }
  PrintStatsTo(*samples, std::cout);
  return kExitOk;
}

// ---- augment ---------------------------------------------------------------

int AugmentCommand(const PipelineConfig &config, const std::string &in,
                   const std::string &out) {
  if (absl::Status s = RequireFile("--in", in); !s.ok()) {
    return Report(kExitValidation, s);
  }
  if (out.empty()) {
    return Report(kExitValidation, absl::InvalidArgumentError("--out is required"));
  }
  if (config.top_k < 1) {
    return Report(kExitValidation,
                  absl::InvalidArgumentError("top-k must be at least 1"));
  }
  GenerateOptions options;
  for (Method m : config.methods) {
    if (m == Method::kMcm || m == Method::kBt || m == Method::kCsa) {
      options.methods.insert(m);
    }
  }
  if (options.methods.empty()) {
    return Report(kExitValidation,
                  absl::InvalidArgumentError("augment runs mcm, bt and/or csa"));
  }
  options.top_k = config.top_k;
  options.pivot = config.pivot;
  options.workers = config.workers;

  HttpOptions http = HttpOptionsFor(config);
  Providers providers;
  if (options.methods.count(Method::kMcm)) {
    if (config.lm.empty()) {
      return Report(kExitValidation, absl::InvalidArgumentError("mcm needs --lm"));
    }
    absl::StatusOr<std::unique_ptr<MaskedLmProvider>> lm =
        MakeMaskedLm(config.lm, http);
    if (!lm.ok()) return Report(kExitValidation, lm.status());
    providers.lm = *std::move(lm);
  }
  if (options.methods.count(Method::kBt)) {
    if (config.translator.empty() || config.tagger.empty()) {
      return Report(kExitValidation,
                    absl::InvalidArgumentError("bt needs --translator and --tagger"));
    }
    absl::StatusOr<std::unique_ptr<TranslationProvider>> translator =
        MakeTranslator(config.translator, http);
    if (!translator.ok()) return Report(kExitValidation, translator.status());
    providers.translator = *std::move(translator);
    absl::StatusOr<std::unique_ptr<TaggingProvider>> tagger =
        MakeTagger(config.tagger, http, config.default_tag);
    if (!tagger.ok()) return Report(kExitValidation, tagger.status());
    providers.tagger = *std::move(tagger);
  }
  absl::StatusOr<MorphLexicon> lexicon = LoadLexicon(config);
  if (!lexicon.ok()) return Report(kExitValidation, lexicon.status());
  absl::StatusOr<std::vector<AzpSample>> samples = ReadSamples(in);
  if (!samples.ok()) return Report(kExitValidation, samples.status());

  absl::StatusOr<std::vector<AzpSample>> generated =
      GenerateSamples(*samples, providers, *lexicon, options);
  if (!generated.ok()) return Report(kExitRuntime, generated.status());
  std::vector<AzpSample> all = *std::move(samples);
  all.insert(all.end(), generated->begin(), generated->end());
  SortSamples(&all);
  if (absl::Status s = WriteSamples(all, out); !s.ok()) {
    return Report(kExitRuntime, s);
  }
  PrintStatsTo(all, std::cout);
  return kExitOk;
}

// ---- filter ----------------------------------------------------------------

int FilterCommand(const PipelineConfig &config, const std::string &in,
                  const std::string &out, const std::string &rejected_path) {
  if (absl::Status s = RequireFile("--in", in); !s.ok()) {
    return Report(kExitValidation, s);
  }
  if (out.empty()) {
    return Report(kExitValidation, absl::InvalidArgumentError("--out is required"));
  }
  absl::StatusOr<MorphLexicon> lexicon = LoadLexicon(config);
  if (!lexicon.ok()) return Report(kExitValidation, lexicon.status());
  absl::StatusOr<std::vector<AzpSample>> samples = ReadSamples(in);
  if (!samples.ok()) return Report(kExitValidation, samples.status());

  FilterResult result = FilterSamples(*samples, *lexicon, config.lenient);
  SortSamples(&result.kept);
  if (absl::Status s = WriteSamples(result.kept, out); !s.ok()) {
    return Report(kExitRuntime, s);
  }
  if (!rejected_path.empty()) {
    std::string text;
    for (const Rejection &r : result.rejected) {
      absl::StrAppend(&text, r.sample.id, "\t", RejectReasonName(r.reason), "\n");
    }
    if (absl::Status s = WriteStringToFile(rejected_path, text); !s.ok()) {
      return Report(kExitRuntime, s);
    }
  }
  std::cout << "kept " << result.kept.size() << ", rejected "
            << result.rejected.size() << "\n";
  return kExitOk;
}

// ---- stats -----------------------------------------------------------------

int StatsCommand(const std::string &in) {
  if (absl::Status s = RequireFile("--in", in); !s.ok()) {
    return Report(kExitValidation, s);
  }
  absl::StatusOr<std::vector<AzpSample>> samples = ReadSamples(in);
  if (!samples.ok()) return Report(kExitValidation, samples.status());
  PrintStatsTo(*samples, std::cout);
  return kExitOk;
}

// ---- score -----------------------------------------------------------------

int ScoreCommand(const std::string &task, const std::string &gold_path,
                 const std::string &pred_path,
                 std::optional<double> baseline) {
  if (absl::Status s = RequireFile("--gold", gold_path); !s.ok()) {
    return Report(kExitValidation, s);
  }
  if (absl::Status s = RequireFile("--pred", pred_path); !s.ok()) {
    return Report(kExitValidation, s);
  }
  absl::StatusOr<ScoreReport> report;
  if (task == "identification") {
    absl::StatusOr<std::vector<GapKey>> gold = ReadGapKeys(gold_path);
    if (!gold.ok()) return Report(kExitValidation, gold.status());
    absl::StatusOr<std::vector<GapKey>> pred = ReadGapKeys(pred_path);
    if (!pred.ok()) return Report(kExitValidation, pred.status());
    report = ScoreIdentification(*gold, *pred, baseline);
  } else {
    absl::StatusOr<std::vector<std::pair<GapKey, TokenSpan>>> gold_spans =
        ReadGapSpans(gold_path);
    if (!gold_spans.ok()) return Report(kExitValidation, gold_spans.status());
    absl::StatusOr<std::vector<std::pair<GapKey, TokenSpan>>> pred =
        ReadGapSpans(pred_path);
    if (!pred.ok()) return Report(kExitValidation, pred.status());
    std::map<GapKey, std::vector<TokenSpan>> gold;
    for (const auto &[key, span] : *gold_spans) gold[key].push_back(span);
    report = ScoreResolution(gold, *pred, baseline);
  }
  if (!report.ok()) return Report(kExitValidation, report.status());
  std::cout << FormatReport(*report);
  return kExitOk;
}

// ---- run -------------------------------------------------------------------

int RunCommand(const PipelineConfig &config) {
  if (absl::Status s = ValidateConfig(config); !s.ok()) {
    return Report(kExitValidation, s);
  }
  absl::StatusOr<RunResult> result = RunPipeline(config);
  if (!result.ok()) return Report(kExitRuntime, result.status());
  PrintStatsTo(result->kept, std::cout);
  std::cout << "kept " << result->kept.size() << ", rejected "
            << result->rejected.size() << "; outputs in " << config.out
            << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(int argc, char **argv) {
  CLI::App app{"Anaphoric zero pronoun corpus construction and augmentation",
               "azp"};
  app.require_subcommand(1);
  Invocation invocation;
  app.add_option("--config", invocation.config_path,
                 "JSON config; command-line flags take precedence")
      ->check(CLI::ExistingFile);
  app.fallthrough();

  std::string in;
  std::string out;
  std::string patterns_path;
  std::string rejected_path;
  std::string task;
  std::string gold_path;
  std::string pred_path;
  std::optional<double> baseline;

  // preprocess
  CLI::App *preprocess =
      app.add_subcommand("preprocess", "normalize Arabic text");
  preprocess->add_option("--in", in, "input text")->required();
  preprocess->add_option("--out", out, "output text")->required();

  // mine-patterns
  ConfigFlags mine_flags;
  CLI::App *mine = app.add_subcommand(
      "mine-patterns", "rank POS windows around gold gaps by t-score");
  mine_flags.Add(mine, "--gold", &PipelineConfig::gold, "tagged gold corpus");
  mine_flags.Add(mine, "--tagset", &PipelineConfig::tagset, "tagset file");
  mine_flags.Add(mine, "--k", &PipelineConfig::k, "patterns to keep");
  mine_flags.Add(mine, "--window", &PipelineConfig::window, "tags per side");
  mine->add_option("--out", out, "pattern file (stdout when omitted)");

  // detect
  ConfigFlags detect_flags;
  CLI::App *detect =
      app.add_subcommand("detect", "collect samples from summary pages");
  detect_flags.Add(detect, "--pages", &PipelineConfig::pages,
                   "JSON-lines pages");
  detect->add_option("--patterns", patterns_path, "pattern file");
  detect_flags.AddMethods(detect, "onp,rsm");
  detect_flags.Add(detect, "--lexicon", &PipelineConfig::lexicon,
                   "morphology lexicon");
  detect_flags.AddEndpoint(detect, "--tagger", &PipelineConfig::tagger,
                           "AZP_TAG_URL", "tagger URL or stub:PATH");
  detect_flags.Add(detect, "--default-tag", &PipelineConfig::default_tag,
                   "stub tagger fallback tag");
  detect_flags.Add(detect, "--corpus-id", &PipelineConfig::corpus_id,
                   "source corpus name");
  detect_flags.Add(detect, "--workers", &PipelineConfig::workers,
                   "worker threads");
  detect_flags.Add(detect, "--rate-limit", &PipelineConfig::rate_limit,
                   "requests per second per endpoint");
  detect->add_option("--out", out, "sample file")->required();

  // augment
  ConfigFlags augment_flags;
  CLI::App *augment =
      app.add_subcommand("augment", "generate samples with mcm, bt and csa");
  augment->add_option("--in", in, "sample file")->required();
  augment_flags.AddMethods(augment, "mcm,bt,csa");
  augment_flags.AddEndpoint(augment, "--lm", &PipelineConfig::lm, "AZP_LM_URL",
                            "masked-LM URL or stub:PATH");
  augment_flags.AddEndpoint(augment, "--translator",
                            &PipelineConfig::translator, "AZP_MT_URL",
                            "translator URL or stub:PATH");
  augment_flags.AddEndpoint(augment, "--tagger", &PipelineConfig::tagger,
                            "AZP_TAG_URL", "tagger URL or stub:PATH");
  augment_flags.Add(augment, "--default-tag", &PipelineConfig::default_tag,
                    "stub tagger fallback tag");
  augment_flags.Add(augment, "--top-k", &PipelineConfig::top_k,
                    "masked-LM candidates per sample");
  augment_flags.Add(augment, "--pivot", &PipelineConfig::pivot,
                    "back-translation pivot language");
  augment_flags.Add(augment, "--lexicon", &PipelineConfig::lexicon,
                    "morphology lexicon");
  augment_flags.Add(augment, "--workers", &PipelineConfig::workers,
                    "worker threads");
  augment_flags.Add(augment, "--rate-limit", &PipelineConfig::rate_limit,
                    "requests per second per endpoint");
  augment_flags.Add(augment, "--max-in-flight", &PipelineConfig::max_in_flight,
                    "concurrent requests per endpoint");
  augment->add_option("--out", out, "sample file")->required();

  // filter
  ConfigFlags filter_flags;
  CLI::App *filter =
      app.add_subcommand("filter", "drop samples without verb agreement");
  filter->add_option("--in", in, "sample file")->required();
  filter_flags.Add(filter, "--lexicon", &PipelineConfig::lexicon,
                   "morphology lexicon");
  filter_flags.AddLenient(filter);
  filter->add_option("--out", out, "kept samples")->required();
  filter->add_option("--rejected", rejected_path, "id and reason per line");

  // stats
  CLI::App *stats = app.add_subcommand("stats", "count samples per method");
  stats->add_option("--in", in, "sample file")->required();

  // score
  CLI::App *score = app.add_subcommand("score", "precision, recall and F1");
  score->add_option("--task", task, "identification or resolution")
      ->required()
      ->check(CLI::IsMember({"identification", "resolution"}));
  score->add_option("--gold", gold_path, "gold records")->required();
  score->add_option("--pred", pred_path, "predicted records")->required();
  score->add_option("--baseline-f1", baseline, "report F1 difference");

  // run
  ConfigFlags run_flags;
  CLI::App *run = app.add_subcommand("run", "full pipeline");
  run_flags.Add(run, "--gold", &PipelineConfig::gold, "tagged gold corpus");
  run_flags.Add(run, "--pages", &PipelineConfig::pages, "JSON-lines pages");
  run_flags.Add(run, "--lexicon", &PipelineConfig::lexicon,
                "morphology lexicon");
  run_flags.Add(run, "--tagset", &PipelineConfig::tagset, "tagset file");
  run_flags.Add(run, "--out", &PipelineConfig::out, "output directory");
  run_flags.AddEndpoint(run, "--lm", &PipelineConfig::lm, "AZP_LM_URL",
                        "masked-LM URL or stub:PATH");
  run_flags.AddEndpoint(run, "--translator", &PipelineConfig::translator,
                        "AZP_MT_URL", "translator URL or stub:PATH");
  run_flags.AddEndpoint(run, "--tagger", &PipelineConfig::tagger,
                        "AZP_TAG_URL", "tagger URL or stub:PATH");
  run_flags.Add(run, "--default-tag", &PipelineConfig::default_tag,
                "stub tagger fallback tag");
  run_flags.AddMethods(run, "onp,rsm,mcm,bt,csa");
  run_flags.Add(run, "--k", &PipelineConfig::k, "patterns to keep");
  run_flags.Add(run, "--window", &PipelineConfig::window, "tags per side");
  run_flags.Add(run, "--top-k", &PipelineConfig::top_k,
                "masked-LM candidates per sample");
  run_flags.AddLenient(run);
  run_flags.Add(run, "--workers", &PipelineConfig::workers, "worker threads");
  run_flags.Add(run, "--pivot", &PipelineConfig::pivot,
                "back-translation pivot language");
  run_flags.Add(run, "--corpus-id", &PipelineConfig::corpus_id,
                "source corpus name");
  run_flags.Add(run, "--rate-limit", &PipelineConfig::rate_limit,
                "requests per second per endpoint");
  run_flags.Add(run, "--max-in-flight", &PipelineConfig::max_in_flight,
                "concurrent requests per endpoint");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  auto resolve = [&](const ConfigFlags &flags,
                     PipelineConfig *config) -> absl::Status {
    return ResolveConfig(invocation, flags, config);
  };
  PipelineConfig config;
  if (preprocess->parsed()) return Preprocess(in, out);
  if (stats->parsed()) return StatsCommand(in);
  if (score->parsed()) return ScoreCommand(task, gold_path, pred_path, baseline);
  if (mine->parsed()) {
    if (absl::Status s = resolve(mine_flags, &config); !s.ok()) {
      return Report(kExitValidation, s);
    }
    return MinePatternsCommand(config, out);
  }
  if (detect->parsed()) {
    if (absl::Status s = resolve(detect_flags, &config); !s.ok()) {
      return Report(kExitValidation, s);
    }
    return DetectCommand(config, patterns_path, out);
  }
  if (augment->parsed()) {
    if (absl::Status s = resolve(augment_flags, &config); !s.ok()) {
      return Report(kExitValidation, s);
    }
    return AugmentCommand(config, in, out);
  }
  if (filter->parsed()) {
    if (absl::Status s = resolve(filter_flags, &config); !s.ok()) {
      return Report(kExitValidation, s);
    }
    return FilterCommand(config, in, out, rejected_path);
  }
  if (absl::Status s = resolve(run_flags, &config); !s.ok()) {
    return Report(kExitValidation, s);
  }
  return RunCommand(config);
}

}  // namespace azp
