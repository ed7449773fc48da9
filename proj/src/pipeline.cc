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

#include "azp/pipeline.h"

#include <chrono>
#include <filesystem>
#include <functional>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "azp/augment.h"
#include "azp/eval.h"
#include "azp/hashing.h"
#include "azp/normalize.h"
#include "azp/parallel.h"
#include "azp/sample_io.h"
#include "azp/subject.h"

namespace azp {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

absl::StatusOr<std::set<Method>> ParseMethods(absl::string_view list) {
  std::set<Method> methods;
  for (absl::string_view name : absl::StrSplit(list, ',', absl::SkipEmpty())) {
    name = absl::StripAsciiWhitespace(name);
    std::optional<Method> method = ParseMethod(name);
    if (!method || *method == Method::kGold) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown method '", name, "'"));
    }
    methods.insert(*method);
  }
  if (methods.empty()) return absl::InvalidArgumentError("no methods given");
  return methods;
}

std::string MethodList(const std::set<Method> &methods) {
  std::vector<std::string> names;
  for (Method m : methods) names.emplace_back(MethodName(m));
  return absl::StrJoin(names, ",");
}

absl::Status ApplyConfigJson(const json &j, PipelineConfig *config) {
  if (!j.is_object()) return absl::InvalidArgumentError("config must be an object");
  std::map<std::string, std::function<absl::Status(const json &)>> setters;
  auto str = [&](const char *key, std::string *field) {
    setters[key] = [key, field](const json &v) -> absl::Status {
      if (!v.is_string()) {
        return absl::InvalidArgumentError(absl::StrCat(key, " must be a string"));
      }
      *field = v.get<std::string>();
      return absl::OkStatus();
    };
  };
  auto integer = [&](const char *key, int *field) {
    setters[key] = [key, field](const json &v) -> absl::Status {
      if (!v.is_number_integer()) {
        return absl::InvalidArgumentError(absl::StrCat(key, " must be an integer"));
      }
      *field = v.get<int>();
      return absl::OkStatus();
    };
  };
  str("gold", &config->gold);
  str("pages", &config->pages);
  str("lexicon", &config->lexicon);
  str("tagset", &config->tagset);
  str("out", &config->out);
  str("lm", &config->lm);
  str("translator", &config->translator);
  str("tagger", &config->tagger);
  str("default_tag", &config->default_tag);
  str("pivot", &config->pivot);
  str("corpus_id", &config->corpus_id);
  integer("k", &config->k);
  integer("window", &config->window);
  integer("top_k", &config->top_k);
  integer("workers", &config->workers);
  integer("max_in_flight", &config->max_in_flight);
  setters["lenient"] = [config](const json &v) -> absl::Status {
    if (!v.is_boolean()) return absl::InvalidArgumentError("lenient must be a boolean");
    config->lenient = v.get<bool>();
    return absl::OkStatus();
  };
  setters["rate_limit"] = [config](const json &v) -> absl::Status {
    if (!v.is_number()) return absl::InvalidArgumentError("rate_limit must be a number");
    config->rate_limit = v.get<double>();
    return absl::OkStatus();
  };
  setters["methods"] = [config](const json &v) -> absl::Status {
    std::string list;
    if (v.is_string()) {
      list = v.get<std::string>();
    } else if (v.is_array()) {
      std::vector<std::string> names;
      for (const json &item : v) {
        if (!item.is_string()) {
          return absl::InvalidArgumentError("methods must be strings");
        }
        names.push_back(item.get<std::string>());
      }
      list = absl::StrJoin(names, ",");
    } else {
      return absl::InvalidArgumentError("methods must be a string or array");
    }
    absl::StatusOr<std::set<Method>> methods = ParseMethods(list);
    if (!methods.ok()) return methods.status();
    config->methods = *methods;
    return absl::OkStatus();
  };

  for (auto it = j.begin(); it != j.end(); ++it) {
    auto setter = setters.find(it.key());
    if (setter == setters.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown config key '", it.key(), "'"));
    }
    if (absl::Status s = setter->second(it.value()); !s.ok()) return s;
  }
  return absl::OkStatus();
}

absl::Status LoadConfigFile(const std::string &path, PipelineConfig *config) {
  absl::StatusOr<std::string> text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  json j = json::parse(*text, nullptr, false);
  if (j.is_discarded()) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": not valid JSON"));
  }
  if (j.is_object()) {
    // Relative paths in a config file are relative to the file itself.
    const fs::path base = fs::absolute(path).parent_path();
    for (const char *key : {"gold", "pages", "lexicon", "tagset", "out"}) {
      if (j.contains(key) && j[key].is_string()) {
        std::string value = j[key].get<std::string>();
        if (!value.empty() && fs::path(value).is_relative()) {
          j[key] = (base / value).lexically_normal().string();
        }
      }
    }
    for (const char *key : {"lm", "translator", "tagger"}) {
      if (j.contains(key) && j[key].is_string()) {
        std::string value = j[key].get<std::string>();
        absl::string_view rest = value;
        if (absl::ConsumePrefix(&rest, "stub:") && rest != "identity" &&
            !rest.empty() && fs::path(std::string(rest)).is_relative()) {
          j[key] = absl::StrCat(
              "stub:", (base / std::string(rest)).lexically_normal().string());
        }
      }
    }
  }
  absl::Status status = ApplyConfigJson(j, config);
  if (!status.ok()) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": ", status.message()));
  }
  return absl::OkStatus();
}

absl::Status ValidateConfig(const PipelineConfig &config) {
  if (config.k < 1) return absl::InvalidArgumentError("k must be at least 1");
  if (config.window < 1) {
    return absl::InvalidArgumentError("window must be at least 1");
  }
  if (config.top_k < 1) return absl::InvalidArgumentError("top_k must be at least 1");
  if (config.workers < 1) {
    return absl::InvalidArgumentError("workers must be at least 1");
  }
  if (config.methods.empty()) return absl::InvalidArgumentError("no methods");
  if (config.out.empty()) return absl::InvalidArgumentError("out is required");
  auto need_file = [](const char *name,
                      const std::string &path) -> absl::Status {
    if (path.empty()) {
      return absl::InvalidArgumentError(absl::StrCat(name, " is required"));
    }
    if (!fs::is_regular_file(path)) {
      return absl::NotFoundError(absl::StrCat(name, " not found: ", path));
    }
    return absl::OkStatus();
  };
  if (absl::Status s = need_file("gold", config.gold); !s.ok()) return s;
  if (absl::Status s = need_file("pages", config.pages); !s.ok()) return s;
  if (absl::Status s = need_file("lexicon", config.lexicon); !s.ok()) return s;
  if (!config.tagset.empty()) {
    if (absl::Status s = need_file("tagset", config.tagset); !s.ok()) return s;
  }
  if (config.tagger.empty()) {
    return absl::InvalidArgumentError("a tagger endpoint is required");
  }
  if (config.methods.count(Method::kMcm) && config.lm.empty()) {
    return absl::InvalidArgumentError("mcm needs a masked-LM endpoint");
  }
  if (config.methods.count(Method::kBt) && config.translator.empty()) {
    return absl::InvalidArgumentError("bt needs a translator endpoint");
  }
  if (config.pivot.size() != 2) {
    return absl::InvalidArgumentError("pivot must be a two-letter code");
  }
  return absl::OkStatus();
}

ordered_json CanonicalConfig(const PipelineConfig &config) {
  ordered_json j;
  j["gold"] = config.gold;
  j["pages"] = config.pages;
  j["lexicon"] = config.lexicon;
  j["tagset"] = config.tagset;
  j["lm"] = config.lm;
  j["translator"] = config.translator;
  j["tagger"] = config.tagger;
  j["default_tag"] = config.default_tag;
  j["methods"] = MethodList(config.methods);
  j["k"] = config.k;
  j["window"] = config.window;
  j["top_k"] = config.top_k;
  j["lenient"] = config.lenient;
  j["pivot"] = config.pivot;
  j["corpus_id"] = config.corpus_id;
  return j;
}

absl::StatusOr<std::vector<SummaryPage>> TagPages(
    const std::vector<RawPage> &pages, TaggingProvider &tagger, int workers) {
  return ParallelMap<SummaryPage>(
      pages.size(), workers, [&](int i) -> absl::StatusOr<SummaryPage> {
        SummaryPage page;
        page.title = NormalizeText(pages[i].title);
        for (const std::string &raw :
             SplitSentences(NormalizeText(pages[i].text))) {
          std::vector<std::string> tokens = Tokenize(raw);
          if (tokens.empty()) continue;
          absl::StatusOr<TagResponse> tags = tagger.Tag({tokens});
          if (!tags.ok()) return tags.status();
          page.sentences.push_back(MakeSentence(tokens, tags->tags));
        }
        return page;
      });
}

absl::StatusOr<std::vector<PatternStats>> MinePatterns(
    const std::vector<TaggedDocument> &gold, int window) {
  std::vector<Sentence> sentences;
  for (const TaggedDocument &doc : gold) {
    sentences.insert(sentences.end(), doc.sentences.begin(),
                     doc.sentences.end());
  }
  UnigramModel unigrams;
  unigrams.AddCorpus(sentences);
  return ScorePatterns(ExtractWindows(sentences, window), unigrams);
}

absl::StatusOr<std::vector<AzpSample>> GenerateSamples(
    const std::vector<AzpSample> &samples, Providers &providers,
    const MorphLexicon &lexicon, const GenerateOptions &options) {
  using Batch = std::vector<AzpSample>;
  absl::StatusOr<std::vector<Batch>> batches = ParallelMap<Batch>(
      samples.size(), options.workers,
      [&](int i) -> absl::StatusOr<Batch> {
        const AzpSample &sample = samples[i];
        Batch out;
        if (options.methods.count(Method::kMcm)) {
          absl::StatusOr<Batch> mcm =
              McmAugment(sample, *providers.lm, options.top_k, lexicon);
          if (!mcm.ok()) return mcm.status();
          out.insert(out.end(), mcm->begin(), mcm->end());
        }
        if (options.methods.count(Method::kBt)) {
          BackTranslationOptions bt_options;
          bt_options.pivot_lang = options.pivot;
          absl::StatusOr<std::optional<AzpSample>> bt =
              BtAugment(sample, *providers.translator, *providers.tagger,
                        lexicon, bt_options);
          if (!bt.ok()) return bt.status();
          if (*bt) out.push_back(**std::move(bt));
        }
        if (options.methods.count(Method::kCsa)) {
          for (Number target : CsaTargets(sample.features.number)) {
            absl::StatusOr<std::optional<AzpSample>> csa =
                CsaAugment(sample, target, lexicon);
            if (!csa.ok()) return csa.status();
            if (*csa) out.push_back(**std::move(csa));
          }
        }
        return out;
      });
  if (!batches.ok()) return batches.status();
  Batch all;
  for (Batch &batch : *batches) {
    all.insert(all.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return all;
}

absl::StatusOr<std::vector<AzpSample>> DetectSamples(
    const std::vector<SummaryPage> &pages,
    const std::vector<PosPattern> &patterns, const MorphLexicon &lexicon,
    const DetectOptions &options, int workers, DetectStats *stats) {
  struct PageResult {
    std::vector<AzpSample> samples;
    DetectStats stats;
  };
  absl::StatusOr<std::vector<PageResult>> results = ParallelMap<PageResult>(
      pages.size(), workers, [&](int i) -> absl::StatusOr<PageResult> {
        PageResult r;
        if (!options.onp && !options.rsm) return r;
        absl::StatusOr<std::vector<AzpSample>> found =
            DetectPage(pages[i], patterns, lexicon, options, &r.stats);
        if (!found.ok()) return found.status();
        r.samples = *std::move(found);
        return r;
      });
  if (!results.ok()) return results.status();
  std::vector<AzpSample> samples;
  DetectStats total;
  for (PageResult &r : *results) {
    total.pages += r.stats.pages;
    total.pages_without_title += r.stats.pages_without_title;
    total.onp_matches += r.stats.onp_matches;
    total.rsm_subjects += r.stats.rsm_subjects;
    samples.insert(samples.end(), std::make_move_iterator(r.samples.begin()),
                   std::make_move_iterator(r.samples.end()));
  }
  if (stats != nullptr) *stats = total;
  return samples;
}

namespace {

ordered_json MethodCounts(const std::vector<AzpSample> &samples,
                          std::initializer_list<Method> methods) {
  MethodStats stats = CountByMethod(samples);
  ordered_json j = ordered_json::object();
  for (Method m : methods) {
    auto it = stats.counts.find(m);
    j[std::string(MethodName(m))] = it == stats.counts.end() ? 0 : it->second;
  }
  return j;
}

absl::StatusOr<std::string> FileDigest(const std::string &path) {
  absl::StatusOr<std::string> text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  return Sha256Hex(*text);
}

// Tracks stage progress so a failure can still report how far the run got.
class StageRunner {
 public:
  StageRunner(ordered_json *manifest, ordered_json *timings)
      : manifest_(manifest), timings_(timings) {}

  absl::Status Run(const char *name, const std::function<absl::Status()> &fn) {
    auto start = std::chrono::steady_clock::now();
    absl::Status status = fn();
    std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    (*timings_)[name] = elapsed.count();
    if (!status.ok()) {
      (*manifest_)["status"] = "failed";
      (*manifest_)["failed_stage"] = name;
      (*manifest_)["error"] = std::string(status.message());
      return absl::Status(status.code(),
                          absl::StrCat("stage ", name, ": ", status.message()));
    }
    (*manifest_)["stages_completed"].push_back(name);
    return absl::OkStatus();
  }

 private:
  ordered_json *manifest_;
  ordered_json *timings_;
};

absl::Status WriteJson(const fs::path &path, const ordered_json &j) {
  return WriteStringToFile(path.string(), j.dump(2) + "\n");
}

}  // namespace

absl::StatusOr<RunResult> RunPipeline(const PipelineConfig &config) {
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;
  std::error_code ec;
  fs::create_directories(config.out, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create ", config.out, ": ", ec.message()));
  }
  const fs::path out_dir(config.out);

  RunResult result;
  ordered_json &manifest = result.manifest;
  manifest["config_hash"] = Sha256Hex(CanonicalConfig(config).dump());
  manifest["config"] = CanonicalConfig(config);
  manifest["status"] = "running";
  manifest["stages_completed"] = ordered_json::array();
  ordered_json &counts = manifest["counts"];
  StageRunner stages(&manifest, &result.timings);

  HttpOptions http;
  http.requests_per_second = config.rate_limit;
  http.max_in_flight = config.max_in_flight;
  Providers providers;
  Tagset tagset = Tagset::ArabicPenn();
  std::optional<MorphLexicon> lexicon;
  std::vector<TaggedDocument> gold;
  std::vector<RawPage> raw_pages;
  std::vector<SummaryPage> pages;
  std::vector<PatternStats> scored;
  std::vector<PosPattern> patterns;
  std::vector<AzpSample> detected;
  std::vector<AzpSample> generated;

  auto run = [&]() -> absl::Status {
    if (absl::Status s = stages.Run("setup", [&]() -> absl::Status {
          ordered_json inputs;
          for (auto [name, path] :
               {std::pair<const char *, const std::string *>{"gold",
                                                             &config.gold},
                {"pages", &config.pages},
                {"lexicon", &config.lexicon}}) {
            absl::StatusOr<std::string> digest = FileDigest(*path);
            if (!digest.ok()) return digest.status();
            inputs[name] = *digest;
          }
          manifest["input_digests"] = inputs;
          if (!config.tagset.empty()) {
            absl::StatusOr<Tagset> loaded = Tagset::FromFile(config.tagset);
            if (!loaded.ok()) return loaded.status();
            tagset = *std::move(loaded);
          }
          absl::StatusOr<MorphLexicon> lex =
              MorphLexicon::FromFile(config.lexicon);
          if (!lex.ok()) return lex.status();
          lexicon.emplace(*std::move(lex));
          absl::StatusOr<std::unique_ptr<TaggingProvider>> tagger =
              MakeTagger(config.tagger, http, config.default_tag);
          if (!tagger.ok()) return tagger.status();
          providers.tagger = *std::move(tagger);
          if (config.methods.count(Method::kMcm)) {
            absl::StatusOr<std::unique_ptr<MaskedLmProvider>> lm =
                MakeMaskedLm(config.lm, http);
            if (!lm.ok()) return lm.status();
            providers.lm = *std::move(lm);
          }
          if (config.methods.count(Method::kBt)) {
            absl::StatusOr<std::unique_ptr<TranslationProvider>> tr =
                MakeTranslator(config.translator, http);
            if (!tr.ok()) return tr.status();
            providers.translator = *std::move(tr);
          }
          return absl::OkStatus();
        });
        !s.ok()) {
      return s;
    }

    if (absl::Status s = stages.Run("normalize", [&]() -> absl::Status {
          absl::StatusOr<std::vector<TaggedDocument>> docs =
              ReadTaggedFile(config.gold, tagset);
          if (!docs.ok()) return docs.status();
          gold = *std::move(docs);
          int64_t gold_gaps = 0;
          for (TaggedDocument &doc : gold) {
            for (Sentence &sentence : doc.sentences) {
              for (Token &token : sentence.tokens) {
                token.surface = NormalizeText(token.surface);
              }
              gold_gaps += sentence.azp_gaps.size();
            }
          }
          absl::StatusOr<std::vector<RawPage>> loaded = ReadPages(config.pages);
          if (!loaded.ok()) return loaded.status();
          raw_pages = *std::move(loaded);
          counts["gold_documents"] = gold.size();
          counts["gold_gaps"] = gold_gaps;
          counts["pages"] = raw_pages.size();
          return absl::OkStatus();
        });
        !s.ok()) {
      return s;
    }

    if (absl::Status s = stages.Run("tag", [&]() -> absl::Status {
          absl::StatusOr<std::vector<SummaryPage>> tagged =
              TagPages(raw_pages, *providers.tagger, config.workers);
          if (!tagged.ok()) return tagged.status();
          pages = *std::move(tagged);
          int64_t sentences = 0;
          for (const SummaryPage &page : pages) sentences += page.sentences.size();
          counts["page_sentences"] = sentences;
          return absl::OkStatus();
        });
        !s.ok()) {
      return s;
    }

    if (absl::Status s = stages.Run("mine", [&]() -> absl::Status {
          if (!config.methods.count(Method::kOnp)) {
            counts["gold_windows"] = 0;
            counts["patterns_selected"] = 0;
            return absl::OkStatus();
          }
          absl::StatusOr<std::vector<PatternStats>> mined =
              MinePatterns(gold, config.window);
          if (!mined.ok()) return mined.status();
          scored = *std::move(mined);
          patterns = SelectTop(scored, config.k);
          std::vector<PatternStats> top(
              scored.begin(),
              scored.begin() + std::min<size_t>(scored.size(), config.k));
          counts["gold_windows"] = scored.empty() ? 0 : scored.front().n;
          counts["patterns_selected"] = patterns.size();
          return WriteStringToFile((out_dir / "patterns.tsv").string(),
                                   SerializePatternStats(top));
        });
        !s.ok()) {
      return s;
    }

    if (absl::Status s = stages.Run("detect", [&]() -> absl::Status {
          DetectOptions options;
          options.onp = config.methods.count(Method::kOnp) > 0;
          options.rsm = config.methods.count(Method::kRsm) > 0;
          options.corpus_id = config.corpus_id;
          DetectStats stats;
          absl::StatusOr<std::vector<AzpSample>> found = DetectSamples(
              pages, patterns, *lexicon, options, config.workers, &stats);
          if (!found.ok()) return found.status();
          detected = *std::move(found);
          counts["pages_without_title"] = stats.pages_without_title;
          counts["detected"] =
              MethodCounts(detected, {Method::kOnp, Method::kRsm});
          counts["detected_total"] = detected.size();
          return absl::OkStatus();
        });
        !s.ok()) {
      return s;
    }

    if (absl::Status s = stages.Run("generate", [&]() -> absl::Status {
          GenerateOptions options;
          options.methods = config.methods;
          options.top_k = config.top_k;
          options.pivot = config.pivot;
          options.workers = config.workers;
          absl::StatusOr<std::vector<AzpSample>> out =
              GenerateSamples(detected, providers, *lexicon, options);
          if (!out.ok()) return out.status();
          generated = *std::move(out);
          counts["generated"] = MethodCounts(
              generated, {Method::kMcm, Method::kBt, Method::kCsa});
          counts["generated_total"] = generated.size();
          return absl::OkStatus();
        });
        !s.ok()) {
      return s;
    }

    if (absl::Status s = stages.Run("filter", [&]() -> absl::Status {
          std::vector<AzpSample> all = detected;
          all.insert(all.end(), generated.begin(), generated.end());
          FilterResult filtered = FilterSamples(all, *lexicon, config.lenient);
          result.kept = std::move(filtered.kept);
          result.rejected = std::move(filtered.rejected);
          SortSamples(&result.kept);
          std::stable_sort(result.rejected.begin(), result.rejected.end(),
                           [](const Rejection &a, const Rejection &b) {
                             return std::tie(a.sample.source, a.sample.method,
                                             a.sample.id) <
                                    std::tie(b.sample.source, b.sample.method,
                                             b.sample.id);
                           });
          counts["filtered_kept"] = result.kept.size();
          counts["filtered_rejected"] = result.rejected.size();
          counts["kept"] = MethodCounts(
              result.kept, {Method::kOnp, Method::kRsm, Method::kMcm,
                            Method::kBt, Method::kCsa});
          ordered_json reasons;
          for (RejectReason reason :
               {RejectReason::kNumberMismatch, RejectReason::kGenderMismatch,
                RejectReason::kUnanalyzable}) {
            int64_t n = 0;
            for (const Rejection &r : result.rejected) n += r.reason == reason;
            reasons[std::string(RejectReasonName(reason))] = n;
          }
          manifest["rejections"] = reasons;
          return absl::OkStatus();
        });
        !s.ok()) {
      return s;
    }

    return stages.Run("write", [&]() -> absl::Status {
      if (absl::Status s = WriteSamples(result.kept,
                                        (out_dir / "samples.azp").string());
          !s.ok()) {
        return s;
      }
      std::string rejected;
      for (const Rejection &r : result.rejected) {
        absl::StrAppend(&rejected, r.sample.id, "\t",
                        RejectReasonName(r.reason), "\n");
      }
      if (absl::Status s = WriteStringToFile(
              (out_dir / "rejected.tsv").string(), rejected);
          !s.ok()) {
        return s;
      }
      return WriteStringToFile((out_dir / "stats.txt").string(),
                               RenderStats(CountByMethod(result.kept)));
    });
  };

  absl::Status status = run();
  ordered_json calls;
  calls["lm"] = providers.lm ? providers.lm->calls() : 0;
  calls["translator"] =
      providers.translator ? providers.translator->calls() : 0;
  calls["tagger"] = providers.tagger ? providers.tagger->calls() : 0;
  manifest["provider_calls"] = calls;
  if (status.ok()) manifest["status"] = "ok";
  // Best effort: the manifest of a failed run is diagnostic output.
  absl::Status wrote = WriteJson(out_dir / "manifest.json", manifest);
  absl::Status timed = WriteJson(out_dir / "timings.json", result.timings);
  if (!status.ok()) return status;
  if (!wrote.ok()) return wrote;
  if (!timed.ok()) return timed;
  return result;
}

}  // namespace azp
