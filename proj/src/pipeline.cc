// Copyright 2026 The fairmt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairmt/pipeline.h"

#include <algorithm>
#include <iostream>
#include <map>

#include "absl/strings/str_cat.h"
#include "fairmt/annotation.h"
#include "fairmt/csv.h"
#include "fairmt/failure_detection.h"
#include "fairmt/heuristic_annotator.h"
#include "fairmt/io.h"
#include "fairmt/mutant_engine.h"
#include "fairmt/resources.h"
#include "fairmt/template_engine.h"
#include "fairmt/utf8.h"
#include "json.hpp"

namespace fairmt {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kReportHeader =
    "characteristic,tool,templates,mutants,btcs,adapter";

fs::path Artifact(const RunConfig& cfg, std::string_view name) {
  return cfg.out / std::string(name);
}

void Log(Stage stage, const std::string& message) {
  std::cerr << "[" << StageName(stage) << "] " << message << "\n";
}

absl::StatusOr<std::string> ReadArtifact(const RunConfig& cfg,
                                         std::string_view name) {
  absl::StatusOr<std::string> bytes = ReadFileToString(Artifact(cfg, name));
  if (!bytes.ok()) {
    return absl::FailedPreconditionError(
        absl::StrCat("missing artifact ", Artifact(cfg, name).string(),
                     "; run the earlier stage first"));
  }
  return bytes;
}

absl::Status WriteArtifact(const RunConfig& cfg, std::string_view name,
                           std::string_view contents) {
  return WriteFileAtomically(Artifact(cfg, name), contents);
}

absl::Status WriteConfig(const RunConfig& cfg) {
  return WriteArtifact(cfg, kConfigFile, SerializeRunConfig(cfg) + "\n");
}

uint64_t CountLines(std::string_view bytes) { return SplitLines(bytes).size(); }

absl::Status TemplatesStage(const RunConfig& cfg) {
  absl::StatusOr<ResourceBundle> res = LoadResources(cfg.resources);
  if (!res.ok()) return res.status();
  absl::StatusOr<Corpus> corpus =
      LoadCorpus(cfg.corpus, cfg.format, {cfg.max_doc_chars});
  if (!corpus.ok()) return corpus.status();
  for (const IngestRecord& w : corpus->warnings) {
    Log(Stage::kTemplates, absl::StrCat("warning: ", w.id.value_or("?"), ": ",
                                        w.reason));
  }

  std::map<std::string, Annotation> annotations;
  if (cfg.annotations.has_value()) {
    absl::StatusOr<AnnotationSet> set = LoadAnnotationFile(*cfg.annotations);
    if (!set.ok()) return set.status();
    for (const AnnotationWarning& w : set->warnings) {
      Log(Stage::kTemplates, absl::StrCat("warning: ", w.doc_id, ": ", w.message));
    }
    for (Annotation& a : set->annotations) {
      const std::string id = a.doc_id;
      annotations.emplace(id, std::move(a));
    }
  } else {
    std::string dump;
    for (const Document& d : corpus->documents) {
      Annotation a = HeuristicAnnotate(d, *res);
      dump += SerializeAnnotation(a);
      dump += '\n';
      annotations.emplace(d.id, std::move(a));
    }
    if (absl::Status s = WriteArtifact(cfg, kAnnotationsFile, dump); !s.ok()) {
      return s;
    }
  }

  std::vector<IngestRecord> rejects = corpus->rejects;
  std::vector<Template> templates;
  const std::string kind(CharacteristicName(cfg.characteristic));
  for (const Document& d : corpus->documents) {
    auto it = annotations.find(d.id);
    if (it == annotations.end()) {
      rejects.push_back({d.id, 0, "no annotation for document"});
      continue;
    }
    absl::StatusOr<std::optional<Template>> t =
        GenerateTemplate(cfg.characteristic, d, it->second, *res);
    if (!t.ok()) {
      rejects.push_back({d.id, 0, absl::StrCat(kind, " template: ",
                                               std::string(t.status().message()))});
      continue;
    }
    if (t->has_value()) templates.push_back(**std::move(t));
  }
  std::sort(templates.begin(), templates.end(),
            [](const Template& a, const Template& b) {
              return std::tie(a.source_doc, a.id) < std::tie(b.source_doc, b.id);
            });

  if (absl::Status s = WriteArtifact(cfg, kDocumentsFile,
                                     DocumentsToJsonl(corpus->documents));
      !s.ok()) {
    return s;
  }
  if (absl::Status s =
          WriteArtifact(cfg, kRejectsFile, IngestRecordsToJsonl(rejects));
      !s.ok()) {
    return s;
  }
  if (absl::Status s =
          WriteArtifact(cfg, kTemplatesFile, TemplatesToJsonl(templates));
      !s.ok()) {
    return s;
  }
  Log(Stage::kTemplates,
      absl::StrCat(corpus->documents.size(), " documents, ", templates.size(), " ",
                   kind, " templates, ", rejects.size(), " rejects"));
  return absl::OkStatus();
}

absl::Status MutantsStage(const RunConfig& cfg) {
  absl::StatusOr<ResourceBundle> res = LoadResources(cfg.resources);
  if (!res.ok()) return res.status();
  absl::StatusOr<std::string> bytes = ReadArtifact(cfg, kTemplatesFile);
  if (!bytes.ok()) return bytes.status();
  absl::StatusOr<std::vector<Template>> templates = ParseTemplatesJsonl(*bytes);
  if (!templates.ok()) return templates.status();
  absl::StatusOr<MutantEngine> engine =
      MutantEngine::Create(*res, {cfg.names_per_gender, cfg.name_country});
  if (!engine.ok()) return engine.status();

  AtomicFileWriter writer(Artifact(cfg, kMutantsFile));
  if (absl::Status s = writer.Open(); !s.ok()) return s;
  uint64_t count = 0;
  for (const Template& t : *templates) {
    for (const Mutant& m : engine->Instantiate(t)) {
      writer.Write(SerializeMutant(m));
      writer.Write("\n");
      ++count;
    }
  }
  if (absl::Status s = writer.Commit(); !s.ok()) return s;
  Log(Stage::kMutants, absl::StrCat(templates->size(), " templates, ", count,
                                    " mutants"));
  return absl::OkStatus();
}

absl::Status PredictStage(const RunConfig& cfg) {
  absl::StatusOr<ResourceBundle> res = LoadResources(cfg.resources);
  if (!res.ok()) return res.status();
  absl::StatusOr<AdapterSpec> spec = ResolveAdapter(cfg);
  if (!spec.ok()) return spec.status();
  absl::StatusOr<std::string> bytes = ReadArtifact(cfg, kMutantsFile);
  if (!bytes.ok()) return bytes.status();
  absl::StatusOr<std::vector<Mutant>> mutants = ParseMutantsJsonl(*bytes);
  if (!mutants.ok()) return mutants.status();

  PredictStats stats;
  absl::StatusOr<std::vector<Prediction>> preds =
      PredictBatch(*spec, *mutants, *res, &stats);
  if (!preds.ok()) return preds.status();
  std::string out;
  for (const Prediction& p : *preds) {
    out += SerializePrediction(p);
    out += '\n';
  }
  if (absl::Status s = WriteArtifact(cfg, kPredictionsFile, out); !s.ok()) {
    return s;
  }
  for (const std::string& id : stats.truncated_ids) {
    Log(Stage::kPredict, absl::StrCat("truncated text of ", id, " to ",
                                      spec->max_chars.value_or(0), " chars"));
  }
  Log(Stage::kPredict,
      absl::StrCat(preds->size(), " predictions from ", AdapterName(*spec), ", ",
                   stats.retries, " retries, ", stats.truncated_ids.size(),
                   " truncated"));
  return absl::OkStatus();
}

absl::Status DetectStage(const RunConfig& cfg) {
  absl::StatusOr<std::string> mbytes = ReadArtifact(cfg, kMutantsFile);
  if (!mbytes.ok()) return mbytes.status();
  absl::StatusOr<std::vector<Mutant>> mutants = ParseMutantsJsonl(*mbytes);
  if (!mutants.ok()) return mutants.status();
  absl::StatusOr<std::string> pbytes = ReadArtifact(cfg, kPredictionsFile);
  if (!pbytes.ok()) return pbytes.status();
  absl::StatusOr<std::vector<Prediction>> preds = ParsePredictionsJsonl(*pbytes);
  if (!preds.ok()) return preds.status();

  AtomicFileWriter writer(Artifact(cfg, kBtcsFile));
  if (absl::Status s = writer.Open(); !s.ok()) return s;
  std::string chunk;
  absl::StatusOr<DetectionSummary> summary = DetectBtcs(
      *mutants, *preds, [&](const BiasUncoveringTestCase& btc) {
        chunk += SerializeBtc(btc);
        chunk += '\n';
        if (chunk.size() > (1 << 20)) {
          writer.Write(chunk);
          chunk.clear();
        }
      });
  if (!summary.ok()) return summary.status();
  writer.Write(chunk);
  if (absl::Status s = writer.Commit(); !s.ok()) return s;
  Log(Stage::kDetect, absl::StrCat(summary->tallies.size(), " templates, ",
                                   summary->btcs, " btcs (unordered pairs)"));
  return absl::OkStatus();
}

absl::Status ReportStage(const RunConfig& cfg) {
  absl::StatusOr<ReportRow> row = ComputeReportRow(cfg);
  if (!row.ok()) return row.status();

  std::string csv;
  if (absl::StatusOr<std::string> old = ReadFileToString(Artifact(cfg, kReportCsvFile));
      old.ok() && !old->empty()) {
    csv = *old;
    if (csv.back() != '\n') csv += '\n';
  } else {
    csv = absl::StrCat(std::string(kReportHeader), "\n");
  }
  if (row->templates > 0) {
    csv += absl::StrCat(CsvEscape(row->characteristic), ",", CsvEscape(row->tool),
                        ",", row->templates, ",", row->mutants, ",", row->btcs,
                        ",", CsvEscape(row->adapter), "\n");
  }
  CsvParseResult parsed = ParseCsv(csv);
  ordered_json rows = ordered_json::array();
  for (size_t i = 1; i < parsed.records.size(); ++i) {
    const auto& f = parsed.records[i].fields;
    if (f.size() != 6) continue;
    ordered_json r;
    r["characteristic"] = f[0];
    r["tool"] = f[1];
    r["templates"] = std::stoull(f[2]);
    r["mutants"] = std::stoull(f[3]);
    r["btcs"] = std::stoull(f[4]);
    r["adapter"] = f[5];
    rows.push_back(std::move(r));
  }
  ordered_json report;
  report["btc_pairs"] = "unordered";
  report["notes"] = {
      "A BTC is an unordered pair of mutants of one template with different "
      "classes and different predicted labels.",
      "EEC templates count each sentence template once per emotion word "
      "(7 templates x 20 words = 140)."};
  report["rows"] = std::move(rows);
  if (absl::Status s = WriteArtifact(cfg, kReportCsvFile, csv); !s.ok()) return s;
  if (absl::Status s = WriteArtifact(cfg, kReportJsonFile, report.dump(2) + "\n");
      !s.ok()) {
    return s;
  }
  Log(Stage::kReport,
      absl::StrCat(row->characteristic, "/", row->tool, ": ", row->templates,
                   " templates, ", row->mutants, " mutants, ", row->btcs, " btcs"));
  return absl::OkStatus();
}

absl::Status EecStage(const RunConfig& cfg) {
  absl::StatusOr<ResourceBundle> res = LoadResources(cfg.resources);
  if (!res.ok()) return res.status();
  absl::StatusOr<EmotionLexicon> lexicon =
      LoadEmotionLexicon(cfg.resources / "emotions.csv");
  if (!lexicon.ok()) return lexicon.status();
  absl::StatusOr<NameSelection> names =
      SelectNames(*res, cfg.names_per_gender, cfg.name_country);
  if (!names.ok()) return names.status();
  std::vector<PersonValue> phrases;
  if (cfg.eec_noun_phrases) {
    absl::StatusOr<std::vector<PersonValue>> loaded =
        LoadNounPhrases(cfg.resources / "eec_noun_phrases.csv");
    if (!loaded.ok()) return loaded.status();
    phrases = *std::move(loaded);
  }
  absl::StatusOr<EecResult> eec =
      GenerateEec(DefaultEecPersons(*names, phrases), *lexicon, cfg.eec_mode);
  if (!eec.ok()) return eec.status();
  std::string ids;
  for (const std::string& id : eec->template_ids) absl::StrAppend(&ids, id, "\n");
  if (absl::Status s = WriteArtifact(cfg, kEecTemplatesFile, ids); !s.ok()) return s;
  if (absl::Status s = WriteArtifact(cfg, kMutantsFile, MutantsToJsonl(eec->mutants));
      !s.ok()) {
    return s;
  }
  Log(Stage::kEec, absl::StrCat(eec->template_ids.size(), " templates, ",
                                eec->mutants.size(), " mutants"));
  return absl::OkStatus();
}

absl::Status Dispatch(Stage stage, const RunConfig& cfg) {
  switch (stage) {
    case Stage::kTemplates:
      return TemplatesStage(cfg);
    case Stage::kMutants:
      return MutantsStage(cfg);
    case Stage::kPredict:
      return PredictStage(cfg);
    case Stage::kDetect:
      return DetectStage(cfg);
    case Stage::kReport:
      return ReportStage(cfg);
    case Stage::kEec:
      return EecStage(cfg);
    case Stage::kRun:
      break;
  }
  return absl::InternalError("unreachable");
}

absl::StatusOr<fs::path> PathField(const json& v, const char* key,
                                   const fs::path& base) {
  if (!v.is_string() || v.get<std::string>().empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("config: '", key, "' must be a non-empty path string"));
  }
  fs::path p = v.get<std::string>();
  return p.is_absolute() ? p : base / p;
}

}  // namespace

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kTemplates:
      return "templates";
    case Stage::kMutants:
      return "mutants";
    case Stage::kPredict:
      return "predict";
    case Stage::kDetect:
      return "detect";
    case Stage::kReport:
      return "report";
    case Stage::kEec:
      return "eec";
    case Stage::kRun:
      return "run";
  }
  return "?";
}

std::optional<Stage> ParseStage(std::string_view name) {
  for (Stage s : {Stage::kTemplates, Stage::kMutants, Stage::kPredict,
                  Stage::kDetect, Stage::kReport, Stage::kEec, Stage::kRun}) {
    if (StageName(s) == name) return s;
  }
  return std::nullopt;
}

absl::StatusOr<RunConfig> ParseRunConfig(std::string_view json_text,
                                         const fs::path& base_dir) {
  json obj = json::parse(json_text, nullptr, false);
  if (obj.is_discarded() || !obj.is_object()) {
    return absl::InvalidArgumentError("config: not a JSON object");
  }
  RunConfig cfg;
  for (const auto& [key, v] : obj.items()) {
    auto bad = [&](std::string_view want) {
      return absl::InvalidArgumentError(
          absl::StrCat("config: '", key, "' must be ", std::string(want)));
    };
    if (key == "characteristic") {
      std::optional<Characteristic> c =
          v.is_string() ? ParseCharacteristic(v.get<std::string>()) : std::nullopt;
      if (!c.has_value()) return bad("gender|occupation|country");
      cfg.characteristic = *c;
    } else if (key == "corpus" || key == "resources" || key == "out" ||
               key == "annotations") {
      if (key == "annotations" && v.is_null()) {
        cfg.annotations.reset();
        continue;
      }
      if (key == "corpus" && v.is_null()) {
        cfg.corpus.clear();
        continue;
      }
      absl::StatusOr<fs::path> p = PathField(v, key.c_str(), base_dir);
      if (!p.ok()) return p.status();
      if (key == "corpus") cfg.corpus = *p;
      if (key == "resources") cfg.resources = *p;
      if (key == "out") cfg.out = *p;
      if (key == "annotations") cfg.annotations = *p;
    } else if (key == "format") {
      if (!v.is_string()) return bad("csv|jsonl");
      absl::StatusOr<CorpusFormat> f = ParseCorpusFormat(v.get<std::string>());
      if (!f.ok()) return f.status();
      cfg.format = *f;
    } else if (key == "max_doc_chars") {
      if (!v.is_number_unsigned()) return bad("a positive integer");
      cfg.max_doc_chars = v.get<size_t>();
    } else if (key == "names_per_gender" || key == "batch_size" ||
               key == "max_in_flight") {
      if (!v.is_number_integer()) return bad("an integer");
      (key == "names_per_gender" ? cfg.names_per_gender
       : key == "batch_size"     ? cfg.batch_size
                                 : cfg.max_in_flight) = v.get<int>();
    } else if (key == "name_country" || key == "sa" || key == "tool") {
      if (!v.is_string()) return bad("a string");
      (key == "name_country" ? cfg.name_country
       : key == "sa"         ? cfg.sa
                             : cfg.tool) = v.get<std::string>();
    } else if (key == "timeout_seconds") {
      if (!v.is_number()) return bad("a number");
      cfg.timeout_seconds = v.get<double>();
    } else if (key == "sa_max_chars") {
      if (v.is_null()) {
        cfg.sa_max_chars.reset();
      } else if (v.is_number_unsigned()) {
        cfg.sa_max_chars = v.get<size_t>();
      } else {
        return bad("a positive integer or null");
      }
    } else if (key == "seed") {
      if (!v.is_number_integer()) return bad("an integer");
      cfg.seed = v.get<int64_t>();
    } else if (key == "eec_mode") {
      if (v == "emotional") {
        cfg.eec_mode = EecMode::kEmotionalOnly;
      } else if (v == "all") {
        cfg.eec_mode = EecMode::kAll;
      } else {
        return bad("emotional|all");
      }
    } else if (key == "eec_noun_phrases") {
      if (!v.is_boolean()) return bad("a boolean");
      cfg.eec_noun_phrases = v.get<bool>();
    } else {
      return absl::InvalidArgumentError(
          absl::StrCat("config: unknown key '", key, "'"));
    }
  }
  return cfg;
}

absl::StatusOr<RunConfig> LoadRunConfig(const fs::path& path) {
  absl::StatusOr<std::string> bytes = ReadFileToString(path);
  if (!bytes.ok()) return bytes.status();
  absl::StatusOr<RunConfig> cfg = ParseRunConfig(
      *bytes, path.has_parent_path() ? path.parent_path() : fs::path("."));
  if (!cfg.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path.string(), ": ", std::string(cfg.status().message())));
  }
  return cfg;
}

std::string SerializeRunConfig(const RunConfig& cfg) {
  auto abs = [](const fs::path& p) {
    return p.empty() ? std::string() : fs::absolute(p).lexically_normal().string();
  };
  ordered_json obj;
  obj["characteristic"] = std::string(CharacteristicName(cfg.characteristic));
  obj["corpus"] = cfg.corpus.empty() ? ordered_json(nullptr) : ordered_json(abs(cfg.corpus));
  obj["format"] = std::string(CorpusFormatName(cfg.format));
  obj["max_doc_chars"] = cfg.max_doc_chars;
  obj["annotations"] =
      cfg.annotations.has_value() ? ordered_json(abs(*cfg.annotations)) : nullptr;
  obj["resources"] = abs(cfg.resources);
  obj["names_per_gender"] = cfg.names_per_gender;
  obj["name_country"] = cfg.name_country;
  obj["sa"] = cfg.sa;
  obj["batch_size"] = cfg.batch_size;
  obj["timeout_seconds"] = cfg.timeout_seconds;
  obj["max_in_flight"] = cfg.max_in_flight;
  obj["sa_max_chars"] =
      cfg.sa_max_chars.has_value() ? ordered_json(*cfg.sa_max_chars) : nullptr;
  obj["out"] = abs(cfg.out);
  obj["seed"] = cfg.seed;
  obj["eec_mode"] = cfg.eec_mode == EecMode::kAll ? "all" : "emotional";
  obj["eec_noun_phrases"] = cfg.eec_noun_phrases;
  obj["tool"] = cfg.tool;
  return obj.dump(2);
}

absl::StatusOr<AdapterSpec> ResolveAdapter(const RunConfig& cfg) {
  absl::StatusOr<AdapterSpec> spec = ParseAdapterSpec(cfg.sa);
  if (!spec.ok()) return spec.status();
  if (auto* s = std::get_if<SubprocessSpec>(&spec->kind)) {
    s->batch_size = cfg.batch_size;
    s->timeout_seconds = cfg.timeout_seconds;
  } else if (auto* h = std::get_if<HttpSpec>(&spec->kind)) {
    h->batch_size = cfg.batch_size;
    h->timeout_seconds = cfg.timeout_seconds;
    h->max_in_flight = cfg.max_in_flight;
  }
  spec->max_chars = cfg.sa_max_chars;
  if (absl::Status s = ValidateAdapterSpec(*spec); !s.ok()) return s;
  return spec;
}

absl::Status ValidateRunConfig(const RunConfig& cfg, Stage stage) {
  auto need = [](const fs::path& p, std::string_view what) -> absl::Status {
    if (p.empty() || !fs::exists(p)) {
      return absl::InvalidArgumentError(absl::StrCat(
          std::string(what), " not found: ", p.empty() ? "(unset)" : p.string()));
    }
    return absl::OkStatus();
  };
  if (cfg.names_per_gender < 1) {
    return absl::InvalidArgumentError("names_per_gender must be at least 1");
  }
  if (cfg.max_doc_chars < 1) {
    return absl::InvalidArgumentError("max_doc_chars must be positive");
  }
  if (cfg.out.empty()) return absl::InvalidArgumentError("output directory unset");
  if (stage != Stage::kDetect) {
    if (absl::Status s = need(cfg.resources, "resources directory"); !s.ok()) {
      return s;
    }
  }
  if (stage == Stage::kTemplates || stage == Stage::kRun) {
    if (absl::Status s = need(cfg.corpus, "corpus"); !s.ok()) return s;
    if (cfg.annotations.has_value()) {
      if (absl::Status s = need(*cfg.annotations, "annotation file"); !s.ok()) {
        return s;
      }
    }
  }
  if (stage == Stage::kPredict || stage == Stage::kRun) {
    if (absl::StatusOr<AdapterSpec> spec = ResolveAdapter(cfg); !spec.ok()) {
      return spec.status();
    }
  }
  return absl::OkStatus();
}

absl::Status RunStage(Stage stage, const RunConfig& cfg) {
  std::vector<Stage> stages = {stage};
  RunConfig resolved = cfg;
  if (stage == Stage::kRun) {
    stages = {Stage::kTemplates, Stage::kMutants, Stage::kPredict,
              Stage::kDetect, Stage::kReport};
  }
  if (stage == Stage::kEec) resolved.tool = "eec";
  if (stage == Stage::kTemplates || stage == Stage::kRun) resolved.tool = "fairmt";
  if (absl::Status s = WriteConfig(resolved); !s.ok()) return s;
  for (Stage s : stages) {
    if (absl::Status status = Dispatch(s, resolved); !status.ok()) {
      return absl::Status(status.code(),
                          absl::StrCat("stage '", std::string(StageName(s)),
                                       "' failed: ",
                                       std::string(status.message())));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<ReportRow> ComputeReportRow(const RunConfig& cfg) {
  ReportRow row;
  row.characteristic = cfg.tool == "eec"
                           ? "gender"
                           : std::string(CharacteristicName(cfg.characteristic));
  row.tool = cfg.tool;
  absl::StatusOr<AdapterSpec> spec = ParseAdapterSpec(cfg.sa);
  row.adapter = spec.ok() ? AdapterName(*spec) : cfg.sa;

  absl::StatusOr<std::string> templates = ReadArtifact(
      cfg, cfg.tool == "eec" ? kEecTemplatesFile : kTemplatesFile);
  if (!templates.ok()) return templates.status();
  row.templates = CountLines(*templates);
  absl::StatusOr<std::string> mutants = ReadArtifact(cfg, kMutantsFile);
  if (!mutants.ok()) return mutants.status();
  row.mutants = CountLines(*mutants);
  absl::StatusOr<std::string> btcs = ReadArtifact(cfg, kBtcsFile);
  if (!btcs.ok()) return btcs.status();
  row.btcs = CountLines(*btcs);
  return row;
}

}  // namespace fairmt
