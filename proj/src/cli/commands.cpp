// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "augabex/cli.hpp"
#include "augabex/corpus.hpp"
#include "augabex/embedsim.hpp"
#include "augabex/error.hpp"
#include "augabex/evaluation.hpp"
#include "augabex/parallel.hpp"
#include "augabex/stats.hpp"

namespace augabex::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : "NA"; }

std::string fixed(double v, int prec = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
  return buf;
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

void ensure_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
}


// ---------------------------------------------------------------------------
// Aggregation helpers

std::optional<MacroAverage> try_macro(const std::vector<std::optional<double>>& values) {
  for (const auto& v : values)
    if (v) return macro_average(values);
  return std::nullopt;
}

ordered_json single_summary(const std::vector<std::optional<double>>& values) {
  const auto m = try_macro(values);
  if (!m) return nullptr;
  ordered_json j;
  j["mean"] = m->mean;
  j["median"] = m->median;
  j["n"] = m->n_defined;
  return j;
}

// O/T summary over instances where both sides are defined.
ordered_json paired_summary(const std::vector<std::string>& ids, const std::vector<std::optional<double>>& o,
                            const std::vector<std::optional<double>>& t, std::optional<Orientation> orientation,
                            PairedScores* keep = nullptr) {
  PairedScores scores;
  std::vector<std::optional<double>> vo, vt;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!o[i] || !t[i]) continue;
    scores.rows.push_back({ids[i], *o[i], *t[i]});
    vo.emplace_back(o[i]);
    vt.emplace_back(t[i]);
  }
  if (scores.rows.empty()) return nullptr;
  const MacroAverage mo = macro_average(vo);
  const MacroAverage mt = macro_average(vt);
  ordered_json j;
  j["mean_o"] = mo.mean;
  j["mean_t"] = mt.mean;
  j["median_o"] = mo.median;
  j["median_t"] = mt.median;
  if (orientation) {
    scores.orientation = *orientation;
    j["lambda_t"] = bt_strength(scores).lambda_t;
  }
  j["n"] = scores.rows.size();
  if (keep) {
    scores.orientation = orientation.value_or(Orientation::kHigherIsBetter);
    *keep = std::move(scores);
  }
  return j;
}

using SystemGetter = std::function<std::optional<double>(const SystemMetrics&)>;

struct SystemMetricDef {
  const char* name;
  SystemGetter get;
  std::optional<Orientation> orientation;
};

const std::vector<SystemMetricDef>& system_metric_defs() {
  using O = Orientation;
  static const std::vector<SystemMetricDef> defs = {
      {"prov_recall", [](const SystemMetrics& m) { return m.prov_recall; }, O::kHigherIsBetter},
      {"lent_cnt", [](const SystemMetrics& m) -> std::optional<double> { return static_cast<double>(m.lent_cnt); },
       O::kHigherIsBetter},
      {"lsa_oag", [](const SystemMetrics& m) { return m.lsa_pair; }, O::kHigherIsBetter},
      {"lsa_doc", [](const SystemMetrics& m) { return m.lsa_doc; }, O::kHigherIsBetter},
      {"embed_oag", [](const SystemMetrics& m) { return m.embed_pair; }, O::kHigherIsBetter},
      {"embed_doc", [](const SystemMetrics& m) { return m.embed_doc; }, O::kHigherIsBetter},
      {"rouge1_f", [](const SystemMetrics& m) -> std::optional<double> { return m.rouge1.f1; }, O::kHigherIsBetter},
      {"rouge2_f", [](const SystemMetrics& m) -> std::optional<double> { return m.rouge2.f1; }, O::kHigherIsBetter},
      {"rougeL_f", [](const SystemMetrics& m) -> std::optional<double> { return m.rougeL.f1; }, O::kHigherIsBetter},
      {"jsd", [](const SystemMetrics& m) -> std::optional<double> { return m.jsd; }, O::kLowerIsBetter},
      {"kld_doc", [](const SystemMetrics& m) -> std::optional<double> { return m.kld_doc; }, O::kLowerIsBetter},
      {"word_count",
       [](const SystemMetrics& m) -> std::optional<double> { return static_cast<double>(m.profile.word_count); },
       std::nullopt},
      {"avg_sentence_len",
       [](const SystemMetrics& m) -> std::optional<double> { return m.profile.avg_sentence_len; }, std::nullopt},
      {"fk_score", [](const SystemMetrics& m) -> std::optional<double> { return m.profile.fk_score; },
       std::nullopt},
  };
  return defs;
}

// ---------------------------------------------------------------------------
// OAG vs TEG report

struct PairedExport {
  std::string file;
  PairedScores scores;
};

ordered_json evaluation_metrics(const std::vector<const InstanceEvaluation*>& evs, bool embeddings,
                                std::vector<PairedExport>* exports) {
  std::vector<std::string> ids;
  for (const auto* e : evs) ids.push_back(e->id);
  auto col = [&](auto&& get) {
    std::vector<std::optional<double>> v;
    for (const auto* e : evs) v.emplace_back(get(*e));
    return v;
  };
  auto d = [](auto x) -> std::optional<double> { return static_cast<double>(x); };

  ordered_json m;
  m["rouge1_f"] = single_summary(col([](const InstanceEvaluation& e) { return e.system.rouge1.f1; }));
  m["rouge2_f"] = single_summary(col([](const InstanceEvaluation& e) { return e.system.rouge2.f1; }));
  m["rougeL_f"] = single_summary(col([](const InstanceEvaluation& e) { return e.system.rougeL.f1; }));
  m["jsd"] = single_summary(col([](const InstanceEvaluation& e) { return e.system.jsd; }));
  m["lsa_oag_teg"] = single_summary(col([](const InstanceEvaluation& e) { return e.system.lsa_pair; }));
  m["embed_oag_teg"] =
      embeddings ? single_summary(col([](const InstanceEvaluation& e) { return e.system.embed_pair; })) : nullptr;
  m["prov_recall"] = single_summary(col([](const InstanceEvaluation& e) { return e.system.prov_recall; }));

  struct PairedDef {
    const char* name;
    std::function<std::optional<double>(const InstanceEvaluation&)> o, t;
    std::optional<Orientation> orientation;
  };
  const std::vector<PairedDef> paired = {
      {"word_count", [&](const InstanceEvaluation& e) { return d(e.oag.profile.word_count); },
       [&](const InstanceEvaluation& e) { return d(e.system.profile.word_count); }, std::nullopt},
      {"avg_sentence_len", [&](const InstanceEvaluation& e) { return d(e.oag.profile.avg_sentence_len); },
       [&](const InstanceEvaluation& e) { return d(e.system.profile.avg_sentence_len); }, std::nullopt},
      {"fk_score", [&](const InstanceEvaluation& e) { return d(e.oag.profile.fk_score); },
       [&](const InstanceEvaluation& e) { return d(e.system.profile.fk_score); }, std::nullopt},
      {"lent_cnt", [&](const InstanceEvaluation& e) { return d(e.oag.lent_cnt); },
       [&](const InstanceEvaluation& e) { return d(e.system.lent_cnt); }, Orientation::kHigherIsBetter},
      {"lsa_doc", [](const InstanceEvaluation& e) { return e.oag.lsa_doc; },
       [](const InstanceEvaluation& e) { return e.system.lsa_doc; }, Orientation::kHigherIsBetter},
      {"kld_doc", [&](const InstanceEvaluation& e) { return d(e.oag.kld_doc); },
       [&](const InstanceEvaluation& e) { return d(e.system.kld_doc); }, Orientation::kLowerIsBetter},
      {"embed_doc", [](const InstanceEvaluation& e) { return e.oag.embed_doc; },
       [](const InstanceEvaluation& e) { return e.system.embed_doc; }, Orientation::kHigherIsBetter},
  };
  for (const auto& p : paired) {
    if (std::string(p.name) == "embed_doc" && !embeddings) {
      m[p.name] = nullptr;
      continue;
    }
    PairedScores keep;
    m[p.name] = paired_summary(ids, col(p.o), col(p.t), p.orientation, exports ? &keep : nullptr);
    if (exports && !keep.rows.empty()) {
      keep.metric = p.name;
      exports->push_back({std::string("paired_") + p.name + ".csv", std::move(keep)});
    }
  }
  return m;
}

std::string instances_csv(const std::vector<const InstanceEvaluation*>& evs) {
  std::ostringstream out;
  out << "id,dataset,wc_o,wc_t,asl_o,asl_t,fk_o,fk_t,rouge1_f,rouge2_f,rougeL_f,jsd,kld_doc_o,kld_doc_t,"
         "lsa_oag_teg,lsa_doc_o,lsa_doc_t,embed_oag_teg,embed_doc_o,embed_doc_t,lent_cnt_o,lent_cnt_t,"
         "prov_recall\n";
  for (const auto* e : evs) {
    const auto& o = e->oag;
    const auto& t = e->system;
    out << e->id << ',' << e->dataset << ',' << o.profile.word_count << ',' << t.profile.word_count << ','
        << num(o.profile.avg_sentence_len) << ',' << num(t.profile.avg_sentence_len) << ','
        << num(o.profile.fk_score) << ',' << num(t.profile.fk_score) << ',' << num(t.rouge1.f1) << ','
        << num(t.rouge2.f1) << ',' << num(t.rougeL.f1) << ',' << num(t.jsd) << ',' << num(o.kld_doc) << ','
        << num(t.kld_doc) << ',' << opt_num(t.lsa_pair) << ',' << opt_num(o.lsa_doc) << ','
        << opt_num(t.lsa_doc) << ',' << opt_num(t.embed_pair) << ',' << opt_num(o.embed_doc) << ','
        << opt_num(t.embed_doc) << ',' << o.lent_cnt << ',' << t.lent_cnt << ',' << opt_num(t.prov_recall)
        << '\n';
  }
  return out.str();
}

void print_metric_table(std::ostream& log, const std::string& dataset, const ordered_json& metrics) {
  char line[160];
  log << "dataset " << dataset << '\n';
  std::snprintf(line, sizeof(line), "  %-18s %10s %10s %10s %10s %10s\n", "metric", "mean_o", "mean_t", "median_o",
                "median_t", "lambda_t");
  log << line;
  for (const auto& [name, v] : metrics.items()) {
    if (v.is_null()) {
      std::snprintf(line, sizeof(line), "  %-18s %10s\n", name.c_str(), "absent");
    } else if (v.contains("mean_o")) {
      const std::string lt = v.contains("lambda_t") ? fixed(v["lambda_t"].get<double>()) : "-";
      std::snprintf(line, sizeof(line), "  %-18s %10s %10s %10s %10s %10s\n", name.c_str(),
                    fixed(v["mean_o"].get<double>()).c_str(), fixed(v["mean_t"].get<double>()).c_str(),
                    fixed(v["median_o"].get<double>()).c_str(), fixed(v["median_t"].get<double>()).c_str(),
                    lt.c_str());
    } else {
      std::snprintf(line, sizeof(line), "  %-18s %10s %10s %10s %10s %10s\n", name.c_str(), "-",
                    fixed(v["mean"].get<double>()).c_str(), "-", fixed(v["median"].get<double>()).c_str(), "-");
    }
    log << line;
  }
}

ordered_json config_json(const RunConfig& cfg) {
  ordered_json c;
  c["alpha"] = cfg.alpha;
  c["entities"] = cfg.entities == EntitySource::kPattern ? "pattern" : "annotations";
  c["stopwords"] = cfg.stopwords ? cfg.stopwords->generic_string() : "default";
  c["embeddings"] = cfg.embeddings ? ordered_json(cfg.embeddings->filename().generic_string()) : ordered_json("absent");
  return c;
}

// Aligns corpus and summary ids; returns the orphan description or empty.
std::string orphans(const std::vector<CaseRecord>& records, const std::map<std::string, const SummaryLine*>& by_id) {
  std::vector<std::string> missing, extra;
  std::map<std::string, bool> in_corpus;
  for (const auto& r : records) {
    in_corpus[r.id] = true;
    if (!by_id.contains(r.id)) missing.push_back(r.id);
  }
  for (const auto& [id, _] : by_id)
    if (!in_corpus.contains(id)) extra.push_back(id);
  if (missing.empty() && extra.empty()) return {};
  std::string msg = "id mismatch between corpus and summary file;";
  if (!missing.empty()) {
    msg += " missing summaries:";
    for (const auto& id : missing) msg += " " + id;
    msg += ";";
  }
  if (!extra.empty()) {
    msg += " unknown ids:";
    for (const auto& id : extra) msg += " " + id;
  }
  return msg;
}

// Skipped records make the run a partial failure, whether or not any record succeeded.
int finish(std::size_t failed) { return failed == 0 ? kExitOk : kExitPartial; }

}  // namespace

// ---------------------------------------------------------------------------

std::vector<SummaryLine> load_summaries(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open summary file " + path.string());
  std::vector<SummaryLine> out;
  std::map<std::string, bool> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    SummaryLine s;
    if (!obj.is_object() || !obj.contains("id") || !obj["id"].is_string())
      throw ParseError("summary line needs a string \"id\"", line_no);
    s.id = obj["id"].get<std::string>();
    if (!obj.contains("selected_indices") || !obj["selected_indices"].is_array())
      throw ParseError("summary line needs \"selected_indices\"", line_no);
    for (const auto& v : obj["selected_indices"]) {
      if (!v.is_number_unsigned()) throw ParseError("selected_indices must be non-negative integers", line_no);
      s.selected_indices.push_back(v.get<std::size_t>());
    }
    for (const char* key : {"teg", "lsa"}) {
      if (obj.contains(key) && obj[key].is_string()) s.text = obj[key].get<std::string>();
    }
    if (obj.contains("word_count") && obj["word_count"].is_number_unsigned())
      s.word_count = obj["word_count"].get<std::size_t>();
    if (seen[s.id]) throw ValidationError("duplicate summary id \"" + s.id + "\"");
    seen[s.id] = true;
    out.push_back(std::move(s));
  }
  return out;
}

int cmd_transform(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  const auto records = load_corpus(cfg.input);
  ensure_out_dir(cfg.out);
  const PipelineConfig pipeline{cfg.k, cfg.lambda};
  pipeline.validate();

  const std::size_t n = records.size();
  std::vector<std::optional<ExtractiveSummary>> results(n);
  std::vector<std::string> provenance(n), errors(n);
  parallel_for(n, cfg.workers, [&](std::size_t i) {
    try {
      const SegmentedText doc = segment(records[i].doc_text);
      const SegmentedText oag = segment(records[i].oag_text);
      if (doc.empty() || oag.empty()) throw ValidationError("document or summary has no sentences");
      const CandidateSet cands = select_candidates(doc, oag, pipeline.k);
      ExtractiveSummary teg = mmr_select(cands, pipeline.lambda, oag.word_count);

      std::ostringstream p;
      std::vector<std::size_t> member_ids;
      for (const auto& c : cands.members) member_ids.push_back(c.doc_index);
      p << "record " << records[i].id << ": doc_sentences=" << doc.size() << " oag_sentences=" << oag.size()
        << " budget=" << oag.word_count << " candidates=" << join_indices(member_ids)
        << " selected=" << join_indices(teg.selected) << " words=" << teg.word_count << '\n';
      for (const auto& [j, ranked] : cands.provenance) {
        p << "  oag[" << j << "] ->";
        for (const auto& r : ranked) p << ' ' << r.doc_index << ':' << fixed(r.score, 6);
        p << '\n';
      }
      p << "  mmr trace:";
      for (const auto& t : teg.trace) p << ' ' << t.doc_index << ':' << fixed(t.score, 6);
      p << '\n';
      provenance[i] = p.str();
      results[i] = std::move(teg);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });

  std::ostringstream jsonl, plog;
  plog << "augabex transform k=" << pipeline.k << " lambda=" << num(pipeline.lambda)
       << " budget=oag-word-count input=" << cfg.input.filename().generic_string() << '\n';
  std::size_t ok = 0, failed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!results[i]) {
      ++failed;
      plog << "record " << records[i].id << ": SKIPPED: " << errors[i] << '\n';
      err << "transform: skipping record " << records[i].id << ": " << errors[i] << '\n';
      continue;
    }
    ++ok;
    ordered_json j;
    j["id"] = records[i].id;
    j["selected_indices"] = results[i]->selected;
    j["teg"] = results[i]->text;
    j["word_count"] = results[i]->word_count;
    j["k"] = pipeline.k;
    j["lambda"] = pipeline.lambda;
    jsonl << j.dump() << '\n';
    plog << provenance[i];
  }
  write_text(cfg.out / "teg.jsonl", jsonl.str());
  write_text(cfg.out / "transform.log", plog.str());
  log << "k=" << pipeline.k << " lambda=" << num(pipeline.lambda) << '\n';
  log << "transform: " << ok << " of " << n << " records written to " << (cfg.out / "teg.jsonl").generic_string();
  if (failed) log << " (" << failed << " skipped)";
  log << '\n';
  return finish(failed);
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  const auto records = load_corpus(cfg.input);
  const auto summaries = load_summaries(*cfg.teg);
  std::map<std::string, const SummaryLine*> by_id;
  for (const auto& s : summaries) by_id[s.id] = &s;
  if (auto msg = orphans(records, by_id); !msg.empty()) throw ValidationError(msg);

  const StopwordSet stopwords = cfg.resolve_stopwords();
  std::optional<EmbeddingStore> store;
  if (cfg.embeddings) store = load_embeddings(*cfg.embeddings);
  ensure_out_dir(cfg.out);
  const EvalContext ctx{&stopwords, cfg.alpha, cfg.entities, store ? &*store : nullptr};

  const std::size_t n = records.size();
  std::vector<std::optional<InstanceEvaluation>> evals(n);
  std::vector<std::string> errors(n);
  parallel_for(n, cfg.workers, [&](std::size_t i) {
    try {
      const CaseRecord& r = records[i];
      const SegmentedText doc = segment(r.doc_text);
      const SegmentedText oag = segment(r.oag_text);
      const ExtractiveSummary teg = summary_from_indices(doc, by_id.at(r.id)->selected_indices);
      evals[i] = evaluate_instance(r, doc, oag, teg, "teg", ctx);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });

  std::map<std::string, std::vector<const InstanceEvaluation*>> groups;
  std::vector<const InstanceEvaluation*> all;
  std::size_t ok = 0, failed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!evals[i]) {
      ++failed;
      err << "evaluate: skipping record " << records[i].id << ": " << errors[i] << '\n';
      continue;
    }
    ++ok;
    groups[evals[i]->dataset].push_back(&*evals[i]);
    all.push_back(&*evals[i]);
  }

  ordered_json report;
  report["config"] = config_json(cfg);
  report["datasets"] = ordered_json::object();
  std::vector<PairedExport> exports;
  for (const auto& [name, evs] : groups) {
    ordered_json d;
    d["n_instances"] = evs.size();
    d["metrics"] = evaluation_metrics(evs, store.has_value(), nullptr);
    report["datasets"][name] = d;
    print_metric_table(log, name, d["metrics"]);
  }
  if (!all.empty()) evaluation_metrics(all, store.has_value(), &exports);

  write_text(cfg.out / "report.json", report.dump(2) + "\n");
  write_text(cfg.out / "instances.csv", instances_csv(all));
  for (const auto& e : exports) export_paired(e.scores, cfg.out / e.file);
  PairedScores review;
  review.metric = "rougeL_f";
  for (const auto* e : all) review.rows.push_back({e->id, 1.0, e->system.rougeL.f1});
  export_paired(review, cfg.out / "review_rouge_l.csv");

  log << "evaluate: " << ok << " of " << n << " records scored";
  if (failed) log << " (" << failed << " skipped)";
  log << "; report at " << (cfg.out / "report.json").generic_string() << '\n';
  return finish(failed);
}

int cmd_baseline_lsa(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  const auto records = load_corpus(cfg.input);
  std::vector<SummaryLine> tegs;
  std::map<std::string, const SummaryLine*> teg_by_id;
  if (cfg.teg) {
    tegs = load_summaries(*cfg.teg);
    for (const auto& s : tegs) teg_by_id[s.id] = &s;
    if (auto msg = orphans(records, teg_by_id); !msg.empty()) throw ValidationError(msg);
  }
  const StopwordSet stopwords = cfg.resolve_stopwords();
  std::optional<EmbeddingStore> store;
  if (cfg.embeddings) store = load_embeddings(*cfg.embeddings);
  ensure_out_dir(cfg.out);
  const EvalContext ctx{&stopwords, cfg.alpha, cfg.entities, store ? &*store : nullptr};

  struct Row {
    ExtractiveSummary lsa;
    InstanceEvaluation lsa_eval;
    std::optional<InstanceEvaluation> teg_eval;
  };
  const std::size_t n = records.size();
  std::vector<std::optional<Row>> rows(n);
  std::vector<std::string> errors(n);
  parallel_for(n, cfg.workers, [&](std::size_t i) {
    try {
      const CaseRecord& r = records[i];
      const SegmentedText doc = segment(r.doc_text);
      const SegmentedText oag = segment(r.oag_text);
      if (doc.empty() || oag.empty()) throw ValidationError("document or summary has no sentences");
      Row row;
      row.lsa = lsa_summarize(doc, oag.word_count, stopwords);
      row.lsa_eval = evaluate_instance(r, doc, oag, row.lsa, "lsa", ctx);
      if (cfg.teg) {
        const ExtractiveSummary teg = summary_from_indices(doc, teg_by_id.at(r.id)->selected_indices);
        row.teg_eval = evaluate_instance(r, doc, oag, teg, "teg", ctx);
      }
      rows[i] = std::move(row);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });

  std::ostringstream jsonl;
  std::map<std::string, std::vector<const Row*>> groups;
  std::size_t ok = 0, failed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i]) {
      ++failed;
      err << "baseline-lsa: skipping record " << records[i].id << ": " << errors[i] << '\n';
      continue;
    }
    ++ok;
    ordered_json j;
    j["id"] = records[i].id;
    j["selected_indices"] = rows[i]->lsa.selected;
    j["lsa"] = rows[i]->lsa.text;
    j["word_count"] = rows[i]->lsa.word_count;
    jsonl << j.dump() << '\n';
    groups[records[i].dataset].push_back(&*rows[i]);
  }

  ordered_json report;
  report["config"] = config_json(cfg);
  report["systems"] = cfg.teg ? ordered_json::array({"lsa", "teg"}) : ordered_json::array({"lsa"});
  report["datasets"] = ordered_json::object();
  char line[160];
  for (const auto& [name, group] : groups) {
    ordered_json metrics;
    log << "dataset " << name << '\n';
    std::snprintf(line, sizeof(line), "  %-18s %10s %10s %12s\n", "metric", "lsa", "teg", "lambda_teg");
    log << line;
    std::vector<std::string> ids;
    for (const Row* r : group) ids.push_back(r->lsa_eval.id);
    for (const auto& def : system_metric_defs()) {
      const bool embed = std::string(def.name).rfind("embed", 0) == 0;
      if (embed && !store) {
        metrics[def.name] = nullptr;
        continue;
      }
      std::vector<std::optional<double>> lsa_vals, teg_vals;
      for (const Row* r : group) {
        lsa_vals.push_back(def.get(r->lsa_eval.system));
        if (r->teg_eval) teg_vals.push_back(def.get(r->teg_eval->system));
      }
      ordered_json m;
      m["lsa"] = single_summary(lsa_vals);
      std::string teg_txt = "-", lam_txt = "-";
      if (cfg.teg) {
        m["teg"] = single_summary(teg_vals);
        if (def.orientation) {
          // System O is the LSA baseline, system T the transformed summaries.
          const ordered_json p = paired_summary(ids, lsa_vals, teg_vals, def.orientation);
          m["lambda_teg"] = p.is_null() ? ordered_json(nullptr) : p["lambda_t"];
          if (!p.is_null()) lam_txt = fixed(p["lambda_t"].get<double>());
        }
        if (!m["teg"].is_null()) teg_txt = fixed(m["teg"]["mean"].get<double>());
      }
      const std::string lsa_txt = m["lsa"].is_null() ? "NA" : fixed(m["lsa"]["mean"].get<double>());
      std::snprintf(line, sizeof(line), "  %-18s %10s %10s %12s\n", def.name, lsa_txt.c_str(), teg_txt.c_str(),
                    lam_txt.c_str());
      log << line;
      metrics[def.name] = m;
    }
    ordered_json d;
    d["n_instances"] = group.size();
    d["metrics"] = metrics;
    report["datasets"][name] = d;
  }

  write_text(cfg.out / "lsa.jsonl", jsonl.str());
  write_text(cfg.out / "lsa_report.json", report.dump(2) + "\n");
  log << "baseline-lsa: " << ok << " of " << n << " records summarized";
  if (failed) log << " (" << failed << " skipped)";
  log << '\n';
  return finish(failed);
}

int cmd_sweep_k(const RunConfig& cfg, std::ostream& log, std::ostream&) {
  const auto records = load_corpus(cfg.input);
  ensure_out_dir(cfg.out);
  const PipelineConfig pipeline{cfg.k, cfg.lambda};
  const auto rows = sweep_k(records, cfg.k_values, pipeline, cfg.entities, cfg.workers);
  std::ostringstream csv;
  csv << "k,prov_recall,n_defined\n";
  log << "  k  prov_recall  n_defined\n";
  char line[96];
  for (const auto& r : rows) {
    csv << r.k << ',' << opt_num(r.prov_recall) << ',' << r.n_defined << '\n';
    std::snprintf(line, sizeof(line), "%3zu  %11s  %9zu\n", r.k,
                  r.prov_recall ? fixed(*r.prov_recall).c_str() : "NA", r.n_defined);
    log << line;
  }
  write_text(cfg.out / "sweep_k.csv", csv.str());
  return kExitOk;
}

int cmd_stats(const RunConfig& cfg, std::ostream& log, std::ostream&) {
  const auto records = load_corpus(cfg.input);
  ensure_out_dir(cfg.out);
  auto to_json = [](const CorpusStats& s) {
    ordered_json j;
    j["n_docs"] = s.n_docs;
    j["avg_wc_doc"] = s.avg_wc_doc;
    j["avg_wc_sum"] = s.avg_wc_sum;
    j["avg_sc_doc"] = s.avg_sc_doc;
    j["avg_sc_sum"] = s.avg_sc_sum;
    j["avg_cr"] = s.avg_cr;
    return j;
  };
  char line[160];
  std::snprintf(line, sizeof(line), "%-14s %6s %10s %10s %8s %8s %8s\n", "dataset", "#CD", "WC(CD)", "WC(S)",
                "SC(CD)", "SC(S)", "CR");
  log << line;
  auto row = [&](const std::string& name, const CorpusStats& s) {
    std::snprintf(line, sizeof(line), "%-14s %6zu %10.1f %10.1f %8.1f %8.1f %8.2f\n", name.c_str(), s.n_docs,
                  s.avg_wc_doc, s.avg_wc_sum, s.avg_sc_doc, s.avg_sc_sum, s.avg_cr);
    log << line;
  };
  ordered_json j;
  j["datasets"] = ordered_json::object();
  for (const auto& [name, s] : corpus_stats_by_dataset(records)) {
    j["datasets"][name] = to_json(s);
    row(name, s);
  }
  const CorpusStats overall = corpus_stats(records);
  j["overall"] = to_json(overall);
  row("(all)", overall);
  write_text(cfg.out / "corpus_stats.json", j.dump(2) + "\n");
  return kExitOk;
}

int cmd_sample_review(const RunConfig& cfg, std::ostream& log, std::ostream&) {
  const PairedScores scores = load_paired(cfg.input, "rougeL_f");
  const auto ids = sample_for_review(scores, cfg.top, cfg.bottom);
  ordered_json j;
  j["top"] = std::vector<std::string>(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(cfg.top));
  j["bottom"] = std::vector<std::string>(ids.begin() + static_cast<std::ptrdiff_t>(cfg.top), ids.end());
  ensure_out_dir(cfg.out);
  write_text(cfg.out / "review_sample.json", j.dump(2) + "\n");
  for (std::size_t i = 0; i < ids.size(); ++i) log << (i < cfg.top ? "top    " : "bottom ") << ids[i] << '\n';
  return kExitOk;
}

int run(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  try {
    cfg.validate();
    if (cfg.command == "transform") return cmd_transform(cfg, log, err);
    if (cfg.command == "evaluate") return cmd_evaluate(cfg, log, err);
    if (cfg.command == "baseline-lsa") return cmd_baseline_lsa(cfg, log, err);
    if (cfg.command == "sweep-k") return cmd_sweep_k(cfg, log, err);
    if (cfg.command == "stats") return cmd_stats(cfg, log, err);
    return cmd_sample_review(cfg, log, err);
  } catch (const UsageError& e) {
    err << "augabex: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "augabex " << cfg.command << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace augabex::cli
