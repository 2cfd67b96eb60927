#include "avkit/cli.hpp"

#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "avkit/agents.hpp"
#include "avkit/dataio.hpp"
#include "avkit/errors.hpp"
#include "avkit/mtgs.hpp"
#include "avkit/report.hpp"
#include "avkit/retrieval.hpp"
#include "avkit/sfs.hpp"
#include "avkit/stem.hpp"
#include "avkit/text_metrics.hpp"

namespace avkit {

using nlohmann::json;

namespace {

struct OutputOptions {
  std::string out_path;
  std::string format = "json";
};

void add_output_flags(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out", o.out_path, "Write the report to this file instead of stdout");
  cmd->add_option("--format", o.format, "Report layout")->check(CLI::IsMember({"json", "jsonl"}));
}

void emit_report(const json& report, const OutputOptions& o, std::ostream& out) {
  const ReportFormat fmt = o.format == "jsonl" ? ReportFormat::kJsonl : ReportFormat::kJson;
  if (o.out_path.empty()) {
    out << render_report(report, fmt);
  } else {
    write_report(report, o.out_path, fmt);
  }
}

std::vector<std::size_t> parse_ks(const std::string& list) {
  std::vector<std::size_t> ks;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size() || v < 1) throw InvalidArgument("bad k value \"" + tok + "\" in --k");
    ks.push_back(static_cast<std::size_t>(v));
  }
  if (ks.empty()) throw InvalidArgument("--k needs at least one value");
  return ks;
}

std::shared_ptr<const TextEmbedder> make_embedder(const std::string& path) {
  if (path.empty()) return std::shared_ptr<const TextEmbedder>(default_embedder());
  return std::make_shared<PrecomputedEmbedder>(load_text_embeddings(path));
}

std::map<std::string, const QAItem*> by_id(const DatasetFile& d) {
  std::map<std::string, const QAItem*> out;
  for (const auto& r : d.records) out.emplace(r.id, &r);
  return out;
}

// Predictions without a ground-truth counterpart.
std::vector<std::string> extra_ids(const DatasetFile& gt, const DatasetFile& pred) {
  const auto gt_ids = by_id(gt);
  std::vector<std::string> out;
  for (const auto& r : pred.records) {
    if (!gt_ids.contains(r.id)) out.push_back(r.id);
  }
  return out;
}

// ---- eval stem -------------------------------------------------------------

struct StemArgs {
  std::string gt;
  std::string pred;
  std::string text_embeddings;
  bool per_query = false;
  bool verbose = false;
  OutputOptions output;
};

int run_eval_stem(const StemArgs& a, const RunConfig& cfg, std::ostream& out) {
  if (!(cfg.tau_s >= 0.0 && cfg.tau_s <= 1.0)) throw InvalidArgument("--tau must lie in [0,1]");
  const DatasetFile gt = load_dataset(a.gt);
  const DatasetFile pred = load_dataset(a.pred);
  if (gt.records.empty()) throw InvariantError("ground truth has no records", ErrorContext{a.gt, "", ""});
  const auto embedder = make_embedder(a.text_embeddings);
  const auto preds = by_id(pred);

  std::vector<StemReport> reports;
  json per_query = json::array();
  std::vector<std::string> missing;
  for (const auto& item : gt.records) {
    if (item.steps.empty()) {
      throw InvariantError("ground truth record has no steps", ErrorContext{a.gt, item.id, "answer_steps"});
    }
    auto it = preds.find(item.id);
    static const std::vector<Step> kNoSteps;
    if (it == preds.end()) missing.push_back(item.id);
    const auto& pred_steps = it == preds.end() ? kNoSteps : it->second->steps;
    StemReport r;
    try {
      r = stem_evaluate(item.steps, pred_steps, cfg.tau_s, *embedder);
    } catch (const DataError& e) {
      throw SchemaError(e.detail(), ErrorContext{a.text_embeddings.empty() ? a.gt : a.text_embeddings, item.id,
                                                 e.context().field});
    }
    if (a.per_query) {
      json q = stem_report_json(r, a.verbose);
      q["id"] = item.id;
      per_query.push_back(std::move(q));
    }
    reports.push_back(std::move(r));
  }
  json report = {{"metric", "stem"},
                 {"tau_s", cfg.tau_s},
                 {"queries", reports.size()},
                 {"aggregate", stem_report_json(stem_aggregate(reports), false)},
                 {"missing_predictions", missing},
                 {"unmatched_predictions", extra_ids(gt, pred)}};
  if (a.per_query) report["per_query"] = std::move(per_query);
  emit_report(report, a.output, out);
  return exit_code::kOk;
}

// ---- eval mtgs -------------------------------------------------------------

struct MtgsArgs {
  std::string gt;
  std::string pred;
  bool per_query = false;
  bool verbose = false;
  OutputOptions output;
};

int run_eval_mtgs(const MtgsArgs& a, std::ostream& out) {
  const DatasetFile gt = load_dataset(a.gt);
  const DatasetFile pred = load_dataset(a.pred);
  if (gt.records.empty()) throw InvariantError("ground truth has no records", ErrorContext{a.gt, "", ""});
  const auto preds = by_id(pred);
  std::vector<MtgsReport> reports;
  json per_query = json::array();
  std::vector<std::string> missing;
  std::vector<std::string> empty_gt;
  for (const auto& item : gt.records) {
    auto it = preds.find(item.id);
    if (it == preds.end()) missing.push_back(item.id);
    const GroundingMap pm = it == preds.end() ? GroundingMap{} : collect_groundings(it->second->steps);
    MtgsReport r = mtgs_per_query(collect_groundings(item.steps), pm);
    if (r.gt_empty) empty_gt.push_back(item.id);
    if (a.per_query) {
      json q = mtgs_report_json(r, a.verbose);
      q["id"] = item.id;
      per_query.push_back(std::move(q));
    }
    reports.push_back(std::move(r));
  }
  json report = {{"metric", "mtgs"},
                 {"mtgs_avg", mtgs_avg(reports)},
                 {"queries", reports.size()},
                 {"flagged_empty_gt", empty_gt},
                 {"missing_predictions", missing},
                 {"unmatched_predictions", extra_ids(gt, pred)}};
  if (a.per_query) report["per_query"] = std::move(per_query);
  emit_report(report, a.output, out);
  return exit_code::kOk;
}

// ---- eval retrieval --------------------------------------------------------

struct RetrievalArgs {
  std::string qrels;
  std::string rankings;
  bool per_query = false;
  OutputOptions output;
};

int run_eval_retrieval(const RetrievalArgs& a, const RunConfig& cfg, std::ostream& out) {
  const auto ks = parse_ks(cfg.recall_ks);
  const RecallDenominator den = parse_recall_denominator(cfg.recall_denominator);
  const auto qrels = load_qrels(a.qrels);
  const auto rankings = load_rankings(a.rankings);
  std::map<std::string, const RankingRecord*> ranking_of;
  for (const auto& r : rankings) ranking_of.emplace(r.id, &r);

  std::map<std::size_t, double> sums;
  std::size_t scored = 0;
  std::vector<std::string> flagged;
  std::vector<std::string> missing;
  json per_query = json::array();
  for (const auto& q : qrels) {
    if (q.relevant.empty()) {
      flagged.push_back(q.id);
      continue;
    }
    auto it = ranking_of.find(q.id);
    static const std::vector<std::string> kEmpty;
    if (it == ranking_of.end()) missing.push_back(q.id);
    const auto& ranking = it == ranking_of.end() ? kEmpty : it->second->ranking;
    const auto rec = recall_at_k(ranking, std::set<std::string>(q.relevant.begin(), q.relevant.end()), ks, den);
    for (const auto& [k, v] : rec) sums[k] += v;
    ++scored;
    if (a.per_query) {
      json pq = {{"id", q.id}};
      for (const auto& [k, v] : rec) pq["R@" + std::to_string(k)] = v;
      per_query.push_back(std::move(pq));
    }
  }
  if (scored == 0) throw InvariantError("no query with a non-empty relevant set", ErrorContext{a.qrels, "", "relevant"});
  json recall = json::object();
  for (const auto& [k, s] : sums) recall["R@" + std::to_string(k)] = s / static_cast<double>(scored);
  json report = {{"metric", "retrieval"},
                 {"denominator", cfg.recall_denominator},
                 {"queries", scored},
                 {"recall", std::move(recall)},
                 {"flagged_empty_relevant", flagged},
                 {"missing_rankings", missing}};
  if (a.per_query) report["per_query"] = std::move(per_query);
  emit_report(report, a.output, out);
  return exit_code::kOk;
}

// ---- eval text -------------------------------------------------------------

struct TextArgs {
  std::string pred;
  std::string ref;
  std::string text_embeddings;
  bool per_query = false;
  OutputOptions output;
};

int run_eval_text(const TextArgs& a, const RunConfig& cfg, std::ostream& out) {
  CiderOptions copt;
  if (cfg.cider_variant == "d") {
    copt.variant = CiderVariant::kCiderD;
  } else if (cfg.cider_variant == "plain") {
    copt.variant = CiderVariant::kPlain;
  } else {
    throw InvalidArgument("--cider-variant must be d or plain");
  }
  const DatasetFile ref = load_dataset(a.ref);
  const DatasetFile pred = load_dataset(a.pred);
  if (ref.records.size() < 2) {
    throw InvariantError("CIDEr needs at least 2 reference records for IDF; got " + std::to_string(ref.records.size()),
                         ErrorContext{a.ref, "", ""});
  }
  const auto embedder = make_embedder(a.text_embeddings);
  const auto preds = by_id(pred);
  std::vector<std::string> p;
  std::vector<std::string> r;
  std::vector<std::string> ids;
  std::vector<std::string> missing;
  for (const auto& item : ref.records) {
    auto it = preds.find(item.id);
    if (it == preds.end()) missing.push_back(item.id);
    p.push_back(it == preds.end() ? std::string() : answer_text(*it->second));
    r.push_back(answer_text(item));
    ids.push_back(item.id);
  }
  AlignmentReport ar;
  std::vector<double> cider_pairs;
  try {
    ar = evaluate_alignment(p, r, *embedder, copt);
    cider_pairs = cider_per_pair(p, r, copt);
  } catch (const DataError& e) {
    throw SchemaError(e.detail(), ErrorContext{a.text_embeddings, "", ""});
  }
  json report = {{"metric", "text"},
                 {"pairs", p.size()},
                 {"cider_variant", cfg.cider_variant},
                 {"alignment", alignment_report_json(ar)},
                 {"missing_predictions", missing},
                 {"unmatched_predictions", extra_ids(ref, pred)}};
  if (a.per_query) {
    json pq = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
      pq.push_back({{"id", ids[i]},
                    {"bleu4", bleu4({p[i]}, {r[i]})},
                    {"cider", cider_pairs[i]},
                    {"text_sim", text_sim(p[i], r[i], *embedder)}});
    }
    report["per_query"] = std::move(pq);
  }
  emit_report(report, a.output, out);
  return exit_code::kOk;
}

// ---- select-frames ---------------------------------------------------------

struct SelectArgs {
  std::string frames;
  std::string audio;
  bool raw_index_distance = false;
  bool free_endpoint = false;
  bool per_query = false;
  OutputOptions output;
};

int run_select_frames(const SelectArgs& a, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  AffinityOptions opt;
  opt.gamma = cfg.gamma;
  opt.penalty = parse_penalty_kind(cfg.penalty);
  opt.lambda = cfg.lambda;
  opt.distance = a.raw_index_distance ? DistanceMode::kRawIndex : DistanceMode::kNormalized;
  if (cfg.m < 2) throw InvalidArgument("--m must be >= 2");
  if (cfg.k < 1 || cfg.k > cfg.m) {
    throw InvalidArgument("--k=" + std::to_string(cfg.k) + " must satisfy 1 <= k <= m=" + std::to_string(cfg.m));
  }

  std::vector<EmbeddingVector> frames = load_frame_embeddings(a.frames);
  if (!a.audio.empty()) {
    const auto audio = load_frame_embeddings(a.audio);
    if (audio.size() != frames.size()) {
      throw DimensionError("audio has " + std::to_string(audio.size()) + " frames, visual has " +
                               std::to_string(frames.size()),
                           ErrorContext{a.audio, "", "frames"});
    }
    for (std::size_t i = 0; i < frames.size(); ++i) {
      try {
        frames[i] = hadamard_fuse(audio[i], frames[i]);
      } catch (const DimensionError& e) {
        throw DimensionError(e.detail(), ErrorContext{a.audio, "", "frames[" + std::to_string(i) + "]"});
      }
    }
  }
  if (frames.size() < 2) throw InvariantError("need at least 2 frames", ErrorContext{a.frames, "", "frames"});

  // Candidates: m uniformly spaced frames, or every frame when fewer exist.
  const std::size_t m = std::min(cfg.m, frames.size());
  if (cfg.k > m) {
    throw InvalidArgument("--k=" + std::to_string(cfg.k) + " exceeds the " + std::to_string(m) +
                          " candidate frames available in " + a.frames);
  }
  const auto candidates = uniform_sample_indices(frames.size(), m);
  std::vector<EmbeddingVector> sampled;
  sampled.reserve(m);
  for (std::size_t idx : candidates) sampled.push_back(frames[idx - 1]);

  const AffinityMatrix q = build_affinity(sampled, opt);
  for (std::size_t z : q.zero_norm_frames) {
    err << "warning: candidate frame " << z << " (frame " << candidates[z - 1]
        << ") has a zero-norm embedding; its similarities are 0\n";
  }
  SelectOptions sopt;
  sopt.free_endpoint = a.free_endpoint;
  const SelectionPlan plan = select_frames(q, cfg.k, sopt);

  json report = selection_report_json(plan);
  std::vector<std::size_t> original;
  for (std::size_t s : plan.selected) original.push_back(candidates[s - 1]);
  report["selected_frames"] = original;
  report["total_frames"] = frames.size();
  report["penalty"] = std::string(to_string(opt.penalty));
  report["gamma"] = opt.gamma;
  if (opt.penalty == PenaltyKind::kExp) report["lambda"] = opt.lambda;
  report["distance"] = a.raw_index_distance ? "raw-index" : "normalized";
  report["endpoint"] = a.free_endpoint ? "free" : "last";
  std::vector<std::size_t> zero_norm;
  for (std::size_t z : q.zero_norm_frames) zero_norm.push_back(candidates[z - 1]);
  report["zero_norm_frames"] = zero_norm;
  if (a.per_query) report["candidates"] = candidates;
  emit_report(report, a.output, out);
  return exit_code::kOk;
}

// ---- retrieve --------------------------------------------------------------

struct RetrieveArgs {
  std::string index;
  std::string query_embedding;
  std::string id;
  bool per_query = false;
  OutputOptions output;
};

int run_retrieve(const RetrieveArgs& a, const RunConfig& cfg, std::ostream& out) {
  const RetrievalIndex index = load_index(a.index);
  const EmbeddingVector query = load_query_embedding(a.query_embedding);
  if (query.dim() != index.dim()) {
    throw DimensionError("query dimension " + std::to_string(query.dim()) + " does not match index dimension " +
                             std::to_string(index.dim()),
                         ErrorContext{a.query_embedding, "", "embedding"});
  }
  if (cfg.k < 1 || cfg.k > index.size()) {
    throw InvalidArgument("--topk=" + std::to_string(cfg.k) + " outside 1.." + std::to_string(index.size()));
  }
  const ScoreTable table = score_videos(query, index);
  const auto top = top_k(table, cfg.k);
  json scores = json::array();
  const std::size_t shown = a.per_query ? table.scores.size() : cfg.k;
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& s = table.scores[i];
    scores.push_back({{"video_id", s.video_id}, {"s_av", s.s_av}, {"s_cap", s.s_cap}, {"sim_avg", s.sim_avg}});
  }
  json report = {{"topk", top}, {"k", cfg.k}, {"scores", std::move(scores)}};
  if (!a.id.empty()) report["id"] = a.id;
  emit_report(report, a.output, out);
  return exit_code::kOk;
}

// ---- pipeline run ----------------------------------------------------------

struct PipelineArgs {
  std::string index;
  std::string contexts;
  std::string query;
  std::string query_embedding;
  std::string id = "query";
  std::string out_path;
};

int run_pipeline_cmd(const PipelineArgs& a, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.dedupe_iou >= 0.0 && cfg.dedupe_iou <= 1.0)) throw InvalidArgument("--dedupe-iou must lie in [0,1]");
  if (cfg.workers < 1) throw InvalidArgument("--workers must be >= 1");
  const RetrievalIndex index = load_index(a.index);
  const auto contexts = load_transcripts(a.contexts);
  const EmbeddingVector query = load_query_embedding(a.query_embedding);
  if (query.dim() != index.dim()) {
    throw DimensionError("query dimension does not match index dimension",
                         ErrorContext{a.query_embedding, "", "embedding"});
  }
  if (cfg.k < 1 || cfg.k > index.size()) {
    throw InvalidArgument("--k=" + std::to_string(cfg.k) + " outside 1.." + std::to_string(index.size()));
  }
  for (const auto& e : index.entries()) {
    if (!contexts.contains(e.video_id)) {
      throw InvariantError("no transcript for indexed video", ErrorContext{a.contexts, e.video_id, "video_id"});
    }
  }
  const std::shared_ptr<const TextEmbedder> embedder(default_embedder());
  const MockTranscriptAgent agent(embedder, cfg.agent_threshold, cfg.max_windows);
  PipelineOptions popt;
  popt.k = cfg.k;
  popt.dedupe_iou = cfg.dedupe_iou;
  popt.workers = cfg.workers;
  const PipelineResult result = run_pipeline(a.query, index, contexts, query, agent, popt);
  for (const auto& d : result.diagnostics) err << "diagnostic: " << d << "\n";

  QAItem item;
  item.id = a.id;
  item.question = a.query;
  item.steps = result.answer.steps;
  const std::string line = dump_dataset(DatasetFile{{item}});
  if (a.out_path.empty()) {
    out << line;
  } else {
    write_text_file(a.out_path, line);
  }
  return exit_code::kOk;
}

// ---- validate --------------------------------------------------------------

struct ValidateArgs {
  std::string kind;
  std::string file;
  OutputOptions output;
};

int run_validate(const ValidateArgs& a, std::ostream& out) {
  std::size_t records = 0;
  if (a.kind == "dataset") {
    records = load_dataset(a.file).records.size();
  } else if (a.kind == "index") {
    records = load_index(a.file).size();
  } else if (a.kind == "frames") {
    records = load_frame_embeddings(a.file).size();
  } else if (a.kind == "transcript") {
    records = load_transcript(a.file).segments.size();
  } else if (a.kind == "qrels") {
    records = load_qrels(a.file).size();
  } else if (a.kind == "rankings") {
    records = load_rankings(a.file).size();
  } else if (a.kind == "query") {
    load_query_embedding(a.file);
    records = 1;
  } else {
    records = load_text_embeddings(a.file).table().size();
  }
  emit_report({{"kind", a.kind}, {"valid", true}, {"records", records}}, a.output, out);
  return exit_code::kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Audio-visual grounded QA toolkit: frame selection, retrieval, agent pipeline and metrics", "avkit"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_version_flag("--version", "avkit 1.0.0");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate predictions");
  eval->require_subcommand(1);

  StemArgs stem_args;
  auto* stem = eval->add_subcommand("stem", "Step-wise error metric");
  stem->add_option("--gt", stem_args.gt, "Ground-truth dataset (JSONL)")->required();
  stem->add_option("--pred", stem_args.pred, "Prediction dataset (JSONL)")->required();
  stem->add_option("--tau", cfg.tau_s, "Text similarity threshold");
  stem->add_option("--text-embeddings", stem_args.text_embeddings, "Precomputed text embeddings (JSON)");
  stem->add_flag("--per-query", stem_args.per_query, "Include per-query reports");
  stem->add_flag("-v,--verbose", stem_args.verbose, "Include IoU values in per-query reports");
  add_output_flags(stem, stem_args.output);

  MtgsArgs mtgs_args;
  auto* mtgs = eval->add_subcommand("mtgs", "Matched temporal grounding score");
  mtgs->add_option("--gt", mtgs_args.gt, "Ground-truth dataset (JSONL)")->required();
  mtgs->add_option("--pred", mtgs_args.pred, "Prediction dataset (JSONL)")->required();
  mtgs->add_flag("--per-query", mtgs_args.per_query, "Include per-query reports");
  mtgs->add_flag("-v,--verbose", mtgs_args.verbose, "Include per-video IoU in per-query reports");
  add_output_flags(mtgs, mtgs_args.output);

  RetrievalArgs ret_args;
  auto* ret = eval->add_subcommand("retrieval", "Recall@k of video rankings");
  ret->add_option("--qrels", ret_args.qrels, "Relevant videos per query (JSONL)")->required();
  ret->add_option("--rankings", ret_args.rankings, "Ranked videos per query (JSONL)")->required();
  ret->add_option("--k", cfg.recall_ks, "Comma-separated cutoffs");
  ret->add_option("--recall-denominator", cfg.recall_denominator, "capped = min(k,|relevant|), relevant = |relevant|")
      ->check(CLI::IsMember({"capped", "relevant"}));
  ret->add_flag("--per-query", ret_args.per_query, "Include per-query recall");
  add_output_flags(ret, ret_args.output);

  TextArgs text_args;
  auto* text = eval->add_subcommand("text", "BLEU@4, CIDEr and embedding text similarity");
  text->add_option("--pred", text_args.pred, "Prediction dataset (JSONL)")->required();
  text->add_option("--ref", text_args.ref, "Reference dataset (JSONL)")->required();
  text->add_option("--cider-variant", cfg.cider_variant, "d = CIDEr-D, plain = TF-IDF cosine")
      ->check(CLI::IsMember({"d", "plain"}));
  text->add_option("--text-embeddings", text_args.text_embeddings, "Precomputed text embeddings (JSON)");
  text->add_flag("--per-query", text_args.per_query, "Include per-pair scores");
  add_output_flags(text, text_args.output);

  // select-frames
  SelectArgs sel_args;
  auto* sel = app.add_subcommand("select-frames", "Salient frame selection");
  sel->add_option("--frames", sel_args.frames, "Frame embeddings (JSON); visual stream when --audio is given")
      ->required();
  sel->add_option("--audio", sel_args.audio, "Audio frame embeddings, fused element-wise with --frames");
  sel->add_option("--k", cfg.k, "Frames to select");
  sel->add_option("--m", cfg.m, "Uniformly sampled candidate frames");
  sel->add_option("--gamma", cfg.gamma, "Separation penalty factor");
  sel->add_option("--penalty", cfg.penalty, "Penalty function")->check(CLI::IsMember({"sine", "cosine", "exp", "none"}));
  sel->add_option("--lambda", cfg.lambda, "Rate of the exp penalty");
  sel->add_flag("--raw-index-distance", sel_args.raw_index_distance, "Use |a-b| instead of |a-b|/m");
  sel->add_flag("--free-endpoint", sel_args.free_endpoint, "Do not force the last candidate into the selection");
  sel->add_flag("--per-query", sel_args.per_query, "Include candidate frame positions");
  add_output_flags(sel, sel_args.output);

  // retrieve
  RetrieveArgs rv_args;
  auto* rv = app.add_subcommand("retrieve", "Rank indexed videos for a query embedding");
  rv->add_option("--index", rv_args.index, "Retrieval index (JSON)")->required();
  rv->add_option("--query-embedding", rv_args.query_embedding, "Query embedding (JSON)")->required();
  rv->add_option("--topk", cfg.k, "Videos to return");
  rv->add_option("--id", rv_args.id, "Query id echoed into the report");
  rv->add_flag("--per-query", rv_args.per_query, "Include scores for every indexed video");
  add_output_flags(rv, rv_args.output);

  // pipeline run
  auto* pipeline = app.add_subcommand("pipeline", "Grounded QA pipeline");
  pipeline->require_subcommand(1);
  PipelineArgs pl_args;
  auto* run = pipeline->add_subcommand("run", "Retrieve, run one agent per video, aggregate");
  run->add_option("--index", pl_args.index, "Retrieval index (JSON)")->required();
  run->add_option("--contexts", pl_args.contexts, "Directory of transcript JSON files")->required();
  run->add_option("--query", pl_args.query, "Question text")->required();
  run->add_option("--query-embedding", pl_args.query_embedding, "Query embedding (JSON)")->required();
  run->add_option("--id", pl_args.id, "Record id of the emitted answer");
  run->add_option("--k", cfg.k, "Videos retrieved");
  run->add_option("--dedupe-iou", cfg.dedupe_iou, "IoU above which same-video windows are merged away");
  run->add_option("--agent-threshold", cfg.agent_threshold, "Minimum segment score kept by the transcript agent");
  run->add_option("--max-windows", cfg.max_windows, "Windows kept per video");
  run->add_option("--workers", cfg.workers, "Concurrent agent invocations");
  run->add_option("--out", pl_args.out_path, "Write the answer record to this file instead of stdout");

  // validate
  ValidateArgs val_args;
  auto* val = app.add_subcommand("validate", "Schema-check an input file");
  val->add_option("--kind", val_args.kind, "File kind")
      ->required()
      ->check(CLI::IsMember({"dataset", "index", "frames", "transcript", "qrels", "rankings", "query",
                             "text-embeddings"}));
  val->add_option("file", val_args.file, "File to check")->required();
  add_output_flags(val, val_args.output);

  std::vector<const char*> argv;
  argv.push_back("avkit");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    if (*stem) return run_eval_stem(stem_args, cfg, out);
    if (*mtgs) return run_eval_mtgs(mtgs_args, out);
    if (*ret) return run_eval_retrieval(ret_args, cfg, out);
    if (*text) return run_eval_text(text_args, cfg, out);
    if (*sel) return run_select_frames(sel_args, cfg, out, err);
    if (*rv) return run_retrieve(rv_args, cfg, out);
    if (*run) return run_pipeline_cmd(pl_args, cfg, out, err);
    if (*val) return run_validate(val_args, out);
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const DataError& e) {
    err << e.what() << "\n";
    return exit_code::kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kDataError;
  }
  return exit_code::kUsage;
}

}  // namespace avkit
