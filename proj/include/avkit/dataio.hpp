#pragma once

// File formats (UTF-8, schema version "1"):
//   dataset / predictions  JSONL  {"id","question","answer_steps":[{"index","text",
//                                  "groundings":[{"video_id","start_s","end_s"}]}]}
//   retrieval index        JSON   {"dim","videos":[{"video_id","av":[..],"caption":[..]}]}
//   frame embeddings       JSON   {"dim","frames":[[..],..]}
//   transcript             JSON   {"video_id","segments":[{"start_s","end_s","text"}]}
//   qrels                  JSONL  {"id","relevant":[video_id..]}
//   rankings               JSONL  {"id","ranking":[video_id..]}
//   query embedding        JSON   {"dim","embedding":[..]}
//   text embeddings        JSON   {"dim","entries":[{"text","embedding":[..]}]}
// Every object may carry "schema_version": "1"; writers always emit it.
// Times are decimal seconds or "HH:MM:SS[.fff]" / "MM:SS" strings.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "avkit/agents.hpp"
#include "avkit/core.hpp"
#include "avkit/retrieval.hpp"
#include "avkit/text_metrics.hpp"

namespace avkit {

inline constexpr std::string_view kSchemaVersion = "1";

/// "<id>.txt NNNNs > MMMMs" entries separated by commas; a trailing comma is
/// allowed. Throws SyntaxError naming the offending entry and offset.
std::vector<Grounding> parse_reference_string(std::string_view s);

/// Seconds from a JSON number or an "HH:MM:SS[.fff]" / "MM:SS" string.
double parse_time(const nlohmann::json& value);

struct DatasetFile {
  std::vector<QAItem> records;

  friend bool operator==(const DatasetFile&, const DatasetFile&) = default;
};

struct Qrel {
  std::string id;
  std::vector<std::string> relevant;

  friend bool operator==(const Qrel&, const Qrel&) = default;
};

struct RankingRecord {
  std::string id;
  std::vector<std::string> ranking;

  friend bool operator==(const RankingRecord&, const RankingRecord&) = default;
};

// Parsers over in-memory text; `source` names the input in error messages.
DatasetFile parse_dataset(std::string_view text, const std::string& source = "<memory>");
RetrievalIndex parse_index(std::string_view text, const std::string& source = "<memory>");
std::vector<EmbeddingVector> parse_frame_embeddings(std::string_view text, const std::string& source = "<memory>");
VideoContext parse_transcript(std::string_view text, const std::string& source = "<memory>");
std::vector<Qrel> parse_qrels(std::string_view text, const std::string& source = "<memory>");
std::vector<RankingRecord> parse_rankings(std::string_view text, const std::string& source = "<memory>");
EmbeddingVector parse_query_embedding(std::string_view text, const std::string& source = "<memory>");
PrecomputedEmbedder parse_text_embeddings(std::string_view text, const std::string& source = "<memory>");

std::string read_file(const std::filesystem::path& path);

DatasetFile load_dataset(const std::filesystem::path& path);
RetrievalIndex load_index(const std::filesystem::path& path);
std::vector<EmbeddingVector> load_frame_embeddings(const std::filesystem::path& path);
VideoContext load_transcript(const std::filesystem::path& path);
/// Every *.json file in `dir`, keyed by video_id.
std::map<std::string, VideoContext> load_transcripts(const std::filesystem::path& dir);
std::vector<Qrel> load_qrels(const std::filesystem::path& path);
std::vector<RankingRecord> load_rankings(const std::filesystem::path& path);
EmbeddingVector load_query_embedding(const std::filesystem::path& path);
PrecomputedEmbedder load_text_embeddings(const std::filesystem::path& path);

// Serializers. Numbers keep full round-trip precision; keys are sorted.
nlohmann::json to_json(const QAItem& item);
nlohmann::json to_json(const RetrievalIndex& index);
nlohmann::json frames_to_json(const std::vector<EmbeddingVector>& frames);
nlohmann::json to_json(const VideoContext& ctx);
nlohmann::json to_json(const Qrel& q);
nlohmann::json to_json(const RankingRecord& r);
nlohmann::json query_embedding_to_json(const EmbeddingVector& v);
nlohmann::json to_json(const PrecomputedEmbedder& e);

std::string dump_dataset(const DatasetFile& d);
std::string dump_qrels(const std::vector<Qrel>& qrels);
std::string dump_rankings(const std::vector<RankingRecord>& rankings);
/// One JSON document plus trailing newline.
std::string dump_document(const nlohmann::json& j);

void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace avkit
