#include "avkit/dataio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "avkit/errors.hpp"

namespace avkit {

using nlohmann::json;

namespace {

[[noreturn]] void rethrow_in(const DataError& e, const ErrorContext& ctx) {
  if (dynamic_cast<const DimensionError*>(&e)) throw DimensionError(e.detail(), ctx);
  if (dynamic_cast<const InvariantError*>(&e)) throw InvariantError(e.detail(), ctx);
  if (dynamic_cast<const SchemaVersionError*>(&e)) throw SchemaVersionError(e.detail(), ctx);
  if (dynamic_cast<const SyntaxError*>(&e)) throw SyntaxError(e.detail(), ctx);
  if (dynamic_cast<const IoError*>(&e)) throw IoError(e.detail(), ctx);
  throw SchemaError(e.detail(), ctx);
}

std::string type_name(const json& j) { return j.type_name(); }

// Typed field access with error context (file, record, field path).
class Reader {
 public:
  explicit Reader(std::string file) : file_(std::move(file)) {}

  void set_record(std::string record) { record_ = std::move(record); }
  ErrorContext ctx(const std::string& path) const { return {file_, record_, path}; }

  json parse(std::string_view text, const std::string& path = "") const {
    try {
      return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
      throw SyntaxError(e.what(), ctx(path));
    }
  }

  const json& object(const json& j, const std::string& path) const {
    if (!j.is_object()) throw SchemaError("expected object, got " + type_name(j), ctx(path));
    return j;
  }

  const json& field(const json& obj, const std::string& key, const std::string& path) const {
    object(obj, path);
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError("missing field \"" + key + "\"", ctx(join(path, key)));
    return *it;
  }

  std::string string(const json& j, const std::string& path) const {
    if (!j.is_string()) throw SchemaError("expected string, got " + type_name(j), ctx(path));
    return j.get<std::string>();
  }

  double number(const json& j, const std::string& path) const {
    if (!j.is_number()) throw SchemaError("expected number, got " + type_name(j), ctx(path));
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw InvariantError("number is not finite", ctx(path));
    return v;
  }

  long long integer(const json& j, const std::string& path) const {
    if (!j.is_number_integer()) throw SchemaError("expected integer, got " + type_name(j), ctx(path));
    return j.get<long long>();
  }

  const json& array(const json& j, const std::string& path) const {
    if (!j.is_array()) throw SchemaError("expected array, got " + type_name(j), ctx(path));
    return j;
  }

  double time(const json& j, const std::string& path) const {
    try {
      return parse_time(j);
    } catch (const DataError& e) {
      rethrow_in(e, ctx(path));
    }
  }

  void schema_version(const json& obj, const std::string& path) const {
    auto it = obj.find("schema_version");
    if (it == obj.end()) return;
    const bool ok = (it->is_string() && it->get<std::string>() == kSchemaVersion) ||
                    (it->is_number_integer() && it->get<long long>() == 1);
    if (!ok) throw SchemaVersionError("unsupported schema_version " + it->dump(), ctx(join(path, "schema_version")));
  }

  std::size_t dim(const json& obj) const {
    const long long d = integer(field(obj, "dim", ""), "dim");
    if (d < 1) throw DimensionError("dim must be >= 1", ctx("dim"));
    return static_cast<std::size_t>(d);
  }

  template <class F>
  auto guard(const std::string& path, F&& f) const {
    try {
      return f();
    } catch (const DataError& e) {
      if (!e.context().file.empty()) throw;
      rethrow_in(e, ctx(path));
    }
  }

  EmbeddingVector vector(const json& j, std::size_t expected_dim, const std::string& path) const {
    array(j, path);
    std::vector<double> values;
    values.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) values.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
    if (values.size() != expected_dim) {
      throw DimensionError("vector has dimension " + std::to_string(values.size()) + ", expected " +
                           std::to_string(expected_dim),
                           ctx(path));
    }
    return guard(path, [&] { return EmbeddingVector(std::move(values)); });
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }

 private:
  std::string file_;
  std::string record_;
};

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

Grounding read_grounding(const Reader& r, const json& j, const std::string& path) {
  r.object(j, path);
  const std::string vid = r.string(r.field(j, "video_id", path), path + ".video_id");
  const double start = r.time(r.field(j, "start_s", path), path + ".start_s");
  const double end = r.time(r.field(j, "end_s", path), path + ".end_s");
  return r.guard(path, [&] { return make_grounding(vid, TimeInterval(start, end)); });
}

Step read_step(const Reader& r, const json& j, const std::string& path) {
  r.object(j, path);
  Step s;
  s.index = static_cast<int>(r.integer(r.field(j, "index", path), path + ".index"));
  s.text = r.string(r.field(j, "text", path), path + ".text");
  if (auto it = j.find("groundings"); it != j.end()) {
    const std::string gpath = path + ".groundings";
    r.array(*it, gpath);
    for (std::size_t i = 0; i < it->size(); ++i) s.groundings.push_back(read_grounding(r, (*it)[i], at(gpath, i)));
  }
  if (auto it = j.find("references"); it != j.end()) {
    const std::string rpath = path + ".references";
    const std::string refs = r.string(*it, rpath);
    auto parsed = r.guard(rpath, [&] { return parse_reference_string(refs); });
    s.groundings.insert(s.groundings.end(), parsed.begin(), parsed.end());
  }
  r.guard(path, [&] {
    validate_step(s);
    return 0;
  });
  return s;
}

QAItem read_item(Reader& r, const json& j) {
  r.object(j, "");
  r.schema_version(j, "");
  QAItem item;
  item.id = trim(r.string(r.field(j, "id", ""), "id"));
  r.set_record(item.id);
  item.question = r.string(r.field(j, "question", ""), "question");
  const json& steps = r.array(r.field(j, "answer_steps", ""), "answer_steps");
  for (std::size_t i = 0; i < steps.size(); ++i) item.steps.push_back(read_step(r, steps[i], at("answer_steps", i)));
  if (auto it = j.find("answer"); it != j.end()) item.answer = r.string(*it, "answer");
  r.guard("", [&] {
    validate_item(item);
    return 0;
  });
  return item;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!trim(line).empty()) f(line_no, line);
    pos = nl + 1;
  }
}

std::string id_of(const Reader& r, const json& j) {
  r.object(j, "");
  r.schema_version(j, "");
  return trim(r.string(r.field(j, "id", ""), "id"));
}

std::vector<std::string> id_list(const Reader& r, const json& j, const std::string& path) {
  r.array(j, path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string v = trim(r.string(j[i], at(path, i)));
    if (v.empty()) throw InvariantError("empty video_id", r.ctx(at(path, i)));
    out.push_back(std::move(v));
  }
  return out;
}

bool parse_decimal(std::string_view s, double& out) {
  if (s.empty()) return false;
  std::size_t dots = 0;
  for (char c : s) {
    if (c == '.') {
      ++dots;
    } else if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  if (dots > 1 || s.front() == '.' || s.back() == '.') return false;
  const std::string copy(s);
  out = std::stod(copy);
  return true;
}

}  // namespace

double parse_time(const json& value) {
  if (value.is_number()) {
    const double v = value.get<double>();
    if (!std::isfinite(v)) throw InvariantError("time is not finite");
    return v;
  }
  if (!value.is_string()) throw SchemaError("expected seconds or HH:MM:SS string, got " + type_name(value));
  const std::string s = trim(value.get<std::string>());
  std::vector<std::string_view> parts;
  std::string_view rest(s);
  while (true) {
    const auto colon = rest.find(':');
    parts.push_back(rest.substr(0, colon));
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  if (parts.size() < 2 || parts.size() > 3) throw SyntaxError("time \"" + s + "\" is not HH:MM:SS or MM:SS");
  double total = 0.0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    double v = 0.0;
    const bool last = i + 1 == parts.size();
    const bool digits_only =
        !parts[i].empty() && std::all_of(parts[i].begin(), parts[i].end(), [](char c) { return c >= '0' && c <= '9'; });
    if (!(last ? parse_decimal(parts[i], v) : digits_only)) throw SyntaxError("time \"" + s + "\" has a bad field");
    if (!last) v = std::stod(std::string(parts[i]));
    if (i > 0 && v >= 60.0) throw SyntaxError("time \"" + s + "\" has a minutes/seconds field >= 60");
    total = total * 60.0 + v;
  }
  return total;
}

std::vector<Grounding> parse_reference_string(std::string_view s) {
  std::vector<Grounding> out;
  if (trim(s).empty()) return out;
  std::size_t pos = 0;
  std::size_t entry_no = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    const bool last = comma == std::string_view::npos;
    if (last) comma = s.size();
    const std::string_view raw = s.substr(pos, comma - pos);
    ++entry_no;
    const std::string entry = trim(raw);
    const auto fail = [&](const std::string& why) -> void {
      throw SyntaxError("reference entry " + std::to_string(entry_no) + " \"" + entry + "\" at offset " +
                        std::to_string(pos) + ": " + why);
    };
    if (entry.empty()) {
      // Only a single trailing comma is tolerated.
      if (last && entry_no > 1) break;
      fail("empty entry");
    }
    std::istringstream in(entry);
    std::string file;
    std::string start_tok;
    std::string arrow;
    std::string end_tok;
    std::string extra;
    in >> file >> start_tok >> arrow >> end_tok;
    if (in >> extra) fail("unexpected token \"" + extra + "\"");
    if (end_tok.empty()) fail("expected \"<video>.txt <start>s > <end>s\"");
    constexpr std::string_view kExt = ".txt";
    if (file.size() <= kExt.size() || file.compare(file.size() - kExt.size(), kExt.size(), kExt) != 0) {
      fail("video token \"" + file + "\" does not end in .txt");
    }
    if (arrow != ">") fail("expected \">\" but found \"" + arrow + "\"");
    const auto seconds = [&](const std::string& tok) {
      double v = 0.0;
      if (tok.size() < 2 || tok.back() != 's' || !parse_decimal(std::string_view(tok).substr(0, tok.size() - 1), v)) {
        fail("time token \"" + tok + "\" is not of the form NNNNs");
      }
      return v;
    };
    const double start = seconds(start_tok);
    const double end = seconds(end_tok);
    if (!(end > start)) fail("end " + end_tok + " is not after start " + start_tok);
    out.push_back(make_grounding(file.substr(0, file.size() - kExt.size()), TimeInterval(start, end)));
    if (last) break;
    pos = comma + 1;
  }
  return out;
}

DatasetFile parse_dataset(std::string_view text, const std::string& source) {
  DatasetFile out;
  std::set<std::string> ids;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    Reader r(source);
    r.set_record("line " + std::to_string(line_no));
    const json j = r.parse(line);
    QAItem item = read_item(r, j);
    if (!ids.insert(item.id).second) throw InvariantError("duplicate record id", r.ctx("id"));
    out.records.push_back(std::move(item));
  });
  return out;
}

RetrievalIndex parse_index(std::string_view text, const std::string& source) {
  Reader r(source);
  const json j = r.parse(text);
  r.object(j, "");
  r.schema_version(j, "");
  const std::size_t dim = r.dim(j);
  const json& videos = r.array(r.field(j, "videos", ""), "videos");
  std::vector<VideoEntry> entries;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < videos.size(); ++i) {
    const std::string path = at("videos", i);
    const json& v = r.object(videos[i], path);
    const std::string vid = trim(r.string(r.field(v, "video_id", path), path + ".video_id"));
    r.set_record(vid);
    if (vid.empty()) throw InvariantError("empty video_id", r.ctx(path + ".video_id"));
    if (!ids.insert(vid).second) throw InvariantError("duplicate video_id", r.ctx(path + ".video_id"));
    EmbeddingVector av = [&] {
      if (v.contains("av")) return r.vector(v["av"], dim, path + ".av");
      const auto audio = r.vector(r.field(v, "audio", path), dim, path + ".audio");
      const auto visual = r.vector(r.field(v, "visual", path), dim, path + ".visual");
      return hadamard_fuse(audio, visual);
    }();
    EmbeddingVector cap = r.vector(r.field(v, "caption", path), dim, path + ".caption");
    entries.push_back(VideoEntry{vid, std::move(av), std::move(cap)});
  }
  r.set_record("");
  return r.guard("", [&] { return RetrievalIndex(dim, std::move(entries)); });
}

std::vector<EmbeddingVector> parse_frame_embeddings(std::string_view text, const std::string& source) {
  Reader r(source);
  const json j = r.parse(text);
  r.object(j, "");
  r.schema_version(j, "");
  const std::size_t dim = r.dim(j);
  const json& frames = r.array(r.field(j, "frames", ""), "frames");
  std::vector<EmbeddingVector> out;
  out.reserve(frames.size());
  for (std::size_t i = 0; i < frames.size(); ++i) out.push_back(r.vector(frames[i], dim, at("frames", i)));
  return out;
}

VideoContext parse_transcript(std::string_view text, const std::string& source) {
  Reader r(source);
  const json j = r.parse(text);
  r.object(j, "");
  r.schema_version(j, "");
  VideoContext ctx;
  ctx.video_id = trim(r.string(r.field(j, "video_id", ""), "video_id"));
  r.set_record(ctx.video_id);
  if (ctx.video_id.empty()) throw InvariantError("empty video_id", r.ctx("video_id"));
  const json& segs = r.array(r.field(j, "segments", ""), "segments");
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string path = at("segments", i);
    r.object(segs[i], path);
    const double start = r.time(r.field(segs[i], "start_s", path), path + ".start_s");
    const double end = r.time(r.field(segs[i], "end_s", path), path + ".end_s");
    std::string seg_text = r.string(r.field(segs[i], "text", path), path + ".text");
    ctx.segments.push_back(r.guard(path, [&] { return TranscriptSegment{TimeInterval(start, end), seg_text}; }));
  }
  if (auto it = j.find("frames"); it != j.end()) {
    const std::size_t dim = r.dim(j);
    r.array(*it, "frames");
    for (std::size_t i = 0; i < it->size(); ++i) ctx.frames.push_back(r.vector((*it)[i], dim, at("frames", i)));
  }
  if (auto it = j.find("selected_frames"); it != j.end()) {
    r.array(*it, "selected_frames");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const long long v = r.integer((*it)[i], at("selected_frames", i));
      if (v < 1) throw InvariantError("frame index must be >= 1", r.ctx(at("selected_frames", i)));
      ctx.selected_frames.push_back(static_cast<std::size_t>(v));
    }
  }
  r.guard("", [&] {
    validate_context(ctx);
    return 0;
  });
  return ctx;
}

std::vector<Qrel> parse_qrels(std::string_view text, const std::string& source) {
  std::vector<Qrel> out;
  std::set<std::string> ids;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    Reader r(source);
    r.set_record("line " + std::to_string(line_no));
    const json j = r.parse(line);
    Qrel q;
    q.id = id_of(r, j);
    r.set_record(q.id);
    if (q.id.empty()) throw InvariantError("record id is empty", r.ctx("id"));
    if (!ids.insert(q.id).second) throw InvariantError("duplicate record id", r.ctx("id"));
    q.relevant = id_list(r, r.field(j, "relevant", ""), "relevant");
    out.push_back(std::move(q));
  });
  return out;
}

std::vector<RankingRecord> parse_rankings(std::string_view text, const std::string& source) {
  std::vector<RankingRecord> out;
  std::set<std::string> ids;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    Reader r(source);
    r.set_record("line " + std::to_string(line_no));
    const json j = r.parse(line);
    RankingRecord rec;
    rec.id = id_of(r, j);
    r.set_record(rec.id);
    if (rec.id.empty()) throw InvariantError("record id is empty", r.ctx("id"));
    if (!ids.insert(rec.id).second) throw InvariantError("duplicate record id", r.ctx("id"));
    rec.ranking = id_list(r, r.field(j, "ranking", ""), "ranking");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < rec.ranking.size(); ++i) {
      if (!seen.insert(rec.ranking[i]).second) {
        throw InvariantError("video_id listed twice in ranking", r.ctx(at("ranking", i)));
      }
    }
    out.push_back(std::move(rec));
  });
  return out;
}

EmbeddingVector parse_query_embedding(std::string_view text, const std::string& source) {
  Reader r(source);
  const json j = r.parse(text);
  r.object(j, "");
  r.schema_version(j, "");
  const std::size_t dim = r.dim(j);
  return r.vector(r.field(j, "embedding", ""), dim, "embedding");
}

PrecomputedEmbedder parse_text_embeddings(std::string_view text, const std::string& source) {
  Reader r(source);
  const json j = r.parse(text);
  r.object(j, "");
  r.schema_version(j, "");
  const std::size_t dim = r.dim(j);
  const json& entries = r.array(r.field(j, "entries", ""), "entries");
  std::map<std::string, EmbeddingVector> table;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = at("entries", i);
    r.object(entries[i], path);
    std::string t = r.string(r.field(entries[i], "text", path), path + ".text");
    EmbeddingVector v = r.vector(r.field(entries[i], "embedding", path), dim, path + ".embedding");
    if (!table.emplace(t, std::move(v)).second) throw InvariantError("duplicate text entry", r.ctx(path + ".text"));
  }
  return PrecomputedEmbedder(dim, std::move(table));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file", ErrorContext{path.string(), "", ""});
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed", ErrorContext{path.string(), "", ""});
  return ss.str();
}

DatasetFile load_dataset(const std::filesystem::path& path) { return parse_dataset(read_file(path), path.string()); }
RetrievalIndex load_index(const std::filesystem::path& path) { return parse_index(read_file(path), path.string()); }
std::vector<EmbeddingVector> load_frame_embeddings(const std::filesystem::path& path) {
  return parse_frame_embeddings(read_file(path), path.string());
}
VideoContext load_transcript(const std::filesystem::path& path) {
  return parse_transcript(read_file(path), path.string());
}
std::vector<Qrel> load_qrels(const std::filesystem::path& path) { return parse_qrels(read_file(path), path.string()); }
std::vector<RankingRecord> load_rankings(const std::filesystem::path& path) {
  return parse_rankings(read_file(path), path.string());
}
EmbeddingVector load_query_embedding(const std::filesystem::path& path) {
  return parse_query_embedding(read_file(path), path.string());
}
PrecomputedEmbedder load_text_embeddings(const std::filesystem::path& path) {
  return parse_text_embeddings(read_file(path), path.string());
}

std::map<std::string, VideoContext> load_transcripts(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoError("not a directory", ErrorContext{dir.string(), "", ""});
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::map<std::string, VideoContext> out;
  for (const auto& f : files) {
    VideoContext ctx = load_transcript(f);
    const std::string vid = ctx.video_id;
    if (!out.emplace(vid, std::move(ctx)).second) {
      throw InvariantError("second transcript for video", ErrorContext{f.string(), vid, "video_id"});
    }
  }
  return out;
}

namespace {

json vector_json(const EmbeddingVector& v) { return json(std::vector<double>(v.values().begin(), v.values().end())); }

json with_version(json j) {
  j["schema_version"] = std::string(kSchemaVersion);
  return j;
}

}  // namespace

json to_json(const QAItem& item) {
  json steps = json::array();
  for (const auto& s : item.steps) {
    json gs = json::array();
    for (const auto& g : s.groundings) {
      gs.push_back({{"video_id", g.video_id}, {"start_s", g.interval.start_s()}, {"end_s", g.interval.end_s()}});
    }
    steps.push_back({{"index", s.index}, {"text", s.text}, {"groundings", std::move(gs)}});
  }
  json j = {{"id", item.id}, {"question", item.question}, {"answer_steps", std::move(steps)}};
  if (item.answer) j["answer"] = *item.answer;
  return with_version(std::move(j));
}

json to_json(const RetrievalIndex& index) {
  json videos = json::array();
  for (const auto& e : index.entries()) {
    videos.push_back({{"video_id", e.video_id}, {"av", vector_json(e.av)}, {"caption", vector_json(e.caption)}});
  }
  return with_version({{"dim", index.dim()}, {"videos", std::move(videos)}});
}

json frames_to_json(const std::vector<EmbeddingVector>& frames) {
  json arr = json::array();
  for (const auto& f : frames) arr.push_back(vector_json(f));
  const std::size_t dim = frames.empty() ? 1 : frames.front().dim();
  return with_version({{"dim", dim}, {"frames", std::move(arr)}});
}

json to_json(const VideoContext& ctx) {
  json segs = json::array();
  for (const auto& s : ctx.segments) {
    segs.push_back({{"start_s", s.interval.start_s()}, {"end_s", s.interval.end_s()}, {"text", s.text}});
  }
  json j = {{"video_id", ctx.video_id}, {"segments", std::move(segs)}};
  if (!ctx.frames.empty()) {
    json arr = json::array();
    for (const auto& f : ctx.frames) arr.push_back(vector_json(f));
    j["frames"] = std::move(arr);
    j["dim"] = ctx.frames.front().dim();
  }
  if (!ctx.selected_frames.empty()) j["selected_frames"] = ctx.selected_frames;
  return with_version(std::move(j));
}

json to_json(const Qrel& q) { return with_version({{"id", q.id}, {"relevant", q.relevant}}); }

json to_json(const RankingRecord& r) { return with_version({{"id", r.id}, {"ranking", r.ranking}}); }

json query_embedding_to_json(const EmbeddingVector& v) {
  return with_version({{"dim", v.dim()}, {"embedding", vector_json(v)}});
}

json to_json(const PrecomputedEmbedder& e) {
  json entries = json::array();
  for (const auto& [text, vec] : e.table()) entries.push_back({{"text", text}, {"embedding", vector_json(vec)}});
  return with_version({{"dim", e.dimension()}, {"entries", std::move(entries)}});
}

namespace {

template <class T>
std::string dump_lines(const std::vector<T>& items) {
  std::string out;
  for (const auto& item : items) {
    out += to_json(item).dump();
    out += '\n';
  }
  return out;
}

}  // namespace

std::string dump_dataset(const DatasetFile& d) { return dump_lines(d.records); }
std::string dump_qrels(const std::vector<Qrel>& qrels) { return dump_lines(qrels); }
std::string dump_rankings(const std::vector<RankingRecord>& rankings) { return dump_lines(rankings); }
std::string dump_document(const json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open file for writing", ErrorContext{path.string(), "", ""});
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed", ErrorContext{path.string(), "", ""});
}

}  // namespace avkit
