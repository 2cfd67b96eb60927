#include "avkit/errors.hpp"

namespace avkit {

namespace {

std::string render(const std::string& kind, const std::string& detail, const ErrorContext& ctx) {
  std::string out = kind + " error";
  if (!ctx.file.empty()) out += " in " + ctx.file;
  if (!ctx.record.empty()) out += " (record " + ctx.record + ")";
  if (!ctx.field.empty()) out += " at " + ctx.field;
  out += ": " + detail;
  return out;
}

}  // namespace

DataError::DataError(std::string kind, const std::string& detail, ErrorContext ctx)
    : Error(render(kind, detail, ctx)), kind_(std::move(kind)), detail_(detail), ctx_(std::move(ctx)) {}

}  // namespace avkit
