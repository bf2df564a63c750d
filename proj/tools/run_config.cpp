#include "run_config.hpp"

#include "silverline/error.hpp"

namespace silverline::cli {

std::string_view to_string(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "text";
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "text") return OutputFormat::Text;
  fail(ErrorCode::InvalidArgument, "unknown output format '" + std::string(text) + "'");
}

void RunConfig::validate() const {
  require(precision_width > 0, ErrorCode::InvalidArgument, "precision width must be positive");
  for (const auto& [op, bound] : degree_bounds)
    require(bound >= 1, ErrorCode::InvalidArgument, "degree bound for " + op + " must be >= 1");
  require(tile_count >= 1, ErrorCode::InvalidArgument, "tile count must be >= 1");
  require(digits >= 0 && digits <= 1000, ErrorCode::InvalidArgument, "digits must lie in 0..1000");
}

int RunConfig::degree_bound(const std::string& op) const {
  const auto it = degree_bounds.find(op);
  require(it != degree_bounds.end(), ErrorCode::InvalidArgument, "no degree bound for " + op);
  return it->second;
}

}  // namespace silverline::cli
