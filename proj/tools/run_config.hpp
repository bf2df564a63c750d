#pragma once

#include <map>
#include <string>

#include "silverline/numeric.hpp"

namespace silverline::cli {

enum class OutputFormat { Json, Csv, Text };

std::string_view to_string(OutputFormat f) noexcept;
/// Throws InvalidArgument for anything other than json, csv, text.
OutputFormat parse_output_format(std::string_view text);

/// Settings shared by the subcommands, assembled from flags and an optional
/// key=value config file (flags win).
struct RunConfig {
  Rational precision_width = dyadic(100);
  std::map<std::string, int> degree_bounds = {{"dichotomy", 10}};
  int tile_count = 50;
  OutputFormat output_format = OutputFormat::Text;
  int digits = 12;

  /// Throws InvalidArgument on a non-positive width or a bound below 1.
  void validate() const;
  int degree_bound(const std::string& op) const;
};

}  // namespace silverline::cli
