#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gclab/evolution.hpp"

namespace gclab::cli {

inline constexpr std::string_view kMetricsHeader =
    "t,purity,von_neumann_entropy,mutual_information,log_negativity,ntilde_minus,n_minus,n_plus,separable";

/// 12 significant digits, C locale.
std::string format_number(double x);

/// Comma-joined MetricsRow fields, no line ending.
std::string format_metrics(const MetricsRow& row);

void write_metrics_csv(std::ostream& out, const std::vector<MetricsRow>& rows);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column; throws std::out_of_range if absent.
  std::size_t column(std::string_view name) const;
};

/// Comma-separated, LF or CRLF lines, no quoting; the first line is the header.
CsvTable parse_csv(std::string_view text);

}  // namespace gclab::cli
