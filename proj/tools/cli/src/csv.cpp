#include "gclab/cli/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace gclab::cli {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_metrics(const MetricsRow& row) {
  std::string s;
  for (const double v : {row.t, row.purity, row.von_neumann_entropy, row.mutual_information, row.log_negativity,
                         row.nt_minus, row.n_minus, row.n_plus}) {
    s += format_number(v);
    s += ',';
  }
  s += row.separable ? '1' : '0';
  return s;
}

void write_metrics_csv(std::ostream& out, const std::vector<MetricsRow>& rows) {
  out << kMetricsHeader << '\n';
  for (const auto& row : rows) out << format_metrics(row) << '\n';
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("no CSV column '" + std::string(name) + "'");
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  bool first = true;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::vector<std::string> fields;
    for (auto comma = line.find(','); comma != std::string_view::npos; comma = line.find(',')) {
      fields.emplace_back(line.substr(0, comma));
      line.remove_prefix(comma + 1);
    }
    fields.emplace_back(line);
    if (first) {
      table.header = std::move(fields);
      first = false;
    } else {
      if (fields.size() != table.header.size()) throw std::runtime_error("CSV row width differs from header");
      table.rows.push_back(std::move(fields));
    }
  }
  return table;
}

}  // namespace gclab::cli
