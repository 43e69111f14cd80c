#include "weylkit/envelope.hpp"

#include <sstream>

#include "weylkit/errors.hpp"

namespace weylkit {

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "md" || text == "markdown") return OutputFormat::Markdown;
  throw ValidationError("unknown format '" + std::string(text) + "' (expected json, csv or md)");
}

nlohmann::ordered_json Envelope::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kEnvelopeSchemaVersion;
  j["operation"] = operation;
  j["family"] = std::string(1, family_letter(type.family()));
  j["rank"] = type.rank();
  j["label_convention"] = to_string(convention);
  j["weights"] = weights;
  j["values"] = values;
  j["table"] = {{"columns", columns}, {"rows", rows}};
  j["notes"] = notes;
  if (timing_ms) {
    j["timing_ms"] = *timing_ms;
  } else {
    j["timing_ms"] = nullptr;
  }
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

}  // namespace

std::string render_csv(const std::vector<std::string>& columns, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << '\n';
  };
  line(columns);
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string render_markdown(const std::vector<std::string>& columns, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    out << '|';
    for (const auto& c : cells) out << ' ' << md_cell(c) << " |";
    out << '\n';
  };
  line(columns);
  out << '|';
  for (std::size_t i = 0; i < columns.size(); ++i) out << " --- |";
  out << '\n';
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string Envelope::render(OutputFormat format) const {
  switch (format) {
    case OutputFormat::Json: return to_json().dump(2) + "\n";
    case OutputFormat::Csv: return render_csv(columns, rows);
    case OutputFormat::Markdown: {
      std::string out = render_markdown(columns, rows);
      for (const auto& n : notes) out += "\n> " + n + "\n";
      return out;
    }
  }
  return {};
}

}  // namespace weylkit
