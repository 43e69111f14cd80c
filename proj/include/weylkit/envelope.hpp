#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "weylkit/cartan.hpp"
#include "weylkit/weight_spec.hpp"

namespace weylkit {

inline constexpr int kEnvelopeSchemaVersion = 1;

enum class OutputFormat { Json, Csv, Markdown };
OutputFormat parse_output_format(std::string_view text);  // json, csv or md

// Command result. Integers travel as decimal strings; key order is fixed, and
// only timing_ms varies between identical invocations.
struct Envelope {
  Envelope(std::string op, LieType t, LabelConvention c) : operation(std::move(op)), type(t), convention(c) {}

  std::string operation;
  LieType type;
  LabelConvention convention = LabelConvention::Reversed;
  nlohmann::ordered_json weights = nlohmann::ordered_json::object();
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  std::optional<double> timing_ms;

  nlohmann::ordered_json to_json() const;
  std::string render(OutputFormat format) const;
};

std::string render_csv(const std::vector<std::string>& columns, const std::vector<std::vector<std::string>>& rows);
std::string render_markdown(const std::vector<std::string>& columns, const std::vector<std::vector<std::string>>& rows);

}  // namespace weylkit
