#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylkit/cartan.hpp"
#include "weylkit/closed_form.hpp"

namespace weylkit {

// Match: printed and computed agree. Bound: the printed multiplicity exceeds
// the characteristic-zero one (the printed tables promise only bounds).
// Mismatch: any other disagreement. Duplicate: a weight printed twice in one
// block. Missing: computed but not printed. Phantom: printed but not a
// dominant weight below the highest weight.
enum class RowStatus { Match, Bound, Mismatch, Duplicate, Missing, Phantom };
std::string to_string(RowStatus status);

struct ComparedRow {
  std::string mu_pattern;  // printed pattern, or a symbolic rendering for Missing rows
  Weight mu;
  std::string printed_multiplicity_text;
  std::string printed_orbit_text;
  std::optional<Rational> printed_multiplicity;
  std::optional<Rational> printed_orbit;
  std::optional<BigInt> multiplicity;
  std::optional<BigInt> orbit_length;
  RowStatus status = RowStatus::Match;
  std::string note;
};

struct ComparedBlock {
  std::string highest_pattern;
  Weight highest;
  BigInt dimension = 0;  // sum of multiplicity times orbit length
  std::vector<ComparedRow> rows;
};

struct DimensionBranch {
  std::string characteristic;
  std::string condition;
  std::string dimension_text;
  Rational dimension;
};

struct DimensionRow {
  std::string pattern;
  Weight weight;
  std::vector<DimensionBranch> branches;  // first entry holds at generic p
  BigInt weyl_dimension = 0;
  ClosedDimension closed;  // registry value at generic p
  RowStatus status = RowStatus::Match;
  std::string note;
};

struct ReferenceTable {
  std::string name;
  std::string title;
  std::string kind;  // "multiplicity" or "dimension"
  LieType type;
  int theorem_rank = 1;
  bool has_orbit_column = false;
  std::vector<ComparedBlock> blocks;
  std::vector<DimensionRow> dimension_rows;
  std::vector<std::string> notes;

  // Rows whose status is not Match.
  int discrepancy_count() const;
};

std::vector<std::string> reference_table_names();

// Recomputes the named table at the given rank and compares it against the
// transcribed printed values. Unknown names raise ValidationError.
ReferenceTable reproduce_table(std::string_view name, int rank);

// "w[1] + 2*w[l-1]"-style rendering relative to the rank.
std::string symbolic_pattern(const Weight& w);

}  // namespace weylkit
