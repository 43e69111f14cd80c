#include "weylkit/reference_tables.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/expression.hpp"
#include "weylkit/freudenthal.hpp"

namespace weylkit {

namespace embedded {
extern const std::string_view reference_tables_json;
}

std::string to_string(RowStatus status) {
  switch (status) {
    case RowStatus::Match: return "match";
    case RowStatus::Bound: return "bound";
    case RowStatus::Mismatch: return "mismatch";
    case RowStatus::Duplicate: return "duplicate";
    case RowStatus::Missing: return "missing";
    case RowStatus::Phantom: return "phantom";
  }
  return "?";
}

int ReferenceTable::discrepancy_count() const {
  int n = 0;
  for (const auto& b : blocks) {
    for (const auto& r : b.rows) n += r.status != RowStatus::Match;
  }
  for (const auto& r : dimension_rows) n += r.status != RowStatus::Match;
  return n;
}

std::string symbolic_pattern(const Weight& w) {
  const int l = w.rank();
  std::string out;
  for (int i = 1; i <= l; ++i) {
    const BigInt& a = w.at_node(i);
    if (a == 0) continue;
    if (!out.empty()) out += " + ";
    if (a != 1) out += to_decimal(a) + "*";
    if (i == l) {
      out += "w[l]";
    } else if (2 * i > l) {
      out += "w[l-" + std::to_string(l - i) + "]";
    } else {
      out += "w[" + std::to_string(i) + "]";
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

using nlohmann::json;

const json& corpus() {
  static const json data = [] {
    json j = json::parse(embedded::reference_tables_json);
    if (j.at("schema_version").get<int>() != 1) throw InvariantViolation("unsupported reference table schema");
    return j;
  }();
  return data;
}

const json* find_table(std::string_view name) {
  for (const auto& t : corpus().at("tables")) {
    if (t.at("name").get<std::string>() == name) return &t;
  }
  return nullptr;
}

Weight instantiate(const std::string& pattern, int rank) {
  ExprEnv env{rank, std::nullopt, Characteristic::generic()};
  auto w = WeightPattern::parse(pattern).instantiate(rank, env);
  if (!w) throw ValidationError("pattern " + pattern + " does not fit rank " + std::to_string(rank));
  return *w;
}

Rational evaluate(const std::string& text, int rank) {
  return Expression::parse(text).evaluate(ExprEnv{rank, std::nullopt, Characteristic::generic()});
}

std::string describe(const Rational& q) { return to_decimal(q); }

void compare_row(ComparedRow& row, const MultiplicityRow& computed) {
  row.multiplicity = computed.multiplicity;
  row.orbit_length = computed.orbit_length;
  std::vector<std::string> notes;
  bool mismatch = false, bound = false;
  if (row.printed_multiplicity) {
    Rational m(computed.multiplicity);
    if (*row.printed_multiplicity > m) {
      bound = true;
      notes.push_back("printed multiplicity " + row.printed_multiplicity_text + " = " +
                      describe(*row.printed_multiplicity) + " exceeds computed " + to_decimal(computed.multiplicity));
    } else if (*row.printed_multiplicity < m) {
      mismatch = true;
      notes.push_back("printed multiplicity " + row.printed_multiplicity_text + " = " +
                      describe(*row.printed_multiplicity) + " is below computed " + to_decimal(computed.multiplicity));
    }
  }
  if (row.printed_orbit && *row.printed_orbit != Rational(computed.orbit_length)) {
    mismatch = true;
    notes.push_back("printed orbit length " + row.printed_orbit_text + " = " + describe(*row.printed_orbit) +
                    ", computed " + to_decimal(computed.orbit_length));
  }
  row.status = mismatch ? RowStatus::Mismatch : bound ? RowStatus::Bound : RowStatus::Match;
  for (const auto& n : notes) row.note += (row.note.empty() ? "" : "; ") + n;
}

// Among printed rows naming the same weight, the one closest to the computed
// row is compared; the others are reported as duplicates.
std::size_t closest(const std::vector<std::size_t>& candidates, const std::vector<ComparedRow>& rows,
                    const MultiplicityRow& computed) {
  auto score = [&](const ComparedRow& r) {
    Rational m(computed.multiplicity);
    Rational diff = r.printed_multiplicity ? abs(*r.printed_multiplicity - m) : Rational(0);
    bool orbit_ok = !r.printed_orbit || *r.printed_orbit == Rational(computed.orbit_length);
    return std::make_pair(orbit_ok ? 0 : 1, diff);
  };
  std::size_t best = candidates.front();
  for (std::size_t c : candidates) {
    if (score(rows[c]) < score(rows[best])) best = c;
  }
  return best;
}

ComparedBlock reproduce_block(const LieType& t, const json& block, bool has_orbit) {
  const int l = t.rank();
  ComparedBlock out;
  out.highest_pattern = block.at("highest").get<std::string>();
  out.highest = instantiate(out.highest_pattern, l);
  auto table = multiplicity_table(t, out.highest);
  out.dimension = table->dimension();

  std::map<Weight, std::vector<std::size_t>> printed_at;
  for (const auto& r : block.at("rows")) {
    ComparedRow row;
    row.mu_pattern = r.at("mu").get<std::string>();
    row.mu = instantiate(row.mu_pattern, l);
    row.printed_multiplicity_text = r.at("multiplicity").get<std::string>();
    row.printed_multiplicity = evaluate(row.printed_multiplicity_text, l);
    if (has_orbit) {
      row.printed_orbit_text = r.at("orbit_length").get<std::string>();
      row.printed_orbit = evaluate(row.printed_orbit_text, l);
    }
    printed_at[row.mu].push_back(out.rows.size());
    out.rows.push_back(std::move(row));
  }

  for (auto& [mu, indices] : printed_at) {
    const MultiplicityRow* computed = table->find(mu);
    if (!computed) {
      for (std::size_t i : indices) {
        out.rows[i].status = RowStatus::Phantom;
        out.rows[i].note = "not a dominant weight below " + out.highest_pattern;
      }
      continue;
    }
    std::size_t keep = closest(indices, out.rows, *computed);
    compare_row(out.rows[keep], *computed);
    for (std::size_t i : indices) {
      if (i == keep) continue;
      ComparedRow& dup = out.rows[i];
      dup.status = RowStatus::Duplicate;
      dup.note = "weight printed twice in this block; compared against the other " + dup.mu_pattern + " row";
    }
  }

  std::vector<std::string> missing;
  for (const auto& computed : table->rows()) {
    if (printed_at.count(computed.mu)) continue;
    ComparedRow row;
    row.mu_pattern = symbolic_pattern(computed.mu);
    row.mu = computed.mu;
    row.multiplicity = computed.multiplicity;
    row.orbit_length = computed.orbit_length;
    row.status = RowStatus::Missing;
    row.note = "computed dominant weight absent from the printed block";
    missing.push_back(row.mu_pattern);
    out.rows.push_back(std::move(row));
  }
  if (!missing.empty()) {
    for (auto& row : out.rows) {
      if (row.status != RowStatus::Duplicate) continue;
      row.note += "; unprinted computed weight(s): ";
      for (std::size_t k = 0; k < missing.size(); ++k) row.note += (k ? ", " : "") + missing[k];
    }
  }
  return out;
}

DimensionRow reproduce_dimension_row(const LieType& t, const std::string& pattern, const json& branches) {
  const int l = t.rank();
  DimensionRow row;
  row.pattern = pattern;
  row.weight = instantiate(pattern, l);
  for (const auto& b : branches) {
    DimensionBranch branch;
    branch.characteristic = b.at("characteristic").get<std::string>();
    branch.condition = b.at("condition").get<std::string>();
    branch.dimension_text = b.at("dimension").get<std::string>();
    branch.dimension = evaluate(branch.dimension_text, l);
    row.branches.push_back(std::move(branch));
  }
  row.weyl_dimension = dim_weyl_product(t, row.weight);
  BigInt sum = dim_weyl_module(t, row.weight);
  if (sum != row.weyl_dimension) fail_invariant("dim V mismatch for " + row.weight.to_string());
  row.closed = dim_closed(t, row.weight, Characteristic::generic());

  ExprEnv generic{l, std::nullopt, Characteristic::generic()};
  std::vector<std::string> notes;
  bool generic_seen = false;
  bool mismatch = false;
  for (const auto& b : row.branches) {
    Rational v(row.weyl_dimension);
    if (Expression::parse(b.condition).holds(generic)) {
      if (generic_seen) continue;
      generic_seen = true;
      if (b.dimension != v) {
        mismatch = true;
        notes.push_back("printed " + b.dimension_text + " = " + describe(b.dimension) + ", dim V = " +
                        to_decimal(row.weyl_dimension));
      }
    } else if (b.dimension >= v) {
      mismatch = true;
      notes.push_back("corrected value " + describe(b.dimension) + " for " + b.characteristic +
                      " is not below dim V = " + to_decimal(row.weyl_dimension));
    } else {
      notes.push_back(b.characteristic + ": corrected value not independently checked");
    }
  }
  if (!generic_seen) {
    mismatch = true;
    notes.push_back("no printed branch covers generic p");
  }
  row.status = mismatch ? RowStatus::Mismatch : RowStatus::Match;
  for (const auto& n : notes) row.note += (row.note.empty() ? "" : "; ") + n;
  return row;
}

}  // namespace

std::vector<std::string> reference_table_names() {
  std::vector<std::string> names;
  for (const auto& t : corpus().at("tables")) names.push_back(t.at("name").get<std::string>());
  return names;
}

ReferenceTable reproduce_table(std::string_view name, int rank) {
  const json* spec = find_table(name);
  if (!spec) {
    std::string known;
    for (const auto& n : reference_table_names()) known += (known.empty() ? "" : ", ") + n;
    throw ValidationError("unknown table '" + std::string(name) + "' (known: " + known + ")");
  }
  LieType t(parse_family(spec->at("family").get<std::string>()), rank);
  ReferenceTable out{spec->at("name").get<std::string>(),
                     spec->at("title").get<std::string>(),
                     spec->at("kind").get<std::string>(),
                     t,
                     spec->value("min_rank", 1),
                     false,
                     {},
                     {},
                     {}};
  if (rank < out.theorem_rank) {
    out.notes.push_back("rank " + std::to_string(rank) + " is below the printed range l >= " +
                        std::to_string(out.theorem_rank));
  }
  // The patterns reach down to w[l-3] and w[4].
  if (rank < 8) throw ValidationError("reference tables need rank >= 8");

  if (out.kind == "multiplicity") {
    const auto& blocks = spec->at("blocks");
    out.has_orbit_column = !blocks.empty() && blocks.front().at("rows").front().contains("orbit_length");
    for (const auto& block : blocks) out.blocks.push_back(reproduce_block(t, block, out.has_orbit_column));
  } else {
    for (const auto& entry : spec->at("entries")) {
      if (rank < entry.value("min_rank", 1)) continue;
      for (const auto& pattern : entry.at("weights")) {
        out.dimension_rows.push_back(reproduce_dimension_row(t, pattern.get<std::string>(), entry.at("branches")));
      }
    }
  }
  return out;
}

}  // namespace weylkit
