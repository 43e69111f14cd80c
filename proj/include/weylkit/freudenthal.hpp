#pragma once

#include <memory>
#include <vector>

#include "weylkit/cartan.hpp"

namespace weylkit {

// Dominant weights mu <= lambda, highest first, ordered by increasing depth
// (height of lambda - mu); ties broken by descending coefficient vector.
struct DominantLattice {
  Weight highest;
  std::vector<Weight> members;
  std::vector<int> depths;

  bool contains(const Weight& mu) const;
};

struct MultiplicityRow {
  Weight mu;
  BigInt multiplicity;
  BigInt orbit_length;
  int depth = 0;
};

class MultiplicityTable {
 public:
  MultiplicityTable(LieType type, Weight highest, std::vector<MultiplicityRow> rows);

  const LieType& type() const { return type_; }
  const Weight& highest() const { return highest_; }
  const std::vector<MultiplicityRow>& rows() const { return rows_; }

  const MultiplicityRow* find(const Weight& mu) const;
  // Zero for dominant weights outside the lattice.
  BigInt multiplicity(const Weight& mu) const;
  // Sum of multiplicity times orbit length.
  BigInt dimension() const;
  DominantLattice lattice() const;

 private:
  LieType type_;
  Weight highest_;
  std::vector<MultiplicityRow> rows_;
};

DominantLattice dominant_lattice(const LieType& t, const Weight& lambda);

inline constexpr int kBoxOracleMaxRank = 6;

// Slow completeness oracle: enumerates the full box of simple-root coordinates.
DominantLattice dominant_lattice_box(const LieType& t, const Weight& lambda);

// Memoized per (type, lambda); safe to call concurrently.
std::shared_ptr<const MultiplicityTable> multiplicity_table(const LieType& t, const Weight& lambda);

// Accepts any mu; multiplicities are W-invariant so mu is first moved to the
// dominant chamber.
BigInt multiplicity(const LieType& t, const Weight& lambda, const Weight& mu);

BigInt dim_weyl_module(const LieType& t, const Weight& lambda);
BigInt dim_weyl_product(const LieType& t, const Weight& lambda);

void clear_multiplicity_cache();

}  // namespace weylkit
