#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/cartan.hpp"

namespace weylkit {

struct ParabolicFactor {
  Family family;
  int rank;
  friend auto operator<=>(const ParabolicFactor&, const ParabolicFactor&) = default;
};

// Irreducible components of a standard parabolic subgroup, sorted.
class ParabolicType {
 public:
  ParabolicType() = default;
  explicit ParabolicType(std::vector<ParabolicFactor> factors);

  const std::vector<ParabolicFactor>& factors() const { return factors_; }
  int node_count() const;
  BigInt order() const;
  std::string to_string() const;  // e.g. "B10 x A1", or "1" when trivial

  friend bool operator==(const ParabolicType&, const ParabolicType&) = default;

 private:
  std::vector<ParabolicFactor> factors_;
};

BigInt weyl_order(Family family, int rank);
inline BigInt weyl_order(const LieType& t) { return weyl_order(t.family(), t.rank()); }

// Pairs (i, j), i < j, of adjacent nodes in the reversed labelling.
std::vector<std::pair<int, int>> dynkin_edges(const LieType& t);

ParabolicType stabilizer_type(const LieType& t, const Weight& lambda);
BigInt orbit_length(const LieType& t, const Weight& lambda);

inline constexpr int kOrbitEnumerateMaxRank = 7;

// Closure of {lambda} under the simple reflections; only for rank <= 7.
std::set<Weight> orbit_enumerate(const LieType& t, const Weight& lambda);

// s_i(mu) = mu - <mu, alpha_i^vee> alpha_i in fundamental-weight coordinates.
Weight reflect(const LieType& t, const Weight& mu, int node);

// Dominant representative of the W-orbit of mu, by repeated simple reflections.
Weight dominant_representative(const LieType& t, const Weight& mu);

}  // namespace weylkit
