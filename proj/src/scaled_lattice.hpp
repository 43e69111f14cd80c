#pragma once

#include <cstdint>
#include <vector>

#include "weylkit/cartan.hpp"

namespace weylkit::detail {

using IntVec = std::vector<std::int64_t>;

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Orthogonal coordinates scaled so every weight of interest is integral: B and D
// are doubled (half-integral spin weights), A is lifted to GL_{l+1} with
// lambda_i = e_1 + ... + e_i. Inner products are off by a constant positive
// factor, which cancels in every ratio used by the recursion.
class ScaledLattice {
 public:
  explicit ScaledLattice(const LieType& t);

  int dimension() const { return dim_; }
  IntVec embed(const Weight& w) const;
  Weight labels(const IntVec& x) const;
  bool is_dominant(const IntVec& x) const;
  void make_dominant(IntVec& x) const;
  std::int64_t dot(const IntVec& u, const IntVec& v) const;

  const std::vector<IntVec>& simple_roots() const { return simple_; }
  // s_i(x) for the i-th simple root, 0-based.
  IntVec reflect(const IntVec& x, int i) const;
  const std::vector<IntVec>& positive_roots() const { return roots_; }
  const std::vector<int>& root_heights() const { return heights_; }
  const IntVec& delta() const { return delta_; }

 private:
  Family family_;
  int rank_;
  int dim_;
  std::vector<IntVec> fundamental_;
  std::vector<IntVec> simple_;
  std::vector<std::int64_t> simple_norms_;
  std::vector<IntVec> roots_;
  std::vector<int> heights_;
  IntVec delta_;
};

}  // namespace weylkit::detail
