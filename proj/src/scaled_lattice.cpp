#include "scaled_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "weylkit/errors.hpp"

namespace weylkit::detail {

namespace {

constexpr std::int64_t kMaxCoefficient = 1'000'000;

IntVec scale_to_ints(const EuclideanVector& v, int scale) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& c : v) {
    Rational s = c * scale;
    if (!is_integer(s)) fail_invariant("scaled lattice vector is not integral");
    out.push_back(static_cast<std::int64_t>(numerator(s)));
  }
  return out;
}

}  // namespace

ScaledLattice::ScaledLattice(const LieType& t)
    : family_(t.family()), rank_(t.rank()), dim_(t.ambient_dimension()) {
  const RootSystem& rs = root_system(t);
  const int scale = (family_ == Family::B || family_ == Family::D) ? 2 : 1;
  for (int i = 1; i <= rank_; ++i) {
    if (family_ == Family::A) {
      IntVec v(static_cast<std::size_t>(dim_), 0);
      std::fill(v.begin(), v.begin() + i, 1);
      fundamental_.push_back(std::move(v));
    } else {
      fundamental_.push_back(scale_to_ints(rs.fundamental_weights()[static_cast<std::size_t>(i - 1)], scale));
    }
  }
  for (const auto& a : rs.simple_roots()) {
    simple_.push_back(scale_to_ints(a, scale));
    simple_norms_.push_back(dot(simple_.back(), simple_.back()));
  }
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    roots_.push_back(scale_to_ints(rs.positive_roots()[k], scale));
    const auto& coords = rs.positive_root_coords()[k];
    heights_.push_back(std::accumulate(coords.begin(), coords.end(), 0));
  }
  delta_.assign(static_cast<std::size_t>(dim_), 0);
  for (const auto& f : fundamental_) {
    for (int k = 0; k < dim_; ++k) delta_[static_cast<std::size_t>(k)] += f[static_cast<std::size_t>(k)];
  }
}

IntVec ScaledLattice::embed(const Weight& w) const {
  if (w.rank() != rank_) throw ValidationError("weight rank does not match the root system");
  IntVec x(static_cast<std::size_t>(dim_), 0);
  for (int i = 0; i < rank_; ++i) {
    const BigInt& a = w[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    if (abs(a) > kMaxCoefficient) throw ValidationError("weight coefficient too large for multiplicity tables");
    const auto ai = static_cast<std::int64_t>(a);
    const IntVec& f = fundamental_[static_cast<std::size_t>(i)];
    for (int k = 0; k < dim_; ++k) x[static_cast<std::size_t>(k)] += ai * f[static_cast<std::size_t>(k)];
  }
  return x;
}

Weight ScaledLattice::labels(const IntVec& x) const {
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    const std::int64_t num = 2 * dot(x, simple_[static_cast<std::size_t>(i)]);
    const std::int64_t den = simple_norms_[static_cast<std::size_t>(i)];
    if (num % den != 0) fail_invariant("scaled lattice vector has a non-integral Dynkin label");
    out.emplace_back(num / den);
  }
  return Weight(std::move(out));
}

bool ScaledLattice::is_dominant(const IntVec& x) const {
  const std::size_t n = x.size();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    if (x[k] < x[k + 1]) return false;
  }
  switch (family_) {
    case Family::A: return n < 2 || x[n - 2] >= x[n - 1];
    case Family::B:
    case Family::C: return (n < 2 || x[n - 2] >= x[n - 1]) && x[n - 1] >= 0;
    case Family::D: return x[n - 2] >= std::llabs(x[n - 1]);
  }
  return false;
}

void ScaledLattice::make_dominant(IntVec& x) const {
  if (family_ == Family::A) {
    std::sort(x.begin(), x.end(), std::greater<>());
    return;
  }
  int negatives = 0;
  bool has_zero = false;
  for (auto& c : x) {
    if (c < 0) {
      ++negatives;
      c = -c;
    }
    has_zero = has_zero || c == 0;
  }
  std::sort(x.begin(), x.end(), std::greater<>());
  if (family_ == Family::D && (negatives % 2 == 1) && !has_zero) x.back() = -x.back();
}

IntVec ScaledLattice::reflect(const IntVec& x, int i) const {
  const IntVec& a = simple_[static_cast<std::size_t>(i)];
  const std::int64_t num = 2 * dot(x, a);
  const std::int64_t den = simple_norms_[static_cast<std::size_t>(i)];
  if (num % den != 0) fail_invariant("reflection left the scaled lattice");
  IntVec out = x;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= (num / den) * a[k];
  return out;
}

std::int64_t ScaledLattice::dot(const IntVec& u, const IntVec& v) const {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < u.size(); ++k) total += u[k] * v[k];
  return total;
}

}  // namespace weylkit::detail
