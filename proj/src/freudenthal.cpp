#include "weylkit/freudenthal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "scaled_lattice.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/weyl_group.hpp"

namespace weylkit {

using detail::IntVec;
using detail::IntVecHash;
using detail::ScaledLattice;

bool DominantLattice::contains(const Weight& mu) const {
  return std::find(members.begin(), members.end(), mu) != members.end();
}

MultiplicityTable::MultiplicityTable(LieType type, Weight highest, std::vector<MultiplicityRow> rows)
    : type_(type), highest_(std::move(highest)), rows_(std::move(rows)) {}

const MultiplicityRow* MultiplicityTable::find(const Weight& mu) const {
  for (const auto& row : rows_) {
    if (row.mu == mu) return &row;
  }
  return nullptr;
}

BigInt MultiplicityTable::multiplicity(const Weight& mu) const {
  const MultiplicityRow* row = find(mu);
  return row ? row->multiplicity : BigInt(0);
}

BigInt MultiplicityTable::dimension() const {
  BigInt total = 0;
  for (const auto& row : rows_) total += row.multiplicity * row.orbit_length;
  return total;
}

DominantLattice MultiplicityTable::lattice() const {
  DominantLattice out{highest_, {}, {}};
  for (const auto& row : rows_) {
    out.members.push_back(row.mu);
    out.depths.push_back(row.depth);
  }
  return out;
}

namespace {

void require_dominant(const LieType& t, const Weight& lambda) {
  if (lambda.rank() != t.rank()) {
    throw ValidationError("weight has " + std::to_string(lambda.rank()) + " coefficients, " + t.name() + " needs " +
                          std::to_string(t.rank()));
  }
  if (!lambda.is_dominant()) throw ValidationError("highest weight must be dominant");
}

struct ScaledClosure {
  std::vector<IntVec> members;
  std::vector<int> depths;
  std::unordered_map<IntVec, std::size_t, IntVecHash> index;
};

// Descending closure from lambda through dominant weights; the members come out
// sorted by depth and then by descending Dynkin labels.
ScaledClosure closure(const ScaledLattice& lattice, const Weight& lambda) {
  ScaledClosure raw;
  const IntVec top = lattice.embed(lambda);
  raw.index.emplace(top, 0);
  raw.members.push_back(top);
  raw.depths.push_back(0);
  const auto& roots = lattice.positive_roots();
  const auto& heights = lattice.root_heights();
  for (std::size_t next = 0; next < raw.members.size(); ++next) {
    for (std::size_t r = 0; r < roots.size(); ++r) {
      IntVec nu = raw.members[next];
      for (std::size_t k = 0; k < nu.size(); ++k) nu[k] -= roots[r][k];
      if (!lattice.is_dominant(nu) || raw.index.count(nu)) continue;
      raw.index.emplace(nu, raw.members.size());
      raw.members.push_back(std::move(nu));
      raw.depths.push_back(raw.depths[next] + heights[r]);
    }
  }

  std::vector<Weight> labels;
  labels.reserve(raw.members.size());
  for (const auto& m : raw.members) labels.push_back(lattice.labels(m));
  std::vector<std::size_t> order(raw.members.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (raw.depths[a] != raw.depths[b]) return raw.depths[a] < raw.depths[b];
    return labels[a] > labels[b];
  });

  ScaledClosure sorted;
  for (std::size_t i : order) {
    sorted.index.emplace(raw.members[i], sorted.members.size());
    sorted.members.push_back(raw.members[i]);
    sorted.depths.push_back(raw.depths[i]);
  }
  return sorted;
}

// Positive roots grouped into classes on which the Freudenthal term at mu is
// constant: orbits of the stabilizer of mu, with alpha identified with -alpha.
class RootClasses {
 public:
  explicit RootClasses(const ScaledLattice& lattice) : lattice_(lattice) {
    const auto& roots = lattice.positive_roots();
    std::unordered_map<IntVec, std::size_t, IntVecHash> index;
    for (std::size_t r = 0; r < roots.size(); ++r) index.emplace(roots[r], r);
    const int rank = static_cast<int>(lattice.simple_roots().size());
    reflected_.assign(static_cast<std::size_t>(rank), std::vector<std::size_t>(roots.size()));
    for (int j = 0; j < rank; ++j) {
      for (std::size_t r = 0; r < roots.size(); ++r) {
        IntVec image = lattice.reflect(roots[r], j);
        auto it = index.find(image);
        if (it == index.end()) {
          for (auto& c : image) c = -c;
          it = index.find(image);
        }
        if (it == index.end()) fail_invariant("simple reflection does not permute the roots");
        reflected_[static_cast<std::size_t>(j)][r] = it->second;
      }
    }
  }

  // (representative, class size) pairs for mu.
  const std::vector<std::pair<std::size_t, std::int64_t>>& classes(const IntVec& mu) {
    std::vector<bool> zero;
    zero.reserve(reflected_.size());
    for (const auto& a : lattice_.simple_roots()) zero.push_back(lattice_.dot(mu, a) == 0);
    auto it = memo_.find(zero);
    if (it != memo_.end()) return it->second;

    const std::size_t n = lattice_.positive_roots().size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t j = 0; j < zero.size(); ++j) {
      if (!zero[j]) continue;
      for (std::size_t r = 0; r < n; ++r) {
        std::size_t a = find(r), b = find(reflected_[j][r]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<std::int64_t> size(n, 0);
    for (std::size_t r = 0; r < n; ++r) ++size[find(r)];
    std::vector<std::pair<std::size_t, std::int64_t>> out;
    for (std::size_t r = 0; r < n; ++r) {
      if (size[r] > 0) out.emplace_back(r, size[r]);
    }
    return memo_.emplace(std::move(zero), std::move(out)).first->second;
  }

 private:
  const ScaledLattice& lattice_;
  std::vector<std::vector<std::size_t>> reflected_;
  std::map<std::vector<bool>, std::vector<std::pair<std::size_t, std::int64_t>>> memo_;
};

std::shared_ptr<const MultiplicityTable> compute_table(const LieType& t, const Weight& lambda) {
  const ScaledLattice lattice(t);
  const ScaledClosure pi = closure(lattice, lambda);
  const auto& roots = lattice.positive_roots();
  const IntVec& delta = lattice.delta();
  RootClasses root_classes(lattice);

  auto shifted_norm = [&](const IntVec& x) {
    IntVec y = x;
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += delta[k];
    return lattice.dot(y, y);
  };
  const std::int64_t top_norm = shifted_norm(pi.members.front());

  std::vector<BigInt> mult(pi.members.size());
  mult[0] = 1;
  IntVec nu, probe;
  for (std::size_t i = 1; i < pi.members.size(); ++i) {
    const IntVec& mu = pi.members[i];
    const std::int64_t den = top_norm - shifted_norm(mu);
    if (den <= 0) fail_invariant("non-positive Freudenthal denominator in " + t.name());
    BigInt sum = 0;
    for (const auto& [r, size] : root_classes.classes(mu)) {
      const IntVec& alpha = roots[r];
      BigInt term = 0;
      nu = mu;
      while (true) {
        for (std::size_t k = 0; k < nu.size(); ++k) nu[k] += alpha[k];
        probe = nu;
        lattice.make_dominant(probe);
        auto it = pi.index.find(probe);
        if (it == pi.index.end()) break;
        term += mult[it->second] * lattice.dot(nu, alpha);
      }
      sum += term * size;
    }
    BigInt numerator = 2 * sum;
    if (numerator % den != 0) fail_invariant("Freudenthal recursion produced a non-integral multiplicity in " + t.name());
    mult[i] = numerator / den;
    if (mult[i] < 1) fail_invariant("Freudenthal recursion produced a non-positive multiplicity in " + t.name());
  }

  std::vector<MultiplicityRow> rows;
  rows.reserve(pi.members.size());
  for (std::size_t i = 0; i < pi.members.size(); ++i) {
    Weight mu = lattice.labels(pi.members[i]);
    BigInt orbit = orbit_length(t, mu);
    rows.push_back({std::move(mu), std::move(mult[i]), std::move(orbit), pi.depths[i]});
  }
  return std::make_shared<const MultiplicityTable>(t, lambda, std::move(rows));
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<LieType, Weight>, std::shared_ptr<const MultiplicityTable>>& cache() {
  static std::map<std::pair<LieType, Weight>, std::shared_ptr<const MultiplicityTable>> c;
  return c;
}

}  // namespace

DominantLattice dominant_lattice(const LieType& t, const Weight& lambda) {
  require_dominant(t, lambda);
  const ScaledLattice lattice(t);
  const ScaledClosure pi = closure(lattice, lambda);
  DominantLattice out{lambda, {}, pi.depths};
  for (const auto& m : pi.members) out.members.push_back(lattice.labels(m));
  return out;
}

DominantLattice dominant_lattice_box(const LieType& t, const Weight& lambda) {
  require_dominant(t, lambda);
  if (t.rank() > kBoxOracleMaxRank) {
    throw ValidationError("box enumeration is limited to rank " + std::to_string(kBoxOracleMaxRank));
  }
  const RootSystem& rs = root_system(t);
  const RootVector top = rs.to_root_coords(lambda);
  std::vector<std::int64_t> bound;
  double volume = 1;
  for (const auto& c : top) {
    bound.push_back(static_cast<std::int64_t>(numerator(c) / denominator(c)));
    volume *= static_cast<double>(bound.back() + 1);
  }
  if (volume > 5e7) throw ValidationError("box enumeration too large for this weight");

  const auto& cartan = rs.cartan_matrix();
  const std::size_t n = bound.size();
  std::vector<std::pair<int, Weight>> found;
  std::vector<std::int64_t> c(n, 0);
  while (true) {
    Weight mu = lambda;
    int depth = 0;
    for (std::size_t i = 0; i < n; ++i) {
      depth += static_cast<int>(c[i]);
      if (c[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) mu[j] -= c[i] * cartan[i][j];
    }
    if (mu.is_dominant()) found.emplace_back(depth, std::move(mu));
    std::size_t k = 0;
    while (k < n && c[k] == bound[k]) c[k++] = 0;
    if (k == n) break;
    ++c[k];
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
  DominantLattice out{lambda, {}, {}};
  for (auto& [depth, mu] : found) {
    out.depths.push_back(depth);
    out.members.push_back(std::move(mu));
  }
  return out;
}

std::shared_ptr<const MultiplicityTable> multiplicity_table(const LieType& t, const Weight& lambda) {
  require_dominant(t, lambda);
  const auto key = std::make_pair(t, lambda);
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  auto table = compute_table(t, lambda);
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache().emplace(key, std::move(table)).first->second;
}

BigInt multiplicity(const LieType& t, const Weight& lambda, const Weight& mu) {
  require_dominant(t, lambda);
  if (mu.rank() != t.rank()) throw ValidationError("weight rank does not match " + t.name());
  const Weight dominant = dominant_representative(t, mu);
  if (!root_system(t).precedes(dominant, lambda)) return 0;
  return multiplicity_table(t, lambda)->multiplicity(dominant);
}

BigInt dim_weyl_module(const LieType& t, const Weight& lambda) { return multiplicity_table(t, lambda)->dimension(); }

BigInt dim_weyl_product(const LieType& t, const Weight& lambda) {
  require_dominant(t, lambda);
  const RootSystem& rs = root_system(t);
  const EuclideanVector& d = rs.delta();
  EuclideanVector shifted = rs.to_euclidean(lambda);
  for (std::size_t k = 0; k < shifted.size(); ++k) shifted[k] += d[k];
  Rational product = 1;
  for (const auto& alpha : rs.positive_roots()) product *= rs.inner(shifted, alpha) / rs.inner(d, alpha);
  return to_integer(product);
}

void clear_multiplicity_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex());
  cache().clear();
}

}  // namespace weylkit
