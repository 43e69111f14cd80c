#include "weylkit/weyl_group.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "weylkit/errors.hpp"

namespace weylkit {

ParabolicType::ParabolicType(std::vector<ParabolicFactor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(), [](const ParabolicFactor& a, const ParabolicFactor& b) {
    return a.rank != b.rank ? a.rank > b.rank : a.family < b.family;
  });
}

int ParabolicType::node_count() const {
  int total = 0;
  for (const auto& f : factors_) total += f.rank;
  return total;
}

BigInt ParabolicType::order() const {
  BigInt total = 1;
  for (const auto& f : factors_) total *= weyl_order(f.family, f.rank);
  return total;
}

std::string ParabolicType::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += " x ";
    out += family_letter(f.family) + std::to_string(f.rank);
  }
  return out;
}

BigInt weyl_order(Family family, int rank) {
  if (rank < 0) throw ValidationError("negative rank");
  switch (family) {
    case Family::A: return factorial(rank + 1);
    case Family::B:
    case Family::C: return power(2, static_cast<std::uint64_t>(rank)) * factorial(rank);
    case Family::D: return rank == 0 ? BigInt(1) : power(2, static_cast<std::uint64_t>(rank - 1)) * factorial(rank);
  }
  return 1;
}

std::vector<std::pair<int, int>> dynkin_edges(const LieType& t) {
  const int l = t.rank();
  std::vector<std::pair<int, int>> edges;
  if (t.family() == Family::D) {
    edges.emplace_back(1, 3);
    edges.emplace_back(2, 3);
    for (int i = 3; i < l; ++i) edges.emplace_back(i, i + 1);
  } else {
    for (int i = 1; i < l; ++i) edges.emplace_back(i, i + 1);
  }
  return edges;
}

ParabolicType stabilizer_type(const LieType& t, const Weight& lambda) {
  if (lambda.rank() != t.rank()) throw ValidationError("weight rank does not match " + t.name());
  if (!lambda.is_dominant()) throw ValidationError("stabilizer_type needs a dominant weight");
  const int l = t.rank();
  std::vector<bool> zero(static_cast<std::size_t>(l + 1), false);
  for (int i = 1; i <= l; ++i) zero[static_cast<std::size_t>(i)] = lambda.at_node(i) == 0;

  std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(l + 1));
  for (auto [i, j] : dynkin_edges(t)) {
    if (zero[static_cast<std::size_t>(i)] && zero[static_cast<std::size_t>(j)]) {
      adjacent[static_cast<std::size_t>(i)].push_back(j);
      adjacent[static_cast<std::size_t>(j)].push_back(i);
    }
  }

  std::vector<ParabolicFactor> factors;
  std::vector<bool> seen(static_cast<std::size_t>(l + 1), false);
  for (int start = 1; start <= l; ++start) {
    if (!zero[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> component;
    std::deque<int> queue{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      component.push_back(v);
      for (int w : adjacent[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
      }
    }
    const int size = static_cast<int>(component.size());
    auto has = [&](int node) { return std::find(component.begin(), component.end(), node) != component.end(); };
    Family family = Family::A;
    if ((t.family() == Family::B || t.family() == Family::C) && has(1) && size >= 2) {
      family = t.family();
    } else if (t.family() == Family::D && has(1) && has(2) && size >= 4) {
      // The fork {1, 2, 3} alone is D3 = A3.
      family = Family::D;
    }
    factors.push_back({family, size});
  }
  ParabolicType result(std::move(factors));
  if (result.node_count() != static_cast<int>(std::count(zero.begin() + 1, zero.end(), true))) {
    fail_invariant("stabilizer components do not cover the zero nodes");
  }
  return result;
}

BigInt orbit_length(const LieType& t, const Weight& lambda) {
  const BigInt w = weyl_order(t);
  const BigInt s = stabilizer_type(t, lambda).order();
  if (w % s != 0) fail_invariant("stabilizer order does not divide |W| for " + t.name());
  return w / s;
}

Weight reflect(const LieType& t, const Weight& mu, int node) {
  const auto& cartan = root_system(t).cartan_matrix();
  const BigInt a = mu.at_node(node);
  Weight out = mu;
  if (a == 0) return out;
  const auto& row = cartan[static_cast<std::size_t>(node - 1)];
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] != 0) out[j] -= a * row[j];
  }
  return out;
}

Weight dominant_representative(const LieType& t, const Weight& mu) {
  if (mu.rank() != t.rank()) throw ValidationError("weight rank does not match " + t.name());
  Weight current = mu;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= t.rank(); ++i) {
      if (current.at_node(i) < 0) {
        current = reflect(t, current, i);
        changed = true;
      }
    }
  }
  return current;
}

std::set<Weight> orbit_enumerate(const LieType& t, const Weight& lambda) {
  if (t.rank() > kOrbitEnumerateMaxRank) {
    throw ValidationError("orbit_enumerate is limited to rank " + std::to_string(kOrbitEnumerateMaxRank) + ", got " +
                          std::to_string(t.rank()));
  }
  if (lambda.rank() != t.rank()) throw ValidationError("weight rank does not match " + t.name());
  std::set<Weight> orbit{lambda};
  std::deque<Weight> work{lambda};
  while (!work.empty()) {
    Weight mu = std::move(work.front());
    work.pop_front();
    for (int i = 1; i <= t.rank(); ++i) {
      Weight image = reflect(t, mu, i);
      if (orbit.insert(image).second) work.push_back(std::move(image));
    }
  }
  return orbit;
}

}  // namespace weylkit
