#include "weylkit/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "weylkit/errors.hpp"

namespace weylkit {

char family_letter(Family family) {
  switch (family) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
      default: break;
    }
  }
  throw ValidationError("unknown family '" + std::string(text) + "' (expected A, B, C or D)");
}

int minimum_rank(Family family) {
  switch (family) {
    case Family::A: return 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 3;
  }
  return 1;
}

LieType::LieType(Family family, int rank) : family_(family), rank_(rank) {
  if (rank < minimum_rank(family)) {
    throw ValidationError(std::string("rank ") + std::to_string(rank) + " is below the minimum " +
                          std::to_string(minimum_rank(family)) + " for type " + family_letter(family));
  }
}

int LieType::ambient_dimension() const { return family_ == Family::A ? rank_ + 1 : rank_; }

std::string LieType::name() const { return family_letter(family_) + std::to_string(rank_); }

Weight::Weight(std::initializer_list<int> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (int c : coeffs) coeffs_.emplace_back(c);
}

Weight Weight::zero(int rank) { return Weight(std::vector<BigInt>(static_cast<std::size_t>(rank), BigInt(0))); }

Weight Weight::fundamental(int rank, int node) {
  if (node < 1 || node > rank) {
    throw ValidationError("node " + std::to_string(node) + " out of range 1.." + std::to_string(rank));
  }
  Weight w = zero(rank);
  w.coeffs_[static_cast<std::size_t>(node - 1)] = 1;
  return w;
}

const BigInt& Weight::at_node(int node) const {
  if (node < 1 || node > rank()) throw ValidationError("node " + std::to_string(node) + " out of range");
  return coeffs_[static_cast<std::size_t>(node - 1)];
}

bool Weight::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

bool Weight::is_p_restricted(std::uint64_t p) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [p](const BigInt& c) { return c >= 0 && c < p; });
}

BigInt Weight::coefficient_sum() const {
  BigInt total = 0;
  for (const auto& c : coeffs_) total += c;
  return total;
}

Weight Weight::reversed() const {
  return Weight(std::vector<BigInt>(coeffs_.rbegin(), coeffs_.rend()));
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (coeffs_[i] != 1) out += to_decimal(coeffs_[i]) + '*';
    out += 'w' + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

Weight Weight::operator+(const Weight& other) const {
  if (other.rank() != rank()) throw ValidationError("weight rank mismatch");
  Weight out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  return out;
}

Weight Weight::operator-(const Weight& other) const {
  if (other.rank() != rank()) throw ValidationError("weight rank mismatch");
  Weight out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= other.coeffs_[i];
  return out;
}

Weight Weight::scaled(const BigInt& factor) const {
  Weight out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] < b.coeffs_[i]) return std::strong_ordering::less;
    if (a.coeffs_[i] > b.coeffs_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t WeightHash::operator()(const Weight& w) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& c : w.coeffs()) {
    h ^= boost::multiprecision::hash_value(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

EuclideanVector unit(int dim, int index, int value = 1) {
  EuclideanVector v(static_cast<std::size_t>(dim), Rational(0));
  v[static_cast<std::size_t>(index - 1)] = value;
  return v;
}

EuclideanVector add(const EuclideanVector& u, const EuclideanVector& v, int sign = 1) {
  EuclideanVector out = u;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += sign * v[i];
  return out;
}

std::vector<EuclideanVector> make_simple_roots(const LieType& t) {
  const int l = t.rank();
  const int dim = t.ambient_dimension();
  std::vector<EuclideanVector> roots;
  if (t.family() == Family::A) {
    for (int i = 1; i <= l; ++i) roots.push_back(add(unit(dim, i), unit(dim, i + 1), -1));
    return roots;
  }
  switch (t.family()) {
    case Family::B: roots.push_back(unit(dim, l)); break;
    case Family::C: roots.push_back(unit(dim, l, 2)); break;
    case Family::D: roots.push_back(add(unit(dim, l - 1), unit(dim, l))); break;
    case Family::A: break;
  }
  for (int i = 2; i <= l; ++i) roots.push_back(add(unit(dim, l - i + 1), unit(dim, l - i + 2), -1));
  return roots;
}

std::vector<EuclideanVector> make_positive_roots(const LieType& t) {
  const int dim = t.ambient_dimension();
  std::vector<EuclideanVector> roots;
  for (int i = 1; i <= dim; ++i) {
    for (int j = i + 1; j <= dim; ++j) {
      roots.push_back(add(unit(dim, i), unit(dim, j), -1));
      if (t.family() != Family::A) roots.push_back(add(unit(dim, i), unit(dim, j)));
    }
    if (t.family() == Family::B) roots.push_back(unit(dim, i));
    if (t.family() == Family::C) roots.push_back(unit(dim, i, 2));
  }
  return roots;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) fail_invariant("singular Cartan matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = m[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      m[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        m[row][k] -= f * m[col][k];
        inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

}  // namespace

RootSystem::RootSystem(LieType type) : type_(type), scale_(type.family() == Family::A ? Rational(1, 2) : Rational(1)) {
  const int l = type_.rank();
  const auto n = static_cast<std::size_t>(l);
  simple_roots_ = make_simple_roots(type_);

  cartan_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational a = 2 * inner(simple_roots_[i], simple_roots_[j]) / inner(simple_roots_[j], simple_roots_[j]);
      cartan_[i][j] = static_cast<int>(to_integer(a));
    }
  }
  std::vector<std::vector<Rational>> transpose(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) transpose[i][j] = cartan_[j][i];
  }
  cartan_transpose_inverse_ = invert(transpose);

  for (int i = 1; i <= l; ++i) {
    fundamental_weights_.push_back(to_euclidean(Weight::fundamental(l, i)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational pairing = 2 * inner(fundamental_weights_[i], simple_roots_[j]) / inner(simple_roots_[j], simple_roots_[j]);
      if (pairing != (i == j ? 1 : 0)) fail_invariant("fundamental weights fail the coroot pairing for " + type_.name());
    }
  }

  positive_roots_ = make_positive_roots(type_);
  std::vector<std::pair<std::vector<int>, EuclideanVector>> keyed;
  for (const auto& root : positive_roots_) {
    RootVector coords = to_root_coords(from_euclidean(root));
    std::vector<int> ints;
    for (const auto& c : coords) {
      if (!is_integer(c) || c < 0) fail_invariant("positive root with invalid simple-root coordinates in " + type_.name());
      ints.push_back(static_cast<int>(numerator(c)));
    }
    keyed.emplace_back(std::move(ints), root);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    const int ha = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int hb = std::accumulate(b.first.begin(), b.first.end(), 0);
    return ha != hb ? ha < hb : a.first > b.first;
  });
  positive_roots_.clear();
  for (auto& [coords, root] : keyed) {
    positive_root_coords_.push_back(coords);
    positive_roots_.push_back(root);
  }

  EuclideanVector from_weights(static_cast<std::size_t>(type_.ambient_dimension()), Rational(0));
  for (const auto& w : fundamental_weights_) from_weights = add(from_weights, w);
  EuclideanVector from_roots(from_weights.size(), Rational(0));
  for (const auto& r : positive_roots_) from_roots = add(from_roots, r);
  for (auto& c : from_roots) c /= 2;
  if (from_weights != from_roots) fail_invariant("delta disagrees between its two definitions for " + type_.name());
  delta_ = from_weights;
}

Rational RootSystem::inner(const EuclideanVector& u, const EuclideanVector& v) const {
  if (u.size() != v.size() || u.size() != static_cast<std::size_t>(type_.ambient_dimension())) {
    throw ValidationError("inner product of vectors with mismatched dimensions");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) total += u[i] * v[i];
  return scale_ * total;
}

void RootSystem::check_rank(const Weight& w) const {
  if (w.rank() != rank()) {
    throw ValidationError("weight has " + std::to_string(w.rank()) + " coefficients, " + type_.name() + " needs " +
                          std::to_string(rank()));
  }
}

EuclideanVector RootSystem::to_euclidean(const Weight& w) const {
  RootVector coords = to_root_coords(w);
  EuclideanVector x(static_cast<std::size_t>(type_.ambient_dimension()), Rational(0));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += coords[i] * simple_roots_[i][k];
  }
  return x;
}

Weight RootSystem::from_euclidean(const EuclideanVector& x) const {
  std::vector<BigInt> labels;
  for (const auto& alpha : simple_roots_) {
    Rational a = 2 * inner(x, alpha) / inner(alpha, alpha);
    if (!is_integer(a)) throw ValidationError("vector is not in the weight lattice of " + type_.name());
    labels.push_back(numerator(a));
  }
  return Weight(std::move(labels));
}

RootVector RootSystem::to_root_coords(const Weight& w) const {
  check_rank(w);
  const std::size_t n = static_cast<std::size_t>(rank());
  RootVector c(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] != 0) c[i] += cartan_transpose_inverse_[i][j] * w[j];
    }
  }
  return c;
}

Weight RootSystem::to_weight(const RootVector& r) const {
  const std::size_t n = static_cast<std::size_t>(rank());
  if (r.size() != n) throw ValidationError("root vector has the wrong length for " + type_.name());
  std::vector<BigInt> labels(n, BigInt(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational a = 0;
    for (std::size_t i = 0; i < n; ++i) a += r[i] * cartan_[i][j];
    if (!is_integer(a)) throw ValidationError("root vector is not in the weight lattice of " + type_.name());
    labels[j] = numerator(a);
  }
  return Weight(std::move(labels));
}

bool RootSystem::precedes(const Weight& mu, const Weight& lambda) const {
  for (const auto& c : to_root_coords(lambda - mu)) {
    if (!is_integer(c) || c < 0) return false;
  }
  return true;
}

const RootSystem& root_system(const LieType& type) {
  static std::mutex mutex;
  static std::map<LieType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(type);
  if (it == cache.end()) it = cache.emplace(type, std::make_unique<RootSystem>(type)).first;
  return *it->second;
}

}  // namespace weylkit
