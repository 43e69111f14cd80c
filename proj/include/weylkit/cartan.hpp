#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "weylkit/numeric.hpp"

namespace weylkit {

enum class Family { A, B, C, D };

char family_letter(Family family);
Family parse_family(std::string_view text);
int minimum_rank(Family family);

class LieType {
 public:
  LieType(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  // A_l lives in l+1 orthogonal coordinates, the others in l.
  int ambient_dimension() const;
  std::string name() const;

  friend bool operator==(const LieType&, const LieType&) = default;
  friend auto operator<=>(const LieType&, const LieType&) = default;

 private:
  Family family_;
  int rank_;
};

// Coefficients in the fundamental-weight basis; node i of the Dynkin diagram is
// coeffs()[i - 1].
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}
  Weight(std::initializer_list<int> coeffs);

  static Weight zero(int rank);
  static Weight fundamental(int rank, int node);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](std::size_t index) const { return coeffs_[index]; }
  BigInt& operator[](std::size_t index) { return coeffs_[index]; }
  const BigInt& at_node(int node) const;

  bool is_zero() const;
  bool is_dominant() const;
  bool is_p_restricted(std::uint64_t p) const;
  BigInt coefficient_sum() const;
  // Coefficients read from node l down to node 1.
  Weight reversed() const;
  // "0" or terms "k*wi" joined by "+", ascending node order, e.g. "w1+2*w12".
  std::string to_string() const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight scaled(const BigInt& factor) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

 private:
  std::vector<BigInt> coeffs_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const;
};

using EuclideanVector = std::vector<Rational>;
using RootVector = std::vector<Rational>;

class RootSystem {
 public:
  explicit RootSystem(LieType type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank(); }

  // alpha_1 .. alpha_l in the reversed node labelling.
  const std::vector<EuclideanVector>& simple_roots() const { return simple_roots_; }
  const std::vector<EuclideanVector>& positive_roots() const { return positive_roots_; }
  // Simple-root coordinates of positive_roots(), index-aligned.
  const std::vector<std::vector<int>>& positive_root_coords() const { return positive_root_coords_; }
  const std::vector<EuclideanVector>& fundamental_weights() const { return fundamental_weights_; }
  const EuclideanVector& delta() const { return delta_; }
  // cartan_matrix()[i][j] = 2(alpha_i, alpha_j)/(alpha_j, alpha_j), so that
  // alpha_i = sum_j cartan_matrix()[i][j] lambda_j.
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  Rational inner(const EuclideanVector& u, const EuclideanVector& v) const;

  EuclideanVector to_euclidean(const Weight& w) const;
  // Dynkin labels 2(x, alpha_i)/(alpha_i, alpha_i); rejects non-integral labels.
  Weight from_euclidean(const EuclideanVector& x) const;
  RootVector to_root_coords(const Weight& w) const;
  Weight to_weight(const RootVector& r) const;

  // mu precedes lambda: lambda - mu is a nonnegative integer combination of simple roots.
  bool precedes(const Weight& mu, const Weight& lambda) const;

 private:
  void check_rank(const Weight& w) const;

  LieType type_;
  Rational scale_;  // inner(u, v) = scale_ * dot(u, v)
  std::vector<EuclideanVector> simple_roots_;
  std::vector<EuclideanVector> positive_roots_;
  std::vector<std::vector<int>> positive_root_coords_;
  std::vector<EuclideanVector> fundamental_weights_;
  EuclideanVector delta_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> cartan_transpose_inverse_;
};

// Process-wide, immutable, one instance per type.
const RootSystem& root_system(const LieType& type);

inline const std::vector<EuclideanVector>& simple_roots(const LieType& t) { return root_system(t).simple_roots(); }
inline const std::vector<EuclideanVector>& positive_roots(const LieType& t) { return root_system(t).positive_roots(); }
inline const std::vector<EuclideanVector>& fundamental_weights(const LieType& t) {
  return root_system(t).fundamental_weights();
}
inline const EuclideanVector& delta(const LieType& t) { return root_system(t).delta(); }
inline Rational inner(const LieType& t, const EuclideanVector& u, const EuclideanVector& v) {
  return root_system(t).inner(u, v);
}
inline RootVector to_root_coords(const LieType& t, const Weight& w) { return root_system(t).to_root_coords(w); }
inline Weight to_weight(const LieType& t, const RootVector& r) { return root_system(t).to_weight(r); }

}  // namespace weylkit

template <>
struct std::hash<weylkit::Weight> : weylkit::WeightHash {};
