#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylkit/cartan.hpp"
#include "weylkit/characteristic.hpp"
#include "weylkit/closed_form.hpp"

namespace weylkit {

// l^n for B/C/D and (l/2)^n for A, compared exactly. A dimension equal to the
// bound is admissible.
class AdmissibilityBound {
 public:
  AdmissibilityBound(const LieType& t, int exponent = 4);

  const LieType& type() const { return type_; }
  int exponent() const { return exponent_; }
  const Rational& value() const { return value_; }
  BigInt floor() const;

  bool admits(const BigInt& dimension) const { return Rational(dimension) <= value_; }
  bool exceeded_by(const BigInt& x) const { return Rational(x) > value_; }
  std::string to_string() const;

 private:
  LieType type_;
  int exponent_;
  Rational value_;
};

enum class VerdictStatus { Admissible, NotAdmissible, FormulaDependent };
std::string to_string(VerdictStatus status);

enum class CertificateKind { None, OrbitLength, OrbitSum, Dimension };
std::string to_string(CertificateKind kind);

// OrbitLength: one dominant mu <= lambda with l(mu) > bound.
// OrbitSum: distinct dominant mu_k <= lambda with sum l(mu_k) > bound.
// Dimension: value is dim V(lambda) at generic p ("weyl-module"), a proven
// closed form ("closed-form:<id>"), or a product over base-p digits of full
// orbit sums ("steinberg").
struct Certificate {
  CertificateKind kind = CertificateKind::None;
  std::vector<Weight> witnesses;
  std::vector<BigInt> orbit_lengths;
  BigInt value = 0;
  std::string source;

  bool empty() const { return kind == CertificateKind::None; }
};

struct Verdict {
  Weight weight;
  VerdictStatus status = VerdictStatus::FormulaDependent;
  Certificate certificate;          // set when not admissible
  std::optional<BigInt> dimension;  // value compared against the bound
  std::string provenance;
  BigInt weyl_dimension = 0;
  ClosedDimension closed;
};

struct AuditEntry {
  Weight weight;
  std::string rule;  // support, coefficient-cap, inherited, descent, orbit, orbit-sum, dimension
  Certificate certificate;
  std::optional<Weight> parent;
};

struct AdmissibleReport {
  LieType type;
  Characteristic p = Characteristic::generic();
  AdmissibilityBound bound;
  std::vector<int> support;  // nodes allowed to carry nonzero coefficients
  std::vector<int> caps;     // caps[i - 1]: largest coefficient searched at node i
  std::vector<Verdict> verdicts;
  std::vector<AuditEntry> audit;
  std::vector<std::string> notes;

  std::vector<Weight> admissible() const;
  const Verdict* find(const Weight& w) const;
};

// Every dominant mu <= lambda is a weight of L(lambda) for p-restricted lambda
// unless p = 2 in types B and C.
bool orbit_certificates_valid(const LieType& t, Characteristic p);

Verdict is_admissible(const LieType& t, const Weight& lambda, Characteristic p, int exponent = 4,
                      const FormulaRegistry& registry = FormulaRegistry::builtin());

AdmissibleReport classify_admissible(const LieType& t, Characteristic p, int exponent = 4,
                                     const FormulaRegistry& registry = FormulaRegistry::builtin());

// Recomputes every quantity the certificate cites. On failure, why (if given)
// receives the reason.
bool verify_certificate(const LieType& t, const Weight& lambda, Characteristic p, const AdmissibilityBound& bound,
                        const Certificate& certificate, std::string* why = nullptr,
                        const FormulaRegistry& registry = FormulaRegistry::builtin());

// t_k = 2^(n-k) binom(n, k), the coefficients of (2 + x)^n.
std::vector<BigInt> coeff_sequence(int n);

// Coefficient sum ascending, then coefficients in descending lexicographic order.
bool canonical_less(const Weight& a, const Weight& b);

// Smallest rank covered by the classification theorems: 15 for A, 12 otherwise.
int theorem_minimum_rank(Family family);

}  // namespace weylkit
