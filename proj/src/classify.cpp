#include "weylkit/classify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "weylkit/errors.hpp"
#include "weylkit/freudenthal.hpp"
#include "weylkit/weyl_group.hpp"

namespace weylkit {

AdmissibilityBound::AdmissibilityBound(const LieType& t, int exponent) : type_(t), exponent_(exponent) {
  if (exponent < 1) throw ValidationError("admissibility exponent must be positive");
  Rational l = t.rank();
  if (t.family() == Family::A) l /= 2;
  value_ = 1;
  for (int k = 0; k < exponent; ++k) value_ *= l;
}

BigInt AdmissibilityBound::floor() const {
  return boost::multiprecision::numerator(value_) / boost::multiprecision::denominator(value_);
}

std::string AdmissibilityBound::to_string() const { return to_decimal(value_); }

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Admissible: return "admissible";
    case VerdictStatus::NotAdmissible: return "not-admissible";
    case VerdictStatus::FormulaDependent: return "formula-dependent";
  }
  return "?";
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::None: return "none";
    case CertificateKind::OrbitLength: return "orbit-length";
    case CertificateKind::OrbitSum: return "orbit-sum";
    case CertificateKind::Dimension: return "dimension";
  }
  return "?";
}

std::vector<Weight> AdmissibleReport::admissible() const {
  std::vector<Weight> out;
  for (const auto& v : verdicts) {
    if (v.status == VerdictStatus::Admissible) out.push_back(v.weight);
  }
  return out;
}

const Verdict* AdmissibleReport::find(const Weight& w) const {
  for (const auto& v : verdicts) {
    if (v.weight == w) return &v;
  }
  return nullptr;
}

bool canonical_less(const Weight& a, const Weight& b) {
  BigInt sa = a.coefficient_sum(), sb = b.coefficient_sum();
  if (sa != sb) return sa < sb;
  return a > b;
}

int theorem_minimum_rank(Family family) { return family == Family::A ? 15 : 12; }

bool orbit_certificates_valid(const LieType& t, Characteristic p) {
  if (p.is_generic()) return true;
  if (t.family() == Family::B || t.family() == Family::C) return p.value() != 2;
  return true;
}

std::vector<BigInt> coeff_sequence(int n) {
  if (n < 0) throw ValidationError("coeff_sequence needs n >= 0");
  std::vector<BigInt> t;
  for (int k = 0; k <= n; ++k) t.push_back(power(2, n - k) * binomial(n, k));
  return t;
}

namespace {

void check_input(const LieType& t, const Weight& lambda) {
  if (lambda.rank() != t.rank()) throw ValidationError("weight rank does not match " + t.name());
  if (!lambda.is_dominant()) throw ValidationError("admissibility is defined for dominant weights");
}

bool is_upward(const Certificate& c, Characteristic p) {
  if (c.kind == CertificateKind::OrbitLength || c.kind == CertificateKind::OrbitSum) return true;
  return c.kind == CertificateKind::Dimension && p.is_generic() && c.source == "weyl-module";
}

bool is_orbit_kind(const Certificate& c) {
  return c.kind == CertificateKind::OrbitLength || c.kind == CertificateKind::OrbitSum;
}

// Largest single orbit, else the shortest greedy prefix of orbits (longest
// first) whose lengths sum past the bound.
std::optional<Certificate> orbit_certificate(const LieType& t, const Weight& lambda, const AdmissibilityBound& bound) {
  auto lattice = dominant_lattice(t, lambda);
  std::vector<std::pair<BigInt, Weight>> orbits;
  for (const auto& mu : lattice.members) orbits.emplace_back(orbit_length(t, mu), mu);
  std::stable_sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return canonical_less(b.second, a.second);
  });
  Certificate c;
  if (bound.exceeded_by(orbits.front().first)) {
    c.kind = CertificateKind::OrbitLength;
    c.witnesses = {orbits.front().second};
    c.orbit_lengths = {orbits.front().first};
    c.value = orbits.front().first;
    c.source = "orbit";
    return c;
  }
  BigInt sum = 0;
  for (const auto& [len, mu] : orbits) {
    sum += len;
    c.witnesses.push_back(mu);
    c.orbit_lengths.push_back(len);
    if (bound.exceeded_by(sum)) {
      c.kind = CertificateKind::OrbitSum;
      c.value = sum;
      c.source = "orbit-sum";
      return c;
    }
  }
  return std::nullopt;
}

BigInt full_orbit_sum(const LieType& t, const Weight& lambda) {
  BigInt sum = 0;
  for (const auto& mu : dominant_lattice(t, lambda).members) sum += orbit_length(t, mu);
  return sum;
}

// Moves an upward-closed certificate for nu to nu + shift; orbit lengths can
// only grow because the stabilizer shrinks.
Certificate shift_certificate(const LieType& t, const Certificate& c, const Weight& shift) {
  Certificate out = c;
  if (is_orbit_kind(c)) {
    out.value = 0;
    for (std::size_t k = 0; k < out.witnesses.size(); ++k) {
      out.witnesses[k] = out.witnesses[k] + shift;
      out.orbit_lengths[k] = orbit_length(t, out.witnesses[k]);
      out.value += out.orbit_lengths[k];
    }
  }
  return out;
}

Certificate dimension_certificate(const BigInt& value, std::string source) {
  Certificate c;
  c.kind = CertificateKind::Dimension;
  c.value = value;
  c.source = std::move(source);
  return c;
}

Verdict steinberg_verdict(const LieType& t, const Weight& lambda, Characteristic p, const AdmissibilityBound& bound,
                          const FormulaRegistry& registry) {
  Verdict v;
  v.weight = lambda;
  v.weyl_dimension = dim_weyl_product(t, lambda);
  v.closed = registry.evaluate(t, lambda, p);
  if (v.closed.known() && v.closed.status == FormulaStatus::Proven) {
    v.dimension = v.closed.value;
    v.provenance = "closed form " + v.closed.formula_id;
    if (bound.admits(*v.dimension)) {
      v.status = VerdictStatus::Admissible;
    } else {
      v.status = VerdictStatus::NotAdmissible;
      v.certificate = dimension_certificate(*v.dimension, "closed-form:" + v.closed.formula_id);
    }
    return v;
  }
  auto digits = steinberg_decompose(lambda, p.value());
  BigInt upper = 1;
  for (const auto& d : digits) upper *= dim_weyl_product(t, d);
  if (bound.admits(upper)) {
    v.status = VerdictStatus::Admissible;
    v.dimension = upper;
    v.provenance = "product of Weyl module dimensions of the base-p digits";
    return v;
  }
  if (orbit_certificates_valid(t, p)) {
    Certificate c = dimension_certificate(1, "steinberg");
    for (const auto& d : digits) {
      BigInt s = full_orbit_sum(t, d);
      c.witnesses.push_back(d);
      c.orbit_lengths.push_back(s);
      c.value *= s;
    }
    if (bound.exceeded_by(c.value)) {
      v.status = VerdictStatus::NotAdmissible;
      v.certificate = std::move(c);
      v.provenance = "product of orbit sums of the base-p digits";
      return v;
    }
  }
  v.status = VerdictStatus::FormulaDependent;
  v.provenance = "the digit bounds straddle the admissibility bound";
  return v;
}

}  // namespace

Verdict is_admissible(const LieType& t, const Weight& lambda, Characteristic p, int exponent,
                      const FormulaRegistry& registry) {
  check_input(t, lambda);
  AdmissibilityBound bound(t, exponent);
  if (!p.is_generic() && !lambda.is_p_restricted(p.value())) {
    return steinberg_verdict(t, lambda, p, bound, registry);
  }

  Verdict v;
  v.weight = lambda;
  v.weyl_dimension = dim_weyl_product(t, lambda);
  BigInt sum = dim_weyl_module(t, lambda);
  if (sum != v.weyl_dimension) {
    fail_invariant("dim V(" + lambda.to_string() + ") for " + t.name() + ": orbit sum " + to_decimal(sum) +
                   " but Weyl product " + to_decimal(v.weyl_dimension));
  }
  v.closed = registry.evaluate(t, lambda, p);
  const bool orbits_ok = orbit_certificates_valid(t, p);

  if (v.closed.known() && v.closed.status == FormulaStatus::Proven) {
    const BigInt& value = *v.closed.value;
    if (p.is_generic() && value != v.weyl_dimension) {
      fail_invariant("closed form " + v.closed.formula_id + " disagrees with dim V at generic p");
    }
    if (value > v.weyl_dimension) fail_invariant("closed form " + v.closed.formula_id + " exceeds dim V");
    v.dimension = value;
    v.provenance = "closed form " + v.closed.formula_id;
    if (bound.admits(value)) {
      if (orbits_ok && orbit_certificate(t, lambda, bound)) {
        fail_invariant("closed form " + v.closed.formula_id + " is below an orbit lower bound");
      }
      v.status = VerdictStatus::Admissible;
    } else {
      v.status = VerdictStatus::NotAdmissible;
      v.certificate = dimension_certificate(value, "closed-form:" + v.closed.formula_id);
    }
    return v;
  }

  if (bound.admits(v.weyl_dimension)) {
    v.status = VerdictStatus::Admissible;
    v.dimension = v.weyl_dimension;
    v.provenance = "Weyl module upper bound";
    return v;
  }
  if (orbits_ok) {
    if (auto c = orbit_certificate(t, lambda, bound)) {
      v.status = VerdictStatus::NotAdmissible;
      v.certificate = std::move(*c);
      v.provenance = "orbit lower bound";
      return v;
    }
  }
  if (p.is_generic()) {
    v.status = VerdictStatus::NotAdmissible;
    v.dimension = v.weyl_dimension;
    v.certificate = dimension_certificate(v.weyl_dimension, "weyl-module");
    v.provenance = "Weyl module at generic p";
    return v;
  }
  v.status = VerdictStatus::FormulaDependent;
  v.provenance = "dim V exceeds the bound and no closed form or orbit bound decides dim L";
  return v;
}

bool verify_certificate(const LieType& t, const Weight& lambda, Characteristic p, const AdmissibilityBound& bound,
                        const Certificate& c, std::string* why, const FormulaRegistry& registry) {
  auto reject = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (lambda.rank() != t.rank() || !lambda.is_dominant()) return reject("weight is not dominant of the right rank");
  const auto& rs = root_system(t);

  switch (c.kind) {
    case CertificateKind::None:
      return reject("empty certificate");
    case CertificateKind::OrbitLength:
    case CertificateKind::OrbitSum: {
      if (!orbit_certificates_valid(t, p)) return reject("orbit bounds are not valid at this characteristic");
      if (!p.is_generic() && !lambda.is_p_restricted(p.value())) return reject("weight is not p-restricted");
      if (c.witnesses.empty() || c.witnesses.size() != c.orbit_lengths.size()) return reject("malformed witness list");
      if (c.kind == CertificateKind::OrbitLength && c.witnesses.size() != 1) return reject("expected one witness");
      std::set<Weight> distinct(c.witnesses.begin(), c.witnesses.end());
      if (distinct.size() != c.witnesses.size()) return reject("repeated witness");
      BigInt sum = 0;
      for (std::size_t k = 0; k < c.witnesses.size(); ++k) {
        const Weight& mu = c.witnesses[k];
        if (mu.rank() != t.rank() || !mu.is_dominant()) return reject("witness " + mu.to_string() + " is not dominant");
        if (!rs.precedes(mu, lambda)) return reject("witness " + mu.to_string() + " does not precede lambda");
        BigInt len = orbit_length(t, mu);
        if (len != c.orbit_lengths[k]) return reject("orbit length of " + mu.to_string() + " is " + to_decimal(len));
        sum += len;
      }
      if (sum != c.value) return reject("orbit lengths sum to " + to_decimal(sum));
      if (!bound.exceeded_by(sum)) return reject("orbit total does not exceed the bound");
      return true;
    }
    case CertificateKind::Dimension: {
      if (c.source == "weyl-module") {
        if (!p.is_generic()) return reject("dim V(lambda) decides admissibility only at generic p");
        BigInt d = dim_weyl_product(t, lambda);
        if (d != c.value) return reject("dim V(lambda) is " + to_decimal(d));
        if (!bound.exceeded_by(d)) return reject("dimension does not exceed the bound");
        return true;
      }
      if (c.source.rfind("closed-form:", 0) == 0) {
        auto closed = registry.evaluate(t, lambda, p);
        if (!closed.known() || closed.status != FormulaStatus::Proven) return reject("no proven closed form applies");
        if ("closed-form:" + closed.formula_id != c.source) return reject("closed form " + closed.formula_id + " applies");
        if (*closed.value != c.value) return reject("closed form gives " + to_decimal(*closed.value));
        if (!bound.exceeded_by(c.value)) return reject("dimension does not exceed the bound");
        return true;
      }
      if (c.source == "steinberg") {
        if (p.is_generic() || !orbit_certificates_valid(t, p)) return reject("digit orbit bounds do not apply");
        auto digits = steinberg_decompose(lambda, p.value());
        if (digits != c.witnesses || digits.size() != c.orbit_lengths.size()) return reject("digits differ");
        BigInt product = 1;
        for (std::size_t k = 0; k < digits.size(); ++k) {
          BigInt s = full_orbit_sum(t, digits[k]);
          if (s != c.orbit_lengths[k]) return reject("orbit sum of digit " + std::to_string(k) + " is " + to_decimal(s));
          product *= s;
        }
        if (product != c.value) return reject("digit product is " + to_decimal(product));
        if (!bound.exceeded_by(product)) return reject("digit product does not exceed the bound");
        return true;
      }
      return reject("unknown dimension source " + c.source);
    }
  }
  return reject("unknown certificate kind");
}

namespace {

std::vector<int> search_support(const LieType& t) {
  const int l = t.rank();
  std::set<int> nodes;
  switch (t.family()) {
    case Family::A: nodes = {1, 2, 3, 4, l - 3, l - 2, l - 1, l}; break;
    case Family::B:
    case Family::C: nodes = {1, l - 3, l - 2, l - 1, l}; break;
    case Family::D: nodes = {1, 2, l - 3, l - 2, l - 1, l}; break;
  }
  std::vector<int> out;
  for (int i : nodes) {
    if (i >= 1 && i <= l) out.push_back(i);
  }
  return out;
}

std::optional<Certificate> upward_certificate(const LieType& t, const Weight& w, Characteristic p,
                                              const AdmissibilityBound& bound) {
  if (orbit_certificates_valid(t, p)) {
    if (auto c = orbit_certificate(t, w, bound)) return c;
  }
  if (p.is_generic()) {
    BigInt d = dim_weyl_product(t, w);
    if (bound.exceeded_by(d)) return dimension_certificate(d, "weyl-module");
  }
  return std::nullopt;
}

struct Rejection {
  Certificate certificate;
  bool upward;
};

}  // namespace

AdmissibleReport classify_admissible(const LieType& t, Characteristic p, int exponent,
                                     const FormulaRegistry& registry) {
  if (!orbit_certificates_valid(t, p)) {
    throw ValidationError("classification of " + t.name() + " at p = 2 is not supported: the orbit lower bounds "
                          "need every dominant mu <= lambda to be a weight of L(lambda)");
  }
  const int l = t.rank();
  AdmissibleReport report{t, p, AdmissibilityBound(t, exponent), {}, {}, {}, {}, {}};
  const auto& bound = report.bound;
  const bool below_range = l < theorem_minimum_rank(t.family());
  if (below_range) {
    report.notes.push_back("below theorem range: rank " + std::to_string(l) + " < " +
                           std::to_string(theorem_minimum_rank(t.family())));
  }
  if (exponent != 4) report.notes.push_back("exponent " + std::to_string(exponent) + " is outside the n = 4 theorems");

  std::vector<int> support = search_support(t);
  std::set<int> in_support(support.begin(), support.end());
  std::map<int, Certificate> node_certificates;
  for (int i = 1; i <= l; ++i) {
    if (in_support.count(i)) continue;
    Weight w = Weight::fundamental(l, i);
    auto c = upward_certificate(t, w, p, bound);
    if (!c) {
      if (!below_range) {
        fail_invariant("support reduction failed for " + t.name() + ": no certificate that w" + std::to_string(i) +
                       " exceeds the bound");
      }
      in_support.insert(i);
      report.notes.push_back("node " + std::to_string(i) + " kept in the search: w" + std::to_string(i) +
                             " is not certified beyond the bound");
      continue;
    }
    report.audit.push_back({w, "support", *c, std::nullopt});
    node_certificates.emplace(i, std::move(*c));
  }
  support.assign(in_support.begin(), in_support.end());
  report.support = support;

  const std::uint64_t limit = p.is_generic() ? UINT64_MAX : p.value() - 1;
  constexpr int kMaxCertifiedCoefficient = 6;
  std::vector<int> caps(l, 0);
  std::map<int, Certificate> cap_certificates;
  for (int i : support) {
    bool settled = false;
    for (int c = 1; c <= kMaxCertifiedCoefficient; ++c) {
      if (static_cast<std::uint64_t>(c) > limit) {
        caps[i - 1] = static_cast<int>(limit);
        settled = true;
        break;
      }
      Weight w = Weight::fundamental(l, i).scaled(c);
      if (auto cert = upward_certificate(t, w, p, bound)) {
        caps[i - 1] = c - 1;
        report.audit.push_back({w, "coefficient-cap", *cert, std::nullopt});
        cap_certificates.emplace(i, std::move(*cert));
        settled = true;
        break;
      }
    }
    if (!settled) {
      fail_invariant("no coefficient cap certified at node " + std::to_string(i) + " of " + t.name() + " up to " +
                     std::to_string(kMaxCertifiedCoefficient));
    }
  }
  report.caps = caps;

  const auto& cartan = root_system(t).cartan_matrix();
  std::map<Weight, Rejection> rejected;
  std::set<Weight> seen;
  std::deque<Weight> queue;
  Weight zero = Weight::zero(l);
  queue.push_back(zero);
  seen.insert(zero);

  auto outside_search = [&](const Weight& nu) -> std::optional<Certificate> {
    for (int k = 1; k <= l; ++k) {
      const BigInt& a = nu.at_node(k);
      if (a == 0) continue;
      if (!in_support.count(k)) {
        auto it = node_certificates.find(k);
        if (it != node_certificates.end() && is_orbit_kind(it->second)) {
          return shift_certificate(t, it->second, nu - Weight::fundamental(l, k));
        }
      } else if (a > caps[k - 1]) {
        auto it = cap_certificates.find(k);
        if (it != cap_certificates.end() && is_orbit_kind(it->second)) {
          return shift_certificate(t, it->second, nu - Weight::fundamental(l, k).scaled(caps[k - 1] + 1));
        }
      }
    }
    return std::nullopt;
  };

  while (!queue.empty()) {
    Weight lambda = std::move(queue.front());
    queue.pop_front();

    std::optional<AuditEntry> entry;
    for (int j : support) {
      if (lambda.at_node(j) == 0) continue;
      Weight parent = lambda - Weight::fundamental(l, j);
      auto it = rejected.find(parent);
      if (it == rejected.end() || !it->second.upward) continue;
      Certificate c = it->second.certificate;
      if (c.kind == CertificateKind::Dimension) {
        c = dimension_certificate(dim_weyl_product(t, lambda), "weyl-module");
      } else {
        c = shift_certificate(t, c, Weight::fundamental(l, j));
      }
      entry = AuditEntry{lambda, "inherited", std::move(c), parent};
      break;
    }
    if (!entry && orbit_certificates_valid(t, p)) {
      for (int i = 1; i <= l && !entry; ++i) {
        std::vector<BigInt> row(cartan[i - 1].begin(), cartan[i - 1].end());
        Weight nu = lambda - Weight(row);
        if (!nu.is_dominant()) continue;
        auto it = rejected.find(nu);
        if (it != rejected.end() && is_orbit_kind(it->second.certificate)) {
          entry = AuditEntry{lambda, "descent", it->second.certificate, nu};
        } else if (auto c = outside_search(nu)) {
          entry = AuditEntry{lambda, "descent", std::move(*c), nu};
        }
      }
    }
    if (!entry && orbit_certificates_valid(t, p)) {
      if (auto c = orbit_certificate(t, lambda, bound)) {
        std::string rule = c->kind == CertificateKind::OrbitLength ? "orbit" : "orbit-sum";
        entry = AuditEntry{lambda, rule, std::move(*c), std::nullopt};
      }
    }

    bool expand = false;
    if (entry) {
      rejected.emplace(lambda, Rejection{entry->certificate, is_upward(entry->certificate, p)});
      report.audit.push_back(std::move(*entry));
    } else {
      Verdict v = is_admissible(t, lambda, p, exponent, registry);
      if (v.status == VerdictStatus::NotAdmissible) {
        bool upward = is_upward(v.certificate, p);
        rejected.emplace(lambda, Rejection{v.certificate, upward});
        report.audit.push_back({lambda, "dimension", v.certificate, std::nullopt});
        expand = !upward;
      } else {
        report.verdicts.push_back(std::move(v));
        expand = true;
      }
    }
    if (!expand) continue;
    for (int j : support) {
      Weight child = lambda + Weight::fundamental(l, j);
      if (child.at_node(j) > caps[j - 1]) continue;
      if (seen.insert(child).second) queue.push_back(std::move(child));
    }
  }

  std::sort(report.verdicts.begin(), report.verdicts.end(),
            [](const Verdict& a, const Verdict& b) { return canonical_less(a.weight, b.weight); });
  std::stable_sort(report.audit.begin(), report.audit.end(),
                   [](const AuditEntry& a, const AuditEntry& b) { return canonical_less(a.weight, b.weight); });
  return report;
}

}  // namespace weylkit
