// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "weylkit/classify.hpp"
#include "weylkit/closed_form.hpp"
#include "weylkit/freudenthal.hpp"
#include "weylkit/reference_tables.hpp"
#include "weylkit/weyl_group.hpp"

using namespace weylkit;

namespace {

constexpr double kOracleBudgetSeconds = 60.0;
constexpr double kClassifyBudgetSeconds = 300.0;
constexpr int kRandomWeightsPerFamily = 50;
constexpr int kOrbitSamplesPerFamily = 20;
constexpr unsigned kSeed = 20240611;

const Family kFamilies[] = {Family::A, Family::B, Family::C, Family::D};

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void fail(const std::string& what) {
    pass = false;
    failures.push_back(what);
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

Weight w(int rank, std::initializer_list<std::pair<int, int>> terms) {
  Weight out = Weight::zero(rank);
  for (auto [node, k] : terms) out = out + Weight::fundamental(rank, node).scaled(k);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

// Criterion 1 ---------------------------------------------------------------

Outcome oracle_equivalence() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> rank_dist(4, 12);
  std::bernoulli_distribution on(0.3);
  std::uniform_int_distribution<int> coeff(1, 2);
  int checked = 0;
  for (Family f : kFamilies) {
    for (int k = 0; k < kRandomWeightsPerFamily; ++k) {
      int l = rank_dist(rng);
      LieType t(f, l);
      std::vector<BigInt> c;
      for (int i = 0; i < l; ++i) c.emplace_back(on(rng) ? coeff(rng) : 0);
      Weight lambda(std::move(c));
      BigInt sum = dim_weyl_module(t, lambda), product = dim_weyl_product(t, lambda);
      out.check(sum == product, t.name() + " " + lambda.to_string() + ": sum " + to_decimal(sum) + " != product " +
                                    to_decimal(product));
      ++checked;
    }
  }
  std::set<std::pair<LieType, Weight>> table_weights;
  for (int l = 12; l <= 14; ++l) {
    for (const auto& name : reference_table_names()) {
      auto table = reproduce_table(name, l);
      for (const auto& block : table.blocks) {
        table_weights.emplace(table.type, block.highest);
        for (const auto& row : block.rows) table_weights.emplace(table.type, row.mu);
      }
      for (const auto& row : table.dimension_rows) table_weights.emplace(table.type, row.weight);
    }
  }
  for (const auto& [t, lambda] : table_weights) {
    BigInt sum = dim_weyl_module(t, lambda), product = dim_weyl_product(t, lambda);
    out.check(sum == product, t.name() + " " + lambda.to_string() + ": sum " + to_decimal(sum) + " != product " +
                                  to_decimal(product));
    ++checked;
  }
  double s = seconds_since(start);
  out.check(s < kOracleBudgetSeconds, "runtime " + fmt_seconds(s) + " exceeds " + fmt_seconds(kOracleBudgetSeconds));
  out.summary = std::to_string(checked) + " weights, " + fmt_seconds(s);
  return out;
}

// Criteria 2 and 3 -------------------------------------------------------------

std::string describe(const std::string& table, int l, const ComparedBlock& b, const ComparedRow& r) {
  return table + " l=" + std::to_string(l) + " block " + b.highest_pattern + " row " + r.mu_pattern + ": " +
         to_string(r.status) + (r.note.empty() ? "" : " (" + r.note + ")");
}

// The two printed discrepancies named as exceptions: the type-D orbit length of
// lambda_{l-3} in the 4 lambda_l block, and the duplicated 2 lambda_l row
// (which sits in the type-C 4 lambda_l block and hides 2 lambda_{l-1}).
bool named_exception(const std::string& table, const ComparedBlock& b, const ComparedRow& r, Outcome& out,
                     int l) {
  if (b.highest_pattern != "4*w[l]") return false;
  if (table == "appendix-d" && r.mu_pattern == "w[l-3]" && r.status == RowStatus::Mismatch) {
    bool orbit_only = r.printed_multiplicity && r.multiplicity && *r.printed_multiplicity == Rational(*r.multiplicity);
    out.check(orbit_only && r.orbit_length.has_value() && !r.note.empty(),
              "exception row not reported with computed values: " + describe(table, l, b, r));
    return orbit_only;
  }
  if (table == "appendix-c" && r.mu_pattern == "2*w[l]" && r.status == RowStatus::Duplicate) {
    out.check(!r.note.empty(), "duplicate row carries no note");
    return true;
  }
  if (table == "appendix-c" && r.mu_pattern == "2*w[l-1]" && r.status == RowStatus::Missing) {
    out.check(r.multiplicity.has_value() && r.orbit_length.has_value(),
              "unprinted weight reported without computed values");
    return true;
  }
  return false;
}

Outcome reproduce_exactly(const std::vector<std::string>& names, bool allow_named_exceptions) {
  Outcome out;
  int rows = 0, exceptions = 0;
  for (const auto& name : names) {
    for (int l = 12; l <= 14; ++l) {
      auto table = reproduce_table(name, l);
      for (const auto& b : table.blocks) {
        for (const auto& r : b.rows) {
          ++rows;
          if (r.status == RowStatus::Match) continue;
          if (allow_named_exceptions && named_exception(name, b, r, out, l)) {
            ++exceptions;
            continue;
          }
          out.fail(describe(name, l, b, r));
        }
      }
    }
  }
  out.summary = std::to_string(rows) + " rows compared, " + std::to_string(exceptions) + " named exceptions";
  return out;
}

Outcome lemma_tables() {
  Outcome out = reproduce_exactly({"lemma-b2", "lemma-b3"}, false);
  for (int l = 12; l <= 14; ++l) {
    LieType t(Family::B, l);
    BigInt m1 = multiplicity(t, w(l, {{l, 3}}), w(l, {{l, 1}}));
    BigInt m2 = multiplicity(t, w(l, {{l - 2, 1}}), w(l, {{l, 1}}));
    BigInt m3 = multiplicity(t, w(l, {{l, 4}}), Weight::zero(l));
    std::string at = " at l=" + std::to_string(l);
    out.check(m1 == l, "m_{3w[l]}(w[l]) = " + to_decimal(m1) + ", expected l" + at);
    out.check(m2 == l - 1, "m_{w[l-2]}(w[l]) = " + to_decimal(m2) + ", expected l-1" + at);
    out.check(m3 == l * (l - 1) / 2, "m_{4w[l]}(0) = " + to_decimal(m3) + ", expected l(l-1)/2 = " +
                                         std::to_string(l * (l - 1) / 2) + at);
  }
  return out;
}

// Criterion 4 ---------------------------------------------------------------

Outcome dimension_identities() {
  Outcome out;
  struct Identity {
    LieType type;
    Weight lambda;
    BigInt value;
    BigInt formula;
    std::string text;
  };
  const int l = 12;
  std::vector<Identity> ids{
      {LieType(Family::B, l), w(l, {{12, 3}}), 2900, BigInt(l) * (2 * l + 1) * (2 * l + 5) / 3, "B12 3w12 = 2900"},
      {LieType(Family::C, l), w(l, {{10, 1}}), 2000, binomial(24, 3) - 24, "C12 w10 = 2000"},
      {LieType(Family::C, l), w(l, {{9, 1}}), 10350, binomial(24, 4) - binomial(24, 2), "C12 w9 = 10350"},
      {LieType(Family::D, l), w(l, {{11, 1}, {12, 1}}), 2600, binomial(26, 3), "D12 w11+w12 = 2600"},
  };
  for (const auto& id : ids) {
    BigInt got = dim_weyl_module(id.type, id.lambda);
    out.check(id.value == id.formula, id.text + ": closed expression gives " + to_decimal(id.formula));
    out.check(got == id.value, id.text + ": dim_weyl_module gives " + to_decimal(got));
  }
  out.summary = std::to_string(ids.size()) + " identities";
  return out;
}

// Criterion 5 ---------------------------------------------------------------

struct Expected {
  Weight weight;
  BigInt dimension;
};

BigInt eps(std::uint64_t p, const BigInt& m) { return m % p == 0 ? 1 : 0; }

// The type-A list with duals and its characteristic-p dimensions, written out
// independently of the formula registry.
std::vector<Expected> type_a_list(int l, std::uint64_t p) {
  const BigInt L = l;
  std::vector<Expected> out;
  auto both = [&](const Weight& x, const BigInt& d) {
    out.push_back({x, d});
    if (x.reversed() != x) out.push_back({x.reversed(), d});
  };
  out.push_back({Weight::zero(l), 1});
  both(w(l, {{1, 1}}), L + 1);
  both(w(l, {{2, 1}}), L * (L + 1) / 2);
  both(w(l, {{3, 1}}), (L - 1) * L * (L + 1) / 6);
  both(w(l, {{4, 1}}), (L - 2) * (L - 1) * L * (L + 1) / 24);
  if (p != 2) both(w(l, {{1, 2}}), (L + 2) * (L + 1) / 2);
  if (p != 2 && p != 3) both(w(l, {{1, 3}}), (L + 3) * (L + 2) * (L + 1) / 6);
  both(w(l, {{1, 1}, {l, 1}}), L * (L + 2) - eps(p, L + 1));
  both(w(l, {{1, 1}, {l - 1, 1}}), (L + 2) * (L + 1) * (L - 1) / 2 - eps(p, L) * (L + 1));
  if (p != 2) both(w(l, {{1, 1}, {l, 2}}), (L + 1) * L * (L + 3) / 2 - eps(p, L + 2) * (L + 1));
  both(w(l, {{1, 1}, {2, 1}}), L * (L + 1) * (L + 2) / 3 - (p == 3 ? (L - 1) * L * (L + 1) / 6 : BigInt(0)));
  if (l >= 16 && p != 2 && p != 3) both(w(l, {{1, 4}}), binomial(L + 4, 4));
  return out;
}

Outcome type_a_theorem() {
  Outcome out;
  int runs = 0;
  double slowest = 0;
  for (int l = 15; l <= 17; ++l) {
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 17u, 31u}) {
      const std::string at = "l=" + std::to_string(l) + " p=" + std::to_string(p);
      auto start = std::chrono::steady_clock::now();
      auto report = classify_admissible(LieType(Family::A, l), Characteristic::prime(p));
      double s = seconds_since(start);
      slowest = std::max(slowest, s);
      ++runs;
      out.check(s < kClassifyBudgetSeconds, at + ": runtime " + fmt_seconds(s));
      std::map<Weight, BigInt> expected;
      for (const auto& e : type_a_list(l, p)) expected[e.weight] = e.dimension;
      std::set<Weight> got;
      for (const auto& x : report.admissible()) got.insert(x);
      for (const auto& [x, d] : expected) {
        if (!got.count(x)) {
          out.fail(at + ": " + x.to_string() + " (dim " + to_decimal(d) + ") missing from the classification");
          continue;
        }
        const Verdict* v = report.find(x);
        if (!v->dimension || *v->dimension != d) {
          out.fail(at + ": " + x.to_string() + " dimension " + (v->dimension ? to_decimal(*v->dimension) : "none") +
                   ", expected " + to_decimal(d));
        }
      }
      for (const auto& x : got) {
        if (!expected.count(x)) out.fail(at + ": unexpected admissible " + x.to_string());
      }
      for (const auto& v : report.verdicts) {
        if (v.status == VerdictStatus::FormulaDependent) out.fail(at + ": undecided " + v.weight.to_string());
      }
    }
  }
  out.summary = std::to_string(runs) + " classifications, slowest " + fmt_seconds(slowest);
  return out;
}

// Criterion 6 ---------------------------------------------------------------

std::set<Weight> classical_list(Family f, int l) {
  std::set<Weight> out{Weight::zero(l),         w(l, {{l, 1}}),     w(l, {{l, 2}}),
                       w(l, {{l, 3}}),          w(l, {{l, 4}}),     w(l, {{l - 1, 1}}),
                       w(l, {{l - 2, 1}}),      w(l, {{l - 3, 1}}), w(l, {{l - 1, 1}, {l, 1}})};
  if (f == Family::B && l <= 16) out.insert(w(l, {{1, 1}}));
  if (f == Family::D && l <= 17) {
    out.insert(w(l, {{1, 1}}));
    out.insert(w(l, {{2, 1}}));
  }
  return out;
}

Outcome classical_theorems() {
  Outcome out;
  int runs = 0, certificates = 0;
  const std::vector<std::pair<Family, int>> ranges{{Family::B, 17}, {Family::C, 17}, {Family::D, 18}};
  for (auto [f, top] : ranges) {
    for (int l = 12; l <= top; ++l) {
      LieType t(f, l);
      auto report = classify_admissible(t, Characteristic::generic());
      ++runs;
      auto list = report.admissible();
      std::set<Weight> got(list.begin(), list.end());
      auto expected = classical_list(f, l);
      for (const auto& x : expected) {
        if (!got.count(x)) out.fail(t.name() + ": missing " + x.to_string());
      }
      for (const auto& x : got) {
        if (!expected.count(x)) out.fail(t.name() + ": unexpected " + x.to_string());
      }
      for (const auto& a : report.audit) {
        std::string why;
        ++certificates;
        if (!verify_certificate(t, a.weight, report.p, report.bound, a.certificate, &why)) {
          out.fail(t.name() + ": audit entry " + a.weight.to_string() + " (" + a.rule + ") does not verify: " + why);
        }
      }
      for (const auto& v : report.verdicts) {
        if (v.status == VerdictStatus::Admissible) continue;
        std::string why;
        ++certificates;
        if (v.status == VerdictStatus::FormulaDependent ||
            !verify_certificate(t, v.weight, report.p, report.bound, v.certificate, &why)) {
          out.fail(t.name() + ": verdict " + v.weight.to_string() + " lacks a verified certificate " + why);
        }
      }
    }
  }
  out.summary = std::to_string(runs) + " classifications, " + std::to_string(certificates) + " certificates verified";
  return out;
}

// Criterion 7 ---------------------------------------------------------------

Outcome coefficient_sequence() {
  Outcome out;
  for (int n = 12; n <= 64; ++n) {
    auto t = coeff_sequence(n);
    BigInt sum = 0;
    for (const auto& x : t) sum += x;
    out.check(sum == power(3, n), "n=" + std::to_string(n) + ": sum is not 3^n");
    for (int k = 0; k < n; ++k) {
      bool ok = k < n / 3 ? t[k] < t[k + 1] : t[k] > t[k + 1];
      out.check(ok, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": monotonicity broken");
    }
  }
  out.summary = "n = 12..64";
  return out;
}

// Criterion 8 ---------------------------------------------------------------

Outcome orbit_oracle() {
  Outcome out;
  std::mt19937 rng(kSeed + 8);
  std::uniform_int_distribution<int> coeff(0, 2);
  int checked = 0;
  for (Family f : kFamilies) {
    const int lo = std::max(2, minimum_rank(f));
    std::uniform_int_distribution<int> rank_dist(lo, 6);
    auto check = [&](const LieType& t, const Weight& x) {
      BigInt enumerated = orbit_enumerate(t, x).size();
      BigInt length = orbit_length(t, x);
      out.check(enumerated == length, t.name() + " " + x.to_string() + ": enumerated " + to_decimal(enumerated) +
                                          ", orbit_length " + to_decimal(length));
      ++checked;
    };
    for (int l = lo; l <= 6; ++l) {
      for (int i = 1; i <= l; ++i) check(LieType(f, l), Weight::fundamental(l, i));
    }
    for (int k = 0; k < kOrbitSamplesPerFamily; ++k) {
      int l = rank_dist(rng);
      std::vector<BigInt> c;
      for (int i = 0; i < l; ++i) c.emplace_back(coeff(rng));
      check(LieType(f, l), Weight(std::move(c)));
    }
  }
  out.summary = std::to_string(checked) + " weights";
  return out;
}

// Criterion 9 ---------------------------------------------------------------

Outcome boundary_dimensions() {
  Outcome out;
  struct Case {
    Family f;
    int l;
    int node;
    bool admissible;
    BigInt dimension;
  };
  const std::vector<Case> cases{{Family::B, 16, 1, true, power(2, 16)},  {Family::B, 17, 1, false, power(2, 17)},
                                {Family::D, 17, 1, true, power(2, 16)},  {Family::D, 17, 2, true, power(2, 16)},
                                {Family::D, 18, 1, false, power(2, 17)}, {Family::D, 18, 2, false, power(2, 17)}};
  for (const auto& c : cases) {
    LieType t(c.f, c.l);
    AdmissibilityBound bound(t);
    auto v = is_admissible(t, w(c.l, {{c.node, 1}}), Characteristic::generic());
    const std::string at = t.name() + " w" + std::to_string(c.node);
    out.check(bound.admits(c.dimension) == c.admissible, at + ": bound comparison");
    out.check((v.status == VerdictStatus::Admissible) == c.admissible, at + ": verdict " + to_string(v.status));
    if (c.admissible) {
      out.check(v.dimension == c.dimension, at + ": dimension");
    } else {
      out.check(v.certificate.kind == CertificateKind::Dimension && v.certificate.value == c.dimension,
                at + ": certificate value " + to_decimal(v.certificate.value));
    }
  }
  out.summary = std::to_string(cases.size()) + " cases";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "dimension sum equals Weyl product (random and table weights)", oracle_equivalence},
      {2, "appendix tables C and D reproduced at l = 12..14",
       [] { return reproduce_exactly({"appendix-c", "appendix-d"}, true); }},
      {3, "type B multiplicity lemmas reproduced at l = 12..14", lemma_tables},
      {4, "dimension identities", dimension_identities},
      {5, "type A classification for l = 15..17, p in {2,3,5,7,17,31}", type_a_theorem},
      {6, "B/C/D classification sets and certificates", classical_theorems},
      {7, "coefficients of (2+x)^n unimodal with peak at n/3", coefficient_sequence},
      {8, "orbit enumeration equals orbit length at ranks 2..6", orbit_oracle},
      {9, "boundary dimensions at the rank cutoffs", boundary_dimensions},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double s = seconds_since(start);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " [" << o.summary
              << (o.summary.empty() ? "" : "; ") << fmt_seconds(s) << "]\n";
    for (const auto& f : o.failures) std::cout << "        " << f << "\n";
    std::cout.flush();
    failed += !o.pass;
  }
  std::cout << "SKIP  criterion 10: mod-p multiplicities, conjectural correction terms and Galois statements are "
               "outside acceptance\n";
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
