#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "weylkit/classify.hpp"
#include "weylkit/closed_form.hpp"
#include "weylkit/commands.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/freudenthal.hpp"
#include "weylkit/weight_spec.hpp"
#include "weylkit/weyl_group.hpp"

namespace py = pybind11;
using namespace weylkit;

namespace {

// Python ints of any size cross the boundary as decimal strings.
py::int_ to_py(const BigInt& n) { return py::int_(py::str(to_decimal(n))); }

BigInt from_py(const py::handle& h) { return parse_decimal(py::str(h).cast<std::string>()); }

LieType lie_type(const std::string& family, int rank) { return LieType(parse_family(family), rank); }

// A weight is either a spec string such as "w1+2*w3" or a sequence of coefficients.
Weight to_weight(const LieType& t, const py::object& w) {
  if (py::isinstance<py::str>(w)) return parse_weight_spec(w.cast<std::string>(), t.rank());
  std::vector<BigInt> coeffs;
  for (auto item : w) coeffs.push_back(from_py(item));
  Weight out(std::move(coeffs));
  if (out.rank() != t.rank()) throw ValidationError("weight needs " + std::to_string(t.rank()) + " coefficients");
  return out;
}

py::list coeffs(const Weight& w) {
  py::list out;
  for (const auto& c : w.coeffs()) out.append(to_py(c));
  return out;
}

Characteristic characteristic(const py::object& p) {
  if (p.is_none()) return Characteristic::generic();
  if (py::isinstance<py::str>(p)) return Characteristic::parse(p.cast<std::string>());
  return Characteristic::prime(p.cast<std::uint64_t>());
}

py::dict certificate_dict(const Certificate& c) {
  py::dict d;
  d["kind"] = to_string(c.kind);
  d["source"] = c.source;
  d["value"] = to_py(c.value);
  py::list witnesses;
  for (std::size_t k = 0; k < c.witnesses.size(); ++k) {
    witnesses.append(py::make_tuple(c.witnesses[k].to_string(), to_py(c.orbit_lengths[k])));
  }
  d["witnesses"] = witnesses;
  return d;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["weight"] = v.weight.to_string();
  d["status"] = to_string(v.status);
  d["dimension"] = v.dimension ? py::object(to_py(*v.dimension)) : py::object(py::none());
  d["weyl_dimension"] = to_py(v.weyl_dimension);
  d["provenance"] = v.provenance;
  if (!v.certificate.empty()) d["certificate"] = certificate_dict(v.certificate);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact weight multiplicities, orbit lengths and dimensions for classical root systems";
  m.attr("__version__") = "0.3.0";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def("weyl_order", [](const std::string& f, int l) { return to_py(weyl_order(lie_type(f, l))); });
  m.def("orbit_length", [](const std::string& f, int l, const py::object& w) {
    LieType t = lie_type(f, l);
    return to_py(orbit_length(t, to_weight(t, w)));
  });
  m.def("stabilizer_type", [](const std::string& f, int l, const py::object& w) {
    LieType t = lie_type(f, l);
    return stabilizer_type(t, to_weight(t, w)).to_string();
  });
  m.def("multiplicity", [](const std::string& f, int l, const py::object& lambda, const py::object& mu) {
    LieType t = lie_type(f, l);
    return to_py(multiplicity(t, to_weight(t, lambda), to_weight(t, mu)));
  });
  m.def("multiplicity_table", [](const std::string& f, int l, const py::object& lambda) {
    LieType t = lie_type(f, l);
    py::list rows;
    for (const auto& r : multiplicity_table(t, to_weight(t, lambda))->rows()) {
      rows.append(py::make_tuple(r.mu.to_string(), to_py(r.multiplicity), to_py(r.orbit_length)));
    }
    return rows;
  });
  m.def("dim_weyl_module", [](const std::string& f, int l, const py::object& w) {
    LieType t = lie_type(f, l);
    return to_py(dim_weyl_module(t, to_weight(t, w)));
  });
  m.def("dim_weyl_product", [](const std::string& f, int l, const py::object& w) {
    LieType t = lie_type(f, l);
    return to_py(dim_weyl_product(t, to_weight(t, w)));
  });
  m.def(
      "dim_closed",
      [](const std::string& f, int l, const py::object& w, const py::object& p) -> py::object {
        LieType t = lie_type(f, l);
        ClosedDimension c = dim_closed(t, to_weight(t, w), characteristic(p));
        if (!c.known()) return py::none();
        py::dict d;
        d["value"] = to_py(*c.value);
        d["status"] = to_string(c.status);
        d["formula_id"] = c.formula_id;
        return d;
      },
      py::arg("family"), py::arg("rank"), py::arg("weight"), py::arg("p") = py::none());
  m.def("steinberg_decompose", [](const py::object& w, std::uint64_t p) {
    std::vector<BigInt> c;
    for (auto item : w) c.push_back(from_py(item));
    py::list out;
    for (const auto& d : steinberg_decompose(Weight(std::move(c)), p)) out.append(coeffs(d));
    return out;
  });
  m.def(
      "is_admissible",
      [](const std::string& f, int l, const py::object& w, const py::object& p, int exponent) {
        LieType t = lie_type(f, l);
        return verdict_dict(is_admissible(t, to_weight(t, w), characteristic(p), exponent));
      },
      py::arg("family"), py::arg("rank"), py::arg("weight"), py::arg("p") = py::none(), py::arg("exponent") = 4);
  m.def(
      "classify",
      [](const std::string& f, int l, const py::object& p, int exponent) {
        LieType t = lie_type(f, l);
        Characteristic chr = characteristic(p);
        std::optional<AdmissibleReport> report;
        {
          py::gil_scoped_release release;
          report = classify_admissible(t, chr, exponent);
        }
        const AdmissibleReport& r = *report;
        py::dict d;
        py::list admissible, verdicts, audit;
        for (const auto& w : r.admissible()) admissible.append(w.to_string());
        for (const auto& v : r.verdicts) verdicts.append(verdict_dict(v));
        for (const auto& a : r.audit) {
          py::dict e;
          e["weight"] = a.weight.to_string();
          e["rule"] = a.rule;
          e["certificate"] = certificate_dict(a.certificate);
          audit.append(e);
        }
        d["bound"] = r.bound.to_string();
        d["admissible"] = admissible;
        d["verdicts"] = verdicts;
        d["audit"] = audit;
        d["notes"] = r.notes;
        return d;
      },
      py::arg("family"), py::arg("rank"), py::arg("p") = py::none(), py::arg("exponent") = 4);
  m.def("coeff_sequence", [](int n) {
    py::list out;
    for (const auto& t : coeff_sequence(n)) out.append(to_py(t));
    return out;
  });
  m.def("parse_weight", [](const std::string& text, int rank) { return coeffs(parse_weight_spec(text, rank)); });
  m.def("render_weight", [](const py::object& w) {
    std::vector<BigInt> c;
    for (auto item : w) c.push_back(from_py(item));
    return Weight(std::move(c)).to_string();
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
