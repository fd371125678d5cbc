#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "numfun/augmentation.hpp"
#include "numfun/deviation.hpp"
#include "numfun/divided_power.hpp"
#include "numfun/functor.hpp"
#include "numfun/lattice.hpp"
#include "numfun/modules.hpp"
#include "numfun/morita.hpp"

namespace numfun {

using json = nlohmann::ordered_json;

struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Machine integers become JSON numbers; anything larger is a decimal string.
inline json int_to_json(Int const& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

inline Int int_from_json(json const& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw input_error("not an integer: " + j.dump());
    return v;
  }
  throw input_error("expected an integer, got " + j.dump());
}

inline Rat rat_from_string(std::string const& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw input_error("not a rational: " + s);
  // canonicalize() divides by the denominator, so check it first.
  if (q.get_den() == 0) throw input_error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline json vector_to_json(std::vector<Int> const& v) {
  json a = json::array();
  for (auto const& x : v) a.push_back(int_to_json(x));
  return a;
}

inline std::vector<Int> vector_from_json(json const& j) {
  if (!j.is_array()) throw input_error("expected an array of integers");
  std::vector<Int> v;
  for (auto const& x : j) v.push_back(int_from_json(x));
  return v;
}

inline json matrix_to_json(IntMatrix const& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    rows.push_back(vector_to_json({m.row(i).begin(), m.row(i).end()}));
  return rows;
}

inline json matrix_to_json(RatMatrix const& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (auto const& v : m.row(i)) r.push_back(v.get_str());
    rows.push_back(std::move(r));
  }
  return rows;
}

inline IntMatrix matrix_from_json(json const& rows, std::size_t nrows,
                                  std::size_t ncols) {
  if (!rows.is_array() || rows.size() != nrows)
    throw input_error("matrix: expected " + std::to_string(nrows) + " rows");
  IntMatrix m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    auto r = vector_from_json(rows[i]);
    if (r.size() != ncols)
      throw input_error("matrix: expected " + std::to_string(ncols) +
                        " columns in row " + std::to_string(i));
    for (std::size_t j = 0; j < ncols; ++j) m(i, j) = r[j];
  }
  return m;
}

inline std::size_t size_from_json(json const& j, char const* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw input_error(std::string("missing or negative field ") + key);
  return j[key].get<std::size_t>();
}

/// {source_rank, target_rank, rows}
inline json hom_to_json(Hom const& h) {
  return {{"source_rank", h.source().rank},
          {"target_rank", h.target().rank},
          {"rows", matrix_to_json(h.matrix())}};
}

inline Hom hom_from_json(json const& j) {
  if (!j.is_object()) throw input_error("hom: expected an object");
  std::size_t p = size_from_json(j, "source_rank");
  std::size_t q = size_from_json(j, "target_rank");
  if (!j.contains("rows")) throw input_error("hom: missing rows");
  return Hom(FreeModule{p}, FreeModule{q}, matrix_from_json(j["rows"], q, p));
}

/// {generators: [[Int]], scalar_window: [lo, hi]}
inline SampleSpec sample_from_json(json const& j) {
  SampleSpec s;
  if (!j.is_object() || !j.contains("generators"))
    throw input_error("sample: missing generators");
  for (auto const& g : j["generators"]) s.generators.push_back(vector_from_json(g));
  if (j.contains("scalar_window")) {
    auto const& w = j["scalar_window"];
    if (!w.is_array() || w.size() != 2)
      throw input_error("sample: scalar_window must be [lo, hi]");
    s.scalar_lo = w[0].get<long>();
    s.scalar_hi = w[1].get<long>();
  }
  return s;
}

inline json sample_to_json(SampleSpec const& s) {
  json g = json::array();
  for (auto const& v : s.generators) g.push_back(vector_to_json(v));
  return {{"generators", g}, {"scalar_window", {s.scalar_lo, s.scalar_hi}}};
}

/// {"tensor": n}, {"sym": n}, {"ext": n}, {"div": n}, {"const": rank},
/// {"sum": [specs]}.
inline FunctorSpec spec_from_json(json const& j) {
  if (!j.is_object() || j.size() != 1)
    throw input_error("functor spec: expected a one-key object");
  auto const& [key, val] = *j.items().begin();
  auto param = [&]() {
    if (!val.is_number_unsigned())
      throw input_error("functor spec: " + key + " needs a nonnegative integer");
    return val.get<std::size_t>();
  };
  if (key == "tensor") return FunctorSpec::tensor(param());
  if (key == "sym") return FunctorSpec::sym(param());
  if (key == "ext") return FunctorSpec::ext(param());
  if (key == "div") return FunctorSpec::div(param());
  if (key == "const") return FunctorSpec::constant(param());
  if (key == "sum") {
    if (!val.is_array() || val.empty())
      throw input_error("functor spec: sum needs a nonempty list");
    std::vector<FunctorSpec> parts;
    for (auto const& p : val) parts.push_back(spec_from_json(p));
    return FunctorSpec::sum(std::move(parts));
  }
  throw input_error("functor spec: unknown kind " + key);
}

inline json spec_to_json(FunctorSpec const& s) {
  using K = FunctorSpec::Kind;
  switch (s.kind) {
    case K::Tensor: return {{"tensor", s.param}};
    case K::Sym: return {{"sym", s.param}};
    case K::Ext: return {{"ext", s.param}};
    case K::Div: return {{"div", s.param}};
    case K::Const: return {{"const", s.param}};
    case K::Sum: {
      json parts = json::array();
      for (auto const& p : s.parts) parts.push_back(spec_to_json(p));
      return {{"sum", parts}};
    }
  }
  return {};
}

/// Multiset key ("1^2,3") -> rational string.
template <class Space>
json combination_to_json(BasisCombination<Space> const& u) {
  json o = json::object();
  for (auto const& [x, c] : u.coeffs()) o[x.key()] = c.get_str();
  return o;
}

template <class Space>
BasisCombination<Space> combination_from_json(Space const& space,
                                              json const& j) {
  if (!j.is_object()) throw input_error("element: expected an object");
  BasisCombination<Space> u(space);
  for (auto const& [key, val] : j.items()) {
    Multiset x;
    try {
      x = Multiset::parse_key(key);
    } catch (std::invalid_argument const& e) {
      throw input_error(e.what());
    }
    Rat c = val.is_string() ? rat_from_string(val.template get<std::string>())
                            : Rat(int_from_json(val));
    try {
      u.add_term(x, c);
    } catch (std::out_of_range const&) {
      throw input_error("element: " + key + " is not a basis index");
    }
  }
  return u;
}

inline json witness_to_json(Witness const& w) {
  json a = json::array();
  for (auto const& v : w.arguments) a.push_back(vector_to_json(v));
  json o = {{"condition", w.condition}, {"arguments", a}};
  if (w.scalar) o["scalar"] = int_to_json(*w.scalar);
  return o;
}

inline json report_to_json(DeviationReport const& r) {
  json o = {{"degree_tested", r.degree_tested},
            {"samples_used", r.samples_used},
            {"verdict", r.passed ? "pass" : "fail"}};
  if (r.witness) o["witness"] = witness_to_json(*r.witness);
  return o;
}

inline json invariants_to_json(CokernelInvariants const& c) {
  return {{"torsion", vector_to_json(c.torsion)}, {"free_rank", c.free_rank}};
}

inline json module_to_json(PresentedModule const& m, std::size_t n) {
  json act = json::object();
  for (auto const& [x, a] : m.action) act[x.key()] = matrix_to_json(a);
  return {{"n", n},
          {"generators", m.generators()},
          {"relations", matrix_to_json(m.relations)},
          {"invariants", invariants_to_json(m.invariants())},
          {"action", act}};
}

}  // namespace numfun
