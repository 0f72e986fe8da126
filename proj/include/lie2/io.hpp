#pragma once

// JSON documents for every structure the library works with. Scalars are
// integers or "p/q" strings; tensors carry an explicit shape and either
// nested arrays in lexicographic order or, above 4096 entries, a list of
// nonzero [i, j, .., value] entries.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "lie2/cohom.hpp"
#include "lie2/defo.hpp"
#include "lie2/el2.hpp"
#include "lie2/morph.hpp"

namespace lie2 {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PairDocument {
  RepresentationFD rep;
  CocyclePair pair;

  friend bool operator==(const PairDocument&, const PairDocument&) = default;
};

struct McProblem {
  GradedL3Algebra algebra;
  Vector gamma;  // L^1 coordinates

  friend bool operator==(const McProblem&, const McProblem&) = default;
};

using Payload = std::variant<TwoTermComplex, EL2Algebra, ELMorphism, ELTwoMorphism, LieAlgebraFD, LeibnizAlgebraFD,
                             RepresentationFD, PairDocument, GradedL3Algebra, McProblem>;

struct Document {
  std::string name;
  std::string description;
  Payload payload;

  std::string kind() const {
    static const char* names[] = {"complex",          "el2",             "morphism",       "two_morphism",
                                  "lie_algebra",      "leibniz_algebra", "representation", "cocycle_pair",
                                  "graded_l3",        "mc_problem"};
    return names[payload.index()];
  }

  friend bool operator==(const Document&, const Document&) = default;
};

namespace io {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t dense_limit = 4096;

inline Json rat(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(static_cast<std::int64_t>(r.get_num().get_si()));
  return Json(to_string(r));
}

inline Rat rat(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Rat(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": scalar must be an integer or a \"p/q\" string");
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

inline std::size_t size_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw InputError(where + "." + key + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

inline Json vector(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat(x));
  return a;
}

inline Vector vector(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of scalars");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rat(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline Json tensor(const Tensor& t) {
  Json out = Json::object();
  out["shape"] = t.shape();
  const auto& shape = t.shape();
  if (t.size() > dense_limit) {
    Json entries = Json::array();
    t.for_each_index([&](std::span<const std::size_t> idx) {
      const Rat& v = t.at(idx);
      if (v == 0) return;
      Json e = Json::array();
      for (auto i : idx) e.push_back(i);
      e.push_back(rat(v));
      entries.push_back(std::move(e));
    });
    out["entries"] = std::move(entries);
    return out;
  }
  std::size_t pos = 0;
  std::function<Json(std::size_t)> nest = [&](std::size_t level) {
    Json a = Json::array();
    for (std::size_t i = 0; i < shape[level]; ++i) a.push_back(level + 1 == shape.size() ? rat(t.data()[pos++]) : nest(level + 1));
    return a;
  };
  out["data"] = shape.empty() ? Json::array() : nest(0);
  return out;
}

inline Tensor tensor(const Json& j, const std::string& where, const std::vector<std::size_t>& expected) {
  const Json& sj = field(j, "shape", where);
  if (!sj.is_array()) throw InputError(where + ".shape: expected an array");
  std::vector<std::size_t> shape;
  for (const auto& s : sj) {
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0))
      throw InputError(where + ".shape: expected non-negative integers");
    shape.push_back(s.get<std::size_t>());
  }
  if (shape != expected) {
    std::string want;
    for (auto s : expected) want += (want.empty() ? "" : ", ") + std::to_string(s);
    throw InputError(where + ": shape error, expected [" + want + "]");
  }
  Tensor t(shape);
  if (j.contains("entries")) {
    const Json& es = j["entries"];
    if (!es.is_array()) throw InputError(where + ".entries: expected an array");
    for (std::size_t n = 0; n < es.size(); ++n) {
      const Json& e = es[n];
      const std::string w = where + ".entries[" + std::to_string(n) + "]";
      if (!e.is_array() || e.size() != shape.size() + 1) throw InputError(w + ": expected indices followed by a value");
      std::vector<std::size_t> idx;
      for (std::size_t s = 0; s < shape.size(); ++s) {
        if (!e[s].is_number_unsigned() && !(e[s].is_number_integer() && e[s].get<std::int64_t>() >= 0))
          throw InputError(w + ": bad index");
        idx.push_back(e[s].get<std::size_t>());
        if (idx.back() >= shape[s]) throw InputError(w + ": index out of range");
      }
      t.data()[t.offset(idx)] = rat(e[shape.size()], w);
    }
    return t;
  }
  std::size_t pos = 0;
  std::function<void(const Json&, std::size_t, const std::string&)> read = [&](const Json& a, std::size_t level, const std::string& w) {
    if (!a.is_array() || a.size() != shape[level]) throw InputError(w + ": nested array does not match the shape");
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string wi = w + "[" + std::to_string(i) + "]";
      if (level + 1 == shape.size())
        t.data()[pos++] = rat(a[i], wi);
      else
        read(a[i], level + 1, wi);
    }
  };
  if (!shape.empty()) read(field(j, "data", where), 0, where + ".data");
  return t;
}

inline Json matrix(const Matrix& m) {
  return tensor(Tensor({m.rows(), m.cols()}, std::vector<Rat>(m.entries().begin(), m.entries().end())));
}

inline Matrix matrix(const Json& j, const std::string& where, std::size_t rows, std::size_t cols) {
  const Tensor t = tensor(j, where, {rows, cols});
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = t(r, c);
  return m;
}

// payloads -----------------------------------------------------------------

inline Json to_json(const TwoTermComplex& c) {
  Json j = Json::object();
  j["n0"] = c.n0;
  j["n1"] = c.n1;
  j["d"] = matrix(c.d);
  return j;
}

inline TwoTermComplex complex_from(const Json& j, const std::string& w) {
  const std::size_t n0 = size_field(j, "n0", w), n1 = size_field(j, "n1", w);
  return TwoTermComplex(n0, n1, matrix(field(j, "d", w), w + ".d", n0, n1));
}

inline Json to_json(const EL2Algebra& e) {
  Json j = Json::object();
  j["complex"] = to_json(e.complex);
  j["b00"] = tensor(e.b00);
  j["b01"] = tensor(e.b01);
  j["b10"] = tensor(e.b10);
  j["alt"] = tensor(e.alt);
  j["jac"] = tensor(e.jac);
  return j;
}

inline EL2Algebra el2_from(const Json& j, const std::string& w) {
  EL2Algebra e(complex_from(field(j, "complex", w), w + ".complex"));
  const std::size_t p = e.n0(), q = e.n1();
  e.b00 = tensor(field(j, "b00", w), w + ".b00", {p, p, p});
  e.b01 = tensor(field(j, "b01", w), w + ".b01", {q, p, q});
  e.b10 = tensor(field(j, "b10", w), w + ".b10", {q, q, p});
  e.alt = tensor(field(j, "alt", w), w + ".alt", {q, p, p});
  e.jac = tensor(field(j, "jac", w), w + ".jac", {q, p, p, p});
  return e;
}

inline Json to_json(const ELMorphism& m) {
  Json j = Json::object();
  j["src"] = to_json(m.src);
  j["dst"] = to_json(m.dst);
  j["f0"] = matrix(m.f.f0);
  j["f1"] = matrix(m.f.f1);
  j["f2"] = tensor(m.f2);
  return j;
}

inline ELMorphism morphism_from(const Json& j, const std::string& w) {
  ELMorphism m;
  m.src = el2_from(field(j, "src", w), w + ".src");
  m.dst = el2_from(field(j, "dst", w), w + ".dst");
  m.f.f0 = matrix(field(j, "f0", w), w + ".f0", m.dst.n0(), m.src.n0());
  m.f.f1 = matrix(field(j, "f1", w), w + ".f1", m.dst.n1(), m.src.n1());
  m.f2 = tensor(field(j, "f2", w), w + ".f2", {m.dst.n1(), m.src.n0(), m.src.n0()});
  return m;
}

inline Json to_json(const ELTwoMorphism& t) {
  Json j = Json::object();
  j["src"] = to_json(t.src);
  j["dst"] = to_json(t.dst);
  j["theta"] = matrix(t.theta.h);
  return j;
}

inline ELTwoMorphism two_morphism_from(const Json& j, const std::string& w) {
  ELTwoMorphism t;
  t.src = morphism_from(field(j, "src", w), w + ".src");
  t.dst = morphism_from(field(j, "dst", w), w + ".dst");
  t.theta.h = matrix(field(j, "theta", w), w + ".theta", t.src.dst.n1(), t.src.src.n0());
  if (!(t.src.src == t.dst.src) || !(t.src.dst == t.dst.dst)) throw InputError(w + ": morphisms have different endpoints");
  return t;
}

inline Json to_json(const LeibnizAlgebraFD& g) {
  Json j = Json::object();
  j["dim"] = g.dim;
  j["structure"] = tensor(g.c);
  return j;
}

template <class A>
A algebra_from(const Json& j, const std::string& w) {
  const std::size_t n = size_field(j, "dim", w);
  return A(n, tensor(field(j, "structure", w), w + ".structure", {n, n, n}));
}

inline Json to_json(const RepresentationFD& r) {
  Json j = Json::object();
  j["lie_algebra"] = to_json(r.g);
  j["dim_m"] = r.dim_m;
  j["rho"] = tensor(r.rho);
  return j;
}

inline RepresentationFD representation_from(const Json& j, const std::string& w) {
  LieAlgebraFD g = algebra_from<LieAlgebraFD>(field(j, "lie_algebra", w), w + ".lie_algebra");
  const std::size_t m = size_field(j, "dim_m", w);
  Tensor rho = tensor(field(j, "rho", w), w + ".rho", {m, g.dim, m});
  return RepresentationFD(std::move(g), m, std::move(rho));
}

inline Json to_json(const PairDocument& p) {
  Json j = Json::object();
  j["representation"] = to_json(p.rep);
  j["s"] = tensor(p.pair.s);
  j["j"] = tensor(p.pair.j);
  return j;
}

inline PairDocument pair_from(const Json& j, const std::string& w) {
  PairDocument p{representation_from(field(j, "representation", w), w + ".representation"), {}};
  const std::size_t n = p.rep.g.dim, m = p.rep.dim_m;
  p.pair.s = tensor(field(j, "s", w), w + ".s", {m, n, n});
  p.pair.j = tensor(field(j, "j", w), w + ".j", {m, n, n, n});
  return p;
}

inline Json to_json(const GradedL3Algebra& L) {
  Json j = Json::object();
  j["dmin"] = L.dmin;
  j["dims"] = L.dims;
  j["l1"] = matrix(L.l1);
  j["l2"] = tensor(L.l2);
  j["l3"] = tensor(L.l3);
  return j;
}

inline GradedL3Algebra graded_from(const Json& j, const std::string& w) {
  const Json& dm = field(j, "dmin", w);
  if (!dm.is_number_integer()) throw InputError(w + ".dmin: expected an integer");
  const Json& dj = field(j, "dims", w);
  if (!dj.is_array()) throw InputError(w + ".dims: expected an array");
  std::vector<std::size_t> dims;
  for (const auto& d : dj) {
    if (!d.is_number_unsigned() && !(d.is_number_integer() && d.get<std::int64_t>() >= 0))
      throw InputError(w + ".dims: expected non-negative integers");
    dims.push_back(d.get<std::size_t>());
  }
  const int dmin = dm.get<int>();
  if (dmin < -3) throw InputError(w + ".dmin: degrees below -3 are not supported");
  GradedL3Algebra L(dmin, dims);
  const std::size_t N = L.total();
  L.l1 = matrix(field(j, "l1", w), w + ".l1", N, N);
  L.l2 = tensor(field(j, "l2", w), w + ".l2", {N, N, N});
  L.l3 = tensor(field(j, "l3", w), w + ".l3", {N, N, N, N});
  return L;
}

inline Json to_json(const McProblem& p) {
  Json j = Json::object();
  j["algebra"] = to_json(p.algebra);
  j["gamma"] = vector(p.gamma);
  return j;
}

inline McProblem mc_from(const Json& j, const std::string& w) {
  McProblem p{graded_from(field(j, "algebra", w), w + ".algebra"), vector(field(j, "gamma", w), w + ".gamma")};
  if (p.gamma.size() != p.algebra.dim(1)) throw InputError(w + ".gamma: shape error, expected dim L^1 = " + std::to_string(p.algebra.dim(1)));
  return p;
}

}  // namespace io

inline std::string serialize(const Document& doc) {
  io::Json j = io::Json::object();
  j["kind"] = doc.kind();
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.description.empty()) j["description"] = doc.description;
  const io::Json body = std::visit([](const auto& v) { return io::to_json(v); }, doc.payload);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j.dump(1) + "\n";
}

inline Document parse_document(std::string_view text) {
  io::Json j;
  try {
    j = io::Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("syntax error at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw InputError("document: expected a top-level object");
  const io::Json& kj = io::field(j, "kind", "document");
  if (!kj.is_string()) throw InputError("document.kind: expected a string");
  const std::string kind = kj.get<std::string>();
  Document doc;
  auto text_field = [&](const char* key) {
    if (!j.contains(key)) return std::string();
    if (!j[key].is_string()) throw InputError(std::string("document.") + key + ": expected a string");
    return j[key].get<std::string>();
  };
  doc.name = text_field("name");
  doc.description = text_field("description");
  const std::string w = kind;
  try {
    if (kind == "complex") doc.payload = io::complex_from(j, w);
    else if (kind == "el2") doc.payload = io::el2_from(j, w);
    else if (kind == "morphism") doc.payload = io::morphism_from(j, w);
    else if (kind == "two_morphism") doc.payload = io::two_morphism_from(j, w);
    else if (kind == "lie_algebra") doc.payload = io::algebra_from<LieAlgebraFD>(j, w);
    else if (kind == "leibniz_algebra") doc.payload.emplace<LeibnizAlgebraFD>(io::algebra_from<LeibnizAlgebraFD>(j, w));
    else if (kind == "representation") doc.payload = io::representation_from(j, w);
    else if (kind == "cocycle_pair") doc.payload = io::pair_from(j, w);
    else if (kind == "graded_l3") doc.payload = io::graded_from(j, w);
    else if (kind == "mc_problem") doc.payload = io::mc_from(j, w);
    else throw InputError("document.kind: unknown kind \"" + kind + "\"");
  } catch (const ShapeError& e) {
    throw InputError(w + ": shape error: " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(w + ": " + e.what());
  }
  return doc;
}

template <class T>
Document make_document(T value, std::string name = {}, std::string description = {}) {
  Document d{std::move(name), std::move(description), {}};
  d.payload.template emplace<T>(std::move(value));
  return d;
}

}  // namespace lie2
