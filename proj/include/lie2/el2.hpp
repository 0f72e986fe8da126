#pragma once

// 2-term EL-infinity algebras: a bracket chain map on C^-1 -> C^0 with an
// alternator homotopy <.,.> and a Jacobiator homotopy <.,.,.>.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "lie2/dkcore.hpp"
#include "lie2/exactla.hpp"
#include "lie2/report.hpp"

namespace lie2 {

struct EL2Algebra {
  TwoTermComplex complex;
  Tensor b00;  // [n0, n0, n0]  [x,y]
  Tensor b01;  // [n1, n0, n1]  [x,b]
  Tensor b10;  // [n1, n1, n0]  [a,y]
  Tensor alt;  // [n1, n0, n0]  <x,y>
  Tensor jac;  // [n1, n0, n0, n0]  <x,y,z>

  EL2Algebra() : EL2Algebra(TwoTermComplex()) {}
  explicit EL2Algebra(TwoTermComplex c)
      : complex(std::move(c)),
        b00({n0(), n0(), n0()}),
        b01({n1(), n0(), n1()}),
        b10({n1(), n1(), n0()}),
        alt({n1(), n0(), n0()}),
        jac({n1(), n0(), n0(), n0()}) {}

  std::size_t n0() const { return complex.n0; }
  std::size_t n1() const { return complex.n1; }
  const Matrix& d() const { return complex.d; }
  BracketView bracket() const { return {complex, b00, b01, b10}; }

  void validate() const {
    complex.validate();
    const std::size_t p = n0(), q = n1();
    auto need = [](const Tensor& t, std::vector<std::size_t> s, const char* name) {
      if (t.shape() != s) throw ShapeError(std::string("el2: tensor ") + name + " has the wrong shape");
    };
    need(b00, {p, p, p}, "b00");
    need(b01, {q, p, q}, "b01");
    need(b10, {q, q, p}, "b10");
    need(alt, {q, p, p}, "alt");
    need(jac, {q, p, p, p}, "jac");
  }

  friend bool operator==(const EL2Algebra&, const EL2Algebra&) = default;
};

// ---------------------------------------------------------------------------
// Finite-dimensional algebras used by the constructors
// ---------------------------------------------------------------------------

/// Leibniz bracket given by structure constants c(k, i, j) = [e_i, e_j]_k.
struct LeibnizAlgebraFD {
  std::size_t dim = 0;
  Tensor c{{0, 0, 0}};

  LeibnizAlgebraFD() = default;
  LeibnizAlgebraFD(std::size_t n, Tensor t) : dim(n), c(std::move(t)) {
    if (c.shape() != std::vector<std::size_t>{n, n, n}) throw ShapeError("algebra: structure tensor must be n x n x n");
  }

  Vector bracket(const Vector& x, const Vector& y) const { return evaluate(c, x, y); }
  Vector e(std::size_t i) const { return unit_vector(dim, i); }

  /// [x,[y,z]] - [[x,y],z] - [y,[x,z]] on basis triples.
  std::vector<Violation> leibniz_violations() const {
    return run_equations({{"leibniz", "xyz", {dim, dim, dim}, [this](std::span<const std::size_t> t) {
                             const Vector x = e(t[0]), y = e(t[1]), z = e(t[2]);
                             return bracket(x, bracket(y, z)) - bracket(bracket(x, y), z) - bracket(y, bracket(x, z));
                           }}});
  }
  bool is_valid() const { return leibniz_violations().empty(); }

  friend bool operator==(const LeibnizAlgebraFD&, const LeibnizAlgebraFD&) = default;
};

struct LieAlgebraFD : LeibnizAlgebraFD {
  using LeibnizAlgebraFD::LeibnizAlgebraFD;

  bool is_skew() const {
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j)
          if (c(k, i, j) != -c(k, j, i)) return false;
    return true;
  }
  bool is_valid() const { return is_skew() && LeibnizAlgebraFD::is_valid(); }
};

/// rho(m', i, m): the m'-th coordinate of e_i acting on the m-th basis vector.
struct RepresentationFD {
  LieAlgebraFD g;
  std::size_t dim_m = 0;
  Tensor rho{{0, 0, 0}};

  RepresentationFD() = default;
  RepresentationFD(LieAlgebraFD alg, std::size_t m, Tensor r) : g(std::move(alg)), dim_m(m), rho(std::move(r)) {
    if (rho.shape() != std::vector<std::size_t>{m, g.dim, m}) throw ShapeError("representation: rho must be m x n x m");
  }

  Vector act(const Vector& x, const Vector& v) const { return evaluate(rho, x, v); }

  bool is_valid() const {
    const std::size_t n = g.dim;
    return run_equations({{"rep", "xya", {n, n, dim_m}, [&](std::span<const std::size_t> t) {
                             const Vector x = g.e(t[0]), y = g.e(t[1]), v = unit_vector(dim_m, t[2]);
                             return act(g.bracket(x, y), v) - act(x, act(y, v)) + act(y, act(x, v));
                           }}})
        .empty();
  }

  friend bool operator==(const RepresentationFD&, const RepresentationFD&) = default;
};

// ---------------------------------------------------------------------------
// Axiom checker
// ---------------------------------------------------------------------------

namespace detail {

/// Named evaluation of the structure maps on arbitrary vectors.
struct El2Eval {
  const EL2Algebra& e;

  Vector d(const Vector& a) const { return e.d() * a; }
  Vector xy(const Vector& x, const Vector& y) const { return evaluate(e.b00, x, y); }
  Vector xb(const Vector& x, const Vector& b) const { return evaluate(e.b01, x, b); }
  Vector ay(const Vector& a, const Vector& y) const { return evaluate(e.b10, a, y); }
  Vector s(const Vector& x, const Vector& y) const { return evaluate(e.alt, x, y); }
  Vector j(const Vector& x, const Vector& y, const Vector& z) const { return evaluate(e.jac, x, y, z); }
  Vector e0(std::size_t i) const { return unit_vector(e.n0(), i); }
  Vector e1(std::size_t i) const { return unit_vector(e.n1(), i); }
};

}  // namespace detail

/// Equation ids in check order.
inline const std::vector<std::string>& el2_equation_ids() {
  static const std::vector<std::string> ids{"chain1", "chain2", "chain3", "sym1",  "sym2", "sym3",  "Leib1",
                                            "Leib2",  "Leib3",  "Leib4",  "l2l3",  "s12",  "s23",   "symm3"};
  return ids;
}

inline std::vector<Equation> el2_equations(const EL2Algebra& alg) {
  const detail::El2Eval o{alg};
  const std::size_t p = alg.n0(), q = alg.n1();
  using T = std::span<const std::size_t>;
  return {
      {"chain1", "xb", {p, q}, [o](T t) { auto x = o.e0(t[0]), b = o.e1(t[1]); return o.d(o.xb(x, b)) - o.xy(x, o.d(b)); }},
      {"chain2", "ay", {q, p}, [o](T t) { auto a = o.e1(t[0]), y = o.e0(t[1]); return o.d(o.ay(a, y)) - o.xy(o.d(a), y); }},
      {"chain3", "ab", {q, q}, [o](T t) { auto a = o.e1(t[0]), b = o.e1(t[1]); return o.xb(o.d(a), b) - o.ay(a, o.d(b)); }},
      {"sym1", "xy", {p, p}, [o](T t) { auto x = o.e0(t[0]), y = o.e0(t[1]); return o.xy(x, y) + o.xy(y, x) - o.d(o.s(x, y)); }},
      {"sym2", "ay", {q, p}, [o](T t) { auto a = o.e1(t[0]), y = o.e0(t[1]); return o.ay(a, y) + o.xb(y, a) - o.s(o.d(a), y); }},
      {"sym3", "xb", {p, q}, [o](T t) { auto x = o.e0(t[0]), b = o.e1(t[1]); return o.xb(x, b) + o.ay(b, x) - o.s(x, o.d(b)); }},
      {"Leib1", "xyz", {p, p, p},
       [o](T t) {
         auto x = o.e0(t[0]), y = o.e0(t[1]), z = o.e0(t[2]);
         return o.xy(x, o.xy(y, z)) - o.xy(o.xy(x, y), z) - o.xy(y, o.xy(x, z)) - o.d(o.j(x, y, z));
       }},
      {"Leib2", "ayz", {q, p, p},
       [o](T t) {
         auto a = o.e1(t[0]), y = o.e0(t[1]), z = o.e0(t[2]);
         return o.ay(a, o.xy(y, z)) - o.ay(o.ay(a, y), z) - o.xb(y, o.ay(a, z)) - o.j(o.d(a), y, z);
       }},
      {"Leib3", "xbz", {p, q, p},
       [o](T t) {
         auto x = o.e0(t[0]), b = o.e1(t[1]), z = o.e0(t[2]);
         return o.xb(x, o.ay(b, z)) - o.ay(o.xb(x, b), z) - o.ay(b, o.xy(x, z)) - o.j(x, o.d(b), z);
       }},
      {"Leib4", "xyc", {p, p, q},
       [o](T t) {
         auto x = o.e0(t[0]), y = o.e0(t[1]), c = o.e1(t[2]);
         return o.xb(x, o.xb(y, c)) - o.xb(o.xy(x, y), c) - o.xb(y, o.xb(x, c)) - o.j(x, y, o.d(c));
       }},
      {"l2l3", "xyzw", {p, p, p, p},
       [o](T t) {
         auto x = o.e0(t[0]), y = o.e0(t[1]), z = o.e0(t[2]), w = o.e0(t[3]);
         Vector r = o.xb(x, o.j(y, z, w));
         r += o.j(x, o.xy(y, z), w);
         r += o.j(x, z, o.xy(y, w));
         r += o.ay(o.j(x, y, z), w);
         r += o.xb(z, o.j(x, y, w));
         r -= o.j(x, y, o.xy(z, w));
         r -= o.j(o.xy(x, y), z, w);
         r -= o.xb(y, o.j(x, z, w));
         r -= o.j(y, o.xy(x, z), w);
         r -= o.j(y, z, o.xy(x, w));
         return r;
       }},
      {"s12", "xyz", {p, p, p},
       [o](T t) {
         auto x = o.e0(t[0]), y = o.e0(t[1]), z = o.e0(t[2]);
         return o.j(x, y, z) + o.j(y, x, z) + o.ay(o.s(x, y), z);
       }},
      {"s23", "xyz", {p, p, p},
       [o](T t) {
         auto x = o.e0(t[0]), y = o.e0(t[1]), z = o.e0(t[2]);
         return o.j(x, y, z) + o.j(x, z, y) - o.xb(x, o.s(y, z)) + o.s(o.xy(x, y), z) + o.s(y, o.xy(x, z));
       }},
      {"symm3", "xyz", {p, p, p},
       [o](T t) {
         auto x = o.e0(t[0]), y = o.e0(t[1]), z = o.e0(t[2]);
         const Vector yz = o.xy(y, z);
         return o.s(x, yz) - o.s(yz, x);
       }},
  };
}

/// Consequences of the defining equations, checked for cross-validation.
inline std::vector<Equation> el2_implied_equations(const EL2Algebra& alg) {
  const detail::El2Eval o{alg};
  const std::size_t p = alg.n0(), q = alg.n1();
  using T = std::span<const std::size_t>;
  return {
      {"symm1", "xyz", {p, p, p},
       [o](T t) { auto x = o.e0(t[0]), y = o.e0(t[1]), z = o.e0(t[2]); return o.ay(o.s(x, y), z) - o.ay(o.s(y, x), z); }},
      {"symm2", "xyz", {p, p, p},
       [o](T t) { auto x = o.e0(t[0]), y = o.e0(t[1]), z = o.e0(t[2]); return o.xb(x, o.s(y, z)) - o.xb(x, o.s(z, y)); }},
      {"symm4", "xy", {p, p}, [o](T t) { auto x = o.e0(t[0]), y = o.e0(t[1]); return o.d(o.s(x, y)) - o.d(o.s(y, x)); }},
      {"symm5", "ax", {q, p}, [o](T t) { auto a = o.e1(t[0]), x = o.e0(t[1]); return o.s(o.d(a), x) - o.s(x, o.d(a)); }},
  };
}

/// Evaluates every defining equation on every basis tuple. The implied
/// equations and the strict-symmetry probe <x,y> = <y,x> are reported
/// separately and never affect passed().
inline CheckReport check_el2(const EL2Algebra& alg, const CheckOptions& opts = {}) {
  alg.validate();
  CheckReport r;
  r.violations = run_equations(el2_equations(alg), opts);
  r.implied = run_equations(el2_implied_equations(alg), opts);
  const detail::El2Eval o{alg};
  r.informational = run_equations(
      {{"strict_symmetry", "xy", {alg.n0(), alg.n0()},
        [o](std::span<const std::size_t> t) { auto x = o.e0(t[0]), y = o.e0(t[1]); return o.s(x, y) - o.s(y, x); }}},
      opts);
  return r;
}

inline bool is_semistrict(const EL2Algebra& e) { return e.alt.is_zero(); }
inline bool is_hemistrict(const EL2Algebra& e) { return e.jac.is_zero(); }
inline bool is_strict(const EL2Algebra& e) { return is_semistrict(e) && is_hemistrict(e); }

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

namespace detail {

/// Basis of the span of the generators in reduced row-echelon form.
inline Matrix echelon_basis(std::size_t ambient, const std::vector<Vector>& generators) {
  const auto [r, pivots] = rref(Matrix::from_columns(generators, ambient).transpose());
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < pivots.size(); ++k) cols.push_back(r.row(k));
  return Matrix::from_columns(cols, ambient);
}

inline Vector coordinates_in(const Subspace& s, const Vector& v, const char* what) {
  auto m = membership(s, v);
  if (!m.member) throw MathError(std::string(what) + ": vector leaves the subspace");
  return std::move(m.coordinates);
}

}  // namespace detail

/// Span of [x,y] + [y,x] over basis pairs.
inline Subspace leibniz_annihilator(const LeibnizAlgebraFD& g) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i; j < g.dim; ++j) gens.push_back(g.bracket(g.e(i), g.e(j)) + g.bracket(g.e(j), g.e(i)));
  return Subspace(g.dim, detail::echelon_basis(g.dim, gens));
}

/// C^0 = g, C^-1 = g^ann with d the inclusion, <x,y> = [x,y] + [y,x],
/// brackets with C^-1 by restriction, and zero Jacobiator.
inline EL2Algebra from_leibniz(const LeibnizAlgebraFD& g) {
  if (!g.is_valid()) throw MathError("from_leibniz: bracket violates the Leibniz identity");
  const Subspace ann = leibniz_annihilator(g);
  const std::size_t n = g.dim, m = ann.dim();
  EL2Algebra e(TwoTermComplex(n, m, ann.basis()));
  e.b00 = g.c;
  const std::vector<std::size_t> nm{n, m}, mn{m, n}, nn{n, n};
  e.b01 = tabulate(m, nm, [&](std::span<const std::size_t> t) {
    return detail::coordinates_in(ann, g.bracket(g.e(t[0]), ann.vector(t[1])), "from_leibniz");
  });
  e.b10 = tabulate(m, mn, [&](std::span<const std::size_t> t) {
    return detail::coordinates_in(ann, g.bracket(ann.vector(t[0]), g.e(t[1])), "from_leibniz");
  });
  e.alt = tabulate(m, nn, [&](std::span<const std::size_t> t) {
    const Vector x = g.e(t[0]), y = g.e(t[1]);
    return detail::coordinates_in(ann, g.bracket(x, y) + g.bracket(y, x), "from_leibniz");
  });
  return e;
}

/// Throws MathError unless the form k (shape [n, n]) is symmetric and
/// k([x,y],z) + k(y,[x,z]) = 0 on basis triples.
inline void require_invariant_form(const LieAlgebraFD& g, const Tensor& k) {
  if (k.shape() != std::vector<std::size_t>{g.dim, g.dim}) throw ShapeError("pairing must be n x n");
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = 0; j < g.dim; ++j)
      if (k(i, j) != k(j, i)) throw MathError("pairing is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  const Tensor form({1, g.dim, g.dim}, std::vector<Rat>(k.data().begin(), k.data().end()));
  for_each_tuple({g.dim, g.dim, g.dim}, [&](std::span<const std::size_t> t) {
    const Vector x = g.e(t[0]), y = g.e(t[1]), z = g.e(t[2]);
    if (!is_zero(evaluate(form, g.bracket(x, y), z) + evaluate(form, y, g.bracket(x, z)))) {
      std::ostringstream msg;
      msg << "pairing is not ad-invariant at (x=" << t[0] << ", y=" << t[1] << ", z=" << t[2] << ")";
      throw MathError(msg.str());
    }
  });
}

/// C^0 = g, C^-1 = k, d = 0, <x,y> = k(x,y).
inline EL2Algebra from_quadratic_lie(const LieAlgebraFD& g, const Tensor& k) {
  if (!g.is_valid()) throw MathError("from_quadratic_lie: not a Lie algebra");
  require_invariant_form(g, k);
  EL2Algebra e(TwoTermComplex(g.dim, 1));
  e.b00 = g.c;
  e.alt = Tensor({1, g.dim, g.dim}, std::vector<Rat>(k.data().begin(), k.data().end()));
  return e;
}

/// Same carrier, <x,y> = 0 and <x,y,z> = -1/2 k([x,y],z).
inline EL2Algebra string_2_algebra(const LieAlgebraFD& g, const Tensor& k) {
  if (!g.is_valid()) throw MathError("string_2_algebra: not a Lie algebra");
  require_invariant_form(g, k);
  EL2Algebra e(TwoTermComplex(g.dim, 1));
  e.b00 = g.c;
  const Tensor form({1, g.dim, g.dim}, std::vector<Rat>(k.data().begin(), k.data().end()));
  const std::vector<std::size_t> nnn{g.dim, g.dim, g.dim};
  e.jac = tabulate(1, nnn, [&](std::span<const std::size_t> t) {
    return frac(-1, 2) * evaluate(form, g.bracket(g.e(t[0]), g.e(t[1])), g.e(t[2]));
  });
  return e;
}

// ---------------------------------------------------------------------------
// The same axioms read off gamma(C) as a weak Lie 2-algebra
// ---------------------------------------------------------------------------

namespace detail {

struct CatEval {
  const EL2Algebra& e;

  Arrow id(const Vector& x) const { return identity_arrow(e.complex, x); }
  Arrow pure(const Vector& a) const { return {Vector(e.n0()), a}; }
  Arrow br(const Arrow& f, const Arrow& g) const { return functor_bracket_on_arrows(e.bracket(), f, g); }
  Vector obj(const Vector& x, const Vector& y) const { return evaluate(e.b00, x, y); }
  Vector tgt(const Arrow& f) const { return arrow_target(e.complex, f); }
  // S_{x,y} : [x,y] -> -[y,x]
  Arrow S(const Vector& x, const Vector& y) const { return {obj(x, y), -evaluate(e.alt, x, y)}; }
  // J_{x,y,z} : [x,[y,z]] -> [[x,y],z] + [y,[x,z]]
  Arrow J(const Vector& x, const Vector& y, const Vector& z) const { return {obj(x, obj(y, z)), -evaluate(e.jac, x, y, z)}; }
  // Jhat_{x,y,z} = J^-1 - 1_{[y,[x,z]]} : [[x,y],z] -> [x,[y,z]] - [y,[x,z]]
  Arrow Jhat(const Vector& x, const Vector& y, const Vector& z) const {
    const Arrow inv = inverse_arrow(e.complex, J(x, y, z));
    return inv - id(obj(y, obj(x, z)));
  }
  // g o f, with endpoint agreement left to the typing checks
  static Arrow then(const Arrow& f, const Arrow& g) { return {f.source, f.part + g.part}; }
  // parallel paths are compared by their arrow parts
  static Vector diff(const Arrow& f, const Arrow& g) { return f.part - g.part; }
  Vector e0(std::size_t i) const { return unit_vector(e.n0(), i); }
  Vector e1(std::size_t i) const { return unit_vector(e.n1(), i); }
};

}  // namespace detail

/// The defining equation each categorical check mirrors.
inline std::string categorical_mirror(const std::string& item) {
  static const std::vector<std::pair<std::string, std::string>> table{
      {"bracket_typed.left", "chain2"},  {"bracket_typed.right", "chain1"}, {"bracket_functorial", "chain3"},
      {"S_typed", "sym1"},               {"S_natural.left", "sym2"},        {"S_natural.right", "sym3"},
      {"J_typed", "Leib1"},              {"J_natural.1", "Leib2"},          {"J_natural.2", "Leib3"},
      {"J_natural.3", "Leib4"},          {"pentagon", "l2l3"},              {"S_Jhat_triangle", "s12"},
      {"S_J_square", "s23"},             {"S_triangle", "symm3"}};
  for (const auto& [k, v] : table)
    if (k == item) return v;
  return {};
}

/// Builds gamma(C) with the bracket functor, S and J, and evaluates both
/// composite paths of every typing, naturality and coherence condition on
/// basis objects and basis arrow parts.
inline CheckReport categorical_coherence_check(const EL2Algebra& alg, const CheckOptions& opts = {}) {
  alg.validate();
  const detail::CatEval c{alg};
  const std::size_t p = alg.n0(), q = alg.n1();
  using T = std::span<const std::size_t>;
  using detail::CatEval;
  std::vector<Equation> items{
      {"bracket_typed.left", "ay", {q, p},
       [c](T t) {
         const Arrow f = c.pure(c.e1(t[0]));
         const Vector y = c.e0(t[1]);
         return c.tgt(c.br(f, c.id(y))) - c.obj(c.tgt(f), y);
       }},
      {"bracket_typed.right", "xb", {p, q},
       [c](T t) {
         const Vector x = c.e0(t[0]);
         const Arrow g = c.pure(c.e1(t[1]));
         return c.tgt(c.br(c.id(x), g)) - c.obj(x, c.tgt(g));
       }},
      {"bracket_functorial", "ab", {q, q},
       [c](T t) {
         // [f,g] factored through either variable first
         const Arrow f = c.pure(c.e1(t[0])), g = c.pure(c.e1(t[1]));
         const Arrow first_g = CatEval::then(c.br(c.id(f.source), g), c.br(f, c.id(c.tgt(g))));
         const Arrow first_f = CatEval::then(c.br(f, c.id(g.source)), c.br(c.id(c.tgt(f)), g));
         return CatEval::diff(first_g, first_f);
       }},
      {"S_typed", "xy", {p, p},
       [c](T t) {
         const Vector x = c.e0(t[0]), y = c.e0(t[1]);
         return c.tgt(c.S(x, y)) + c.obj(y, x);
       }},
      {"S_natural.left", "ay", {q, p},
       [c](T t) {
         const Arrow f = c.pure(c.e1(t[0]));
         const Arrow g = c.id(c.e0(t[1]));
         const Arrow lhs = CatEval::then(c.br(f, g), c.S(c.tgt(f), c.tgt(g)));
         const Arrow rhs = CatEval::then(c.S(f.source, g.source), -c.br(g, f));
         return CatEval::diff(lhs, rhs);
       }},
      {"S_natural.right", "xb", {p, q},
       [c](T t) {
         const Arrow f = c.id(c.e0(t[0]));
         const Arrow g = c.pure(c.e1(t[1]));
         const Arrow lhs = CatEval::then(c.br(f, g), c.S(c.tgt(f), c.tgt(g)));
         const Arrow rhs = CatEval::then(c.S(f.source, g.source), -c.br(g, f));
         return CatEval::diff(lhs, rhs);
       }},
      {"J_typed", "xyz", {p, p, p},
       [c](T t) {
         const Vector x = c.e0(t[0]), y = c.e0(t[1]), z = c.e0(t[2]);
         return c.tgt(c.J(x, y, z)) - c.obj(c.obj(x, y), z) - c.obj(y, c.obj(x, z));
       }},
  };
  // naturality of J in each variable separately
  for (std::size_t slot = 0; slot < 3; ++slot) {
    const std::string args = slot == 0 ? "ayz" : slot == 1 ? "xbz" : "xyc";
    std::vector<std::size_t> dims{p, p, p};
    dims[slot] = q;
    items.push_back({"J_natural." + std::to_string(slot + 1), args, dims, [c, slot](T t) {
                       Arrow a[3];
                       for (std::size_t s = 0; s < 3; ++s) a[s] = s == slot ? c.pure(c.e1(t[s])) : c.id(c.e0(t[s]));
                       const Vector src[3] = {a[0].source, a[1].source, a[2].source};
                       const Vector dst[3] = {c.tgt(a[0]), c.tgt(a[1]), c.tgt(a[2])};
                       const Arrow lhs = CatEval::then(c.br(a[0], c.br(a[1], a[2])), c.J(dst[0], dst[1], dst[2]));
                       const Arrow rhs = CatEval::then(c.J(src[0], src[1], src[2]),
                                                       c.br(c.br(a[0], a[1]), a[2]) + c.br(a[1], c.br(a[0], a[2])));
                       return CatEval::diff(lhs, rhs);
                     }});
  }
  items.push_back({"pentagon", "xyzw", {p, p, p, p}, [c](T t) {
                     const Vector x = c.e0(t[0]), y = c.e0(t[1]), z = c.e0(t[2]), w = c.e0(t[3]);
                     auto B = [&c](const Vector& u, const Vector& v) { return c.obj(u, v); };
                     // left path
                     const Arrow l1 = c.br(c.id(x), c.J(y, z, w));
                     const Arrow l2 = c.J(x, B(y, z), w) + c.J(x, z, B(y, w));
                     const Arrow l3 = c.br(c.J(x, y, z), c.id(w)) + c.id(B(B(y, z), B(x, w))) + c.id(B(B(x, z), B(y, w))) +
                                      c.br(c.id(z), c.J(x, y, w));
                     // right path
                     const Arrow r1 = c.J(x, y, B(z, w));
                     const Arrow r2 = c.J(B(x, y), z, w) + c.br(c.id(y), c.J(x, z, w));
                     const Arrow r3 = c.id(B(B(B(x, y), z), w)) + c.id(B(z, B(B(x, y), w))) + c.J(y, B(x, z), w) +
                                      c.J(y, z, B(x, w));
                     return CatEval::diff(CatEval::then(CatEval::then(l1, l2), l3), CatEval::then(CatEval::then(r1, r2), r3));
                   }});
  items.push_back({"S_Jhat_triangle", "xyz", {p, p, p}, [c](T t) {
                     const Vector x = c.e0(t[0]), y = c.e0(t[1]), z = c.e0(t[2]);
                     const Arrow path = CatEval::then(c.br(c.S(x, y), c.id(z)), -c.Jhat(y, x, z));
                     return CatEval::diff(c.Jhat(x, y, z), path);
                   }});
  items.push_back({"S_J_square", "xyz", {p, p, p}, [c](T t) {
                     const Vector x = c.e0(t[0]), y = c.e0(t[1]), z = c.e0(t[2]);
                     const Arrow top = CatEval::then(c.br(c.id(x), c.S(y, z)), -c.J(x, z, y));
                     const Arrow bottom = CatEval::then(c.J(x, y, z), c.S(c.obj(x, y), z) + c.S(y, c.obj(x, z)));
                     return CatEval::diff(top, bottom);
                   }});
  items.push_back({"S_triangle", "xyz", {p, p, p}, [c](T t) {
                     const Vector x = c.e0(t[0]), yz = c.obj(c.e0(t[1]), c.e0(t[2]));
                     return CatEval::diff(CatEval::then(c.S(x, yz), -c.S(yz, x)), c.id(c.obj(x, yz)));
                   }});
  CheckReport r;
  r.violations = run_equations(items, opts);
  return r;
}

}  // namespace lie2
