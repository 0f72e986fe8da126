#pragma once

// Morphisms (f0, f1, f2) and 2-morphisms theta of 2-term EL-infinity
// algebras. A 2-morphism theta : f => g is the natural transformation with
// components (f0 x, -theta x), so g0 - f0 = -d' theta and g1 - f1 = -theta d.

#include <optional>
#include <string>
#include <vector>

#include "lie2/dkcore.hpp"
#include "lie2/el2.hpp"

namespace lie2 {

struct ELMorphism {
  EL2Algebra src, dst;
  ChainMap f;
  Tensor f2;  // [n1', n0, n0]

  void validate() const {
    src.validate();
    dst.validate();
    if (!has_shape(f, src.complex, dst.complex)) throw ShapeError("morphism: chain map has the wrong shape");
    if (f2.shape() != std::vector<std::size_t>{dst.n1(), src.n0(), src.n0()})
      throw ShapeError("morphism: f2 must be n1' x n0 x n0");
  }

  friend bool operator==(const ELMorphism&, const ELMorphism&) = default;
};

struct ELTwoMorphism {
  ELMorphism src, dst;
  ChainHomotopy theta;  // C0 -> C'-1

  void validate() const {
    src.validate();
    dst.validate();
    if (!(src.src == dst.src) || !(src.dst == dst.dst)) throw MathError("2-morphism: morphisms have different endpoints");
    if (theta.h.rows() != src.dst.n1() || theta.h.cols() != src.src.n0()) throw ShapeError("2-morphism: theta must be n1' x n0");
  }

  friend bool operator==(const ELTwoMorphism&, const ELTwoMorphism&) = default;
};

inline ELMorphism identity_morphism(const EL2Algebra& e) {
  return {e, e, identity_chain_map(e.complex), Tensor({e.n1(), e.n0(), e.n0()})};
}

namespace detail {

struct MorphEval {
  const ELMorphism& m;
  El2Eval s{m.src}, t{m.dst};

  Vector f0(const Vector& x) const { return m.f.f0 * x; }
  Vector f1(const Vector& a) const { return m.f.f1 * a; }
  Vector f2(const Vector& x, const Vector& y) const { return evaluate(m.f2, x, y); }
};

}  // namespace detail

inline std::vector<Equation> morphism_equations(const ELMorphism& m) {
  const std::size_t p = m.src.n0(), q = m.src.n1();
  using T = std::span<const std::size_t>;
  auto ev = [&m] { return detail::MorphEval{m}; };
  return {
      {"chain", "a", {q},
       [ev](T t) {
         const auto o = ev();
         const Vector a = o.s.e1(t[0]);
         return o.f0(o.s.d(a)) - o.t.d(o.f1(a));
       }},
      {"hom1", "xy", {p, p},
       [ev](T t) {
         const auto o = ev();
         const Vector x = o.s.e0(t[0]), y = o.s.e0(t[1]);
         return o.t.xy(o.f0(x), o.f0(y)) - o.f0(o.s.xy(x, y)) - o.t.d(o.f2(x, y));
       }},
      {"hom2", "ay", {q, p},
       [ev](T t) {
         const auto o = ev();
         const Vector a = o.s.e1(t[0]), y = o.s.e0(t[1]);
         return o.t.ay(o.f1(a), o.f0(y)) - o.f1(o.s.ay(a, y)) - o.f2(o.s.d(a), y);
       }},
      {"hom3", "xb", {p, q},
       [ev](T t) {
         const auto o = ev();
         const Vector x = o.s.e0(t[0]), b = o.s.e1(t[1]);
         return o.t.xb(o.f0(x), o.f1(b)) - o.f1(o.s.xb(x, b)) - o.f2(x, o.s.d(b));
       }},
      {"f21", "xy", {p, p},
       [ev](T t) {
         const auto o = ev();
         const Vector x = o.s.e0(t[0]), y = o.s.e0(t[1]);
         return o.t.s(o.f0(x), o.f0(y)) - o.f1(o.s.s(x, y)) - o.f2(x, y) - o.f2(y, x);
       }},
      {"f22", "xyz", {p, p, p},
       [ev](T t) {
         const auto o = ev();
         const Vector x = o.s.e0(t[0]), y = o.s.e0(t[1]), z = o.s.e0(t[2]);
         const Vector fx = o.f0(x), fy = o.f0(y), fz = o.f0(z);
         Vector r = o.t.j(fx, fy, fz) - o.f1(o.s.j(x, y, z));
         r -= o.t.xb(fx, o.f2(y, z));
         r += o.t.xb(fy, o.f2(x, z));
         r += o.t.ay(o.f2(x, y), fz);
         r += o.f2(o.s.xy(x, y), z);
         r += o.f2(y, o.s.xy(x, z));
         r -= o.f2(x, o.s.xy(y, z));
         return r;
       }},
  };
}

/// Chain-map condition, the three homotopy conditions for f2, and the two
/// coherence equations, on every basis tuple.
inline CheckReport check_morphism(const ELMorphism& m, const CheckOptions& opts = {}) {
  m.validate();
  CheckReport r;
  r.violations = run_equations(morphism_equations(m), opts);
  return r;
}

/// (g o f)^2(x,y) = g2(f0 x, f0 y) + g1 f2(x,y).
inline ELMorphism compose(const ELMorphism& g, const ELMorphism& f) {
  f.validate();
  g.validate();
  if (!(f.dst == g.src)) throw MathError("compose: target of f is not the source of g");
  ELMorphism out{f.src, g.dst, compose(g.f, f.f), contract(contract(g.f2, 1, f.f.f0.transpose()), 2, f.f.f0.transpose())};
  out.f2 = out.f2 + contract(f.f2, 0, g.f.f1);
  return out;
}

inline bool is_equivalence(const ELMorphism& m) {
  m.validate();
  return is_quasi_iso(m.src.complex, m.dst.complex, m.f);
}

// ---------------------------------------------------------------------------
// 2-morphisms
// ---------------------------------------------------------------------------

inline std::vector<Equation> two_morphism_equations(const ELTwoMorphism& tm) {
  const ELMorphism &f = tm.src, &g = tm.dst;
  const std::size_t p = f.src.n0(), q = f.src.n1();
  using T = std::span<const std::size_t>;
  const detail::El2Eval s{f.src}, t{f.dst};
  const Matrix& th = tm.theta.h;
  return {
      {"theta0", "x", {p},
       [&, s, t](T i) {
         const Vector x = s.e0(i[0]);
         return g.f.f0 * x - f.f.f0 * x + t.d(th * x);
       }},
      {"theta1", "a", {q},
       [&, s](T i) {
         const Vector a = s.e1(i[0]);
         return g.f.f1 * a - f.f.f1 * a + th * s.d(a);
       }},
      {"theta2", "xy", {p, p},
       [&, s, t](T i) {
         const Vector x = s.e0(i[0]), y = s.e0(i[1]);
         const Vector tx = th * x, ty = th * y;
         Vector r = evaluate(f.f2, x, y) - evaluate(g.f2, x, y);
         r -= t.xb(f.f.f0 * x, ty);
         r -= t.ay(tx, f.f.f0 * y);
         r += th * s.xy(x, y);
         r += t.xb(t.d(tx), ty);
         return r;
       }},
  };
}

inline CheckReport check_2morphism(const ELTwoMorphism& tm, const CheckOptions& opts = {}) {
  tm.validate();
  CheckReport r;
  r.violations = run_equations(two_morphism_equations(tm), opts);
  return r;
}

inline ELTwoMorphism identity_2morphism(const ELMorphism& m) {
  return {m, m, {Matrix(m.dst.n1(), m.src.n0())}};
}

/// t2 . t1 for t1 : f => g and t2 : g => h.
inline ELTwoMorphism vertical_compose(const ELTwoMorphism& t2, const ELTwoMorphism& t1) {
  if (!(t1.dst == t2.src)) throw MathError("vertical_compose: 2-morphisms are not composable");
  return {t1.src, t2.dst, {t1.theta.h + t2.theta.h}};
}

inline ELTwoMorphism inverse_2morphism(const ELTwoMorphism& t) { return {t.dst, t.src, {-t.theta.h}}; }

/// For tF : F => G (L -> L') and tG : H => K (L' -> L''), the composite
/// H F => K G with theta(x) = psi(f0 x) + k1 phi(x).
inline ELTwoMorphism horizontal_compose(const ELTwoMorphism& tG, const ELTwoMorphism& tF) {
  if (!(tF.src.dst == tG.src.src)) throw MathError("horizontal_compose: 2-morphisms are not composable");
  return {compose(tG.src, tF.src), compose(tG.dst, tF.dst), {tG.theta.h * tF.src.f.f0 + tG.dst.f.f1 * tF.theta.h}};
}

/// Whiskering as horizontal composition with an identity 2-morphism.
inline ELTwoMorphism whisker_left(const ELMorphism& h, const ELTwoMorphism& t) {
  return horizontal_compose(identity_2morphism(h), t);
}
inline ELTwoMorphism whisker_right(const ELTwoMorphism& t, const ELMorphism& f) {
  return horizontal_compose(t, identity_2morphism(f));
}

// ---------------------------------------------------------------------------
// Solving for f2
// ---------------------------------------------------------------------------

/// Every residual of check_morphism (zero or not) stacked in check order.
inline Vector morphism_residual_vector(const ELMorphism& m) { return stacked_residuals(morphism_equations(m)); }

/// Some f2 making (f0, f1, f2) a morphism, or nothing when none exists. The
/// residual is affine in f2, so it is sampled at 0 and at each unit tensor.
inline std::optional<ELMorphism> solve_f2(const EL2Algebra& src, const EL2Algebra& dst, const ChainMap& f) {
  ELMorphism m{src, dst, f, Tensor({dst.n1(), src.n0(), src.n0()})};
  m.validate();
  const Vector base = morphism_residual_vector(m);
  const std::size_t unknowns = m.f2.size();
  std::vector<Vector> columns;
  columns.reserve(unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    m.f2.data()[k] = 1;
    columns.push_back(morphism_residual_vector(m) - base);
    m.f2.data()[k] = 0;
  }
  const auto x = solve(Matrix::from_columns(columns, base.size()), -base);
  if (!x) return std::nullopt;
  std::copy(x->begin(), x->end(), m.f2.data().begin());
  return m;
}

// ---------------------------------------------------------------------------
// Building morphisms
// ---------------------------------------------------------------------------

/// The structure e' on the complex phi(C) for which (phi, f2) : e -> e' is a
/// morphism; phi must be invertible in both degrees.
inline ELMorphism transport_structure(const EL2Algebra& e, const ChainMap& phi, const Tensor& f2) {
  e.validate();
  const auto p0 = inverse(phi.f0), p1 = inverse(phi.f1);
  if (!p0 || !p1) throw MathError("transport_structure: chain map is not invertible");
  const std::size_t n0 = e.n0(), n1 = e.n1();
  EL2Algebra out(TwoTermComplex(n0, n1, phi.f0 * e.d() * *p1));
  const detail::El2Eval s{e};
  auto t = [&f2](const Vector& x, const Vector& y) { return evaluate(f2, x, y); };
  auto x0 = [&](std::size_t i) { return p0->column(i); };
  auto x1 = [&](std::size_t i) { return p1->column(i); };
  using T = std::span<const std::size_t>;
  const std::vector<std::size_t> nn{n0, n0}, nm{n0, n1}, mn{n1, n0}, nnn{n0, n0, n0};
  out.b00 = tabulate(n0, nn, [&](T i) { return phi.f0 * s.xy(x0(i[0]), x0(i[1])) + out.d() * t(x0(i[0]), x0(i[1])); });
  out.b01 = tabulate(n1, nm, [&](T i) { return phi.f1 * s.xb(x0(i[0]), x1(i[1])) + t(x0(i[0]), s.d(x1(i[1]))); });
  out.b10 = tabulate(n1, mn, [&](T i) { return phi.f1 * s.ay(x1(i[0]), x0(i[1])) + t(s.d(x1(i[0])), x0(i[1])); });
  out.alt = tabulate(n1, nn, [&](T i) {
    const Vector x = x0(i[0]), y = x0(i[1]);
    return phi.f1 * s.s(x, y) + t(x, y) + t(y, x);
  });
  const detail::El2Eval o{out};
  out.jac = tabulate(n1, nnn, [&](T i) {
    const Vector x = x0(i[0]), y = x0(i[1]), z = x0(i[2]);
    Vector r = phi.f1 * s.j(x, y, z);
    r += o.xb(o.e0(i[0]), t(y, z));
    r -= o.xb(o.e0(i[1]), t(x, z));
    r -= o.ay(t(x, y), o.e0(i[2]));
    r -= t(s.xy(x, y), z);
    r -= t(y, s.xy(x, z));
    r += t(x, s.xy(y, z));
    return r;
  });
  return {e, std::move(out), phi, f2};
}

/// The 2-morphism theta : f => g, where g is the morphism determined by f
/// and an arbitrary theta : C0 -> C'-1.
inline ELTwoMorphism homotopic_morphism(const ELMorphism& f, const Matrix& theta) {
  f.validate();
  if (theta.rows() != f.dst.n1() || theta.cols() != f.src.n0()) throw ShapeError("homotopic_morphism: theta must be n1' x n0");
  const detail::El2Eval s{f.src}, t{f.dst};
  ELMorphism g{f.src, f.dst, {f.f.f0 - f.dst.d() * theta, f.f.f1 - theta * f.src.d()}, f.f2};
  const std::vector<std::size_t> nn{f.src.n0(), f.src.n0()};
  g.f2 = f.f2 - tabulate(f.dst.n1(), nn, [&](std::span<const std::size_t> i) {
           const Vector x = s.e0(i[0]), y = s.e0(i[1]);
           const Vector tx = theta * x, ty = theta * y;
           return t.xb(f.f.f0 * x, ty) + t.ay(tx, f.f.f0 * y) - theta * s.xy(x, y) - t.xb(t.d(tx), ty);
         });
  return {f, std::move(g), {theta}};
}

}  // namespace lie2
