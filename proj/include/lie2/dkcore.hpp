#pragma once

// Two-term complexes C^-1 --d--> C^0, linear categories, the functors
// gamma and normalize between them, and arrow calculus in gamma(C).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lie2/exactla.hpp"
#include "lie2/report.hpp"

namespace lie2 {

struct TwoTermComplex {
  std::size_t n0 = 0;  // dim C^0
  std::size_t n1 = 0;  // dim C^-1
  Matrix d;            // n0 x n1

  TwoTermComplex() : d(0, 0) {}
  TwoTermComplex(std::size_t n0_, std::size_t n1_) : n0(n0_), n1(n1_), d(n0_, n1_) {}
  TwoTermComplex(std::size_t n0_, std::size_t n1_, Matrix d_) : n0(n0_), n1(n1_), d(std::move(d_)) { validate(); }

  void validate() const {
    if (d.rows() != n0 || d.cols() != n1) throw ShapeError("complex: d must be n0 x n1");
  }
  bool skeletal() const { return d.is_zero(); }
  std::size_t h0_dim() const { return n0 - rank(d); }
  std::size_t h1_dim() const { return n1 - rank(d); }

  friend bool operator==(const TwoTermComplex&, const TwoTermComplex&) = default;
};

/// A category internal to vector spaces: objects V0, arrows V1, linear
/// source, target and identity maps. Composition is forced by linearity:
/// g o f = f + g - 1(t f).
struct LinearCategory {
  std::size_t objects_dim = 0;
  std::size_t arrows_dim = 0;
  Matrix source;    // objects_dim x arrows_dim
  Matrix target;    // objects_dim x arrows_dim
  Matrix identity;  // arrows_dim x objects_dim

  bool is_valid() const {
    if (source.rows() != objects_dim || source.cols() != arrows_dim) return false;
    if (target.rows() != objects_dim || target.cols() != arrows_dim) return false;
    if (identity.rows() != arrows_dim || identity.cols() != objects_dim) return false;
    const Matrix one = Matrix::identity(objects_dim);
    return source * identity == one && target * identity == one;
  }

  Vector compose(const Vector& g, const Vector& f) const {
    if (source * g != target * f) throw MathError("compose: target of f is not the source of g");
    return f + g - identity * (target * f);
  }
};

/// gamma(C): arrows are pairs (x, a) laid out as [x ; a]; s(x,a) = x,
/// t(x,a) = x + da, 1_x = (x, 0).
inline LinearCategory gamma(const TwoTermComplex& c) {
  c.validate();
  LinearCategory v;
  v.objects_dim = c.n0;
  v.arrows_dim = c.n0 + c.n1;
  v.source = hstack(Matrix::identity(c.n0), Matrix(c.n0, c.n1));
  v.target = hstack(Matrix::identity(c.n0), c.d);
  v.identity = vstack(Matrix::identity(c.n0), Matrix(c.n1, c.n0));
  return v;
}

/// Arrow parts of N(V) in ker(s), as columns of the arrow space.
inline Subspace arrow_parts(const LinearCategory& v) { return kernel_basis(v.source); }

/// N(V): C^0 = V0, C^-1 = ker s, d = t restricted to ker s.
inline TwoTermComplex normalize(const LinearCategory& v) {
  if (!v.is_valid()) throw ShapeError("normalize: structure maps are inconsistent");
  const Subspace k = arrow_parts(v);
  return TwoTermComplex(v.objects_dim, k.dim(), v.target * k.basis());
}

/// The comparison gamma(N(V)) -> V on arrows: (x, a) |-> 1_x + a. It is an
/// isomorphism of linear categories; objects map by the identity.
inline Matrix gamma_normalize_iso(const LinearCategory& v) { return hstack(v.identity, arrow_parts(v).basis()); }

/// True when m (arrows of u -> arrows of w) together with the identity on
/// objects is an invertible functor.
inline bool is_category_iso(const LinearCategory& u, const LinearCategory& w, const Matrix& m) {
  if (u.objects_dim != w.objects_dim || m.rows() != w.arrows_dim || m.cols() != u.arrows_dim) return false;
  if (!inverse(m)) return false;
  return w.source * m == u.source && w.target * m == u.target && m * u.identity == w.identity;
}

// ---------------------------------------------------------------------------
// Arrow calculus in gamma(C)
// ---------------------------------------------------------------------------

struct Arrow {
  Vector source;  // x in C^0
  Vector part;    // a in C^-1

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

inline void require_arrow(const TwoTermComplex& c, const Arrow& f) {
  if (f.source.size() != c.n0 || f.part.size() != c.n1) throw ShapeError("arrow does not match the complex");
}

inline Vector arrow_target(const TwoTermComplex& c, const Arrow& f) {
  require_arrow(c, f);
  return f.source + c.d * f.part;
}

inline Arrow identity_arrow(const TwoTermComplex& c, const Vector& x) {
  if (x.size() != c.n0) throw ShapeError("identity_arrow: object has wrong length");
  return {x, Vector(c.n1)};
}

/// g o f; arrow parts add.
inline Arrow compose_arrows(const TwoTermComplex& c, const Arrow& g, const Arrow& f) {
  require_arrow(c, g);
  if (arrow_target(c, f) != g.source) throw MathError("compose_arrows: target of f is not the source of g");
  return {f.source, f.part + g.part};
}

inline Arrow inverse_arrow(const TwoTermComplex& c, const Arrow& f) { return {arrow_target(c, f), -f.part}; }

inline Arrow operator+(const Arrow& f, const Arrow& g) { return {f.source + g.source, f.part + g.part}; }
inline Arrow operator-(const Arrow& f) { return {-f.source, -f.part}; }
inline Arrow operator-(const Arrow& f, const Arrow& g) { return f + (-g); }
inline Arrow operator*(const Rat& s, const Arrow& f) { return {s * f.source, s * f.part}; }

/// The bracket components that define a bilinear functor on gamma(C).
struct BracketView {
  const TwoTermComplex& complex;
  const Tensor& b00;  // C0 x C0 -> C0
  const Tensor& b01;  // C0 x C-1 -> C-1
  const Tensor& b10;  // C-1 x C0 -> C-1
};

/// Derived bracket on C^-1: [a,b] = [da,b].
inline Vector derived_bracket(const BracketView& br, const Vector& a, const Vector& b) {
  return evaluate(br.b01, br.complex.d * a, b);
}

/// ([x,y], [x,b] + [a,y] + [a,b]) for arrows (x,a) and (y,b).
inline Arrow functor_bracket_on_arrows(const BracketView& br, const Arrow& f, const Arrow& g) {
  require_arrow(br.complex, f);
  require_arrow(br.complex, g);
  Vector part = evaluate(br.b01, f.source, g.part);
  part += evaluate(br.b10, f.part, g.source);
  part += derived_bracket(br, f.part, g.part);
  return {evaluate(br.b00, f.source, g.source), std::move(part)};
}

/// The crossed-module identities on basis elements:
///   d[x,b] = [x,db], d[a,y] = [da,y], [da,b] = [a,db], d[a,b] = [da,db].
inline CheckReport crossed_module_report(const BracketView& br, const CheckOptions& opts = {}) {
  const auto& c = br.complex;
  const std::size_t n0 = c.n0, n1 = c.n1;
  auto e0 = [n0](std::size_t i) { return unit_vector(n0, i); };
  auto e1 = [n1](std::size_t i) { return unit_vector(n1, i); };
  std::vector<Equation> eqs{
      {"cm1", "xb", {n0, n1},
       [&](std::span<const std::size_t> t) {
         return c.d * evaluate(br.b01, e0(t[0]), e1(t[1])) - evaluate(br.b00, e0(t[0]), c.d * e1(t[1]));
       }},
      {"cm2", "ay", {n1, n0},
       [&](std::span<const std::size_t> t) {
         return c.d * evaluate(br.b10, e1(t[0]), e0(t[1])) - evaluate(br.b00, c.d * e1(t[0]), e0(t[1]));
       }},
      {"cm3", "ab", {n1, n1},
       [&](std::span<const std::size_t> t) {
         return evaluate(br.b01, c.d * e1(t[0]), e1(t[1])) - evaluate(br.b10, e1(t[0]), c.d * e1(t[1]));
       }},
      {"cm4", "ab", {n1, n1},
       [&](std::span<const std::size_t> t) {
         return c.d * derived_bracket(br, e1(t[0]), e1(t[1])) - evaluate(br.b00, c.d * e1(t[0]), c.d * e1(t[1]));
       }},
  };
  CheckReport r;
  r.violations = run_equations(eqs, opts);
  return r;
}

// ---------------------------------------------------------------------------
// Chain maps, homotopies, Hodge decomposition
// ---------------------------------------------------------------------------

struct ChainMap {
  Matrix f0;  // C0 -> C'0
  Matrix f1;  // C-1 -> C'-1

  friend bool operator==(const ChainMap&, const ChainMap&) = default;
};

struct ChainHomotopy {
  Matrix h;  // C0 -> C'-1

  friend bool operator==(const ChainHomotopy&, const ChainHomotopy&) = default;
};

inline ChainMap identity_chain_map(const TwoTermComplex& c) { return {Matrix::identity(c.n0), Matrix::identity(c.n1)}; }

inline ChainMap compose(const ChainMap& g, const ChainMap& f) { return {g.f0 * f.f0, g.f1 * f.f1}; }

inline bool has_shape(const ChainMap& f, const TwoTermComplex& src, const TwoTermComplex& dst) {
  return f.f0.rows() == dst.n0 && f.f0.cols() == src.n0 && f.f1.rows() == dst.n1 && f.f1.cols() == src.n1;
}

inline bool is_chain_map(const TwoTermComplex& src, const TwoTermComplex& dst, const ChainMap& f) {
  return has_shape(f, src, dst) && f.f0 * src.d == dst.d * f.f1;
}

/// True iff f induces isomorphisms on H^0 = C0 / im d and H^-1 = ker d.
inline bool is_quasi_iso(const TwoTermComplex& src, const TwoTermComplex& dst, const ChainMap& f) {
  if (!is_chain_map(src, dst, f)) throw MathError("is_quasi_iso: not a chain map");
  const Subspace k = kernel_basis(src.d), k2 = kernel_basis(dst.d);
  if (k.dim() != k2.dim() || rank(f.f1 * k.basis()) != k.dim()) return false;
  const std::size_t h0 = src.h0_dim(), h0_dst = dst.h0_dim();
  if (h0 != h0_dst) return false;
  // rank of the induced map on H^0
  return rank(hstack(dst.d, f.f0)) - rank(dst.d) == h0;
}

struct HodgeDecomposition {
  TwoTermComplex skeletal;  // d = 0
  ChainMap i;               // skeletal -> C
  ChainMap p;               // C -> skeletal
  ChainHomotopy h;          // C0 -> C-1
};

/// Splits C into its cohomology and a contractible part using the pivot
/// columns of d. Satisfies p i = 1, 1 - i0 p0 = d h, 1 - i1 p1 = h d.
inline HodgeDecomposition hodge_decompose(const TwoTermComplex& c) {
  c.validate();
  const auto pivots = rref(c.d).pivots;
  const std::size_t r = pivots.size();
  const Matrix b = select_columns(c.d, pivots);

  // complement of im d in C0: unit vectors extending the pivot columns
  std::vector<Vector> ext;
  for (auto q : rref(hstack(b, Matrix::identity(c.n0))).pivots)
    if (q >= r) ext.push_back(unit_vector(c.n0, q - r));
  const Matrix e = Matrix::from_columns(ext, c.n0);
  const Matrix tinv = *inverse(hstack(b, e));
  std::vector<std::size_t> first(r), last(ext.size());
  for (std::size_t k = 0; k < r; ++k) first[k] = k;
  for (std::size_t k = 0; k < ext.size(); ++k) last[k] = r + k;

  std::vector<Vector> pivot_units;
  for (auto p : pivots) pivot_units.push_back(unit_vector(c.n1, p));
  const Matrix s = Matrix::from_columns(pivot_units, c.n1);
  const Matrix kb = kernel_basis(c.d).basis();
  const Matrix kinv = *inverse(hstack(kb, s));
  std::vector<std::size_t> kernel_rows(kb.cols());
  for (std::size_t k = 0; k < kb.cols(); ++k) kernel_rows[k] = k;

  HodgeDecomposition out;
  out.skeletal = TwoTermComplex(ext.size(), kb.cols());
  out.i = {e, kb};
  out.p = {select_rows(tinv, last), select_rows(kinv, kernel_rows)};
  out.h = {s * select_rows(tinv, first)};
  return out;
}

}  // namespace lie2
