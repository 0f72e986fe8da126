#pragma once

// Skeletal classification: the cocycle pairs (s, j) of a Lie algebra with a
// representation, their coboundaries, HL3 = ZL3 / BL3, Chevalley-Eilenberg
// H3, the comparison map ss, and transfer of a structure to a skeletal model.

#include <optional>
#include <vector>

#include "lie2/morph.hpp"
#include "lie2/skew.hpp"

namespace lie2 {

struct CocyclePair {
  Tensor s;  // [m, n, n]
  Tensor j;  // [m, n, n, n]

  friend bool operator==(const CocyclePair&, const CocyclePair&) = default;
};

inline CocyclePair zero_pair(const RepresentationFD& m) {
  const std::size_t n = m.g.dim, k = m.dim_m;
  return {Tensor({k, n, n}), Tensor({k, n, n, n})};
}

inline void require_pair_shape(const RepresentationFD& m, const CocyclePair& p) {
  const std::size_t n = m.g.dim, k = m.dim_m;
  if (p.s.shape() != std::vector<std::size_t>{k, n, n}) throw ShapeError("cocycle pair: s must be m x n x n");
  if (p.j.shape() != std::vector<std::size_t>{k, n, n, n}) throw ShapeError("cocycle pair: j must be m x n x n x n");
}

/// s-block, then j-block, each in tensor storage order.
inline Vector flatten(const CocyclePair& p) {
  Vector out(p.s.data().begin(), p.s.data().end());
  out.insert(out.end(), p.j.data().begin(), p.j.data().end());
  return out;
}

inline CocyclePair unflatten(const RepresentationFD& m, const Vector& v) {
  CocyclePair p = zero_pair(m);
  if (v.size() != p.s.size() + p.j.size()) throw ShapeError("unflatten: wrong coordinate count");
  std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(p.s.size()), p.s.data().begin());
  std::copy(v.begin() + static_cast<std::ptrdiff_t>(p.s.size()), v.end(), p.j.data().begin());
  return p;
}

inline CocyclePair operator+(const CocyclePair& a, const CocyclePair& b) { return {a.s + b.s, a.j + b.j}; }
inline CocyclePair operator-(const CocyclePair& a, const CocyclePair& b) { return {a.s - b.s, a.j - b.j}; }
inline CocyclePair operator*(const Rat& c, const CocyclePair& a) { return {c * a.s, c * a.j}; }

// ---------------------------------------------------------------------------
// Cocycles and coboundaries
// ---------------------------------------------------------------------------

namespace detail {

struct PairEval {
  const RepresentationFD& m;
  const CocyclePair& p;

  Vector br(const Vector& x, const Vector& y) const { return m.g.bracket(x, y); }
  Vector act(const Vector& x, const Vector& v) const { return m.act(x, v); }
  Vector s(const Vector& x, const Vector& y) const { return evaluate(p.s, x, y); }
  Vector j(const Vector& x, const Vector& y, const Vector& z) const { return evaluate(p.j, x, y, z); }
  Vector e(std::size_t i) const { return m.g.e(i); }
};

}  // namespace detail

inline std::vector<Equation> cocycle_equations(const RepresentationFD& m, const CocyclePair& p) {
  require_pair_shape(m, p);
  const std::size_t n = m.g.dim;
  const detail::PairEval o{m, p};
  using T = std::span<const std::size_t>;
  return {
      {"cocycle1", "xyzw", {n, n, n, n},
       [o](T t) {
         const Vector x = o.e(t[0]), y = o.e(t[1]), z = o.e(t[2]), w = o.e(t[3]);
         Vector r = o.act(x, o.j(y, z, w)) - o.act(y, o.j(x, z, w)) + o.act(z, o.j(x, y, w)) - o.act(w, o.j(x, y, z));
         r -= o.j(o.br(x, y), z, w);
         r -= o.j(y, o.br(x, z), w);
         r -= o.j(y, z, o.br(x, w));
         r += o.j(x, o.br(y, z), w);
         r += o.j(x, z, o.br(y, w));
         r -= o.j(x, y, o.br(z, w));
         return r;
       }},
      {"cocycle2", "xyz", {n, n, n},
       [o](T t) {
         const Vector x = o.e(t[0]), y = o.e(t[1]), z = o.e(t[2]);
         return o.j(x, y, z) + o.j(y, x, z) - o.act(z, o.s(x, y));
       }},
      {"cocycle3", "xyz", {n, n, n},
       [o](T t) {
         const Vector x = o.e(t[0]), y = o.e(t[1]), z = o.e(t[2]);
         return o.j(x, y, z) + o.j(x, z, y) - o.act(x, o.s(y, z)) + o.s(o.br(x, y), z) + o.s(y, o.br(x, z));
       }},
      {"cocycle4", "xyz", {n, n, n},
       [o](T t) {
         const Vector x = o.e(t[0]), y = o.e(t[1]), z = o.e(t[2]);
         return o.s(o.br(x, y), z) - o.s(z, o.br(x, y));
       }},
  };
}

inline CheckReport cocycle_report(const RepresentationFD& m, const CocyclePair& p, const CheckOptions& opts = {}) {
  CheckReport r;
  r.violations = run_equations(cocycle_equations(m, p), opts);
  return r;
}

inline bool is_cocycle(const RepresentationFD& m, const CocyclePair& p) { return cocycle_report(m, p).passed(); }

/// The pair (s_f, j_f) by which (1, f) shifts a skeletal structure.
inline CocyclePair coboundary(const RepresentationFD& m, const Tensor& f) {
  const std::size_t n = m.g.dim, k = m.dim_m;
  if (f.shape() != std::vector<std::size_t>{k, n, n}) throw ShapeError("coboundary: f must be m x n x n");
  const CocyclePair fp{f, Tensor({k, n, n, n})};
  const detail::PairEval o{m, fp};
  using T = std::span<const std::size_t>;
  CocyclePair out;
  out.s = tabulate(k, {n, n}, [&](T t) { return o.s(o.e(t[0]), o.e(t[1])) + o.s(o.e(t[1]), o.e(t[0])); });
  out.j = tabulate(k, {n, n, n}, [&](T t) {
    const Vector x = o.e(t[0]), y = o.e(t[1]), z = o.e(t[2]);
    // [f(x,y), z] = -z.f(x,y)
    Vector r = o.act(x, o.s(y, z)) - o.act(y, o.s(x, z)) + o.act(z, o.s(x, y));
    r -= o.s(o.br(x, y), z);
    r -= o.s(y, o.br(x, z));
    r += o.s(x, o.br(y, z));
    return r;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Quotient spaces
// ---------------------------------------------------------------------------

/// Z / B with representatives extending a basis of B.
struct QuotientSpace {
  Subspace Z, B;
  std::size_t dim = 0;
  std::vector<Vector> representatives;

  /// Coordinates of the class of v in the representatives, or nothing when
  /// v is not in Z.
  std::optional<Vector> class_of(const Vector& v) const {
    if (!membership(Z, v).member) return std::nullopt;
    Matrix basis = B.basis();
    if (dim > 0) basis = hstack(basis, Matrix::from_columns(representatives, Z.ambient_dim()));
    const auto x = solve(basis, v);
    return Vector(x->begin() + static_cast<std::ptrdiff_t>(B.dim()), x->end());
  }
};

inline QuotientSpace quotient_space(Subspace z, Subspace b) {
  const Quotient q = quotient(z, b);
  return {std::move(z), std::move(b), q.dim, q.representatives};
}

struct CohomologySpace : QuotientSpace {
  std::vector<CocyclePair> pairs;  // representatives as (s, j)
};

namespace detail {

/// Matrix whose k-th column is fn(k-th unit vector) for a linear fn.
template <class F>
Matrix linear_map_matrix(std::size_t in_dim, std::size_t out_dim, F&& fn) {
  std::vector<Vector> cols;
  cols.reserve(in_dim);
  for (std::size_t k = 0; k < in_dim; ++k) cols.push_back(fn(unit_vector(in_dim, k)));
  return Matrix::from_columns(cols, out_dim);
}

inline std::size_t pair_size(const RepresentationFD& m) {
  const std::size_t n = m.g.dim;
  return m.dim_m * (n * n + n * n * n);
}

inline std::size_t cocycle_rows(const RepresentationFD& m) {
  const std::size_t n = m.g.dim;
  return m.dim_m * (n * n * n * n + 3 * n * n * n);
}

}  // namespace detail

inline Subspace zl3(const RepresentationFD& m) {
  const Matrix a = detail::linear_map_matrix(detail::pair_size(m), detail::cocycle_rows(m), [&](const Vector& v) {
    return stacked_residuals(cocycle_equations(m, unflatten(m, v)));
  });
  return kernel_basis(a);
}

inline Matrix coboundary_matrix(const RepresentationFD& m) {
  const std::size_t n = m.g.dim, k = m.dim_m;
  return detail::linear_map_matrix(k * n * n, detail::pair_size(m), [&](const Vector& v) {
    Tensor f({k, n, n});
    std::copy(v.begin(), v.end(), f.data().begin());
    return flatten(coboundary(m, f));
  });
}

inline Subspace bl3(const RepresentationFD& m) { return image_basis(coboundary_matrix(m)); }

inline CohomologySpace hl3(const RepresentationFD& m) {
  CohomologySpace h{quotient_space(zl3(m), bl3(m)), {}};
  for (const auto& v : h.representatives) h.pairs.push_back(unflatten(m, v));
  return h;
}

inline bool classes_equal(const RepresentationFD& m, const CocyclePair& p, const CocyclePair& q) {
  if (!is_cocycle(m, p) || !is_cocycle(m, q)) throw MathError("classes_equal: input is not a cocycle pair");
  return membership(bl3(m), flatten(p - q)).member;
}

// ---------------------------------------------------------------------------
// Chevalley-Eilenberg cochains
// ---------------------------------------------------------------------------

/// Strictly increasing k-tuples in {0..n-1}, lexicographically.
inline std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> t(k);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == k) {
      out.push_back(t);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      t[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

namespace detail {

inline Vector apply(const Tensor& c, const std::vector<Vector>& args) {
  std::vector<const Vector*> ptrs;
  for (const auto& a : args) ptrs.push_back(&a);
  return evaluate(c, ptrs);
}

inline int permutation_sign(std::vector<std::size_t> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) sign = -sign;
  return sign;
}

}  // namespace detail

/// Coordinates of an alternating k-cochain: values on increasing tuples,
/// tuple-major.
inline Vector ce_coordinates(const Tensor& c, std::size_t n, std::size_t k) {
  const std::size_t m = c.dim(0);
  Vector out;
  std::vector<std::size_t> idx(k + 1);
  for (const auto& t : increasing_tuples(n, k)) {
    std::copy(t.begin(), t.end(), idx.begin() + 1);
    for (std::size_t b = 0; b < m; ++b) {
      idx[0] = b;
      out.push_back(c.at(idx));
    }
  }
  return out;
}

/// The alternating cochain with the given coordinates.
inline Tensor ce_cochain(std::size_t n, std::size_t m, std::size_t k, const Vector& coords) {
  std::vector<std::size_t> shape(k + 1, n);
  shape[0] = m;
  Tensor c(shape);
  const auto tuples = increasing_tuples(n, k);
  if (coords.size() != tuples.size() * m) throw ShapeError("ce_cochain: wrong coordinate count");
  c.for_each_index([&](std::span<const std::size_t> idx) {
    std::vector<std::size_t> args(idx.begin() + 1, idx.end()), sorted = args;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
    const auto pos = std::lower_bound(tuples.begin(), tuples.end(), sorted) - tuples.begin();
    const Rat& v = coords[static_cast<std::size_t>(pos) * m + idx[0]];
    std::vector<std::size_t> full(idx.begin(), idx.end());
    c.at(full) = detail::permutation_sign(args) > 0 ? v : -v;
  });
  return c;
}

inline bool is_alternating(const Tensor& c) {
  bool ok = true;
  c.for_each_index([&](std::span<const std::size_t> idx) {
    std::vector<std::size_t> args(idx.begin() + 1, idx.end()), sorted = args;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> base{idx[0]};
    base.insert(base.end(), sorted.begin(), sorted.end());
    const bool repeated = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    const Rat expect = repeated ? Rat(0) : detail::permutation_sign(args) * c.at(base);
    if (c.at(idx) != expect) ok = false;
  });
  return ok;
}

/// (dc)(x0..xk) = sum_i (-1)^i x_i.c(..^i..) + sum_{i<j} (-1)^{i+j} c([x_i,x_j], ..^i..^j..).
inline Vector ce_differential_at(const RepresentationFD& m, const Tensor& c, std::span<const std::size_t> t) {
  const std::size_t k = t.size();
  Vector r(m.dim_m);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Vector> rest;
    for (std::size_t l = 0; l < k; ++l)
      if (l != i) rest.push_back(m.g.e(t[l]));
    const Vector term = m.act(m.g.e(t[i]), detail::apply(c, rest));
    if (i % 2 == 0) r += term; else r -= term;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      std::vector<Vector> args{m.g.bracket(m.g.e(t[i]), m.g.e(t[j]))};
      for (std::size_t l = 0; l < k; ++l)
        if (l != i && l != j) args.push_back(m.g.e(t[l]));
      const Vector term = detail::apply(c, args);
      if ((i + j) % 2 == 0) r += term; else r -= term;
    }
  return r;
}

inline Tensor ce_differential(const RepresentationFD& m, const Tensor& c) {
  const std::size_t n = m.g.dim, k = c.rank();
  return tabulate(m.dim_m, std::vector<std::size_t>(k, n), [&](std::span<const std::size_t> t) { return ce_differential_at(m, c, t); });
}

/// The differential from k-cochains to (k+1)-cochains in coordinates.
inline Matrix ce_differential_matrix(const RepresentationFD& m, std::size_t k) {
  const std::size_t n = m.g.dim, dm = m.dim_m;
  const auto targets = increasing_tuples(n, k + 1);
  const std::size_t in_dim = increasing_tuples(n, k).size() * dm;
  return detail::linear_map_matrix(in_dim, targets.size() * dm, [&](const Vector& v) {
    const Tensor c = ce_cochain(n, dm, k, v);
    Vector out;
    for (const auto& t : targets) {
      const Vector r = ce_differential_at(m, c, t);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  });
}

inline bool is_ce_cocycle(const RepresentationFD& m, const Tensor& c) {
  return is_alternating(c) && ce_differential(m, c).is_zero();
}

struct CEH3 : QuotientSpace {
  std::vector<Tensor> cochains;  // representatives as full alternating tensors
};

inline CEH3 ce_h3(const RepresentationFD& m) {
  CEH3 h{quotient_space(kernel_basis(ce_differential_matrix(m, 3)), image_basis(ce_differential_matrix(m, 2))), {}};
  for (const auto& v : h.representatives) h.cochains.push_back(ce_cochain(m.g.dim, m.dim_m, 3, v));
  return h;
}

// ---------------------------------------------------------------------------
// The comparison map and the exact sequence
// ---------------------------------------------------------------------------

/// 1/6 sum sgn j(..) - 1/12 sum sgn s([.,.],.), the skeletal case of
/// skew-symmetrization.
inline Tensor ss_class(const RepresentationFD& m, const CocyclePair& p) {
  if (!is_cocycle(m, p)) throw MathError("ss_class: input is not a cocycle pair");
  const std::size_t n = m.g.dim;
  const detail::PairEval o{m, p};
  return tabulate(m.dim_m, {n, n, n}, [&](std::span<const std::size_t> t) {
    const Vector x = o.e(t[0]), y = o.e(t[1]), z = o.e(t[2]);
    const Vector a = detail::alternating_sum3(x, y, z, [&](const Vector& u, const Vector& v, const Vector& w) { return o.j(u, v, w); });
    const Vector b = detail::alternating_sum3(x, y, z, [&](const Vector& u, const Vector& v, const Vector& w) { return o.s(o.br(u, v), w); });
    return frac(1, 6) * a - frac(1, 12) * b;
  });
}

/// Basis of Hom(wedge^2 a, M) for a = g/[g,g], as skew s-tensors.
inline std::vector<Tensor> abelian_forms(const RepresentationFD& m) {
  const std::size_t n = m.g.dim, k = m.dim_m;
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) brackets.push_back(m.g.bracket(m.g.e(i), m.g.e(j)));
  const Subspace derived = span_of(n, brackets);
  const Subspace ann = kernel_basis(derived.basis().transpose());
  std::vector<Tensor> out;
  for (std::size_t a = 0; a < ann.dim(); ++a)
    for (std::size_t b = a + 1; b < ann.dim(); ++b)
      for (std::size_t v = 0; v < k; ++v) {
        const Vector al = ann.vector(a), be = ann.vector(b);
        Tensor s({k, n, n});
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) s(v, i, j) = al[i] * be[j] - al[j] * be[i];
        out.push_back(std::move(s));
      }
  return out;
}

struct ExactSequenceReport {
  std::size_t abelianization_dim = 0, hom_dim = 0, hl3_dim = 0, h3_dim = 0;
  bool iota_lands_in_zl3 = false;
  bool iota_injective = false;
  bool ss_surjective = false;
  bool kernel_is_iota_image = false;
  bool splitting_ok = false;
  bool dims_add_up = false;

  bool passed() const {
    return iota_lands_in_zl3 && iota_injective && ss_surjective && kernel_is_iota_image && splitting_ok && dims_add_up;
  }
};

inline ExactSequenceReport exact_sequence_report(const RepresentationFD& m) {
  ExactSequenceReport r;
  const CohomologySpace hl = hl3(m);
  const CEH3 ce = ce_h3(m);
  r.hl3_dim = hl.dim;
  r.h3_dim = ce.dim;
  {
    std::vector<Vector> brackets;
    for (std::size_t i = 0; i < m.g.dim; ++i)
      for (std::size_t j = 0; j < m.g.dim; ++j) brackets.push_back(m.g.bracket(m.g.e(i), m.g.e(j)));
    r.abelianization_dim = m.g.dim - span_of(m.g.dim, brackets).dim();
  }
  const std::vector<Tensor> forms = abelian_forms(m);
  r.hom_dim = forms.size();

  std::vector<Vector> iota;
  r.iota_lands_in_zl3 = true;
  for (const auto& a : forms) {
    const CocyclePair p{a, Tensor({m.dim_m, m.g.dim, m.g.dim, m.g.dim})};
    const auto c = hl.class_of(flatten(p));
    if (!c) {
      r.iota_lands_in_zl3 = false;
      continue;
    }
    iota.push_back(*c);
  }
  const Matrix iota_m = Matrix::from_columns(iota, hl.dim);
  r.iota_injective = r.iota_lands_in_zl3 && rank(iota_m) == forms.size();

  std::vector<Vector> ss_cols;
  for (const auto& p : hl.pairs) ss_cols.push_back(*ce.class_of(ce_coordinates(ss_class(m, p), m.g.dim, 3)));
  const Matrix ss_m = Matrix::from_columns(ss_cols, ce.dim);
  r.ss_surjective = rank(ss_m) == ce.dim;
  r.kernel_is_iota_image = same_subspace(kernel_basis(ss_m), image_basis(iota_m));

  r.splitting_ok = true;
  for (const auto& phi : ce.cochains) {
    const CocyclePair p{Tensor({m.dim_m, m.g.dim, m.g.dim}), phi};
    if (!is_cocycle(m, p) || ss_class(m, p) != phi) r.splitting_ok = false;
  }
  r.dims_add_up = r.hl3_dim == r.hom_dim + r.h3_dim;
  return r;
}

// ---------------------------------------------------------------------------
// Skeletal structures
// ---------------------------------------------------------------------------

namespace detail {

inline EL2Algebra skeletal_structure(const RepresentationFD& m, const CocyclePair& p) {
  require_pair_shape(m, p);
  const std::size_t n = m.g.dim, k = m.dim_m;
  EL2Algebra e(TwoTermComplex(n, k));
  e.b00 = m.g.c;
  e.b01 = m.rho;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t b = 0; b < k; ++b) e.b10(a, b, x) = -m.rho(a, x, b);
  e.alt = p.s;
  e.jac = p.j;
  return e;
}

}  // namespace detail

/// d = 0, [x,y] from g, [x,a] = x.a = -[a,x], alternator s, Jacobiator j.
inline EL2Algebra from_skeletal_cocycle(const RepresentationFD& m, const CocyclePair& p) {
  if (!is_cocycle(m, p)) throw MathError("from_skeletal_cocycle: (s, j) is not a cocycle pair");
  return detail::skeletal_structure(m, p);
}

struct SkeletalData {
  RepresentationFD rep;
  CocyclePair pair;
};

inline SkeletalData extract_class(const EL2Algebra& e) {
  e.validate();
  if (!e.complex.skeletal()) throw MathError("extract_class: structure is not skeletal");
  if (!check_el2(e).passed()) throw MathError("extract_class: structure fails the axioms");
  SkeletalData out{RepresentationFD(LieAlgebraFD(e.n0(), e.b00), e.n1(), e.b01), {e.alt, e.jac}};
  return out;
}

struct SkeletalTransfer {
  EL2Algebra skeletal;
  ELMorphism equivalence;  // skeletal -> input
};

/// Transfer along a Hodge decomposition (i, p, h). The inclusion extends to
/// a morphism with i2(x,y) = h[ix,iy]; the brackets are p[i.,i.], and the
/// alternator and Jacobiator are p applied to the defects of f21 and f22.
inline SkeletalTransfer transfer_to_skeletal(const EL2Algebra& e) {
  if (!check_el2(e).passed()) throw MathError("transfer_to_skeletal: input fails the axioms");
  const HodgeDecomposition hd = hodge_decompose(e.complex);
  const Matrix &i0 = hd.i.f0, &i1 = hd.i.f1, &p0 = hd.p.f0, &p1 = hd.p.f1;
  const std::size_t n0 = hd.skeletal.n0, n1 = hd.skeletal.n1;
  const detail::El2Eval c{e};
  using T = std::span<const std::size_t>;
  EL2Algebra h(hd.skeletal);
  auto x0 = [&](std::size_t k) { return unit_vector(n0, k); };
  auto x1 = [&](std::size_t k) { return unit_vector(n1, k); };
  const Tensor i2 = tabulate(e.n1(), {n0, n0}, [&](T t) { return hd.h.h * c.xy(i0 * x0(t[0]), i0 * x0(t[1])); });
  auto f2 = [&](const Vector& x, const Vector& y) { return evaluate(i2, x, y); };
  h.b00 = tabulate(n0, {n0, n0}, [&](T t) { return p0 * c.xy(i0 * x0(t[0]), i0 * x0(t[1])); });
  h.b01 = tabulate(n1, {n0, n1}, [&](T t) { return p1 * c.xb(i0 * x0(t[0]), i1 * x1(t[1])); });
  h.b10 = tabulate(n1, {n1, n0}, [&](T t) { return p1 * c.ay(i1 * x1(t[0]), i0 * x0(t[1])); });
  h.alt = tabulate(n1, {n0, n0}, [&](T t) {
    const Vector x = x0(t[0]), y = x0(t[1]);
    return p1 * (c.s(i0 * x, i0 * y) - f2(x, y) - f2(y, x));
  });
  const detail::El2Eval o{h};
  h.jac = tabulate(n1, {n0, n0, n0}, [&](T t) {
    const Vector x = x0(t[0]), y = x0(t[1]), z = x0(t[2]);
    const Vector ix = i0 * x, iy = i0 * y, iz = i0 * z;
    Vector r = c.j(ix, iy, iz);
    r -= c.xb(ix, f2(y, z));
    r += c.xb(iy, f2(x, z));
    r += c.ay(f2(x, y), iz);
    r += f2(o.xy(x, y), z);
    r += f2(y, o.xy(x, z));
    r -= f2(x, o.xy(y, z));
    return p1 * r;
  });
  SkeletalTransfer out{h, {h, e, hd.i, i2}};
  if (!check_el2(out.skeletal).passed() || !check_morphism(out.equivalence).passed())
    throw MathError("transfer_to_skeletal: transferred structure does not validate");
  return out;
}

// ---------------------------------------------------------------------------
// Equivalences of skeletal structures
// ---------------------------------------------------------------------------

/// The morphism (1, f) from e to e' when their classes agree, or nothing.
inline std::optional<ELMorphism> skeletal_equivalence(const EL2Algebra& e, const EL2Algebra& e2) {
  const SkeletalData a = extract_class(e), b = extract_class(e2);
  if (!(a.rep == b.rep)) throw MathError("skeletal_equivalence: structures have different (g, M)");
  const auto& m = a.rep;
  const auto f = solve(coboundary_matrix(m), flatten(b.pair - a.pair));
  if (!f) return std::nullopt;
  Tensor f2({m.dim_m, m.g.dim, m.g.dim});
  std::copy(f->begin(), f->end(), f2.data().begin());
  return ELMorphism{e, e2, identity_chain_map(e.complex), f2};
}

struct SkeletalInverse {
  ELMorphism inverse;         // (1, g) : e' -> e
  ELTwoMorphism to_identity;  // theta : (1, g)(1, f) => 1
};

/// g(x,y) = -f(x,y) + [x, theta y] + [theta x, y] - theta [x,y].
inline SkeletalInverse skeletal_inverse(const ELMorphism& f, const Matrix& theta) {
  const EL2Algebra& e = f.src;
  const detail::El2Eval o{e};
  const std::size_t n = e.n0();
  ELMorphism g{f.dst, f.src, identity_chain_map(e.complex), Tensor()};
  g.f2 = tabulate(e.n1(), {n, n}, [&](std::span<const std::size_t> t) {
    const Vector x = o.e0(t[0]), y = o.e0(t[1]);
    return -evaluate(f.f2, x, y) + o.xb(x, theta * y) + o.ay(theta * x, y) - theta * o.xy(x, y);
  });
  return {g, {compose(g, f), identity_morphism(e), {theta}}};
}

}  // namespace lie2
