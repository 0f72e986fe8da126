#pragma once

// Graded L-infinity algebras with brackets of arity at most 3, Maurer-Cartan
// elements, twisting, and the symmetry Lie 2-algebras built from derived
// brackets.
//
// Conventions: l_k has degree 2-k and is graded antisymmetric,
//   l_k(.., x, y, ..) = -(-1)^{|x||y|} l_k(.., y, x, ..).
// The relations checked for n = 1..5 are
//   sum_{i+j=n+1} sum_{sigma unshuffle(i,n-i)} chi(sigma) (-1)^{i(j-1)}
//       l_j(l_i(x_s1, .., x_si), x_s(i+1), .., x_sn) = 0,
// chi the antisymmetric Koszul sign. For l3 = 0 they reduce to l1^2 = 0,
// l1[x,y] = [l1 x,y] + (-1)^{|x|}[x,l1 y] and the graded Jacobi identity.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lie2/el2.hpp"
#include "lie2/morph.hpp"

namespace lie2 {

/// Basis ordered by degree; dims[k] = dim L^{dmin + k}.
struct GradedL3Algebra {
  int dmin = 0;
  std::vector<std::size_t> dims;
  Matrix l1;  // N x N
  Tensor l2;  // [N, N, N]
  Tensor l3;  // [N, N, N, N]

  GradedL3Algebra() : GradedL3Algebra(0, {}) {}
  GradedL3Algebra(int dmin_, std::vector<std::size_t> dims_)
      : dmin(dmin_), dims(std::move(dims_)), l1(total(), total()), l2({total(), total(), total()}),
        l3({total(), total(), total(), total()}) {
    if (dmin < -3) throw ShapeError("graded algebra: degrees below -3 are not supported");
  }

  std::size_t total() const {
    std::size_t n = 0;
    for (auto k : dims) n += k;
    return n;
  }
  int dmax() const { return dmin + static_cast<int>(dims.size()) - 1; }
  bool in_range(int deg) const { return deg >= dmin && deg <= dmax(); }
  std::size_t dim(int deg) const { return in_range(deg) ? dims[static_cast<std::size_t>(deg - dmin)] : 0; }
  std::size_t offset(int deg) const {
    std::size_t off = 0;
    for (int k = dmin; k < deg && k <= dmax(); ++k) off += dim(k);
    return off;
  }
  int degree_of(std::size_t i) const {
    for (int k = dmin; k <= dmax(); ++k) {
      if (i < dim(k)) return k;
      i -= dim(k);
    }
    throw ShapeError("graded algebra: basis index out of range");
  }

  Vector e(std::size_t i) const { return unit_vector(total(), i); }
  Vector embed(int deg, const Vector& local) const {
    if (local.size() != dim(deg)) throw ShapeError("graded algebra: vector has the wrong size for degree " + std::to_string(deg));
    Vector v(total());
    std::copy(local.begin(), local.end(), v.begin() + static_cast<std::ptrdiff_t>(offset(deg)));
    return v;
  }
  Vector component(int deg, const Vector& v) const {
    const auto b = v.begin() + static_cast<std::ptrdiff_t>(offset(deg));
    return Vector(b, b + static_cast<std::ptrdiff_t>(dim(deg)));
  }
  /// The block of l1 from degree deg to deg + 1.
  Matrix l1_block(int deg) const {
    Matrix m(dim(deg + 1), dim(deg));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = l1(offset(deg + 1) + i, offset(deg) + j);
    return m;
  }

  Vector d(const Vector& x) const { return l1 * x; }
  Vector b2(const Vector& x, const Vector& y) const { return evaluate(l2, x, y); }
  Vector b3(const Vector& x, const Vector& y, const Vector& z) const { return evaluate(l3, x, y, z); }
  bool is_dgla() const { return l3.is_zero(); }

  void validate() const {
    const std::size_t n = total();
    if (l1.rows() != n || l1.cols() != n) throw ShapeError("graded algebra: l1 must be N x N");
    if (l2.shape() != std::vector<std::size_t>{n, n, n}) throw ShapeError("graded algebra: l2 must be N x N x N");
    if (l3.shape() != std::vector<std::size_t>{n, n, n, n}) throw ShapeError("graded algebra: l3 must be N x N x N x N");
  }

  friend bool operator==(const GradedL3Algebra&, const GradedL3Algebra&) = default;
};

namespace detail {

inline int koszul(int a, int b) { return (a * b) % 2 == 0 ? 1 : -1; }

/// Non-decreasing index tuples of length n whose relation lands in a degree
/// that exists.
inline std::vector<std::vector<std::size_t>> sorted_tuples(const GradedL3Algebra& L, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t total = L.total();
  std::vector<std::size_t> t(n, 0);
  if (total == 0) return out;
  while (true) {
    int deg = 3 - static_cast<int>(n);
    for (auto i : t) deg += L.degree_of(i);
    if (L.in_range(deg)) out.push_back(t);
    std::size_t p = n;
    while (p > 0 && t[p - 1] == total - 1) --p;
    if (p == 0) break;
    ++t[p - 1];
    for (std::size_t q = p; q < n; ++q) t[q] = t[p - 1];
  }
  return out;
}

inline Vector apply_bracket(const GradedL3Algebra& L, const std::vector<const Vector*>& args) {
  switch (args.size()) {
    case 1: return L.d(*args[0]);
    case 2: return L.b2(*args[0], *args[1]);
    case 3: return L.b3(*args[0], *args[1], *args[2]);
    default: return Vector(L.total());
  }
}

/// Left side of the arity-n relation on homogeneous x with degrees deg.
inline Vector jacobi_residual(const GradedL3Algebra& L, bool dgla, const std::vector<Vector>& x, const std::vector<int>& deg) {
  const std::size_t n = x.size();
  Vector out(L.total());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const std::size_t i = static_cast<std::size_t>(std::popcount(mask));
    const std::size_t j = n + 1 - i;
    if (i > 3 || j > 3) continue;
    if ((i == 3 || j == 3) && dgla) continue;
    std::vector<std::size_t> S, R;
    for (std::size_t p = 0; p < n; ++p) ((mask >> p) & 1u ? S : R).push_back(p);
    int sign = (i * (j - 1)) % 2 == 0 ? 1 : -1;
    for (auto r : R)
      for (auto s : S)
        if (s > r) sign *= -koszul(deg[r], deg[s]);
    std::vector<const Vector*> inner;
    for (auto s : S) inner.push_back(&x[s]);
    const Vector v = apply_bracket(L, inner);
    if (is_zero(v)) continue;
    std::vector<const Vector*> outer{&v};
    for (auto r : R) outer.push_back(&x[r]);
    axpy(out, Rat(sign), apply_bracket(L, outer));
  }
  return out;
}

}  // namespace detail

inline CheckReport check_graded(const GradedL3Algebra& L, const CheckOptions& opts = {}) {
  L.validate();
  const std::size_t N = L.total();
  const bool dgla = L.is_dgla();
  using T = std::span<const std::size_t>;
  auto deg = [&](std::size_t i) { return L.degree_of(i); };
  // the part of v outside degree target
  auto off_degree = [&](Vector v, int target) {
    if (L.in_range(target))
      for (std::size_t k = 0; k < L.dim(target); ++k) v[L.offset(target) + k] = 0;
    return v;
  };
  std::vector<Equation> eqs{
      {"l1_degree", "x", {N}, [&](T t) { return off_degree(L.d(L.e(t[0])), deg(t[0]) + 1); }},
      {"l2_degree", "xy", {N, N}, [&](T t) { return off_degree(L.b2(L.e(t[0]), L.e(t[1])), deg(t[0]) + deg(t[1])); }},
      {"l3_degree", "xyz", {dgla ? 0 : N, N, N},
       [&](T t) { return off_degree(L.b3(L.e(t[0]), L.e(t[1]), L.e(t[2])), deg(t[0]) + deg(t[1]) + deg(t[2]) - 1); }},
      {"antisym2", "xy", {N, N},
       [&](T t) {
         return L.b2(L.e(t[0]), L.e(t[1])) + Rat(detail::koszul(deg(t[0]), deg(t[1]))) * L.b2(L.e(t[1]), L.e(t[0]));
       }},
      {"antisym3_12", "xyz", {dgla ? 0 : N, N, N},
       [&](T t) {
         const Vector x = L.e(t[0]), y = L.e(t[1]), z = L.e(t[2]);
         return L.b3(x, y, z) + Rat(detail::koszul(deg(t[0]), deg(t[1]))) * L.b3(y, x, z);
       }},
      {"antisym3_23", "xyz", {dgla ? 0 : N, N, N},
       [&](T t) {
         const Vector x = L.e(t[0]), y = L.e(t[1]), z = L.e(t[2]);
         return L.b3(x, y, z) + Rat(detail::koszul(deg(t[1]), deg(t[2]))) * L.b3(x, z, y);
       }},
  };
  std::vector<std::vector<std::vector<std::size_t>>> tuples(6);
  for (std::size_t n = 1; n <= 5; ++n) {
    if (n >= 4 && dgla) continue;
    tuples[n] = detail::sorted_tuples(L, n);
    const auto& list = tuples[n];
    eqs.push_back({"jacobi" + std::to_string(n), "t", {list.size()}, [&L, &list, dgla](T t) {
                     std::vector<Vector> x;
                     std::vector<int> dg;
                     for (auto i : list[t[0]]) {
                       x.push_back(L.e(i));
                       dg.push_back(L.degree_of(i));
                     }
                     return detail::jacobi_residual(L, dgla, x, dg);
                   }});
  }
  CheckReport r;
  r.violations = run_equations(eqs, opts);
  for (auto& v : r.violations) {
    if (v.equation.rfind("jacobi", 0) != 0) continue;
    const std::size_t n = static_cast<std::size_t>(v.equation.back() - '0');
    v.tuple = tuples[n][v.tuple[0]];
    v.args = std::string("xyzuv").substr(0, n);
  }
  return r;
}

namespace detail {

inline Vector gamma_in(const GradedL3Algebra& L, const Vector& gamma) {
  if (gamma.size() != L.dim(1)) throw ShapeError("gamma must have dim L^1 = " + std::to_string(L.dim(1)) + " coordinates");
  return L.embed(1, gamma);
}

}  // namespace detail

/// d gamma + 1/2 [gamma,gamma] + 1/6 [gamma,gamma,gamma], in L^2 coordinates.
inline Vector mc_residual(const GradedL3Algebra& L, const Vector& gamma) {
  L.validate();
  const Vector g = detail::gamma_in(L, gamma);
  Vector r = L.d(g);
  axpy(r, frac(1, 2), L.b2(g, g));
  if (!L.is_dgla()) axpy(r, frac(1, 6), L.b3(g, g, g));
  return L.component(2, r);
}

inline bool is_mc(const GradedL3Algebra& L, const Vector& gamma) { return is_zero(mc_residual(L, gamma)); }

/// l1 + [gamma,.] + 1/2 [gamma,gamma,.], [.,.] + [gamma,.,.], [.,.,.].
inline GradedL3Algebra twist(const GradedL3Algebra& L, const Vector& gamma) {
  if (!is_mc(L, gamma)) throw MathError("twist: gamma is not a Maurer-Cartan element");
  const Vector g = detail::gamma_in(L, gamma);
  const std::size_t N = L.total();
  const bool dgla = L.is_dgla();
  GradedL3Algebra out = L;
  for (std::size_t i = 0; i < N; ++i) {
    const Vector x = L.e(i);
    Vector col = L.d(x) + L.b2(g, x);
    if (!dgla) axpy(col, frac(1, 2), L.b3(g, g, x));
    for (std::size_t k = 0; k < N; ++k) out.l1(k, i) = col[k];
  }
  if (!dgla)
    out.l2 = L.l2 + tabulate(N, {N, N}, [&](std::span<const std::size_t> t) { return L.b3(g, L.e(t[0]), L.e(t[1])); });
  return out;
}

/// The infinitesimal action of x in L^0 on gamma: dx + [gamma,x] + 1/2 [gamma,gamma,x], in L^1 coordinates.
inline Vector symmetry_action_residual(const GradedL3Algebra& L, const Vector& gamma, const Vector& x) {
  L.validate();
  const Vector g = detail::gamma_in(L, gamma);
  const Vector v = L.embed(0, x);
  Vector r = L.d(v) + L.b2(g, v);
  if (!L.is_dgla()) axpy(r, frac(1, 2), L.b3(g, g, v));
  return L.component(1, r);
}

/// ker(delta_gamma) in L^0 with the induced bracket constants.
struct SymmetryAlgebra {
  Subspace kernel;  // in L^0 coordinates
  Tensor bracket;   // [r, r, r]
};

namespace detail {

inline void require_mc(const GradedL3Algebra& L, const Vector& gamma, const char* what) {
  if (!is_mc(L, gamma)) throw MathError(std::string(what) + ": gamma is not a Maurer-Cartan element");
}

inline void require_vanishing_below(const GradedL3Algebra& L, int deg, const char* what) {
  for (int k = L.dmin; k < deg; ++k)
    if (L.dim(k) != 0) throw ShapeError(std::string(what) + ": L^" + std::to_string(k) + " must be zero");
}

/// Lt is already twisted.
inline SymmetryAlgebra symmetry_algebra_of_twisted(const GradedL3Algebra& Lt) {
  const Subspace K = kernel_basis(Lt.l1_block(0));
  const std::size_t r = K.dim();
  const Tensor br = tabulate(r, {r, r}, [&](std::span<const std::size_t> t) {
    const Vector v = Lt.b2(Lt.embed(0, K.vector(t[0])), Lt.embed(0, K.vector(t[1])));
    return coordinates_in(K, Lt.component(0, v), "symmetry algebra: bracket");
  });
  return {K, br};
}

}  // namespace detail

/// Throws MathError if the twisted bracket does not preserve ker(delta_gamma).
inline SymmetryAlgebra symmetry_algebra(const GradedL3Algebra& L, const Vector& gamma) {
  return detail::symmetry_algebra_of_twisted(twist(L, gamma));
}

/// L^-1 -> ker(delta_gamma) in L^0 with brackets from the twisted structure.
inline EL2Algebra inner_symmetries_n2(const GradedL3Algebra& L, const Vector& gamma) {
  L.validate();
  detail::require_vanishing_below(L, -1, "inner_symmetries_n2");
  detail::require_mc(L, gamma, "inner_symmetries_n2");
  const GradedL3Algebra Lt = twist(L, gamma);
  const SymmetryAlgebra S = detail::symmetry_algebra_of_twisted(Lt);
  const Subspace& K = S.kernel;
  const std::size_t n0 = K.dim(), n1 = L.dim(-1);
  auto x_of = [&](std::size_t i) { return Lt.embed(0, K.vector(i)); };
  auto a_of = [&](std::size_t i) { return Lt.embed(-1, unit_vector(n1, i)); };
  auto in_k = [&](const Vector& v) { return detail::coordinates_in(K, Lt.component(0, v), "inner_symmetries_n2"); };
  using T = std::span<const std::size_t>;
  Matrix d(n0, n1);
  for (std::size_t a = 0; a < n1; ++a) {
    const Vector c = in_k(Lt.d(a_of(a)));
    for (std::size_t k = 0; k < n0; ++k) d(k, a) = c[k];
  }
  EL2Algebra e(TwoTermComplex(n0, n1, d));
  e.b00 = S.bracket;
  e.b01 = tabulate(n1, {n0, n1}, [&](T t) { return Lt.component(-1, Lt.b2(x_of(t[0]), a_of(t[1]))); });
  e.b10 = tabulate(n1, {n1, n0}, [&](T t) { return Lt.component(-1, Lt.b2(a_of(t[0]), x_of(t[1]))); });
  if (!Lt.is_dgla())
    e.jac = tabulate(n1, {n0, n0, n0}, [&](T t) { return Lt.component(-1, Lt.b3(x_of(t[0]), x_of(t[1]), x_of(t[2]))); });
  return e;
}

/// The hemistrict 2-algebra on C^0 = L^-1, C^-1 = L^-2, the map to the
/// symmetry algebra, and the action of its basis elements.
struct InnerSymmetries3 {
  EL2Algebra algebra;
  EL2Algebra symmetries;  // ker(delta_gamma) with C^-1 = 0
  Subspace kernel;        // in L^0 coordinates
  ELMorphism partial;
  std::vector<Matrix> action0;  // T -> {T,.} on C^0
  std::vector<Matrix> action1;  // T -> {T,.} on C^-1

  Matrix act0(const Vector& t) const { return combine(action0, t, algebra.n0()); }
  Matrix act1(const Vector& t) const { return combine(action1, t, algebra.n1()); }

 private:
  static Matrix combine(const std::vector<Matrix>& ms, const Vector& t, std::size_t n) {
    Matrix out(n, n);
    for (std::size_t k = 0; k < ms.size(); ++k)
      if (t[k] != 0) out = out + t[k] * ms[k];
    return out;
  }
};

inline InnerSymmetries3 inner_symmetries_n3(const GradedL3Algebra& L, const Vector& gamma) {
  L.validate();
  if (!L.is_dgla()) throw MathError("inner_symmetries_n3: l3 must vanish");
  detail::require_vanishing_below(L, -2, "inner_symmetries_n3");
  detail::require_mc(L, gamma, "inner_symmetries_n3");
  const GradedL3Algebra Lt = twist(L, gamma);
  const SymmetryAlgebra S = detail::symmetry_algebra_of_twisted(Lt);
  const Subspace& K = S.kernel;
  const std::size_t r = K.dim(), n0 = L.dim(-1), n1 = L.dim(-2);
  auto x_of = [&](std::size_t i) { return Lt.embed(-1, unit_vector(n0, i)); };
  auto a_of = [&](std::size_t i) { return Lt.embed(-2, unit_vector(n1, i)); };
  auto t_of = [&](std::size_t i) { return Lt.embed(0, K.vector(i)); };
  using T = std::span<const std::size_t>;

  Matrix d(n0, n1), f0(r, n0);
  for (std::size_t a = 0; a < n1; ++a) {
    const Vector c = Lt.component(-1, Lt.d(a_of(a)));
    for (std::size_t k = 0; k < n0; ++k) d(k, a) = c[k];
  }
  for (std::size_t x = 0; x < n0; ++x) {
    const Vector c = detail::coordinates_in(K, Lt.component(0, Lt.d(x_of(x))), "inner_symmetries_n3");
    for (std::size_t k = 0; k < r; ++k) f0(k, x) = c[k];
  }

  InnerSymmetries3 out;
  out.kernel = K;
  EL2Algebra& e = out.algebra;
  e = EL2Algebra(TwoTermComplex(n0, n1, d));
  e.b00 = tabulate(n0, {n0, n0}, [&](T t) { return Lt.component(-1, Lt.b2(Lt.d(x_of(t[0])), x_of(t[1]))); });
  e.b01 = tabulate(n1, {n0, n1}, [&](T t) { return Lt.component(-2, Lt.b2(Lt.d(x_of(t[0])), a_of(t[1]))); });
  e.alt = tabulate(n1, {n0, n0}, [&](T t) { return Lt.component(-2, Lt.b2(x_of(t[0]), x_of(t[1]))); });

  out.symmetries = EL2Algebra(TwoTermComplex(r, 0));
  out.symmetries.b00 = S.bracket;
  out.partial = ELMorphism{e, out.symmetries, {f0, Matrix(0, n1)}, Tensor({0, n0, n0})};

  for (std::size_t k = 0; k < r; ++k) {
    Matrix m0(n0, n0), m1(n1, n1);
    for (std::size_t i = 0; i < n0; ++i) {
      const Vector c = Lt.component(-1, Lt.b2(t_of(k), x_of(i)));
      for (std::size_t p = 0; p < n0; ++p) m0(p, i) = c[p];
    }
    for (std::size_t i = 0; i < n1; ++i) {
      const Vector c = Lt.component(-2, Lt.b2(t_of(k), a_of(i)));
      for (std::size_t p = 0; p < n1; ++p) m1(p, i) = c[p];
    }
    out.action0.push_back(std::move(m0));
    out.action1.push_back(std::move(m1));
  }
  return out;
}

/// Each {T,.} is a chain map and a derivation of every structure map, and
///   partial{T,f} = [T, partial f],   {partial f, g} = [f,g]
/// on basis arrows f = (x,a), g.
inline CheckReport symmetry_action_report(const InnerSymmetries3& s, const CheckOptions& opts = {}) {
  const EL2Algebra& e = s.algebra;
  const std::size_t r = s.kernel.dim(), n0 = e.n0(), n1 = e.n1(), na = n0 + n1;
  const detail::El2Eval v{e};
  const Matrix& F0 = s.partial.f.f0;
  const Tensor& lb = s.symmetries.b00;
  auto arrow = [&](std::size_t i) {
    return i < n0 ? Arrow{unit_vector(n0, i), Vector(n1)} : Arrow{Vector(n0), unit_vector(n1, i - n0)};
  };
  using T = std::span<const std::size_t>;
  auto A0 = [&](std::size_t k) -> const Matrix& { return s.action0[k]; };
  auto A1 = [&](std::size_t k) -> const Matrix& { return s.action1[k]; };
  std::vector<Equation> eqs{
      {"action_chain", "Ta", {r, n1}, [&](T t) { return v.d(A1(t[0]) * v.e1(t[1])) - A0(t[0]) * v.d(v.e1(t[1])); }},
      {"derivation_b00", "Txy", {r, n0, n0},
       [&](T t) {
         const Matrix& m = A0(t[0]);
         const Vector x = v.e0(t[1]), y = v.e0(t[2]);
         return m * v.xy(x, y) - v.xy(m * x, y) - v.xy(x, m * y);
       }},
      {"derivation_b01", "Txb", {r, n0, n1},
       [&](T t) {
         const Vector x = v.e0(t[1]), b = v.e1(t[2]);
         return A1(t[0]) * v.xb(x, b) - v.xb(A0(t[0]) * x, b) - v.xb(x, A1(t[0]) * b);
       }},
      {"derivation_b10", "Tay", {r, n1, n0},
       [&](T t) {
         const Vector a = v.e1(t[1]), y = v.e0(t[2]);
         return A1(t[0]) * v.ay(a, y) - v.ay(A1(t[0]) * a, y) - v.ay(a, A0(t[0]) * y);
       }},
      {"derivation_alt", "Txy", {r, n0, n0},
       [&](T t) {
         const Matrix& m = A0(t[0]);
         const Vector x = v.e0(t[1]), y = v.e0(t[2]);
         return A1(t[0]) * v.s(x, y) - v.s(m * x, y) - v.s(x, m * y);
       }},
      {"derivation_jac", "Txyz", {e.jac.is_zero() ? 0 : r, n0, n0, n0},
       [&](T t) {
         const Matrix& m = A0(t[0]);
         const Vector x = v.e0(t[1]), y = v.e0(t[2]), z = v.e0(t[3]);
         return A1(t[0]) * v.j(x, y, z) - v.j(m * x, y, z) - v.j(x, m * y, z) - v.j(x, y, m * z);
       }},
      {"crossed_equivariance", "Tf", {r, na},
       [&](T t) {
         const Arrow f = arrow(t[1]);
         return F0 * (A0(t[0]) * f.source) - evaluate(lb, unit_vector(r, t[0]), F0 * f.source);
       }},
      {"crossed_peiffer", "fg", {na, na},
       [&](T t) {
         const Arrow f = arrow(t[0]), g = arrow(t[1]);
         const Vector df = F0 * f.source;
         const Arrow lhs{s.act0(df) * g.source, s.act1(df) * g.part};
         const Arrow rhs = functor_bracket_on_arrows(e.bracket(), f, g);
         return concat(lhs.source - rhs.source, lhs.part - rhs.part);
       }},
  };
  CheckReport rep;
  rep.violations = run_equations(eqs, opts);
  return rep;
}

// ---------------------------------------------------------------------------
// Building graded algebras
// ---------------------------------------------------------------------------

/// g concentrated in degree 0.
inline GradedL3Algebra lie_as_graded(const LieAlgebraFD& g) {
  GradedL3Algebra L(0, {g.dim});
  L.l2 = g.c;
  return L;
}

/// g in degree 0, a trivial module k in degree -1 and l3 = c k([x,y],z).
inline GradedL3Algebra string_linf(const LieAlgebraFD& g, const Tensor& k, const Rat& c = 1) {
  require_invariant_form(g, k);
  const std::size_t n = g.dim;
  GradedL3Algebra L(-1, {1, n});
  for_each_tuple({n, n, n}, [&](std::span<const std::size_t> t) {
    L.l2(1 + t[0], 1 + t[1], 1 + t[2]) = g.c(t[0], t[1], t[2]);
    Rat phi = 0;
    for (std::size_t p = 0; p < n; ++p) phi += g.c(p, t[0], t[1]) * k(p, t[2]);
    L.l3(0, 1 + t[0], 1 + t[1], 1 + t[2]) = c * phi;
  });
  return L;
}

/// k in degree -2, g in degrees -1 and 0 with d the identity; [x,y] and
/// [x,a] are the bracket of g for x in degree 0, and {a,b} = k(a,b) on
/// degree -1.
inline GradedL3Algebra quadratic_dgla(const LieAlgebraFD& g, const Tensor& k) {
  require_invariant_form(g, k);
  const std::size_t n = g.dim;
  GradedL3Algebra L(-2, {1, n, n});
  const std::size_t m = 1, z = 1 + n;  // offsets of degree -1 and degree 0
  for (std::size_t i = 0; i < n; ++i) L.l1(z + i, m + i) = 1;
  for_each_tuple({n, n, n}, [&](std::span<const std::size_t> t) {
    const Rat& c = g.c(t[0], t[1], t[2]);
    L.l2(z + t[0], z + t[1], z + t[2]) = c;
    L.l2(m + t[0], z + t[1], m + t[2]) = c;
    L.l2(m + t[0], m + t[1], z + t[2]) = -g.c(t[0], t[2], t[1]);
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) L.l2(0, m + i, m + j) = k(i, j);
  return L;
}

/// Finite-dimensional graded commutative algebra with a derivation of degree 1.
struct GradedCommutativeAlgebra {
  std::vector<int> degree;  // non-decreasing
  Tensor mult;              // [N, N, N]
  Matrix delta;             // N x N

  std::size_t dim() const { return degree.size(); }

  /// associativity, graded commutativity, Leibniz rule and delta^2 = 0 on basis tuples.
  CheckReport check() const {
    const std::size_t n = dim();
    auto e = [n](std::size_t i) { return unit_vector(n, i); };
    auto mul = [&](const Vector& a, const Vector& b) { return evaluate(mult, a, b); };
    using T = std::span<const std::size_t>;
    std::vector<Equation> eqs{
        {"assoc", "abc", {n, n, n}, [&](T t) { return mul(mul(e(t[0]), e(t[1])), e(t[2])) - mul(e(t[0]), mul(e(t[1]), e(t[2]))); }},
        {"commutative", "ab", {n, n},
         [&](T t) { return mul(e(t[0]), e(t[1])) - Rat(detail::koszul(degree[t[0]], degree[t[1]])) * mul(e(t[1]), e(t[0])); }},
        {"leibniz", "ab", {n, n},
         [&](T t) {
           const Rat s = degree[t[0]] % 2 == 0 ? 1 : -1;
           return delta * mul(e(t[0]), e(t[1])) - mul(delta * e(t[0]), e(t[1])) - s * mul(e(t[0]), delta * e(t[1]));
         }},
        {"delta_squared", "a", {n}, [&](T t) { return delta * (delta * e(t[0])); }},
    };
    CheckReport r;
    r.violations = run_equations(eqs);
    return r;
  }
};

/// Exterior algebra on odd generators of the given degrees modulo the ideal
/// spanned by monomials containing one of `killed` (bitmasks over generators).
struct ExteriorAlgebra {
  std::vector<int> generator_degrees;
  std::vector<std::uint32_t> monomials;  // basis, ordered by degree then mask
  GradedCommutativeAlgebra algebra;

  std::size_t index_of(std::uint32_t mask) const {
    const auto it = std::find(monomials.begin(), monomials.end(), mask);
    if (it == monomials.end()) throw MathError("exterior algebra: monomial is zero in the quotient");
    return static_cast<std::size_t>(it - monomials.begin());
  }
  Vector generator(std::size_t g) const { return unit_vector(algebra.dim(), index_of(1u << g)); }
};

inline ExteriorAlgebra exterior_algebra(std::vector<int> generator_degrees, const std::vector<std::uint32_t>& killed = {}) {
  const std::size_t k = generator_degrees.size();
  for (int d : generator_degrees)
    if (d % 2 == 0) throw MathError("exterior_algebra: generators must have odd degree");
  const std::vector<int> gdeg = generator_degrees;
  auto deg = [&](std::uint32_t m) {
    int s = 0;
    for (std::size_t g = 0; g < k; ++g)
      if ((m >> g) & 1u) s += gdeg[g];
    return s;
  };
  auto alive = [&](std::uint32_t m) {
    return std::none_of(killed.begin(), killed.end(), [m](std::uint32_t q) { return (m & q) == q; });
  };
  ExteriorAlgebra A{std::move(generator_degrees), {}, {}};
  for (std::uint32_t m = 0; m < (1u << k); ++m)
    if (alive(m)) A.monomials.push_back(m);
  std::stable_sort(A.monomials.begin(), A.monomials.end(), [&](auto a, auto b) { return deg(a) < deg(b); });
  const std::size_t n = A.monomials.size();
  for (auto m : A.monomials) A.algebra.degree.push_back(deg(m));
  A.algebra.mult = Tensor({n, n, n});
  A.algebra.delta = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t a = A.monomials[i], b = A.monomials[j];
      if ((a & b) != 0 || !alive(a | b)) continue;
      // generators of b move past the larger generators of a
      int inversions = 0;
      for (std::size_t g = 0; g < k; ++g)
        if ((b >> g) & 1u) inversions += std::popcount(a >> (g + 1));
      A.algebra.mult(A.index_of(a | b), i, j) = inversions % 2 == 0 ? 1 : -1;
    }
  return A;
}

/// Extends generator images to the derivation
/// delta(g1 .. gk) = sum_p (-1)^{p-1} g1 .. delta(gp) .. gk.
inline void set_derivation(ExteriorAlgebra& A, const std::vector<Vector>& images) {
  const std::size_t k = A.generator_degrees.size(), n = A.algebra.dim();
  if (images.size() != k) throw ShapeError("set_derivation: one image per generator");
  auto mul = [&](const Vector& a, const Vector& b) { return evaluate(A.algebra.mult, a, b); };
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t m = A.monomials[i];
    Vector total(n);
    int before = 0;
    for (std::size_t g = 0; g < k; ++g) {
      if (!((m >> g) & 1u)) continue;
      Vector term = unit_vector(n, A.index_of(0));
      for (std::size_t h = 0; h < k; ++h) {
        if (!((m >> h) & 1u)) continue;
        term = mul(term, h == g ? images[g] : A.generator(h));
      }
      axpy(total, Rat(before % 2 == 0 ? 1 : -1), term);
      ++before;
    }
    for (std::size_t r = 0; r < n; ++r) A.algebra.delta(r, i) = total[r];
  }
  if (!A.algebra.check().passed()) throw MathError("set_derivation: not a differential on the quotient");
}

/// L (x) A with l_k(x1 a1, .., xk ak) = +-l_k(x1, .., xk) a1 .. ak and
/// l1(x a) = l1(x) a + (-1)^{|x|} x delta(a).
namespace detail {

struct Slot {
  int deg;
  std::size_t p, q;
};

/// Basis of L (x) A: pairs (p, q) ordered by total degree, then p, then q.
inline std::vector<Slot> tensor_slots(const GradedL3Algebra& L, const GradedCommutativeAlgebra& A) {
  std::vector<Slot> slots;
  for (std::size_t p = 0; p < L.total(); ++p)
    for (std::size_t q = 0; q < A.dim(); ++q) slots.push_back({L.degree_of(p) + A.degree[q], p, q});
  std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.deg < b.deg; });
  return slots;
}

}  // namespace detail

/// x (x) a in the basis of tensor_product(L, A).
inline Vector tensor_element(const GradedL3Algebra& L, const GradedCommutativeAlgebra& A, const Vector& x, const Vector& a) {
  const auto slots = detail::tensor_slots(L, A);
  Vector out(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) out[s] = x.at(slots[s].p) * a.at(slots[s].q);
  return out;
}

inline GradedL3Algebra tensor_product(const GradedL3Algebra& L, const GradedCommutativeAlgebra& A) {
  L.validate();
  const std::size_t nl = L.total(), na = A.dim();
  using detail::Slot;
  const std::vector<Slot> slots = detail::tensor_slots(L, A);
  if (slots.empty()) return GradedL3Algebra();
  const int dmin = slots.front().deg, dmax = slots.back().deg;
  std::vector<std::size_t> dims(static_cast<std::size_t>(dmax - dmin + 1), 0);
  std::vector<std::size_t> index(nl * na);
  for (std::size_t s = 0; s < slots.size(); ++s) {
    ++dims[static_cast<std::size_t>(slots[s].deg - dmin)];
    index[slots[s].p * na + slots[s].q] = s;
  }
  GradedL3Algebra out(dmin, dims);
  auto at = [&](std::size_t p, std::size_t q) { return index[p * na + q]; };
  auto xdeg = [&](std::size_t p) { return L.degree_of(p); };

  for (const Slot& s : slots) {
    const std::size_t col = at(s.p, s.q);
    for (std::size_t p = 0; p < nl; ++p)
      if (L.l1(p, s.p) != 0) out.l1(at(p, s.q), col) += L.l1(p, s.p);
    const Rat sign = xdeg(s.p) % 2 == 0 ? 1 : -1;
    for (std::size_t q = 0; q < na; ++q)
      if (A.delta(q, s.q) != 0) out.l1(at(s.p, q), col) += sign * A.delta(q, s.q);
  }
  for (const Slot& s1 : slots)
    for (const Slot& s2 : slots)
      for (std::size_t q = 0; q < na; ++q) {
        const Rat& m = A.mult(q, s1.q, s2.q);
        if (m == 0) continue;
        const Rat sign = detail::koszul(A.degree[s1.q], xdeg(s2.p));
        for (std::size_t p = 0; p < nl; ++p) {
          const Rat& c = L.l2(p, s1.p, s2.p);
          if (c != 0) out.l2(at(p, q), at(s1.p, s1.q), at(s2.p, s2.q)) += sign * m * c;
        }
      }
  if (!L.is_dgla()) {
    for (const Slot& s1 : slots)
      for (const Slot& s2 : slots)
        for (std::size_t q12 = 0; q12 < na; ++q12) {
          const Rat& m12 = A.mult(q12, s1.q, s2.q);
          if (m12 == 0) continue;
          for (const Slot& s3 : slots)
            for (std::size_t q = 0; q < na; ++q) {
              const Rat& m = A.mult(q, q12, s3.q);
              if (m == 0) continue;
              const int a1 = A.degree[s1.q], a2 = A.degree[s2.q];
              const Rat sign = detail::koszul(a1, xdeg(s2.p)) * detail::koszul(a1, xdeg(s3.p)) * detail::koszul(a2, xdeg(s3.p));
              for (std::size_t p = 0; p < nl; ++p) {
                const Rat& c = L.l3(p, s1.p, s2.p, s3.p);
                if (c != 0) out.l3(at(p, q), at(s1.p, s1.q), at(s2.p, s2.q), at(s3.p, s3.q)) += sign * m12 * m * c;
              }
            }
        }
  }
  return out;
}

}  // namespace lie2
