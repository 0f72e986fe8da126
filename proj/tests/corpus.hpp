#pragma once

// Small algebras used across the suites.

#include <string>
#include <vector>

#include "lie2/el2.hpp"

namespace lie2::corpus {

inline Tensor structure(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t, Rat>> entries) {
  Tensor c({n, n, n});
  for (const auto& [k, i, j, v] : entries) c(k, i, j) = v;
  return c;
}

/// Lie algebra from the brackets [e_i, e_j] for i < j.
inline LieAlgebraFD lie(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t, Rat>> upper) {
  Tensor c({n, n, n});
  for (const auto& [k, i, j, v] : upper) {
    c(k, i, j) = v;
    c(k, j, i) = -v;
  }
  return LieAlgebraFD(n, c);
}

// e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f
inline LieAlgebraFD sl2() { return lie(3, {{2, 0, 1, 1}, {0, 0, 2, -2}, {1, 1, 2, 2}}); }

inline Tensor sl2_killing() {
  Tensor k({3, 3});
  k(0, 1) = k(1, 0) = 4;
  k(2, 2) = 8;
  return k;
}

// [e_i, e_j] = eps_ijk e_k
inline LieAlgebraFD so3() { return lie(3, {{2, 0, 1, 1}, {0, 1, 2, 1}, {1, 2, 0, 1}}); }

inline Tensor so3_form() {
  Tensor k({3, 3});
  for (std::size_t i = 0; i < 3; ++i) k(i, i) = 1;
  return k;
}

inline LieAlgebraFD abelian(std::size_t n) { return LieAlgebraFD(n, Tensor({n, n, n})); }

// [x, y] = y
inline LieAlgebraFD nonabelian2() { return lie(2, {{1, 0, 1, 1}}); }

inline Tensor identity_form(std::size_t n) {
  Tensor k({n, n});
  for (std::size_t i = 0; i < n; ++i) k(i, i) = 1;
  return k;
}

inline RepresentationFD trivial(const LieAlgebraFD& g, std::size_t m) { return RepresentationFD(g, m, Tensor({m, g.dim, m})); }

inline RepresentationFD adjoint(const LieAlgebraFD& g) { return RepresentationFD(g, g.dim, g.c); }

inline RepresentationFD sl2_standard() {
  Tensor rho({2, 3, 2});
  rho(0, 0, 1) = 1;   // e
  rho(1, 1, 0) = 1;   // f
  rho(0, 2, 0) = 1;   // h
  rho(1, 2, 1) = -1;
  return RepresentationFD(sl2(), 2, rho);
}

/// The 2-dim Leibniz algebra with [x,x] = y.
inline LeibnizAlgebraFD square_leibniz() { return LeibnizAlgebraFD(2, structure(2, {{1, 0, 0, 1}})); }

/// [x,x] = y, [x,y] = z.
inline LeibnizAlgebraFD cyclic_leibniz() { return LeibnizAlgebraFD(3, structure(3, {{1, 0, 0, 1}, {2, 0, 1, 1}})); }

/// Brackets of x, y land in the center span{z}: [x,x] = z, [x,y] = z, [y,x] = 2z.
inline LeibnizAlgebraFD central_leibniz() {
  return LeibnizAlgebraFD(3, structure(3, {{2, 0, 0, 1}, {2, 0, 1, 1}, {2, 1, 0, 2}}));
}

/// g + M with [(x,m),(y,n)] = ([x,y], x.n).
inline LeibnizAlgebraFD hemisemidirect(const RepresentationFD& r) {
  const std::size_t n = r.g.dim, m = r.dim_m, t = n + m;
  Tensor c({t, t, t});
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(k, i, j) = r.g.c(k, i, j);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t b = 0; b < m; ++b) c(n + a, i, n + b) = r.rho(a, i, b);
  return LeibnizAlgebraFD(t, c);
}

struct NamedLeibniz {
  std::string name;
  LeibnizAlgebraFD g;
};

inline std::vector<NamedLeibniz> leibniz_algebras() {
  return {{"square", square_leibniz()},
          {"cyclic", cyclic_leibniz()},
          {"central", central_leibniz()},
          {"abelian2", abelian(2)},
          {"sl2", sl2()},
          {"hemisemidirect_sl2_std", hemisemidirect(sl2_standard())},
          {"hemisemidirect_nonabelian2_adj", hemisemidirect(adjoint(nonabelian2()))}};
}

struct NamedQuadratic {
  std::string name;
  LieAlgebraFD g;
  Tensor form;
};

inline std::vector<NamedQuadratic> quadratic_lie_algebras() {
  Tensor sym({2, 2});
  sym(0, 0) = 2;
  sym(0, 1) = sym(1, 0) = frac(1, 3);
  sym(1, 1) = -1;
  return {{"sl2", sl2(), sl2_killing()}, {"so3", so3(), so3_form()}, {"abelian2", abelian(2), sym},
          {"abelian3", abelian(3), identity_form(3)}};
}

struct NamedModule {
  std::string name;
  RepresentationFD rep;
};

/// The (g, M) pairs used by the cohomology suites.
inline std::vector<NamedModule> modules() {
  return {{"sl2_trivial", trivial(sl2(), 1)},       {"abelian2_trivial", trivial(abelian(2), 1)},
          {"abelian3_trivial", trivial(abelian(3), 1)}, {"nonabelian2_trivial", trivial(nonabelian2(), 1)},
          {"sl2_adjoint", adjoint(sl2())},          {"so3_trivial", trivial(so3(), 1)},
          {"sl2_standard", sl2_standard()},         {"nonabelian2_adjoint", adjoint(nonabelian2())},
          {"abelian1_trivial2", trivial(abelian(1), 2)}};
}

}  // namespace lie2::corpus

namespace lie2::corpus {

struct NamedEL2 {
  std::string name;
  EL2Algebra e;
};

/// Constructor outputs that do not need the cohomology module.
inline std::vector<NamedEL2> el2_structures() {
  std::vector<NamedEL2> out;
  for (const auto& [name, g] : leibniz_algebras()) out.push_back({"leibniz/" + name, from_leibniz(g)});
  for (const auto& [name, g, k] : quadratic_lie_algebras()) {
    out.push_back({"quadratic/" + name, from_quadratic_lie(g, k)});
    out.push_back({"string/" + name, string_2_algebra(g, k)});
  }
  return out;
}

}  // namespace lie2::corpus
