#pragma once

// Skew-symmetrization SS: weak Lie 2-algebras to semistrict ones.

#include "lie2/morph.hpp"

namespace lie2 {

namespace detail {

/// sum over S3 of sign(sigma) fn(x_sigma(1), x_sigma(2), x_sigma(3)).
template <class F>
Vector alternating_sum3(const Vector& x, const Vector& y, const Vector& z, F&& fn) {
  return fn(x, y, z) - fn(y, x, z) - fn(x, z, y) - fn(z, y, x) + fn(y, z, x) + fn(z, x, y);
}

}  // namespace detail

inline EL2Algebra skew_symmetrize(const EL2Algebra& e) {
  if (!check_el2(e).passed()) throw MathError("skew_symmetrize: input is not a 2-term EL-infinity algebra");
  const std::size_t n0 = e.n0(), n1 = e.n1();
  const detail::El2Eval s{e};
  const Rat half = frac(1, 2), sixth = frac(1, 6), twelfth = frac(1, 12);
  using T = std::span<const std::size_t>;
  EL2Algebra out(e.complex);
  out.b00 = tabulate(n0, {n0, n0}, [&](T i) {
    const Vector x = s.e0(i[0]), y = s.e0(i[1]);
    return half * (s.xy(x, y) - s.xy(y, x));
  });
  out.b01 = tabulate(n1, {n0, n1}, [&](T i) {
    const Vector x = s.e0(i[0]), a = s.e1(i[1]);
    return half * (s.xb(x, a) - s.ay(a, x));
  });
  out.b10 = tabulate(n1, {n1, n0}, [&](T i) { return -evaluate(out.b01, s.e0(i[1]), s.e1(i[0])); });
  out.jac = tabulate(n1, {n0, n0, n0}, [&](T i) {
    const Vector x = s.e0(i[0]), y = s.e0(i[1]), z = s.e0(i[2]);
    const Vector bracket3 = detail::alternating_sum3(x, y, z, [&](const Vector& u, const Vector& v, const Vector& w) { return s.j(u, v, w); });
    const Vector t = detail::alternating_sum3(x, y, z, [&](const Vector& u, const Vector& v, const Vector& w) { return s.s(s.xy(u, v), w); });
    return sixth * bracket3 - twelfth * t;
  });
  return out;
}

/// (f0, f1, f2) goes to (f0, f1, the antisymmetric part of f2).
inline ELMorphism skew_symmetrize_morphism(const ELMorphism& m) {
  if (!check_morphism(m).passed()) throw MathError("skew_symmetrize_morphism: input is not a morphism");
  const std::size_t n1 = m.dst.n1(), n0 = m.src.n0();
  const Tensor f2 = tabulate(n1, {n0, n0}, [&](std::span<const std::size_t> i) {
    return frac(1, 2) * (evaluate(m.f2, unit_vector(n0, i[0]), unit_vector(n0, i[1])) - evaluate(m.f2, unit_vector(n0, i[1]), unit_vector(n0, i[0])));
  });
  return {skew_symmetrize(m.src), skew_symmetrize(m.dst), m.f, f2};
}

inline ELTwoMorphism skew_symmetrize_2morphism(const ELTwoMorphism& t) {
  if (!check_2morphism(t).passed()) throw MathError("skew_symmetrize_2morphism: input is not a 2-morphism");
  return {skew_symmetrize_morphism(t.src), skew_symmetrize_morphism(t.dst), t.theta};
}

}  // namespace lie2
