// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "dgla_corpus.hpp"
#include "lie2/cohom.hpp"
#include "lie2/defo.hpp"
#include "lie2/dkcore.hpp"
#include "lie2/skew.hpp"
#include "testing.hpp"

namespace lie2 {
namespace {

using testing::Rng;

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) note << "first failure: " << what;
    ok = false;
  }
};

TwoTermComplex random_complex(Rng& rng, std::size_t max_dim) {
  const std::size_t n0 = testing::random_dim(rng, 0, max_dim), n1 = testing::random_dim(rng, 0, max_dim);
  return TwoTermComplex(n0, n1, testing::random_matrix(rng, n0, n1, 0.6));
}

CocyclePair random_cocycle(Rng& rng, const RepresentationFD& m, const Subspace& z) {
  Vector v(z.ambient_dim());
  for (std::size_t k = 0; k < z.dim(); ++k) axpy(v, testing::random_rat(rng), z.vector(k));
  return unflatten(m, v);
}

ELMorphism random_transport(Rng& rng, const EL2Algebra& e) {
  const ChainMap phi{testing::random_invertible(rng, e.n0()), testing::random_invertible(rng, e.n1())};
  return transport_structure(e, phi, testing::random_tensor(rng, {e.n1(), e.n0(), e.n0()}, 0.5));
}

std::vector<Tensor*> structure_tensors(EL2Algebra& e) { return {&e.b00, &e.b01, &e.b10, &e.alt, &e.jac}; }

// from_leibniz, from_quadratic_lie, string_2_algebra, and from_skeletal_cocycle on every ZL3 basis element
std::vector<corpus::NamedEL2> constructor_corpus() {
  auto out = corpus::el2_structures();
  for (const auto& [name, m] : corpus::modules()) {
    const Subspace z = zl3(m);
    for (std::size_t k = 0; k < z.dim(); ++k)
      out.push_back({"skeletal/" + name + "/" + std::to_string(k), from_skeletal_cocycle(m, unflatten(m, z.vector(k)))});
  }
  return out;
}

std::set<std::pair<std::string, std::vector<std::size_t>>> localized(const std::vector<Violation>& vs, bool categorical) {
  std::set<std::pair<std::string, std::vector<std::size_t>>> out;
  for (const auto& v : vs) out.insert({categorical ? categorical_mirror(v.equation) : v.equation, v.tuple});
  return out;
}

bool formulations_agree(const EL2Algebra& e) {
  const CheckReport a = check_el2(e), b = categorical_coherence_check(e);
  return a.passed() == b.passed() && localized(a.violations, false) == localized(b.violations, true);
}

bool nonzero_residuals(const CheckReport& r) {
  for (const auto& v : r.violations)
    if (std::all_of(v.residual.begin(), v.residual.end(), [](const Rat& x) { return x == 0; })) return false;
  return true;
}

// k([x,y],z) for sl2 with its Killing form
Tensor sl2_cartan() {
  const LieAlgebraFD g = corpus::sl2();
  const Tensor k = corpus::sl2_killing();
  return tabulate(1, {3, 3, 3}, [&](std::span<const std::size_t> t) {
    const Vector xy = g.bracket(g.e(t[0]), g.e(t[1]));
    Rat v = 0;
    for (std::size_t i = 0; i < 3; ++i) v += xy[i] * k(i, t[2]);
    return Vector{v};
  });
}

// the skeletal structure of m, with a contractible summand added
EL2Algebra pad_with_contractible(const EL2Algebra& skel) {
  const std::size_t n0 = skel.n0() + 1, n1 = skel.n1() + 1;
  EL2Algebra big(TwoTermComplex(n0, n1, vstack(hstack(Matrix(n0 - 1, n1 - 1), Matrix(n0 - 1, 1)),
                                                hstack(Matrix(1, n1 - 1), Matrix::identity(1)))));
  using T = std::span<const std::size_t>;
  for_each_tuple({skel.n0(), skel.n0(), skel.n0()}, [&](T t) { big.b00(t[0], t[1], t[2]) = skel.b00(t[0], t[1], t[2]); });
  for_each_tuple({skel.n1(), skel.n0(), skel.n1()}, [&](T t) {
    big.b01(t[0], t[1], t[2]) = skel.b01(t[0], t[1], t[2]);
    big.b10(t[0], t[2], t[1]) = skel.b10(t[0], t[2], t[1]);
  });
  for_each_tuple({skel.n1(), skel.n0(), skel.n0()}, [&](T t) { big.alt(t[0], t[1], t[2]) = skel.alt(t[0], t[1], t[2]); });
  for_each_tuple({skel.n1(), skel.n0(), skel.n0(), skel.n0()},
                 [&](T t) { big.jac(t[0], t[1], t[2], t[3]) = skel.jac(t[0], t[1], t[2], t[3]); });
  return big;
}

Matrix inclusion(std::size_t n) { return vstack(Matrix::identity(n), Matrix(1, n)); }

void dold_kan(Outcome& o) {
  Rng rng(1001);
  for (int n = 0; n < 100; ++n) {
    const TwoTermComplex c = random_complex(rng, 8);
    o.require(normalize(gamma(c)) == c, "N(Gamma C) != C at sample " + std::to_string(n));
    const LinearCategory base = gamma(c);
    const Matrix q = testing::random_invertible(rng, base.arrows_dim);
    const Matrix qi = *inverse(q);
    const LinearCategory v{base.objects_dim, base.arrows_dim, base.source * qi, base.target * qi, q * base.identity};
    o.require(v.is_valid(), "twisted category invalid");
    o.require(is_category_iso(gamma(normalize(v)), v, gamma_normalize_iso(v)), "Gamma(N V) not isomorphic to V at sample " + std::to_string(n));
  }
  o.note << (o.ok ? "" : "; ") << "100 complexes";
}

void soundness(Outcome& o) {
  const auto structures = constructor_corpus();
  std::size_t perturbations = 0, undetected = 0, undetected_valid = 0;
  std::string first_undetected;
  std::set<std::string> where;
  for (const auto& [name, e] : structures) {
    o.require(check_el2(e).passed(), name + " fails check_el2");
    EL2Algebra p = e;
    const char* names[] = {"b00", "b01", "b10", "alt", "jac"};
    const auto ts = structure_tensors(p);
    for (std::size_t which = 0; which < ts.size(); ++which)
      for (std::size_t k = 0; k < ts[which]->size(); ++k) {
        ts[which]->data()[k] += 1;
        ++perturbations;
        const CheckReport r = check_el2(p);
        if (r.passed() || !nonzero_residuals(r)) {
          ++undetected;
          if (categorical_coherence_check(p).passed()) ++undetected_valid;
          where.insert(name.substr(0, name.rfind('/')) + ":" + names[which]);
          if (first_undetected.empty()) first_undetected = name + " " + names[which] + "[" + std::to_string(k) + "]";
        }
        ts[which]->data()[k] -= 1;
      }
  }
  o.require(undetected == 0, first_undetected + " +1 still satisfies every axiom");
  o.note << (o.ok ? "" : "; ") << structures.size() << " structures, " << perturbations << " perturbations, " << undetected
         << " undetected (" << undetected_valid << " of them valid structures by the categorical check)";
  if (!where.empty()) {
    o.note << "; undetected in";
    for (const auto& w : where) o.note << " " << w;
  }
}

void formulations(Outcome& o) {
  Rng rng(1003);
  const auto structures = constructor_corpus();
  for (const auto& [name, e] : structures) o.require(formulations_agree(e), name);
  std::size_t failing = 0;
  for (int n = 0; n < 50; ++n) {
    EL2Algebra e = structures[rng() % structures.size()].e;
    auto ts = structure_tensors(e);
    Tensor* t = ts[rng() % ts.size()];
    while (t->size() == 0) t = ts[rng() % ts.size()];
    t->data()[rng() % t->size()] += 1;
    if (!check_el2(e).passed()) ++failing;
    o.require(formulations_agree(e), "perturbation " + std::to_string(n));
  }
  o.note << (o.ok ? "" : "; ") << structures.size() << " corpus structures, 50 perturbed (" << failing << " failing)";
}

void skew(Outcome& o) {
  const EL2Algebra ss = skew_symmetrize(from_quadratic_lie(corpus::sl2(), corpus::sl2_killing()));
  o.require(ss == string_2_algebra(corpus::sl2(), corpus::sl2_killing()), "SS(quadratic sl2) != string sl2");
  o.require(ss.jac == frac(-1, 2) * sl2_cartan(), "jac != -1/2 k([x,y],z)");
  Rng rng(1005);
  std::vector<corpus::NamedEL2> structures = constructor_corpus();
  const std::size_t n = structures.size();
  for (std::size_t k = 0; k < n; ++k) structures.push_back({structures[k].name + "/transported", random_transport(rng, structures[k].e).dst});
  for (const auto& [name, e] : structures) {
    const EL2Algebra s = skew_symmetrize(e);
    o.require(check_el2(s).passed(), name + ": SS fails check_el2");
    o.require(is_semistrict(s), name + ": SS not semistrict");
    o.require(skew_symmetrize(s) == s, name + ": SS not idempotent");
  }
  for (int k = 0; k < 20; ++k) {
    const ELMorphism f = random_transport(rng, structures[rng() % structures.size()].e);
    const ELMorphism g = random_transport(rng, f.dst);
    o.require(check_morphism(f).passed() && check_morphism(g).passed(), "unverified pair");
    o.require(skew_symmetrize_morphism(compose(g, f)) == compose(skew_symmetrize_morphism(g), skew_symmetrize_morphism(f)),
              "composition pair " + std::to_string(k));
  }
  o.note << (o.ok ? "" : "; ") << structures.size() << " structures, 20 composable pairs";
}

void cohomology_lemma(Outcome& o) {
  Rng rng(1007);
  std::size_t modules = 0;
  for (const auto& [name, m] : corpus::modules()) {
    ++modules;
    for (int n = 0; n < 200; ++n)
      o.require(is_cocycle(m, coboundary(m, testing::random_tensor(rng, {m.dim_m, m.g.dim, m.g.dim}))), name);
  }
  o.note << (o.ok ? "" : "; ") << modules << " modules x 200";
}

void exact_sequence(Outcome& o) {
  const std::vector<std::pair<std::string, RepresentationFD>> cases{
      {"sl2/trivial", corpus::trivial(corpus::sl2(), 1)},
      {"abelian2/trivial", corpus::trivial(corpus::abelian(2), 1)},
      {"abelian3/trivial", corpus::trivial(corpus::abelian(3), 1)},
      {"nonabelian2/trivial", corpus::trivial(corpus::nonabelian2(), 1)},
      {"sl2/adjoint", corpus::adjoint(corpus::sl2())}};
  for (const auto& [name, m] : cases) {
    const ExactSequenceReport r = exact_sequence_report(m);
    o.require(r.hl3_dim == r.hom_dim + r.h3_dim, name + ": dimensions");
    o.require(r.splitting_ok, name + ": ss_class(0, phi) != phi");
    o.require(r.kernel_is_iota_image, name + ": ker ss != image of iota");
    o.require(r.passed(), name + ": exact sequence report");
    o.note << (o.ok ? "" : "; ") << name << " " << r.hl3_dim << "=" << r.hom_dim << "+" << r.h3_dim << (&name == &cases.back().first ? "" : ", ");
  }
}

void sl2_example(Outcome& o) {
  const RepresentationFD m = corpus::trivial(corpus::sl2(), 1);
  const Tensor k = corpus::sl2_killing();
  Tensor s({1, 3, 3});
  std::copy(k.data().begin(), k.data().end(), s.data().begin());
  const CocyclePair a{s, Tensor({1, 3, 3, 3})}, b{Tensor({1, 3, 3}), frac(-1, 2) * sl2_cartan()};
  o.require(is_cocycle(m, a) && is_cocycle(m, b), "pairs are not cocycles");
  o.require(classes_equal(m, a, b), "(k,0) and (0,-1/2 phi) differ");
  const ExactSequenceReport r = exact_sequence_report(m);
  o.require(r.hl3_dim == 1, "dim HL3 != 1");
  o.require(r.h3_dim == 1 && r.hom_dim == 0 && r.ss_surjective && r.kernel_is_iota_image, "ss is not an isomorphism");
  o.note << (o.ok ? "" : "; ") << "dim HL3 = " << r.hl3_dim << ", dim H3 = " << r.h3_dim;
}

void classification(Outcome& o) {
  Rng rng(1011);
  const auto modules = corpus::modules();
  std::size_t equal_pairs = 0, distinct_pairs = 0;
  for (int n = 0; n < 20; ++n) {
    const auto& [name, m] = modules[n % modules.size()];
    const Subspace z = zl3(m);
    const CocyclePair p = random_cocycle(rng, m, z);
    const CocyclePair q = n % 2 == 0 ? p + coboundary(m, testing::random_tensor(rng, {m.dim_m, m.g.dim, m.g.dim}))
                                     : p + random_cocycle(rng, m, z);
    const EL2Algebra e = from_skeletal_cocycle(m, p), e2 = from_skeletal_cocycle(m, q);
    const bool equal = classes_equal(m, p, q);
    if (n % 2 == 0) o.require(equal, name + ": coboundary shift changed the class");
    const auto f = skeletal_equivalence(e, e2);
    o.require(f.has_value() == equal, name + ": equivalence existence disagrees with classes_equal");
    (equal ? equal_pairs : distinct_pairs)++;
    if (!f) continue;
    o.require(check_morphism(*f).passed() && is_equivalence(*f), name + ": equivalence fails verification");
    const SkeletalInverse inv = skeletal_inverse(*f, testing::random_matrix(rng, m.dim_m, m.g.dim));
    o.require(check_morphism(inv.inverse).passed() && check_2morphism(inv.to_identity).passed(), name + ": inverse/theta fails");
  }
  o.require(equal_pairs > 0 && distinct_pairs > 0, "one direction was never exercised");
  o.note << (o.ok ? "" : "; ") << equal_pairs << " equal, " << distinct_pairs << " distinct";
}

void invariance(Outcome& o) {
  Rng rng(1013);
  const auto modules = corpus::modules();
  for (int n = 0; n < 30; ++n) {
    const auto& [name, m] = modules[n % modules.size()];
    const CocyclePair p = random_cocycle(rng, m, zl3(m));
    const EL2Algebra skel = from_skeletal_cocycle(m, p);
    const EL2Algebra big = pad_with_contractible(skel);
    const ChainMap phi{testing::random_invertible(rng, big.n0()), testing::random_invertible(rng, big.n1())};
    const EL2Algebra twisted = transport_structure(big, phi, testing::random_tensor(rng, {big.n1(), big.n0(), big.n0()}, 0.5)).dst;
    o.require(!twisted.complex.skeletal(), name + ": input is skeletal");
    const SkeletalTransfer t = transfer_to_skeletal(twisted);
    o.require(check_el2(t.skeletal).passed(), name + ": transferred structure fails check_el2");
    o.require(check_morphism(t.equivalence).passed() && is_equivalence(t.equivalence), name + ": no equivalence certificate");
    // the composite skel -> big -> twisted -> H, an isomorphism of skeletal complexes
    const HodgeDecomposition hd = hodge_decompose(twisted.complex);
    const ChainMap back{*inverse(hd.p.f0 * phi.f0 * inclusion(skel.n0())), *inverse(hd.p.f1 * phi.f1 * inclusion(skel.n1()))};
    const EL2Algebra pulled = transport_structure(t.skeletal, back, Tensor({skel.n1(), skel.n0(), skel.n0()})).dst;
    const SkeletalData d = extract_class(pulled);
    o.require(d.rep == m, name + ": transferred (g, M) differs");
    o.require(d.rep == m && classes_equal(m, p, d.pair), name + ": class changed under transfer");
  }
  o.note << (o.ok ? "" : "; ") << "30 transfers";
}

void deformation(Outcome& o) {
  const auto fixtures = corpus::dgla_fixtures();
  for (const auto& [name, L, gamma] : fixtures) {
    o.require(std::any_of(gamma.begin(), gamma.end(), [](const Rat& x) { return x != 0; }), name + ": gamma is zero");
    o.require(L.is_dgla(), name + ": not a dgla");
    o.require(is_mc(L, gamma), name + ": MC residual nonzero");
    o.require(check_graded(twist(L, gamma)).passed(), name + ": twist fails check_graded");
    const InnerSymmetries3 s = inner_symmetries_n3(L, gamma);
    o.require(check_el2(s.algebra).passed() && is_hemistrict(s.algebra), name + ": inner symmetries not a hemistrict EL2 algebra");
    o.require(check_morphism(s.partial).passed(), name + ": partial fails check_morphism");
    const CheckReport action = symmetry_action_report(s);
    o.require(action.count("crossed_equivariance") == 0 && action.count("crossed_peiffer") == 0, name + ": crossed-module identities");
    o.require(action.passed(), name + ": action report");
    const EL2Algebra ss = skew_symmetrize(s.algebra);
    o.require(check_el2(ss).passed() && is_semistrict(ss), name + ": SS fails");
  }
  o.note << (o.ok ? "" : "; ") << fixtures.size() << " dgla fixtures";
}

}  // namespace
}  // namespace lie2

int main() {
  using namespace lie2;
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"Dold-Kan roundtrip", dold_kan},
      {"axiom-checker soundness", soundness},
      {"equivalence of formulations", formulations},
      {"skew-symmetrization", skew},
      {"coboundaries are cocycles", cohomology_lemma},
      {"exact sequence", exact_sequence},
      {"sl2 example", sl2_example},
      {"classification", classification},
      {"homotopy invariance", invariance},
      {"deformation module", deformation}};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << " exception: " << e.what();
    }
    if (!o.ok) ++failed;
    std::cout << "criterion " << k + 1 << " " << (o.ok ? "PASS" : "FAIL") << ": " << criteria[k].first << " (" << o.note.str() << ")"
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
