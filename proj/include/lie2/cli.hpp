#pragma once

// Command implementations for the lie2 tool. Each returns the exit code:
// 0 pass, 1 mathematical violation, 2 input error.

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lie2/cohom.hpp"
#include "lie2/defo.hpp"
#include "lie2/io.hpp"
#include "lie2/skew.hpp"

namespace lie2::cli {

struct Options {
  unsigned threads = 1;
  std::size_t limit = 20;
};

inline Document load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

inline void save(const Document& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << serialize(doc);
}

/// "1,-2/3,0" -> vector.
inline Vector parse_vector(const std::string& text) {
  Vector v;
  if (text.empty()) return v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(parse_rat(item));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("gamma: ") + e.what());
    }
  }
  return v;
}

inline std::string show(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

inline const char* yes(bool b) { return b ? "yes" : "no"; }
inline const char* pass(bool b) { return b ? "PASS" : "FAIL"; }

/// Runs fn, mapping input errors to 2 and mathematical preconditions to 1.
template <class F>
int guarded(std::ostream& err, F&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ShapeError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    err << "violation: " << e.what() << "\n";
    return 1;
  }
}

namespace detail {

inline CheckReport algebra_report(const LeibnizAlgebraFD& g, bool skew) {
  CheckReport r;
  if (skew) {
    const std::size_t n = g.dim;
    r.violations = run_equations({{"skew", "xy", {n, n}, [&](std::span<const std::size_t> t) {
                                     return g.bracket(g.e(t[0]), g.e(t[1])) + g.bracket(g.e(t[1]), g.e(t[0]));
                                   }}});
  }
  for (auto& v : g.leibniz_violations()) r.violations.push_back(std::move(v));
  return r;
}

inline CheckReport representation_report(const RepresentationFD& m) {
  CheckReport r = algebra_report(m.g, true);
  const std::size_t n = m.g.dim;
  for (auto& v : run_equations({{"rep", "xya", {n, n, m.dim_m}, [&](std::span<const std::size_t> t) {
                                   const Vector x = m.g.e(t[0]), y = m.g.e(t[1]), a = unit_vector(m.dim_m, t[2]);
                                   return m.act(m.g.bracket(x, y), a) - m.act(x, m.act(y, a)) + m.act(y, m.act(x, a));
                                 }}}))
    r.violations.push_back(std::move(v));
  return r;
}

inline CheckReport check_document(const Document& doc, const Options& o) {
  const CheckOptions co{o.threads};
  const Payload& p = doc.payload;
  if (std::holds_alternative<TwoTermComplex>(p)) return {};
  if (auto* e = std::get_if<EL2Algebra>(&p)) return check_el2(*e, co);
  if (auto* m = std::get_if<ELMorphism>(&p)) return check_morphism(*m, co);
  if (auto* t = std::get_if<ELTwoMorphism>(&p)) return check_2morphism(*t, co);
  if (auto* g = std::get_if<LieAlgebraFD>(&p)) return algebra_report(*g, true);
  if (auto* g = std::get_if<LeibnizAlgebraFD>(&p)) return algebra_report(*g, false);
  if (auto* m = std::get_if<RepresentationFD>(&p)) return representation_report(*m);
  if (auto* c = std::get_if<PairDocument>(&p)) return cocycle_report(c->rep, c->pair, co);
  if (auto* L = std::get_if<GradedL3Algebra>(&p)) return check_graded(*L, co);
  const auto& mc = std::get<McProblem>(p);
  CheckReport r = check_graded(mc.algebra, co);
  const Vector res = mc_residual(mc.algebra, mc.gamma);
  if (!is_zero(res)) r.violations.push_back({"maurer_cartan", "", {}, res});
  return r;
}

inline RepresentationFD representation_of(const Document& doc) {
  if (auto* m = std::get_if<RepresentationFD>(&doc.payload)) return *m;
  if (auto* g = std::get_if<LieAlgebraFD>(&doc.payload)) return RepresentationFD(*g, 1, Tensor({1, g->dim, 1}));
  throw InputError("expected a lie_algebra or representation document, got " + doc.kind());
}

inline McProblem mc_problem_of(const Document& doc, const std::optional<std::string>& gamma) {
  if (auto* p = std::get_if<McProblem>(&doc.payload)) {
    if (!gamma) return *p;
    McProblem q{p->algebra, parse_vector(*gamma)};
    if (q.gamma.size() != q.algebra.dim(1)) throw InputError("gamma: expected " + std::to_string(q.algebra.dim(1)) + " coordinates");
    return q;
  }
  if (auto* L = std::get_if<GradedL3Algebra>(&doc.payload)) {
    McProblem q{*L, gamma ? parse_vector(*gamma) : Vector(L->dim(1))};
    if (q.gamma.size() != L->dim(1)) throw InputError("gamma: expected " + std::to_string(L->dim(1)) + " coordinates");
    return q;
  }
  throw InputError("expected a graded_l3 or mc_problem document, got " + doc.kind());
}

}  // namespace detail

inline int check(const std::string& path, const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Document doc = load(path);
    const CheckReport r = detail::check_document(doc, o);
    out << "kind: " << doc.kind() << "\n";
    r.write(out, o.limit);
    out << "result: " << pass(r.passed()) << "\n";
    return r.passed() ? 0 : 1;
  });
}

inline int ss(const std::string& path, const std::optional<std::string>& output, const Options& o, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const Document doc = load(path);
    const auto* e = std::get_if<EL2Algebra>(&doc.payload);
    if (!e) throw InputError("ss expects an el2 document, got " + doc.kind());
    const EL2Algebra s = skew_symmetrize(*e);
    const bool ok = check_el2(s, {o.threads}).passed();
    out << "check_el2: " << pass(ok) << "\n";
    out << "semistrict: " << yes(is_semistrict(s)) << "\n";
    out << "strict: " << yes(is_strict(s)) << "\n";
    if (output) save(make_document(s, doc.name, doc.description), *output);
    return ok && is_semistrict(s) ? 0 : 1;
  });
}

inline int cohomology(const std::vector<std::string>& paths, bool ce, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (paths.empty() || paths.size() > 2) throw InputError("cohomology expects one or two files");
    RepresentationFD m = detail::representation_of(load(paths.back()));
    if (paths.size() == 2) {
      const Document first = load(paths.front());
      const auto* g = std::get_if<LieAlgebraFD>(&first.payload);
      if (!g) throw InputError("the first file must be a lie_algebra document");
      if (!(*g == m.g)) throw InputError("the representation is over a different Lie algebra");
    }
    if (!detail::representation_report(m).passed()) throw MathError("not a Lie algebra representation");
    const CohomologySpace h = hl3(m);
    out << "dim ZL3: " << h.Z.dim() << "\n";
    out << "dim BL3: " << h.B.dim() << "\n";
    out << "dim HL3: " << h.dim << "\n";
    for (std::size_t k = 0; k < h.pairs.size(); ++k) {
      out << "class " << k << " s: " << show(Vector(h.pairs[k].s.data().begin(), h.pairs[k].s.data().end())) << "\n";
      out << "class " << k << " j: " << show(Vector(h.pairs[k].j.data().begin(), h.pairs[k].j.data().end())) << "\n";
    }
    if (!ce) return 0;
    const CEH3 h3 = ce_h3(m);
    out << "dim H3: " << h3.dim << "\n";
    out << "ss matrix (H3 coordinates of the ss image of each class):\n";
    for (std::size_t k = 0; k < h.pairs.size(); ++k) {
      const auto c = h3.class_of(ce_coordinates(ss_class(m, h.pairs[k]), m.g.dim, 3));
      out << "  class " << k << ": " << show(*c) << "\n";
    }
    const ExactSequenceReport r = exact_sequence_report(m);
    out << "dim abelianization: " << r.abelianization_dim << "\n";
    out << "dim Hom(wedge2 a, M): " << r.hom_dim << "\n";
    out << "iota lands in ZL3: " << yes(r.iota_lands_in_zl3) << "\n";
    out << "iota injective: " << yes(r.iota_injective) << "\n";
    out << "ss surjective: " << yes(r.ss_surjective) << "\n";
    out << "ker ss = image iota: " << yes(r.kernel_is_iota_image) << "\n";
    out << "splitting: " << yes(r.splitting_ok) << "\n";
    out << "dimensions add up: " << yes(r.dims_add_up) << "\n";
    out << "exact sequence: " << pass(r.passed()) << "\n";
    return r.passed() ? 0 : 1;
  });
}

inline int classify(const std::string& path, const std::optional<std::string>& output, const Options& o,
                    std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Document doc = load(path);
    const auto* e = std::get_if<EL2Algebra>(&doc.payload);
    if (!e) throw InputError("classify expects an el2 document, got " + doc.kind());
    if (!check_el2(*e, {o.threads}).passed()) throw MathError("input fails the axioms");
    const SkeletalTransfer t = transfer_to_skeletal(*e);
    const SkeletalData d = extract_class(t.skeletal);
    out << "dim g: " << d.rep.g.dim << "\n";
    out << "g structure: " << show(Vector(d.rep.g.c.data().begin(), d.rep.g.c.data().end())) << "\n";
    out << "dim M: " << d.rep.dim_m << "\n";
    out << "rho: " << show(Vector(d.rep.rho.data().begin(), d.rep.rho.data().end())) << "\n";
    const CohomologySpace h = hl3(d.rep);
    const auto c = h.class_of(flatten(d.pair));
    out << "dim HL3: " << h.dim << "\n";
    out << "class coordinates: " << show(*c) << "\n";
    out << "s: " << show(Vector(d.pair.s.data().begin(), d.pair.s.data().end())) << "\n";
    out << "j: " << show(Vector(d.pair.j.data().begin(), d.pair.j.data().end())) << "\n";
    const bool morphism = check_morphism(t.equivalence, {o.threads}).passed();
    const bool equivalence = is_equivalence(t.equivalence);
    out << "certificate morphism: " << pass(morphism) << "\n";
    out << "certificate equivalence: " << yes(equivalence) << "\n";
    if (output) save(make_document(t.equivalence, doc.name, "equivalence from the skeletal model"), *output);
    return morphism && equivalence ? 0 : 1;
  });
}

inline int mc(const std::string& path, const std::optional<std::string>& gamma, const std::optional<std::string>& output,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Document doc = load(path);
    const McProblem p = detail::mc_problem_of(doc, gamma);
    const Vector r = mc_residual(p.algebra, p.gamma);
    out << "residual: " << show(r) << "\n";
    out << "maurer-cartan: " << yes(is_zero(r)) << "\n";
    if (!is_zero(r)) return 1;
    if (output) save(make_document(twist(p.algebra, p.gamma), doc.name, "twisted"), *output);
    return 0;
  });
}

inline int inner_sym(const std::string& path, const std::optional<std::string>& gamma, int n, bool skew,
                     const std::optional<std::string>& output, const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (n != 2 && n != 3) throw InputError("--n must be 2 or 3");
    const Document doc = load(path);
    const McProblem p = detail::mc_problem_of(doc, gamma);
    const CheckOptions co{o.threads};
    bool ok = true;
    EL2Algebra e;
    if (n == 2) {
      e = inner_symmetries_n2(p.algebra, p.gamma);
      const bool valid = check_el2(e, co).passed();
      out << "check_el2: " << pass(valid) << "\n";
      out << "semistrict: " << yes(is_semistrict(e)) << "\n";
      out << "strict: " << yes(is_strict(e)) << "\n";
      ok = valid && is_semistrict(e);
      if (is_strict(e)) {
        const CheckReport cm = crossed_module_report(e.bracket(), co);
        cm.write(out, o.limit);
        out << "crossed module: " << pass(cm.passed()) << "\n";
        ok = ok && cm.passed();
      }
    } else {
      const InnerSymmetries3 s = inner_symmetries_n3(p.algebra, p.gamma);
      e = s.algebra;
      const bool valid = check_el2(e, co).passed();
      const CheckReport pr = check_morphism(s.partial, co);
      const CheckReport ar = symmetry_action_report(s, co);
      out << "dim C0: " << e.n0() << "\n";
      out << "dim C-1: " << e.n1() << "\n";
      out << "dim symmetries: " << s.kernel.dim() << "\n";
      out << "check_el2: " << pass(valid) << "\n";
      out << "hemistrict: " << yes(is_hemistrict(e)) << "\n";
      pr.write(out, o.limit);
      out << "partial is a morphism: " << pass(pr.passed()) << "\n";
      ar.write(out, o.limit);
      out << "action and crossed-module identities: " << pass(ar.passed()) << "\n";
      ok = valid && is_hemistrict(e) && pr.passed() && ar.passed();
    }
    if (skew) {
      e = skew_symmetrize(e);
      const bool valid = check_el2(e, co).passed();
      out << "skew check_el2: " << pass(valid) << "\n";
      out << "skew semistrict: " << yes(is_semistrict(e)) << "\n";
      ok = ok && valid && is_semistrict(e);
    }
    if (output) save(make_document(e, doc.name, skew ? "skew-symmetrized symmetries" : "symmetries"), *output);
    out << "result: " << pass(ok) << "\n";
    return ok ? 0 : 1;
  });
}

}  // namespace lie2::cli
