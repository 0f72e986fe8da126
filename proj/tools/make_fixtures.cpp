// Writes the canonical fixture documents into the directory given as argv[1].

#include <fstream>
#include <iostream>
#include <string>

#include "corpus.hpp"
#include "dgla_corpus.hpp"
#include "lie2/io.hpp"

using namespace lie2;

namespace {

void write(const std::string& dir, const std::string& file, const Document& doc) {
  std::ofstream out(dir + "/" + file, std::ios::binary);
  out << serialize(doc);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  const LieAlgebraFD sl2 = corpus::sl2();
  const Tensor k = corpus::sl2_killing();
  write(dir, "empty_complex.json", make_document(TwoTermComplex(), "empty"));
  write(dir, "sl2.json", make_document(sl2, "sl2", "basis e, f, h"));
  write(dir, "sl2_adjoint.json", make_document(corpus::adjoint(sl2), "sl2 adjoint"));
  write(dir, "abelian2.json", make_document(corpus::abelian(2), "abelian2"));
  write(dir, "square_leibniz.json", make_document(corpus::square_leibniz(), "square", "[x,x] = y"));
  write(dir, "square_leibniz_el2.json", make_document(from_leibniz(corpus::square_leibniz()), "square"));
  const EL2Algebra q = from_quadratic_lie(sl2, k);
  write(dir, "sl2_quadratic.json", make_document(q, "sl2 quadratic", "alternator = Killing form"));
  write(dir, "sl2_string.json", make_document(string_2_algebra(sl2, k), "sl2 string"));
  EL2Algebra broken = q;
  broken.b00(2, 0, 1) = 2;
  write(dir, "sl2_quadratic_broken.json", make_document(broken, "sl2 quadratic with [e,f] = 2h"));
  const RepresentationFD triv = corpus::trivial(sl2, 1);
  const CocyclePair kpair{Tensor({1, 3, 3}, std::vector<Rat>(k.data().begin(), k.data().end())), Tensor({1, 3, 3, 3})};
  write(dir, "sl2_pair_killing.json", make_document(PairDocument{triv, kpair}, "(k, 0)"));
  const ELMorphism id = identity_morphism(string_2_algebra(sl2, k));
  write(dir, "sl2_string_identity.json", make_document(id, "identity"));
  const ChainMap phi{Matrix::from_rows({{1, 1, 0}, {0, 1, 0}, {2, 0, 1}}), Matrix::from_rows({{3}})};
  Tensor f2({1, 3, 3});
  f2(0, 0, 1) = 1;
  f2(0, 2, 2) = frac(-1, 2);
  const ELMorphism transported = transport_structure(q, phi, f2);
  write(dir, "sl2_quadratic_transported.json", make_document(transported.dst, "sl2 quadratic, transported"));
  write(dir, "sl2_quadratic_transport_map.json", make_document(transported, "transport"));
  Matrix theta(1, 3);
  theta(0, 1) = 2;
  write(dir, "sl2_quadratic_homotopy.json", make_document(homotopic_morphism(transported, theta), "homotopy"));
  for (const auto& [name, L, gamma] : corpus::dgla_fixtures()) {
    std::string file = name;
    for (auto& c : file)
      if (c == '/') c = '_';
    write(dir, "dgla_" + file + ".json", make_document(McProblem{L, gamma}, name));
  }
  for (const auto& [name, L, gamma] : corpus::linf_fixtures()) {
    std::string file = name;
    for (auto& c : file)
      if (c == '/') c = '_';
    write(dir, "linf_" + file + ".json", make_document(McProblem{L, gamma}, name));
  }
  return 0;
}
