#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "dgla_corpus.hpp"
#include "lie2/io.hpp"
#include "testing.hpp"

namespace lie2 {
namespace {

using testing::Rng;

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::filesystem::path fixtures = LIE2_FIXTURE_DIR;

TEST(Io, FixtureFilesAreCanonical) {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(fixtures)) {
    const std::string text = read_file(entry.path());
    EXPECT_EQ(serialize(parse_document(text)), text) << entry.path();
    ++count;
  }
  EXPECT_GE(count, 15u);
}

TEST(Io, FixtureFilesMatchTheCorpus) {
  EXPECT_EQ(parse_document(read_file(fixtures / "sl2.json")), make_document(corpus::sl2(), "sl2", "basis e, f, h"));
  EXPECT_EQ(parse_document(read_file(fixtures / "sl2_string.json")),
            make_document(string_2_algebra(corpus::sl2(), corpus::sl2_killing()), "sl2 string"));
  const auto f = corpus::dgla_fixtures()[0];
  EXPECT_EQ(parse_document(read_file(fixtures / "dgla_sl2_delta.json")), make_document(McProblem{f.L, f.gamma}, f.name));
}

TEST(Io, EmptyComplexRoundtrips) {
  const Document d = make_document(TwoTermComplex());
  const std::string text = serialize(d);
  EXPECT_EQ(parse_document(text), d);
  EXPECT_EQ(serialize(parse_document(text)), text);
}

TEST(Io, ParseOfSerializeIsIdentity) {
  Rng rng(701);
  std::vector<Document> docs;
  for (const auto& [name, e] : corpus::el2_structures()) {
    const ChainMap phi{testing::random_invertible(rng, e.n0()), testing::random_invertible(rng, e.n1())};
    const ELMorphism m = transport_structure(e, phi, testing::random_tensor(rng, {e.n1(), e.n0(), e.n0()}, 0.5));
    docs.push_back(make_document(m.dst, name, "transported"));
    docs.push_back(make_document(m));
    docs.push_back(make_document(homotopic_morphism(m, testing::random_matrix(rng, e.n1(), e.n0()))));
  }
  for (const auto& [name, m] : corpus::modules()) {
    docs.push_back(make_document(m, name));
    docs.push_back(make_document(PairDocument{m, zero_pair(m)}));
  }
  docs.push_back(make_document(corpus::square_leibniz()));
  for (const auto& [name, L, gamma] : corpus::linf_fixtures()) docs.push_back(make_document(McProblem{L, gamma}, name));
  docs.push_back(make_document(corpus::linf_fixtures()[0].L));
  for (const auto& d : docs) EXPECT_EQ(parse_document(serialize(d)), d) << d.kind() << " " << d.name;
}

TEST(Io, LeibnizAndLieKindsStayDistinct) {
  const Document lie = parse_document(serialize(make_document(corpus::abelian(2))));
  const Document leib = parse_document(serialize(make_document(LeibnizAlgebraFD(corpus::abelian(2)))));
  EXPECT_EQ(lie.kind(), "lie_algebra");
  EXPECT_EQ(leib.kind(), "leibniz_algebra");
}

TEST(Io, LargeTensorsUseSparseEntries) {
  const GradedL3Algebra L = corpus::linf_fixtures()[0].L;
  const std::string text = serialize(make_document(L));
  EXPECT_NE(text.find("\"entries\""), std::string::npos);
  EXPECT_EQ(std::get<GradedL3Algebra>(parse_document(text).payload), L);
}

TEST(Io, Errors) {
  auto doc = [](const std::string& scalar) {
    return R"({"kind": "complex", "n0": 1, "n1": 1, "d": {"shape": [1, 1], "data": [[)" + scalar + "]]}}";
  };
  EXPECT_NO_THROW(parse_document(doc("\"-3/6\"")));
  EXPECT_EQ(std::get<TwoTermComplex>(parse_document(doc("\"-3/6\"")).payload).d(0, 0), frac(-1, 2));
  EXPECT_THROW(parse_document(doc("\"1/0\"")), InputError);
  EXPECT_THROW(parse_document(doc("0.5")), InputError);
  EXPECT_THROW(parse_document(doc("\"x\"")), InputError);
  EXPECT_THROW(parse_document(R"({"kind": "complex", "n0": 2, "n1": 1, "d": {"shape": [1, 1], "data": [[1]]}})"), InputError);
  EXPECT_THROW(parse_document(R"({"kind": "nothing"})"), InputError);
  EXPECT_THROW(parse_document(R"({"kind": "el2"})"), InputError);
  try {
    parse_document("{\"kind\": \"complex\",\n  \"n0\": }");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
}

}  // namespace
}  // namespace lie2
