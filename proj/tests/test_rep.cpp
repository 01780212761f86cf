#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>
#include <string>

#include "doctest.h"
#include "oracle_fixtures.hpp"
#include "strand/catalog.hpp"
#include "strand/homological.hpp"
#include "strand/rep.hpp"
#include "strand/stringband.hpp"

using namespace strand;

namespace {

const AlgebraTable& table_of(const AlgebraFixture& fx) {
  static std::map<std::string, AlgebraTable> cache;
  auto it = cache.find(fx.name);
  if (it == cache.end())
    it = cache.emplace(fx.name, build_algebra(catalog(fx.name, fx.p), fx.p)).first;
  return it->second;
}

}  // namespace

TEST_CASE("simples and projectives validate everywhere") {
  for (const AlgebraFixture& fx : algebra_fixtures()) {
    const AlgebraTable& a = table_of(fx);
    INFO(fx.name);
    int proj_total = 0;
    for (int u = 0; u < a.nvertices(); ++u) {
      const Rep s = simple(a, u);
      CHECK(!validate(s).has_value());
      CHECK(s.total() == 1);
      CHECK(s.dims[u] == 1);
      const Rep p = projective(a, u);
      CHECK(!validate(p).has_value());
      CHECK(p.total() == fx.proj[u]);
      proj_total += p.total();
    }
    CHECK(proj_total == fx.dim);
    const Rep reg = regular_rep(a);
    CHECK(!validate(reg).has_value());
    CHECK(reg.total() == fx.dim);
  }
}

TEST_CASE("validate reports a relation violation") {
  const AlgebraTable& a = table_of(algebra_fixtures()[0]);  // D(1)_0
  Rep bad = blank_rep(a, {1});
  bad.arrows[0](0, 0) = Fp(1, a.p);
  bad.arrows[1](0, 0) = Fp(1, a.p);
  const auto report = validate(bad);
  REQUIRE(report.has_value());
  CHECK(!report->empty());
}

TEST_CASE("zero and blank reps") {
  const AlgebraTable& a = table_of(algebra_fixtures()[4]);  // D(3A)_1
  CHECK(zero_rep(a).total() == 0);
  const Rep s1 = simple(a, 1);
  CHECK(s1.dims == std::vector<int>{0, 1, 0});
}

TEST_CASE("direct sums") {
  const AlgebraFixture& fx = algebra_fixtures()[2];  // D(2A)_0
  const AlgebraTable& a = table_of(fx);
  const Rep s0 = simple(a, 0);
  const Rep twice = direct_sum(s0, s0);
  CHECK(twice.total() == 2);
  CHECK(hom_dim(twice, twice) == 4);
  CHECK(is_isomorphic(direct_sum(s0, zero_rep(a)), s0) == Iso::yes);
  const Rep p01 = direct_sum(projective(a, 0), projective(a, 1));
  CHECK(p01.total() == fx.dim);
  CHECK(is_isomorphic(p01, regular_rep(a)) == Iso::yes);
}

TEST_CASE("radical and top of modules") {
  const AlgebraTable& d1 = table_of(algebra_fixtures()[0]);
  const Rep s = simple(d1, 0);
  for (const MatF& incl : radical_inclusions(s)) CHECK(incl.cols() == 0);
  CHECK(top_dims(s) == std::vector<int>{1});

  const Rep p0 = projective(d1, 0);
  CHECK(top_dims(p0) == std::vector<int>{1});
  int rad_total = 0;
  for (const MatF& incl : radical_inclusions(p0)) rad_total += static_cast<int>(incl.cols());
  CHECK(rad_total == 3);

  const AlgebraTable& d2 = table_of(algebra_fixtures()[2]);
  const Rep mb = string_module(d2, parse_word(d2.pres.quiver, "beta"));
  CHECK(top_dims(mb) == std::vector<int>{1, 0});
  const Rep rad = submodule(mb, radical_inclusions(mb));
  CHECK(!validate(rad).has_value());
  CHECK(is_isomorphic(rad, simple(d2, 1)) == Iso::yes);
}

TEST_CASE("top multiplicities of projectives are vertex indicators") {
  for (const AlgebraFixture& fx : algebra_fixtures()) {
    const AlgebraTable& a = table_of(fx);
    for (int u = 0; u < a.nvertices(); ++u) {
      std::vector<int> want(a.nvertices(), 0);
      want[u] = 1;
      CHECK(top_dims(projective(a, u)) == want);
    }
  }
}

TEST_CASE("hom from a projective counts the vertex dimension") {
  std::mt19937 rng(41);
  for (const AlgebraFixture& fx : algebra_fixtures()) {
    const AlgebraTable& a = table_of(fx);
    auto strings = enumerate_strings(a, 4);
    std::shuffle(strings.begin(), strings.end(), rng);
    if (strings.size() > 6) strings.resize(6);
    for (const StringSpec& spec : strings) {
      const Rep m = string_module(a, spec);
      for (int u = 0; u < a.nvertices(); ++u)
        CHECK(hom_dim(projective(a, u), m) == m.dims[u]);
    }
  }
}

TEST_CASE("isomorphism testing") {
  const AlgebraTable& a = table_of(algebra_fixtures()[2]);  // D(2A)_0
  const Rep s0 = simple(a, 0);
  const Rep s1 = simple(a, 1);
  CHECK(is_isomorphic(s0, s0) == Iso::yes);
  CHECK(is_isomorphic(s0, s1) == Iso::no);
  CHECK(is_isomorphic(projective(a, 0), projective(a, 1)) == Iso::no);

  std::mt19937 rng(43);
  for (const AlgebraFixture& fx : algebra_fixtures()) {
    const AlgebraTable& alg = table_of(fx);
    auto strings = enumerate_strings(alg, 5);
    std::shuffle(strings.begin(), strings.end(), rng);
    if (strings.size() > 5) strings.resize(5);
    for (const StringSpec& spec : strings) {
      if (spec.word.empty()) continue;
      const Rep m = string_module(alg, spec.word);
      const Rep minv = string_module(alg, word_inverse(spec.word));
      CHECK(is_isomorphic(m, minv) == Iso::yes);
      CHECK(is_isomorphic(minv, m) == Iso::yes);  // symmetric
    }
  }
}

TEST_CASE("json round trip") {
  const AlgebraTable& a = table_of(algebra_fixtures()[6]);  // D(3B)_{2,1}
  const Rep m = string_module(a, parse_word(a.pres.quiver, "delta*gamma^-1"));
  const Rep back = rep_from_json(a, rep_to_json(m));
  CHECK(back.dims == m.dims);
  REQUIRE(back.arrows.size() == m.arrows.size());
  for (std::size_t i = 0; i < m.arrows.size(); ++i)
    CHECK(is_zero_mat(back.arrows[i] - m.arrows[i]));
}

TEST_CASE("eval_path multiplies right to left") {
  const AlgebraTable& a = table_of(algebra_fixtures()[2]);  // D(2A)_0
  const Rep p0 = projective(a, 0);
  const Quiver& q = a.pres.quiver;
  const Path ba = {q.arrow_index("beta"), q.arrow_index("alpha")};  // alpha acts first
  const MatF direct = eval_path(p0, ba);
  const MatF composed = p0.arrows[q.arrow_index("beta")] * p0.arrows[q.arrow_index("alpha")];
  CHECK(is_zero_mat(direct - composed));
  for (const Relation& rel : a.pres.relations) CHECK(is_zero_mat(eval_relation(p0, rel)));
}
