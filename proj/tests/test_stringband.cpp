#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <string>

#include "doctest.h"
#include "oracle_fixtures.hpp"
#include "strand/catalog.hpp"
#include "strand/stringband.hpp"

using namespace strand;

namespace {

const AlgebraTable& table_of(const char* name) {
  static std::map<std::string, AlgebraTable> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    const long long p = (std::string(name) == "D(1)_1" || std::string(name) == "D(2A)_1") ? 2 : 5;
    it = cache.emplace(name, build_algebra(catalog(name, p), p)).first;
  }
  return it->second;
}

}  // namespace

TEST_CASE("string recognition") {
  const AlgebraTable& d2 = table_of("D(2A)_0");
  CHECK(is_string(d2, parse_word(d2.pres.quiver, "beta")));
  CHECK(!is_string(d2, parse_word(d2.pres.quiver, "beta*gamma")));  // a relation
  const AlgebraTable& d1 = table_of("D(1)_0");
  CHECK(!is_string(d1, parse_word(d1.pres.quiver, "alpha*alpha^-1")));  // not reduced
  CHECK(!is_string(d1, parse_word(d1.pres.quiver, "alpha*beta")));      // dies in J
  CHECK(is_string(d1, parse_word(d1.pres.quiver, "alpha*beta^-1")));
}

TEST_CASE("string modules realize the ordered basis") {
  const AlgebraTable& d2 = table_of("D(2A)_0");
  const Rep s = string_module(d2, StringSpec{{}, 0});
  CHECK(s.dims == std::vector<int>{1, 0});  // the simple at the vertex

  const Rep mb = string_module(d2, parse_word(d2.pres.quiver, "beta"));
  CHECK(mb.dims == std::vector<int>{1, 1});
  const MatF& xb = mb.arrows[d2.pres.quiver.arrow_index("beta")];
  int nonzero = 0;
  for (Index i = 0; i < xb.rows(); ++i)
    for (Index j = 0; j < xb.cols(); ++j)
      if (!xb(i, j).is_zero()) ++nonzero;
  CHECK(nonzero == 1);

  const AlgebraTable& d3 = table_of("D(3A)_2");
  const Rep t2 = string_module(d3, parse_word(d3.pres.quiver, "gamma*delta^-1*eta^-1"));
  CHECK(t2.total() == 4);
  CHECK(!validate(t2).has_value());
}

TEST_CASE("string module dimension is length plus one") {
  for (const AlgebraFixture& fx : algebra_fixtures()) {
    const AlgebraTable& a = table_of(fx.name);
    for (const StringSpec& spec : enumerate_strings(a, 4)) {
      const Rep m = string_module(a, spec);
      CHECK(m.total() == static_cast<int>(spec.word.size()) + 1);
      CHECK(!validate(m).has_value());
    }
  }
}

TEST_CASE("enumeration is canonical and deterministic") {
  const AlgebraTable& d1 = table_of("D(1)_0");
  const auto zero = enumerate_strings(d1, 0);
  CHECK(zero.size() == 1);  // 1_0
  CHECK(zero[0].word.empty());

  const auto one = enumerate_strings(d1, 1);
  CHECK(one.size() == 3);  // 1_0, alpha, beta

  for (const AlgebraFixture& fx : algebra_fixtures()) {
    const AlgebraTable& a = table_of(fx.name);
    const auto first = enumerate_strings(a, 3);
    const auto second = enumerate_strings(a, 3);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(first[i].word == second[i].word);
      CHECK(first[i].vertex == second[i].vertex);
      if (!first[i].word.empty())
        CHECK(word_canonical(a.pres.quiver, first[i].word) == first[i].word);
    }
    int empties = 0;
    for (const StringSpec& s : first) empties += s.word.empty();
    CHECK(empties == a.nvertices());
  }
}

TEST_CASE("bands of the catalog") {
  const auto check_band = [](const char* name, const char* text, MuDomain dom) {
    const AlgebraTable& a = table_of(name);
    const BandSpec bs = band_of(a.pres);
    CHECK(word_text(a.pres.quiver, bs.band) == text);
    CHECK(bs.domain == dom);
    CHECK(is_band(a, bs.band));
    CHECK(mu_domain(a) == dom);
  };
  check_band("D(1)_0", "beta*alpha^-1", MuDomain::k_and_infinity);
  check_band("D(2A)_0", "alpha*beta^-1*gamma^-1", MuDomain::k);
  check_band("D(3L)", "alpha*beta^-1*delta^-1*lambda^-1", MuDomain::k_star);

  const AlgebraTable& d2 = table_of("D(2A)_0");
  CHECK(!is_band(d2, parse_word(d2.pres.quiver, "beta")));
}

TEST_CASE("mu domains gate the parameters") {
  const AlgebraTable& d1 = table_of("D(1)_0");
  CHECK(mu_allowed(d1, mu_fin(0)));
  CHECK(mu_allowed(d1, mu_inf()));
  const AlgebraTable& d2 = table_of("D(2A)_0");
  CHECK(mu_allowed(d2, mu_fin(0)));
  CHECK(!mu_allowed(d2, mu_inf()));
  const AlgebraTable& d3 = table_of("D(3Q)");
  CHECK(!mu_allowed(d3, mu_fin(0)));
  CHECK(!mu_allowed(d3, mu_inf()));
  CHECK(mu_allowed(d3, mu_fin(3)));
  CHECK_THROWS_AS(band_module(d3, band_of(d3.pres).band, mu_fin(0), 1), MuOutOfDomain);
}

TEST_CASE("band module matrices at the seam") {
  const AlgebraTable& d1 = table_of("D(1)_0");
  const Word b = band_of(d1.pres).band;
  const Rep m = band_module(d1, b, mu_fin(2), 1);
  CHECK(m.total() == 2);
  const MatF& xa = m.arrows[d1.pres.quiver.arrow_index("alpha")];
  const MatF& xb = m.arrows[d1.pres.quiver.arrow_index("beta")];
  CHECK(xa(0, 1).value() == 1);
  CHECK(xb(0, 1).value() == 2);
  CHECK(xa(1, 0).is_zero());
  CHECK(xb(1, 0).is_zero());
}

TEST_CASE("degenerate mu values give string modules") {
  const AlgebraTable& d1 = table_of("D(1)_0");
  const Word b = band_of(d1.pres).band;
  const Rep inf1 = band_module(d1, b, mu_inf(), 1);
  CHECK(is_isomorphic(inf1, string_module(d1, parse_word(d1.pres.quiver, "beta"))) == Iso::yes);
  const Rep zero1 = band_module(d1, b, mu_fin(0), 1);
  CHECK(is_isomorphic(zero1, string_module(d1, parse_word(d1.pres.quiver, "alpha"))) == Iso::yes);
}

TEST_CASE("band dimensions scale with the multiplicity") {
  const AlgebraTable& d3k = table_of("D(3K)");
  const Word b = band_of(d3k.pres).band;
  CHECK(static_cast<int>(b.size()) == 6);
  const Rep m2 = band_module(d3k, b, mu_fin(1), 2);
  CHECK(m2.total() == 12);
  CHECK(!validate(m2).has_value());

  for (const char* name : {"D(1)_0", "D(3Q)"}) {
    const AlgebraTable& a = table_of(name);
    const Word band = band_of(a.pres).band;
    for (long long mu = 1; mu < a.p; ++mu) {
      const Rep m = band_module(a, band, mu_fin(mu), 1);
      CHECK(m.total() == static_cast<int>(band.size()));
      CHECK(!validate(m).has_value());
    }
  }
}

TEST_CASE("distinct mu give distinct one-tubes") {
  for (const char* name : {"D(1)_0", "D(3Q)"}) {
    const AlgebraTable& a = table_of(name);
    const Word band = band_of(a.pres).band;
    std::vector<Rep> mods;
    for (long long mu = 1; mu < a.p; ++mu) mods.push_back(band_module(a, band, mu_fin(mu), 1));
    for (std::size_t i = 0; i < mods.size(); ++i)
      for (std::size_t j = i + 1; j < mods.size(); ++j)
        CHECK(is_isomorphic(mods[i], mods[j]) == Iso::no);
  }
}

TEST_CASE("spec text names strings") {
  const AlgebraTable& d1 = table_of("D(1)_0");
  CHECK(spec_text(d1.pres.quiver, StringSpec{{}, 0}) == "1_0");
  const Word w = parse_word(d1.pres.quiver, "alpha*beta^-1");
  CHECK(spec_text(d1.pres.quiver, StringSpec{w, -1}) == "alpha*beta^-1");
  CHECK(mu_text(mu_inf()) == "infinity");
  CHECK(mu_text(mu_fin(3)) == "3");
}
