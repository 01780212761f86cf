#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "strand/catalog.hpp"
#include "strand/parser.hpp"

using namespace strand;

TEST_CASE("catalog names and texts") {
  const auto names = catalog_names();
  CHECK(names.size() == 12);
  CHECK(std::find(names.begin(), names.end(), "D(3K)") != names.end());
  CHECK_THROWS_AS(catalog("D(9X)", 5), UnknownAlgebra);
  CHECK_THROWS_AS(catalog("D(1)_1", 5), CharMismatch);
  CHECK_THROWS_AS(catalog("D(2A)_1", 13), CharMismatch);
  CHECK_THROWS_AS(catalog("D(1)_0", 4), DomainError);  // p must be prime
}

TEST_CASE("catalog presentation of D(1)_0") {
  const Presentation pres = catalog("D(1)_0", 5);
  CHECK(pres.quiver.nvertices() == 1);
  CHECK(pres.quiver.arrows.size() == 2);
  CHECK(pres.relations.size() == 3);
  CHECK(pres.chr == CharConstraint::any);
  for (long long p : {2LL, 5LL, 13LL})
    CHECK(serialize_presentation(catalog("D(1)_0", p)) == serialize_presentation(pres));
}

TEST_CASE("char constraint marks exactly the char-2 algebras") {
  for (const std::string& name : catalog_names()) {
    const bool only2 = name == "D(1)_1" || name == "D(2A)_1";
    const Presentation pres = catalog(name, 2);
    CHECK((pres.chr == CharConstraint::only2) == only2);
  }
}

TEST_CASE("catalog quivers are well formed") {
  for (const std::string& name : catalog_names()) {
    const Presentation pres = catalog(name, 2);
    const Quiver& q = pres.quiver;
    std::set<std::string> vnames(q.vertices.begin(), q.vertices.end());
    CHECK(vnames.size() == q.vertices.size());
    std::set<std::string> anames;
    for (const Arrow& a : q.arrows) {
      anames.insert(a.name);
      CHECK(a.src >= 0);
      CHECK(a.src < q.nvertices());
      CHECK(a.tgt >= 0);
      CHECK(a.tgt < q.nvertices());
    }
    CHECK(anames.size() == q.arrows.size());
    for (const Relation& rel : pres.relations) {
      REQUIRE(!rel.terms.empty());
      const Path& first = rel.terms.front().path;
      for (const Term& t : rel.terms) {
        CHECK(t.coeff != 0);
        REQUIRE(!t.path.empty());
        CHECK(path_composable(q, t.path));
        CHECK(path_src(q, t.path) == path_src(q, first));
        CHECK(path_tgt(q, t.path) == path_tgt(q, first));
      }
    }
  }
}

TEST_CASE("relations compose right to left only") {
  const Presentation pres = catalog("D(3L)", 5);
  const Quiver& q = pres.quiver;
  bool found = false;
  for (const Relation& rel : pres.relations)
    for (const Term& t : rel.terms)
      if (t.path.size() == 7) {  // delta*(beta*lambda*delta)^2 expanded
        found = true;
        CHECK(path_composable(q, t.path));
        Path reversed(t.path.rbegin(), t.path.rend());
        CHECK(!path_composable(q, reversed));
      }
  CHECK(found);
}

TEST_CASE("D(3Q) carries the rho-square relation") {
  const Presentation pres = catalog("D(3Q)", 5);
  const Quiver& q = pres.quiver;
  bool found = false;
  for (const Relation& rel : pres.relations)
    for (const Term& t : rel.terms) found = found || path_text(q, t.path) == "rho*rho";
  CHECK(found);
}

TEST_CASE("serialization round trips byte-exact") {
  for (const std::string& name : catalog_names()) {
    const std::string text = serialize_presentation(catalog(name, 2));
    CHECK(serialize_presentation(parse_presentation(text)) == text);
  }
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_presentation("algebra \"x\"\nchar any\nvertex 0\n"
                                     "arrow alpha 0 1\nrelations\n"),
                  ParseError);  // unknown vertex 1
  CHECK_THROWS_AS(parse_presentation("algebra \"x\"\nchar any\nvertex 0 0\n"
                                     "arrow alpha 0 0\nrelations\n"),
                  ParseError);  // duplicate vertex
  CHECK_THROWS_AS(parse_presentation("algebra \"x\"\nchar any\nvertex 0\n"
                                     "arrow alpha 0 0\narrow alpha 0 0\nrelations\n"),
                  ParseError);  // duplicate arrow
  CHECK_THROWS_AS(parse_presentation("algebra \"x\"\nchar any\nvertex 0 1\n"
                                     "arrow alpha 0 0\narrow beta 1 0\nrelations\n"
                                     "beta*alpha\n"),
                  ParseError);  // alpha acts first at 0, beta needs source 1
  CHECK_THROWS_AS(parse_word(catalog("D(1)_0", 5).quiver, "alpha*nope"), ParseError);
}

TEST_CASE("word inverses") {
  const Quiver q = catalog("D(1)_0", 5).quiver;
  const Word w = parse_word(q, "beta*alpha^-1");
  CHECK(word_text(q, word_inverse(w)) == "alpha*beta^-1");
  CHECK(word_inverse(word_inverse(w)) == w);
  CHECK(word_reduced(w));
  CHECK(!word_reduced(parse_word(q, "alpha*alpha^-1")));
  CHECK(word_composable(q, w));
}

TEST_CASE("words compose with inverted endpoints") {
  const Quiver q = catalog("D(2A)_0", 5).quiver;
  const Word w = parse_word(q, "alpha*beta^-1*gamma^-1");
  CHECK(word_composable(q, w));
  const Letter beta_inv = w[1];
  CHECK(beta_inv.inv);
  CHECK(letter_src(q, beta_inv) == q.arrows[beta_inv.arrow].tgt);
  CHECK(letter_tgt(q, beta_inv) == q.arrows[beta_inv.arrow].src);
  CHECK(word_src(q, w) == 0);
  CHECK(word_tgt(q, w) == 0);
}

TEST_CASE("canonical representative picks the smaller of w and its inverse") {
  const Quiver q = catalog("D(1)_0", 5).quiver;
  const Word w = parse_word(q, "beta*alpha^-1");
  const Word canon = word_canonical(q, w);
  CHECK(word_text(q, canon) == "alpha*beta^-1");
  CHECK(word_canonical(q, canon) == canon);
}
