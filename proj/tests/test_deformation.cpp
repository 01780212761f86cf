#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>
#include <string>

#include "doctest.h"
#include "strand/catalog.hpp"
#include "strand/certificates.hpp"
#include "strand/deformation.hpp"
#include "strand/workbench.hpp"

using namespace strand;

namespace {

const AlgebraTable& table_of(const char* name, long long p = 5) {
  static std::map<std::string, AlgebraTable> cache;
  const std::string key = std::string(name) + "@" + std::to_string(p);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_algebra(catalog(name, p), p)).first;
  return it->second;
}

std::vector<MatF> random_blocks(const Rep& v, std::mt19937& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, v.p() - 1);
  std::vector<MatF> b;
  for (int u = 0; u < v.alg->nvertices(); ++u) {
    MatF m = bound(MatF::Zero(v.dims[u], v.dims[u]), v.p());
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) m(i, j) = Fp(d(rng), v.p());
    b.push_back(std::move(m));
  }
  return b;
}

RowSpan coboundary_span(const Rep& v) {
  Index ncols = 0;
  for (std::size_t zi = 0; zi < v.arrows.size(); ++zi)
    ncols += v.arrows[zi].rows() * v.arrows[zi].cols();
  RowSpan span(ncols, v.p());
  for (int u = 0; u < v.alg->nvertices(); ++u)
    for (int i = 0; i < v.dims[u]; ++i)
      for (int j = 0; j < v.dims[u]; ++j) {
        std::vector<MatF> b;
        for (int w = 0; w < v.alg->nvertices(); ++w)
          b.push_back(bound(MatF::Zero(v.dims[w], v.dims[w]), v.p()));
        b[u](i, j) = Fp(1, v.p());
        span.insert(flatten_cocycle(v, coboundary(v, b)));
      }
  return span;
}

std::vector<MatF> nontrivial_direction(const Rep& v) {
  const FirstOrderSpace fo = first_order(v);
  const RowSpan cob = coboundary_span(v);
  for (const auto& c : fo.cocycles)
    if (!cob.contains(flatten_cocycle(v, c))) return c;
  return {};
}

std::vector<MatF> scaled_direction(const Rep& v, const std::vector<MatF>& d, const Fp& c) {
  std::vector<MatF> out;
  for (const MatF& m : d) out.push_back((c * m).eval());
  (void)v;
  return out;
}

std::vector<MatF> shifted_direction(const std::vector<MatF>& d, const std::vector<MatF>& delta) {
  std::vector<MatF> out;
  for (std::size_t i = 0; i < d.size(); ++i) out.push_back(d[i] + delta[i]);
  return out;
}

MatP times_tn(const MatF& m, std::int64_t p, int n) {
  TruncPoly tn(Fp(1, p));
  for (int k = 0; k < n; ++k) tn *= TruncPoly::t(p);
  MatP out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = TruncPoly(m(i, j).bound(p)) * tn;
  return out;
}

/* the order-by-order search along a fixed start direction: at each level the
 * solution is free up to c times the direction, so branch over c only */
bool extendable(const Rep& v, const std::vector<MatF>& d0, const MatF& lin, const Lift& l, int n,
                int max_order) {
  if (n > max_order) return true;
  const VecF obs = relation_coefficient(l, n);
  const auto x = solve_affine(lin, -obs, v.p());
  if (!x) return false;
  const std::vector<MatF> base = unflatten_cocycle(v, *x);
  for (std::int64_t c = 0; c < v.p(); ++c) {
    Lift next = l;
    for (std::size_t zi = 0; zi < next.arrows.size(); ++zi)
      next.arrows[zi] += times_tn(base[zi] + Fp(c, v.p()) * d0[zi], v.p(), n);
    if (extendable(v, d0, lin, next, n + 1, max_order)) return true;
  }
  return false;
}

bool order3_solvable(const Rep& v, const std::vector<MatF>& d) {
  return extendable(v, d, relation_linearization(v), first_order_lift(v, d), 2, 3);
}

}  // namespace

TEST_CASE("first order space invariants") {
  std::mt19937 rng(61);
  const auto check_module = [&](const Rep& v) {
    const FirstOrderSpace fo = first_order(v);
    CHECK(fo.ext1() == ext1_dim(v, v));
    const MatF lin = relation_linearization(v);
    for (const auto& c : fo.cocycles) {
      const VecF img = lin * flatten_cocycle(v, c);
      CHECK(is_zero_mat(img));
    }
    for (int trial = 0; trial < 3; ++trial) {
      const std::vector<MatF> delta = coboundary(v, random_blocks(v, rng));
      CHECK(is_zero_mat(lin * flatten_cocycle(v, delta)));
    }
    CHECK(coboundary_span(v).dim() == fo.coboundary_dim);
    Index sq = 0;
    for (int d : v.dims) sq += static_cast<Index>(d) * d;
    CHECK(fo.coboundary_dim == sq - hom_dim(v, v));
  };
  check_module(simple(table_of("D(1)_0"), 0));
  check_module(simple(table_of("D(2A)_0"), 0));
  check_module(simple(table_of("D(3K)"), 1));
  const AlgebraTable& d3q = table_of("D(3Q)");
  check_module(band_module(d3q, band_of(d3q.pres).band, mu_fin(2), 1));
  const AlgebraTable& d3a2 = table_of("D(3A)_2");
  check_module(module_from_descriptor(d3a2, "string gamma*delta^-1*eta^-1"));
}

TEST_CASE("gauge invariance of order-3 solvability") {
  std::mt19937 rng(67);
  const AlgebraTable& d2 = table_of("D(2A)_0");
  const AlgebraTable& d3q = table_of("D(3Q)");
  const Rep blocked = simple(d2, 0);
  const Rep open = band_module(d3q, band_of(d3q.pres).band, mu_fin(2), 1);
  for (const Rep* v : {&blocked, &open}) {
    const std::vector<MatF> d0 = nontrivial_direction(*v);
    REQUIRE(!d0.empty());
    const bool base = order3_solvable(*v, d0);
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<MatF> delta = coboundary(*v, random_blocks(*v, rng));
      CHECK(order3_solvable(*v, shifted_direction(d0, delta)) == base);
    }
  }
  CHECK(!order3_solvable(blocked, nontrivial_direction(blocked)));
  CHECK(order3_solvable(open, nontrivial_direction(open)));
}

TEST_CASE("scaling invariance of order-3 solvability") {
  const AlgebraTable& d2 = table_of("D(2A)_0");
  const AlgebraTable& d3q = table_of("D(3Q)");
  const Rep blocked = simple(d2, 0);
  const Rep open = band_module(d3q, band_of(d3q.pres).band, mu_fin(2), 1);
  for (const Rep* v : {&blocked, &open}) {
    const std::vector<MatF> d0 = nontrivial_direction(*v);
    REQUIRE(!d0.empty());
    const bool base = order3_solvable(*v, d0);
    for (std::int64_t lambda = 1; lambda < v->p(); ++lambda)
      CHECK(order3_solvable(*v, scaled_direction(*v, d0, Fp(lambda, v->p()))) == base);
  }
}

TEST_CASE("verdicts transport along the syzygy functor") {
  const auto ring_of = [](const Rep& v) { return classify_defring(v).ring; };
  const AlgebraTable& d3k = table_of("D(3K)");
  const AlgebraTable& d2 = table_of("D(2A)_0");
  const AlgebraTable& d1 = table_of("D(1)_0");
  const AlgebraTable& d3q = table_of("D(3Q)");
  const Rep mods[] = {simple(d3k, 0), simple(d2, 0), simple(d1, 0),
                      band_module(d3q, band_of(d3q.pres).band, mu_fin(2), 1)};
  const DefRing want[] = {DefRing::k, DefRing::truncated, DefRing::regular,
                          DefRing::power_series};
  for (int i = 0; i < 4; ++i) {
    CHECK(ring_of(mods[i]) == want[i]);
    CHECK(ring_of(syzygy(mods[i]).omega) == want[i]);
  }
}

TEST_CASE("certificates verify and imply extension to every order") {
  const AlgebraTable& d3a2 = table_of("D(3A)_2");
  const auto certs = load_certificates(d3a2);
  REQUIRE(!certs.empty());
  for (const Certificate& cert : certs) {
    const Rep v = module_from_descriptor(d3a2, "string " + cert.module);
    CHECK(!verify_poly_lift(v, cert.lift).has_value());
    for (int n = 3; n <= 6; ++n) {
      const ExtendResult ext = extend_lift(v, n);
      CHECK(ext.reached);
      CHECK(ext.order == n);
    }
  }
}

TEST_CASE("band lifts certify the one-parameter families") {
  const AlgebraTable& d1 = table_of("D(1)_0");
  const Word b = band_of(d1.pres).band;
  for (long long mu : {1LL, 2LL}) {
    const Rep v = band_module(d1, b, mu_fin(mu), 1);
    const Lift lift = band_lift(d1, b, mu_fin(mu));
    REQUIRE(lift.dims == v.dims);
    for (std::size_t zi = 0; zi < v.arrows.size(); ++zi)
      for (Index i = 0; i < v.arrows[zi].rows(); ++i)
        for (Index j = 0; j < v.arrows[zi].cols(); ++j)
          CHECK(lift.arrows[zi](i, j).coeff(0) == v.arrows[zi](i, j));
    CHECK(!verify_poly_lift(v, lift).has_value());
    CHECK(extend_lift(v, 5).reached);
  }
}

TEST_CASE("a lift with zero t-part does not certify") {
  const AlgebraTable& d2 = table_of("D(2A)_0");
  const Rep v = simple(d2, 0);
  std::vector<MatF> zero;
  for (const MatF& m : v.arrows) zero.push_back(bound(MatF::Zero(m.rows(), m.cols()), v.p()));
  const Lift trivial = first_order_lift(v, zero);
  CHECK(verify_poly_lift(v, trivial).has_value());
}

TEST_CASE("classifier verdicts on the anchor modules") {
  const AlgebraTable& d3k = table_of("D(3K)");
  CHECK(classify_defring(simple(d3k, 0)).ring == DefRing::k);

  const AlgebraTable& d2 = table_of("D(2A)_0");
  const DefReport t2 = classify_defring(simple(d2, 0));
  CHECK(t2.ring == DefRing::truncated);
  CHECK(t2.m == 2);
  CHECK(defring_text(t2) == "k[[t]]/(t^2)");

  const AlgebraTable& d1 = table_of("D(1)_0");
  const DefReport reg = classify_defring(simple(d1, 0));
  CHECK(reg.ring == DefRing::regular);
  CHECK(defring_text(reg) == "Lambda");
  CHECK(reg.ext1 == 2);

  const DefReport proj = classify_defring(projective(d2, 0));
  CHECK(proj.ring == DefRing::versal_only);
  CHECK(proj.stable_end == 0);

  const AlgebraTable& d3q = table_of("D(3Q)");
  const DefReport band = classify_defring(band_module(d3q, band_of(d3q.pres).band, mu_fin(2), 1));
  CHECK(band.ring == DefRing::power_series);
  CHECK(band.mode == "certified");
  CHECK(band.detail == "L_mu at mu = 2");
}
