#include "strand/deformation.hpp"

#include <functional>
#include <utility>

#include "strand/certificates.hpp"
#include "strand/errors.hpp"
#include "strand/parser.hpp"

namespace strand {
namespace {

/* unknowns vec(D_z) stacked per arrow, row-major inside each block */
struct ArrowLayout {
  std::vector<Index> off;
  Index total = 0;
};

ArrowLayout arrow_layout(const Rep& v) {
  const Quiver& q = v.alg->pres.quiver;
  ArrowLayout lay;
  for (const Arrow& ar : q.arrows) {
    lay.off.push_back(lay.total);
    lay.total += static_cast<Index>(v.dims[ar.tgt]) * v.dims[ar.src];
  }
  return lay;
}

VecF flatten_arrows(const std::vector<MatF>& blocks, Index total) {
  VecF x(total);
  Index at = 0;
  for (const MatF& b : blocks)
    for (Index i = 0; i < b.rows(); ++i)
      for (Index j = 0; j < b.cols(); ++j) x(at++) = b(i, j);
  return x;
}

std::vector<MatF> unflatten_arrows(const Rep& v, const VecF& x) {
  const Quiver& q = v.alg->pres.quiver;
  std::vector<MatF> blocks;
  Index at = 0;
  for (const Arrow& ar : q.arrows) {
    MatF b(v.dims[ar.tgt], v.dims[ar.src]);
    for (Index i = 0; i < b.rows(); ++i)
      for (Index j = 0; j < b.cols(); ++j) b(i, j) = x(at++);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

RowSpan coboundary_span(const Rep& v) {
  const AlgebraTable& a = *v.alg;
  const ArrowLayout lay = arrow_layout(v);
  RowSpan span(lay.total, a.p);
  for (int u = 0; u < a.nvertices(); ++u)
    for (int i = 0; i < v.dims[u]; ++i)
      for (int j = 0; j < v.dims[u]; ++j) {
        std::vector<MatF> b;
        for (int w = 0; w < a.nvertices(); ++w)
          b.push_back(bound(MatF::Zero(v.dims[w], v.dims[w]), a.p));
        b[u](i, j) = Fp(1, a.p);
        span.insert(flatten_arrows(coboundary(v, b), lay.total));
      }
  return span;
}

std::vector<MatP> to_poly(const std::vector<MatF>& xs) {
  std::vector<MatP> out;
  for (const MatF& x : xs) {
    MatP m = MatP::Constant(x.rows(), x.cols(), TruncPoly(0));
    for (Index i = 0; i < x.rows(); ++i)
      for (Index j = 0; j < x.cols(); ++j)
        if (!x(i, j).is_zero()) m(i, j) = TruncPoly(x(i, j));
    out.push_back(std::move(m));
  }
  return out;
}

void add_term(Lift& l, const Rep& v, const VecF& d, const TruncPoly& tk) {
  const std::vector<MatF> blocks = unflatten_arrows(v, d);
  for (std::size_t z = 0; z < blocks.size(); ++z)
    for (Index i = 0; i < blocks[z].rows(); ++i)
      for (Index j = 0; j < blocks[z].cols(); ++j)
        if (!blocks[z](i, j).is_zero()) l.arrows[z](i, j) += tk * TruncPoly(blocks[z](i, j));
}

}  // namespace

/* d/deps of every relation at X + eps D, one equation row per relation entry:
 * the term sum_l X_{w_1..w_{l-1}} D_{w_l} X_{w_{l+1}..w_k} read off against
 * the unknown entries of D via prefix and suffix products */
MatF relation_linearization(const Rep& v) {
  const AlgebraTable& a = *v.alg;
  const Quiver& q = a.pres.quiver;
  const ArrowLayout lay = arrow_layout(v);
  Index neq = 0;
  for (const Relation& rel : a.pres.relations)
    neq += static_cast<Index>(v.dims[path_tgt(q, rel.terms[0].path)]) *
           v.dims[path_src(q, rel.terms[0].path)];
  MatF big = bound(MatF::Zero(neq, lay.total), a.p);
  Index eq0 = 0;
  for (const Relation& rel : a.pres.relations) {
    const Index nr = v.dims[path_tgt(q, rel.terms[0].path)];
    const Index ns = v.dims[path_src(q, rel.terms[0].path)];
    for (const Term& term : rel.terms) {
      const Path& w = term.path;
      const std::size_t k = w.size();
      const Fp coeff(term.coeff, a.p);
      std::vector<MatF> pre(k), post(k);
      pre[0] = identity_mat(nr, a.p);
      for (std::size_t l = 1; l < k; ++l) pre[l] = bound(pre[l - 1] * v.arrows[w[l - 1]], a.p);
      post[k - 1] = identity_mat(ns, a.p);
      for (std::size_t l = k - 1; l > 0; --l)
        post[l - 1] = bound(v.arrows[w[l]] * post[l], a.p);
      for (std::size_t l = 0; l < k; ++l) {
        const int z = w[l];
        const Index mt = v.dims[q.arrows[z].tgt];
        const Index ms = v.dims[q.arrows[z].src];
        for (Index r = 0; r < nr; ++r)
          for (Index i = 0; i < mt; ++i) {
            const Fp c = coeff * pre[l](r, i);
            if (c.is_zero()) continue;
            for (Index j = 0; j < ms; ++j)
              for (Index s = 0; s < ns; ++s)
                big(eq0 + r * ns + s, lay.off[z] + i * ms + j) += c * post[l](j, s);
          }
      }
    }
    eq0 += nr * ns;
  }
  return big;
}

VecF flatten_cocycle(const Rep& v, const std::vector<MatF>& d) {
  return flatten_arrows(d, arrow_layout(v).total);
}

std::vector<MatF> unflatten_cocycle(const Rep& v, const VecF& x) {
  return unflatten_arrows(v, x);
}

Lift first_order_lift(const Rep& v, const std::vector<MatF>& d) {
  Lift l;
  l.alg = v.alg;
  l.dims = v.dims;
  l.arrows = to_poly(v.arrows);
  add_term(l, v, flatten_cocycle(v, d), TruncPoly::t(v.p()));
  return l;
}

VecF relation_coefficient(const Lift& l, int n) {
  const AlgebraTable& a = *l.alg;
  const Quiver& q = a.pres.quiver;
  std::vector<MatP> arr;
  for (const MatP& m : l.arrows) {
    MatP r = m;
    for (Index i = 0; i < r.rows(); ++i)
      for (Index j = 0; j < r.cols(); ++j) r(i, j) = r(i, j).reduced(n + 1);
    arr.push_back(std::move(r));
  }
  Index neq = 0;
  for (const Relation& rel : a.pres.relations)
    neq += static_cast<Index>(l.dims[path_tgt(q, rel.terms[0].path)]) *
           l.dims[path_src(q, rel.terms[0].path)];
  VecF c(neq);
  Index eq0 = 0;
  for (const Relation& rel : a.pres.relations) {
    const MatP e = eval_relation_mats<TruncPoly>(arr, rel);
    for (Index r = 0; r < e.rows(); ++r)
      for (Index s = 0; s < e.cols(); ++s) c(eq0 + r * e.cols() + s) = e(r, s).coeff(n).bound(a.p);
    eq0 += e.rows() * e.cols();
  }
  return c;
}

std::vector<MatF> coboundary(const Rep& v, const std::vector<MatF>& b) {
  const Quiver& q = v.alg->pres.quiver;
  std::vector<MatF> out;
  for (std::size_t z = 0; z < q.arrows.size(); ++z) {
    const Arrow& ar = q.arrows[z];
    out.push_back(bound(b[ar.tgt] * v.arrows[z] - v.arrows[z] * b[ar.src], v.p()));
  }
  return out;
}

FirstOrderSpace first_order(const Rep& v) {
  FirstOrderSpace s;
  const MatF big = relation_linearization(v);
  const MatF ker = kernel_basis(big, v.p());
  for (Index c = 0; c < ker.cols(); ++c) s.cocycles.push_back(unflatten_arrows(v, ker.col(c)));
  s.coboundary_dim = coboundary_span(v).dim();
  return s;
}

ExtendResult extend_lift(const Rep& v, int max_order) {
  const AlgebraTable& a = *v.alg;
  const long long p = a.p;
  if (max_order < 1) throw DomainError("extend_lift: max_order must be at least 1");

  const MatF big = relation_linearization(v);
  const MatF ker = kernel_basis(big, p);
  const RowSpan inner = coboundary_span(v);
  std::optional<VecF> d0;
  for (Index c = 0; c < ker.cols(); ++c) {
    RowSpan probe = inner;
    if (probe.insert(ker.col(c))) {
      d0 = ker.col(c);
      break;
    }
  }
  if (!d0) throw DomainError("extend_lift: every first-order deformation is inner");

  std::vector<TruncPoly> tp(max_order + 1);
  tp[0] = TruncPoly(Fp(1, p));
  for (int k = 1; k <= max_order; ++k) tp[k] = tp[k - 1] * TruncPoly::t(p);

  Lift base;
  base.alg = &a;
  base.dims = v.dims;
  base.arrows = to_poly(v.arrows);
  add_term(base, v, *d0, tp[1]);

  ExtendResult out;
  out.order = 1;
  long long nodes = 0;
  const long long node_cap = 20000;

  /* depth-first over the correction choices: a particular solution of the
   * obstruction equation plus any multiple of d0, the unobstructed direction
   * first */
  std::function<bool(const Lift&, int)> grow = [&](const Lift& cur, int k) -> bool {
    if (k > out.order) out.order = k;
    if (k >= max_order) {
      out.lift = cur;
      out.reached = true;
      return true;
    }
    if (nodes >= node_cap) {
      out.capped = true;
      return false;
    }
    ++nodes;
    const VecF c = relation_coefficient(cur, k + 1);
    const std::optional<VecF> x = solve_affine(big, -c, p);
    if (!x) return false;
    for (long long e = 0; e < p; ++e) {
      const VecF d = *x + Fp(e, p) * (*d0);
      Lift next = cur;
      add_term(next, v, d, tp[k + 1]);
      if (grow(next, k + 1)) return true;
      if (out.capped) return false;
    }
    return false;
  };
  grow(base, 1);
  return out;
}

Lift band_lift(const AlgebraTable& a, const Word& b, const Mu& mu) {
  if (!is_band(a, b)) throw DomainError("band_lift: not a band");
  if (mu.inf) throw MuOutOfDomain("band_lift: mu must be finite");
  if (!mu_allowed(a, mu)) throw MuOutOfDomain("band_lift: mu outside the parameter domain");
  const TruncPoly seam = TruncPoly(Fp(mu.value, a.p)) + TruncPoly::t(a.p);
  GradedMats<TruncPoly> g = band_matrices<TruncPoly>(a.pres.quiver, b, seam, 1);
  Lift l;
  l.alg = &a;
  l.dims = std::move(g.dims);
  l.arrows = std::move(g.arrows);
  return l;
}

std::optional<std::string> verify_poly_lift(const Rep& v, const Lift& lift) {
  const AlgebraTable& a = *v.alg;
  if (lift.alg != v.alg) return "lift and module live over different algebras";
  const Quiver& q = a.pres.quiver;
  if (static_cast<int>(lift.dims.size()) != a.nvertices()) return "lift has the wrong vertex count";
  if (lift.arrows.size() != q.arrows.size()) return "lift has the wrong arrow count";
  for (std::size_t z = 0; z < q.arrows.size(); ++z) {
    const Arrow& ar = q.arrows[z];
    if (lift.arrows[z].rows() != lift.dims[ar.tgt] || lift.arrows[z].cols() != lift.dims[ar.src])
      return "lift matrix for " + ar.name + " has the wrong shape";
    for (Index i = 0; i < lift.arrows[z].rows(); ++i)
      for (Index j = 0; j < lift.arrows[z].cols(); ++j)
        if (lift.arrows[z](i, j).order() != 0) return "lift entries are truncated, not exact";
  }

  for (const Relation& rel : a.pres.relations) {
    const MatP e = eval_relation_mats<TruncPoly>(lift.arrows, rel);
    for (Index r = 0; r < e.rows(); ++r)
      for (Index s = 0; s < e.cols(); ++s)
        if (!e(r, s).is_zero())
          return "relation " + relation_text(q, rel) + " does not vanish over F_p[t]";
  }

  Rep r0 = blank_rep(a, lift.dims);
  for (std::size_t z = 0; z < q.arrows.size(); ++z)
    for (Index i = 0; i < lift.arrows[z].rows(); ++i)
      for (Index j = 0; j < lift.arrows[z].cols(); ++j)
        r0.arrows[z](i, j) = lift.arrows[z](i, j).coeff(0).bound(a.p);
  const Iso same = is_isomorphic(r0, v);
  if (same == Iso::no) return "specialization at t = 0 is not the module";
  if (same == Iso::inconclusive) return "specialization at t = 0 undecided";

  std::vector<MatF> d1;
  for (std::size_t z = 0; z < q.arrows.size(); ++z) {
    MatF b = bound(MatF::Zero(lift.arrows[z].rows(), lift.arrows[z].cols()), a.p);
    for (Index i = 0; i < b.rows(); ++i)
      for (Index j = 0; j < b.cols(); ++j) b(i, j) = lift.arrows[z](i, j).coeff(1).bound(a.p);
    d1.push_back(std::move(b));
  }
  const ArrowLayout lay = arrow_layout(r0);
  if (coboundary_span(r0).contains(flatten_arrows(d1, lay.total)))
    return "the t-linear term of the lift is a coboundary";
  return std::nullopt;
}

DefReport classify_defring(const Rep& v, int cap) {
  const AlgebraTable& a = *v.alg;
  DefReport rep;
  rep.stable_end = stable_end_dim(v);
  rep.ext1 = ext1_dim(v, v);
  if (rep.stable_end != 1) {
    rep.ring = DefRing::versal_only;
    rep.detail = "stable endomorphism algebra has dimension " + std::to_string(rep.stable_end);
    return rep;
  }
  if (rep.ext1 == 0) {
    rep.ring = DefRing::k;
    return rep;
  }
  if (rep.ext1 == 1) {
    const auto certified = [&](const Lift& lift, const std::string& witness) -> bool {
      if (lift.dims != v.dims) return false;
      if (verify_poly_lift(v, lift)) return false;
      rep.ring = DefRing::power_series;
      rep.mode = "certified";
      rep.detail = witness;
      return true;
    };
    for (const Certificate& cert : load_certificates(a))
      if (certified(cert.lift, "certificate " + cert.module)) return rep;
    if (a.p <= 4096) {
      try {
        const BandSpec bs = band_of(a.pres);
        for (long long mu = 0; mu < a.p; ++mu) {
          if (!mu_allowed(a, mu_fin(mu))) continue;
          if (certified(band_lift(a, bs.band, mu_fin(mu)), "L_mu at mu = " + std::to_string(mu)))
            return rep;
        }
      } catch (const UnknownAlgebra&) {
      }
    }
    const ExtendResult ext = extend_lift(v, cap);
    if (ext.reached) {
      rep.ring = DefRing::power_series;
      rep.mode = "verified-to-order-" + std::to_string(cap);
      return rep;
    }
    if (ext.capped) {
      rep.ring = DefRing::unknown;
      rep.detail = "lifting search hit the node budget at order " + std::to_string(ext.order);
      return rep;
    }
    rep.ring = DefRing::truncated;
    rep.m = ext.order + 1;
    if (rep.m > 2) rep.detail = "search stalled at order " + std::to_string(ext.order) + ", modulus unconfirmed";
    return rep;
  }
  if (rep.ext1 == 2 && a.nvertices() == 1 && is_commutative(a)) {
    /* over a local commutative algebra the regular lift is universal for the
     * simple module, and the verdict transports along syzygies */
    if (v.total() == 1) {
      rep.ring = DefRing::regular;
      rep.detail = "the regular lift of the simple module";
      return rep;
    }
    Rep w = simple(a, 0);
    for (int n = 1; n <= 24; ++n) {
      w = syzygy(w).omega;
      if (w.total() == 0 || w.total() > v.total()) break;
      if (w.total() == v.total() && is_isomorphic(w, v) == Iso::yes) {
        rep.ring = DefRing::regular;
        rep.detail = "syzygy " + std::to_string(n) + " of the simple module";
        return rep;
      }
    }
    Rep x = v;
    for (int n = 1; n <= 24; ++n) {
      x = syzygy(x).omega;
      if (x.total() == 0 || x.total() > v.total()) break;
      if (x.total() == 1) {  // the unique simple of a local algebra
        rep.ring = DefRing::regular;
        rep.detail = "cosyzygy " + std::to_string(n) + " of the simple module";
        return rep;
      }
    }
  }
  rep.ring = DefRing::unknown;
  rep.detail = "ext^1 has dimension " + std::to_string(rep.ext1);
  return rep;
}

std::string defring_text(const DefReport& r) {
  switch (r.ring) {
    case DefRing::k:
      return "k";
    case DefRing::truncated:
      return "k[[t]]/(t^" + std::to_string(r.m) + ")";
    case DefRing::power_series:
      return "k[[t]]";
    case DefRing::regular:
      return "Lambda";
    case DefRing::versal_only:
      return "versal-only";
    case DefRing::unknown:
      break;
  }
  return "unknown";
}

}  // namespace strand
