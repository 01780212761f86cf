#include "strand/homological.hpp"

#include <random>

namespace strand {
namespace {

/* flatten a block map, vertex blocks concatenated in order, each row-major */
VecF flatten_blocks(const std::vector<MatF>& blocks) {
  Index total = 0;
  for (const auto& b : blocks) total += b.size();
  VecF v(total);
  Index at = 0;
  for (const auto& b : blocks)
    for (Index i = 0; i < b.rows(); ++i)
      for (Index j = 0; j < b.cols(); ++j) v(at++) = b(i, j);
  return v;
}

/* the intertwiner system: rows are the equations F_t X - Y F_s = 0 */
MatF intertwiner_system(const Rep& m, const Rep& n) {
  const AlgebraTable& a = *m.alg;
  const int nv = a.nvertices();
  std::vector<Index> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
  Index neq = 0;
  for (std::size_t z = 0; z < m.arrows.size(); ++z) {
    const auto& ar = a.pres.quiver.arrows[z];
    neq += static_cast<Index>(n.dims[ar.tgt]) * m.dims[ar.src];
  }
  MatF e = bound(MatF::Zero(neq, off[nv]), a.p);
  Index r = 0;
  for (std::size_t z = 0; z < m.arrows.size(); ++z) {
    const auto& ar = a.pres.quiver.arrows[z];
    const MatF& x = m.arrows[z];
    const MatF& y = n.arrows[z];
    const int s = ar.src, t = ar.tgt;
    for (int i = 0; i < n.dims[t]; ++i)
      for (int j = 0; j < m.dims[s]; ++j, ++r) {
        for (int k = 0; k < m.dims[t]; ++k) e(r, off[t] + i * m.dims[t] + k) += x(k, j);
        for (int k = 0; k < n.dims[s]; ++k) e(r, off[s] + k * m.dims[s] + j) -= y(i, k);
      }
  }
  return e;
}

std::vector<MatF> unflatten_blocks(const Rep& m, const Rep& n, const VecF& v) {
  const int nv = m.alg->nvertices();
  std::vector<MatF> blocks(nv);
  Index at = 0;
  for (int u = 0; u < nv; ++u) {
    blocks[u] = unflatten(v.segment(at, n.dims[u] * m.dims[u]), n.dims[u], m.dims[u]);
    at += n.dims[u] * m.dims[u];
  }
  return blocks;
}

}  // namespace

HomBasis hom_space(const Rep& m, const Rep& n) {
  const MatF e = intertwiner_system(m, n);
  const MatF k = kernel_basis(e, m.alg->p);
  HomBasis h;
  for (Index j = 0; j < k.cols(); ++j) h.maps.push_back(unflatten_blocks(m, n, k.col(j)));
  return h;
}

Index hom_dim(const Rep& m, const Rep& n) {
  const MatF e = intertwiner_system(m, n);
  return e.cols() - rank_of(e, m.alg->p);
}

Index phom_dim(const Rep& m, const Rep& n) {
  const AlgebraTable& a = *m.alg;
  const Rep reg = regular_rep(a);
  const HomBasis to = hom_space(m, reg);
  const HomBasis from = hom_space(reg, n);
  Index cols = 0;
  for (int v = 0; v < a.nvertices(); ++v) cols += n.dims[v] * m.dims[v];
  RowSpan span(cols, a.p);
  std::vector<MatF> comp(a.nvertices());
  for (const auto& g : from.maps)
    for (const auto& h : to.maps) {
      for (int v = 0; v < a.nvertices(); ++v) comp[v] = g[v] * h[v];
      span.insert(flatten_blocks(comp));
    }
  return span.dim();
}

Index stable_hom_dim(const Rep& m, const Rep& n) {
  return hom_dim(m, n) - phom_dim(m, n);
}

Index stable_end_dim(const Rep& m) { return stable_hom_dim(m, m); }

std::vector<int> socle_dims(const Rep& m) {
  const AlgebraTable& a = *m.alg;
  std::vector<int> soc(a.nvertices());
  for (int v = 0; v < a.nvertices(); ++v) {
    Index rows = 0;
    for (std::size_t z = 0; z < m.arrows.size(); ++z)
      if (a.pres.quiver.arrows[z].src == v) rows += m.arrows[z].rows();
    MatF stacked = bound(MatF::Zero(rows, m.dims[v]), a.p);
    Index at = 0;
    for (std::size_t z = 0; z < m.arrows.size(); ++z) {
      if (a.pres.quiver.arrows[z].src != v) continue;
      stacked.middleRows(at, m.arrows[z].rows()) = m.arrows[z];
      at += m.arrows[z].rows();
    }
    soc[v] = static_cast<int>(kernel_basis(stacked, a.p).cols());
  }
  return soc;
}

SyzygyResult syzygy(const Rep& m) {
  const AlgebraTable& a = *m.alg;
  const int nv = a.nvertices();
  const auto rad = radical_inclusions(m);

  // top generators: unit vectors completing the radical, by vertex then index
  std::vector<std::vector<VecF>> gens(nv);
  for (int u = 0; u < nv; ++u) {
    RowSpan span(m.dims[u], a.p);
    for (Index j = 0; j < rad[u].cols(); ++j) span.insert(rad[u].col(j));
    for (int i = 0; i < m.dims[u] && span.dim() < m.dims[u]; ++i) {
      VecF e = bound(MatF::Zero(m.dims[u], 1), a.p);
      e(i) = Fp(1, a.p);
      if (span.insert(e)) gens[u].push_back(e);
    }
  }

  // cover = direct sum of one projective per generator, in that order
  SyzygyResult out;
  out.cover = zero_rep(a);
  std::vector<MatF> pi(nv);
  for (int v = 0; v < nv; ++v) pi[v] = bound(MatF::Zero(m.dims[v], 0), a.p);
  for (int u = 0; u < nv; ++u) {
    if (gens[u].empty()) continue;
    const Rep pu = projective(a, u);
    std::vector<std::vector<int>> cols(nv);  // algebra basis elements by target
    for (int i = 0; i < a.dim(); ++i)
      if (a.src_of(i) == u) cols[a.tgt_of(i)].push_back(i);
    for (const VecF& w : gens[u]) {
      out.cover = direct_sum(out.cover, pu);
      for (int v = 0; v < nv; ++v) {
        MatF block(m.dims[v], pu.dims[v]);
        for (std::size_t j = 0; j < cols[v].size(); ++j) {
          const Path& path = a.basis[cols[v][j]].path;
          if (path.empty())
            block.col(static_cast<Index>(j)) = w;
          else
            block.col(static_cast<Index>(j)) = eval_path(m, path) * w;
        }
        pi[v] = hstack(pi[v], block);
      }
    }
  }
  for (int v = 0; v < nv; ++v)
    if (rank_of(pi[v], a.p) != m.dims[v])
      throw InternalError("syzygy: cover map is not surjective");

  out.cover_map = pi;
  out.kernel_incl.resize(nv);
  for (int v = 0; v < nv; ++v) out.kernel_incl[v] = kernel_basis(pi[v], a.p);
  out.omega = submodule(out.cover, out.kernel_incl);
  return out;
}

Index ext1_dim(const Rep& m, const Rep& n) {
  return stable_hom_dim(syzygy(m).omega, n);
}

Iso is_isomorphic(const Rep& x, const Rep& y) {
  if (x.alg != y.alg) return Iso::no;
  if (x.dims != y.dims) return Iso::no;
  if (x.total() == 0) return Iso::yes;
  const AlgebraTable& a = *x.alg;
  if (top_dims(x) != top_dims(y) || socle_dims(x) != socle_dims(y)) return Iso::no;
  const HomBasis h = hom_space(x, y);
  const Index hd = h.dim();
  if (hd == 0) return Iso::no;
  if (hom_dim(x, x) != hd || hom_dim(y, y) != hd || hom_dim(y, x) != hd) return Iso::no;

  const int nv = a.nvertices();
  auto invertible = [&](const std::vector<Fp>& c) {
    for (int v = 0; v < nv; ++v) {
      if (x.dims[v] == 0) continue;
      MatF f = bound(MatF::Zero(y.dims[v], x.dims[v]), a.p);
      for (Index i = 0; i < hd; ++i)
        if (!c[i].is_zero()) f += c[i] * h.maps[i][v];
      if (rank_of(f, a.p) != x.dims[v]) return false;
    }
    return true;
  };

  // random combinations find an isomorphism quickly whenever one exists
  std::mt19937_64 rng(0x69736f6d61703f);
  std::uniform_int_distribution<long long> coef(0, a.p - 1);
  for (int s = 0; s < 64; ++s) {
    std::vector<Fp> c(hd);
    bool nonzero = false;
    for (Index i = 0; i < hd; ++i) {
      c[i] = Fp(coef(rng), a.p);
      nonzero = nonzero || !c[i].is_zero();
    }
    if (nonzero && invertible(c)) return Iso::yes;
  }

  // no is conclusive only by exhausting the coefficient space
  double count = 1;
  for (Index i = 0; i < hd; ++i) count *= static_cast<double>(a.p);
  if (count > 1e6) return Iso::inconclusive;
  std::vector<Fp> c(hd, Fp(0, a.p));
  const long long total = static_cast<long long>(count);
  for (long long t = 1; t < total; ++t) {
    long long v = t;
    for (Index i = 0; i < hd; ++i, v /= a.p) c[i] = Fp(v % a.p, a.p);
    if (invertible(c)) return Iso::yes;
  }
  return Iso::no;
}

OmegaOrbit omega_orbit(const Rep& m, int max_steps) {
  OmegaOrbit o;
  o.iterates.push_back(m);
  for (int step = 0; step < max_steps; ++step) {
    Rep next = syzygy(o.iterates.back()).omega;
    if (next.total() == 0) {
      o.hit_zero = true;
      o.iterates.push_back(std::move(next));
      return o;
    }
    for (std::size_t k = 0; k < o.iterates.size(); ++k) {
      switch (is_isomorphic(o.iterates[k], next)) {
        case Iso::yes:
          o.periodic = true;
          o.entry = static_cast<int>(k);
          o.period = static_cast<int>(o.iterates.size() - k);
          return o;
        case Iso::inconclusive:
          o.inconclusive = true;
          break;
        case Iso::no:
          break;
      }
    }
    o.iterates.push_back(std::move(next));
  }
  return o;
}

}  // namespace strand
