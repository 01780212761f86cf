#include "strand/algebra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "strand/parser.hpp"

namespace strand {
namespace {

constexpr int kHardCap = 24;

struct PathEntry {
  Path path;  // empty = e_src
  int src = 0, tgt = 0;
};

/* ranks arrows by name so path order is independent of declaration order */
std::vector<int> name_ranks(const Quiver& q) {
  std::vector<std::string> names;
  for (const auto& a : q.arrows) names.push_back(a.name);
  std::sort(names.begin(), names.end());
  std::vector<int> rank(q.arrows.size());
  for (std::size_t i = 0; i < q.arrows.size(); ++i)
    rank[i] = static_cast<int>(std::lower_bound(names.begin(), names.end(), q.arrows[i].name) -
                               names.begin());
  return rank;
}

bool rank_less(const std::vector<int>& rank, const Path& a, const Path& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (rank[a[i]] != rank[b[i]]) return rank[a[i]] < rank[b[i]];
  return a.size() < b.size();
}

bool contains_mono(const std::vector<Path>& monos, const Path& w) {
  for (const auto& m : monos) {
    if (m.size() > w.size()) continue;
    for (std::size_t i = 0; i + m.size() <= w.size(); ++i)
      if (std::equal(m.begin(), m.end(), w.begin() + i)) return true;
  }
  return false;
}

/* mono occurrence through position 0 only; the tail was checked earlier */
bool front_mono(const std::vector<Path>& monos, const Path& w) {
  for (const auto& m : monos)
    if (m.size() <= w.size() && std::equal(m.begin(), m.end(), w.begin())) return true;
  return false;
}

std::vector<PathEntry> enumerate_paths(const Quiver& q, const std::vector<Path>& monos, int L) {
  std::vector<PathEntry> out;
  for (int v = 0; v < q.nvertices(); ++v) out.push_back({{}, v, v});
  std::vector<PathEntry> frontier;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    PathEntry e{{static_cast<int>(a)}, q.arrows[a].src, q.arrows[a].tgt};
    if (!front_mono(monos, e.path)) frontier.push_back(e);
  }
  for (int len = 1; len <= L && !frontier.empty(); ++len) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    std::vector<PathEntry> next;
    if (len == L) break;
    for (const auto& w : frontier)
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].src != w.tgt) continue;
        PathEntry e{{static_cast<int>(a)}, w.src, q.arrows[a].tgt};
        e.path.insert(e.path.end(), w.path.begin(), w.path.end());
        if (!front_mono(monos, e.path)) next.push_back(std::move(e));
      }
    frontier = std::move(next);
  }
  return out;
}

Path concat3(const Path& u, const Path& mid, const Path& v) {
  Path w;
  w.reserve(u.size() + mid.size() + v.size());
  w.insert(w.end(), u.begin(), u.end());
  w.insert(w.end(), mid.begin(), mid.end());
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

struct Block {
  std::vector<PathEntry> cols;  // descending (length, name-lex); empties last
  std::map<Path, Index> colpos;
  RowSpan span;

  Block(std::int64_t p) : span(0, p) {}
};

struct ClosureState {
  int L = 0;
  std::vector<Block> blocks;  // indexed s * nv + t
  /* trusted basis: (block, column position), plus the flat path list used
   * for cross-L equality comparison */
  std::vector<std::pair<int, Index>> trusted;
  std::vector<std::pair<int, Path>> signature;
  int dim = 0, maxb = 0;
};

struct RelationData {
  std::vector<Term> terms;  // coefficients reduced mod p, nonzero
  int src = 0, tgt = 0;
};

ClosureState closure_at(const Quiver& q, const std::vector<Path>& monos,
                        const std::vector<RelationData>& bins, const std::vector<int>& rank,
                        long long p, int L, int K) {
  const int nv = q.nvertices();
  ClosureState st;
  st.L = L;
  const auto entries = enumerate_paths(q, monos, L);

  st.blocks.assign(nv * nv, Block(p));
  for (const auto& e : entries) st.blocks[e.src * nv + e.tgt].cols.push_back(e);
  for (auto& b : st.blocks) {
    std::sort(b.cols.begin(), b.cols.end(), [&](const PathEntry& x, const PathEntry& y) {
      if (x.path.size() != y.path.size()) return x.path.size() > y.path.size();
      return rank_less(rank, y.path, x.path);
    });
    for (Index j = 0; j < static_cast<Index>(b.cols.size()); ++j) b.colpos[b.cols[j].path] = j;
    b.span = RowSpan(static_cast<Index>(b.cols.size()), p);
  }

  /* shortest-first src/tgt buckets: once u|t|v escapes the cap for the
   * shortest term of rel it does so for every term, so both loops may stop */
  std::vector<std::vector<const PathEntry*>> by_src(nv), by_tgt(nv);
  {
    std::vector<const PathEntry*> by_len;
    by_len.reserve(entries.size());
    for (const auto& e : entries) by_len.push_back(&e);
    std::stable_sort(by_len.begin(), by_len.end(), [](const PathEntry* x, const PathEntry* y) {
      return x->path.size() < y->path.size();
    });
    for (const PathEntry* e : by_len) {
      by_src[e->src].push_back(e);
      by_tgt[e->tgt].push_back(e);
    }
  }

  std::vector<std::set<std::vector<std::pair<Index, long long>>>> seen(nv * nv);
  for (const auto& rel : bins) {
    std::size_t lo = rel.terms.front().path.size();
    for (const auto& t : rel.terms) lo = std::min(lo, t.path.size());
    for (const PathEntry* up : by_src[rel.tgt]) {
      const PathEntry& u = *up;
      if (u.path.size() + lo > static_cast<std::size_t>(L)) break;
      const std::size_t budget = static_cast<std::size_t>(L) - lo - u.path.size();
      for (const PathEntry* vp : by_tgt[rel.src]) {
        const PathEntry& v = *vp;
        if (v.path.size() > budget) break;
        const int bi = v.src * nv + u.tgt;
        Block& blk = st.blocks[bi];
        bool ok = true;
        std::vector<std::pair<Index, long long>> sparse;
        for (const auto& t : rel.terms) {
          const Path w = concat3(u.path, t.path, v.path);
          if (contains_mono(monos, w)) continue;
          if (static_cast<int>(w.size()) > L) {
            ok = false;  // term escapes the cap: the row is unreliable
            break;
          }
          sparse.push_back({blk.colpos.at(w), t.coeff});
        }
        if (!ok || sparse.empty()) continue;
        std::sort(sparse.begin(), sparse.end());
        if (!seen[bi].insert(sparse).second) continue;  // duplicate row: span unchanged
        VecF row = bound(MatF::Zero(static_cast<Index>(blk.cols.size()), 1), p);
        for (const auto& [c, coeff] : sparse) row(c) += Fp(coeff, p);
        blk.span.insert(row);
      }
    }
  }

  for (int bi = 0; bi < nv * nv; ++bi) {
    const Block& b = st.blocks[bi];
    std::vector<bool> is_pivot(b.cols.size(), false);
    for (Index c : b.span.pivots()) is_pivot[c] = true;
    for (Index j = 0; j < static_cast<Index>(b.cols.size()); ++j) {
      if (is_pivot[j]) continue;
      const int len = static_cast<int>(b.cols[j].path.size());
      if (len > 0 && len > L - K) continue;  // boundary artifact zone
      st.trusted.push_back({bi, j});
      st.signature.push_back({bi, b.cols[j].path});
      st.maxb = std::max(st.maxb, len);
    }
  }
  std::sort(st.signature.begin(), st.signature.end());
  st.dim = static_cast<int>(st.trusted.size());
  return st;
}

}  // namespace

AlgebraTable build_algebra(const Presentation& pres, long long p) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (pres.chr == CharConstraint::only2 && p != 2)
    throw CharMismatch("algebra '" + pres.name + "' requires characteristic 2");
  const Quiver& q = pres.quiver;
  const int nv = q.nvertices();

  std::vector<Path> monos;
  std::vector<RelationData> bins;
  int maxrel = 1;
  int K = 0;
  for (const auto& rel : pres.relations) {
    RelationData rd;
    for (const auto& t : rel.terms) {
      if (t.path.size() < 2) throw BuildError("relation term shorter than 2: not admissible");
      const long long c = ((t.coeff % p) + p) % p;
      if (c) rd.terms.push_back({c, t.path});
      maxrel = std::max(maxrel, static_cast<int>(t.path.size()));
    }
    if (rd.terms.empty()) continue;
    if (rd.terms.size() == 1) {
      monos.push_back(rd.terms.front().path);
      continue;
    }
    std::size_t lo = rd.terms.front().path.size(), hi = lo;
    for (const auto& t : rd.terms) {
      lo = std::min(lo, t.path.size());
      hi = std::max(hi, t.path.size());
    }
    K = std::max(K, static_cast<int>(hi - lo));
    rd.src = path_src(q, rd.terms.front().path);
    rd.tgt = path_tgt(q, rd.terms.front().path);
    bins.push_back(std::move(rd));
  }

  const std::vector<int> rank = name_ranks(q);

  ClosureState st = closure_at(q, monos, bins, rank, p, maxrel, K);
  int stab = 0;
  for (int L = maxrel + 1; L <= kHardCap; ++L) {
    ClosureState next = closure_at(q, monos, bins, rank, p, L, K);
    if (next.dim == st.dim && next.signature == st.signature && 2 * next.maxb <= L - K) {
      st = std::move(next);
      stab = L;
      break;
    }
    st = std::move(next);
  }
  if (!stab) throw BuildError("dimension failed to stabilize by the length cap");
  for (int L = stab + 1; L <= std::min(2 * stab, kHardCap); ++L) {
    ClosureState ver = closure_at(q, monos, bins, rank, p, L, K);
    if (ver.signature != st.signature)
      throw BuildError("basis changed during the verification sweep");
    st = std::move(ver);
  }

  AlgebraTable a;
  a.pres = pres;
  a.p = p;
  a.stabilized_at = stab;

  std::vector<BasisElem> elems;
  for (const auto& [bi, j] : st.trusted) {
    const PathEntry& e = st.blocks[bi].cols[j];
    elems.push_back({e.path, e.src});
  }
  std::sort(elems.begin(), elems.end(), [&](const BasisElem& x, const BasisElem& y) {
    if (x.path.empty() != y.path.empty()) return x.path.empty();
    if (x.path.empty()) return x.vertex < y.vertex;
    if (x.path.size() != y.path.size()) return x.path.size() < y.path.size();
    return rank_less(rank, x.path, y.path);
  });
  a.basis = std::move(elems);

  a.idempotent_index.assign(nv, -1);
  std::map<Path, int> global_index;
  std::vector<std::map<int, int>> empty_index(nv);
  for (int i = 0; i < a.dim(); ++i) {
    if (a.basis[i].path.empty())
      a.idempotent_index[a.basis[i].vertex] = i;
    else
      global_index[a.basis[i].path] = i;
  }

  auto reduce_path = [&](const Path& w, int src_vertex) -> VecF {
    VecF out = bound(MatF::Zero(a.dim(), 1), p);
    if (w.empty()) {
      out(a.idempotent_index[src_vertex]) = Fp(1, p);
      return out;
    }
    if (contains_mono(monos, w)) return out;
    Block& blk = st.blocks[path_src(q, w) * nv + path_tgt(q, w)];
    const auto it = blk.colpos.find(w);
    if (it == blk.colpos.end()) throw InternalError("product escapes the closure zone");
    VecF dense = bound(MatF::Zero(static_cast<Index>(blk.cols.size()), 1), p);
    dense(it->second) = Fp(1, p);
    const VecF resid = blk.span.reduce(dense);
    for (Index j = 0; j < resid.size(); ++j) {
      if (resid(j).is_zero()) continue;
      const PathEntry& e = blk.cols[j];
      int gi;
      if (e.path.empty()) {
        gi = a.idempotent_index[e.src];
      } else {
        const auto git = global_index.find(e.path);
        if (git == global_index.end()) throw InternalError("residual escapes the trusted basis");
        gi = git->second;
      }
      out(gi) = resid(j);
    }
    return out;
  };

  a.mult_.assign(a.dim(), std::vector<VecF>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      if (a.src_of(i) != a.tgt_of(j)) {
        a.mult_[i][j] = a.zero_vec();
        continue;
      }
      Path w = a.basis[i].path;
      w.insert(w.end(), a.basis[j].path.begin(), a.basis[j].path.end());
      a.mult_[i][j] = reduce_path(w, a.basis[j].vertex);
    }
  return a;
}

std::string AlgebraTable::label(int i) const {
  if (basis[i].path.empty()) return "e_" + pres.quiver.vertices[basis[i].vertex];
  return path_text(pres.quiver, basis[i].path);
}

VecF AlgebraTable::unit_vec(int i) const {
  VecF v = zero_vec();
  v(i) = Fp(1, p);
  return v;
}

VecF AlgebraTable::one() const {
  VecF v = zero_vec();
  for (int i : idempotent_index) v(i) = Fp(1, p);
  return v;
}

VecF AlgebraTable::mul(const VecF& x, const VecF& y) const {
  VecF out = zero_vec();
  for (int i = 0; i < dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y(j).is_zero()) continue;
      out += (x(i) * y(j)) * mult_[i][j];
    }
  }
  return out;
}

VecF AlgebraTable::path_image(const Path& q) const {
  if (q.empty()) throw DomainError("empty path needs a vertex; use an idempotent");
  auto arrow_vec = [&](int ar) {
    for (int i = 0; i < dim(); ++i)
      if (basis[i].path.size() == 1 && basis[i].path[0] == ar) return unit_vec(i);
    throw InternalError("arrow missing from basis");
  };
  VecF img = arrow_vec(q.back());
  for (std::size_t i = q.size() - 1; i-- > 0;) img = mul(arrow_vec(q[i]), img);
  return img;
}

MatF AlgebraTable::left_mult(const VecF& x) const {
  MatF m(dim(), dim());
  for (int j = 0; j < dim(); ++j) m.col(j) = mul(x, unit_vec(j));
  return m;
}

MatF AlgebraTable::right_mult(const VecF& x) const {
  MatF m(dim(), dim());
  for (int j = 0; j < dim(); ++j) m.col(j) = mul(unit_vec(j), x);
  return m;
}

IdealBasis radical(const AlgebraTable& a) {
  MatF rows = bound(MatF::Zero(a.dim() - a.nvertices(), a.dim()), a.p);
  Index r = 0;
  for (int i = 0; i < a.dim(); ++i)
    if (!a.basis[i].path.empty()) rows(r++, i) = Fp(1, a.p);
  return {rows};
}

IdealBasis radical_power(const AlgebraTable& a, int m) {
  if (m <= 1) return radical(a);
  std::vector<MatF> arrow_left;
  for (std::size_t ar = 0; ar < a.pres.quiver.arrows.size(); ++ar)
    arrow_left.push_back(a.left_mult(a.path_image({static_cast<int>(ar)})));
  MatF cur = radical(a).vectors;
  for (int step = 2; step <= m; ++step) {
    RowSpan next(a.dim(), a.p);
    for (const auto& la : arrow_left)
      for (Index i = 0; i < cur.rows(); ++i) next.insert(la * cur.row(i).transpose());
    cur = next.rows();
    if (cur.rows() == 0) break;
  }
  return {cur};
}

IdealBasis socle(const AlgebraTable& a) {
  MatF sys(0, a.dim());
  for (std::size_t ar = 0; ar < a.pres.quiver.arrows.size(); ++ar) {
    const VecF img = a.path_image({static_cast<int>(ar)});
    sys = vstack(sys, a.left_mult(img));
    sys = vstack(sys, a.right_mult(img));
  }
  const MatF ker = kernel_basis(sys, a.p);
  return {ker.transpose()};
}

std::vector<Path> forbidden_subpaths(const AlgebraTable& a) {
  const Quiver& q = a.pres.quiver;
  RowSpan soc(a.dim(), a.p);
  soc.insert_all(socle(a).vectors);
  auto j_zero = [&](const Path& w) { return soc.contains(a.path_image(w)); };

  std::vector<Path> forbidden;
  std::vector<Path> alive;  // J-nonzero paths of the current length
  std::map<Path, bool> alive_set;
  for (std::size_t ar = 0; ar < q.arrows.size(); ++ar) {
    const Path w{static_cast<int>(ar)};
    if (j_zero(w))
      forbidden.push_back(w);
    else {
      alive.push_back(w);
      alive_set[w] = true;
    }
  }
  while (!alive.empty()) {
    std::vector<Path> next;
    for (const auto& w : alive)
      for (std::size_t ar = 0; ar < q.arrows.size(); ++ar) {
        if (q.arrows[ar].src != path_tgt(q, w)) continue;
        Path cand{static_cast<int>(ar)};
        cand.insert(cand.end(), w.begin(), w.end());
        Path prefix(cand.begin(), cand.end() - 1);
        if (!alive_set.count(prefix)) continue;  // a shorter forbidden path covers cand
        if (j_zero(cand)) {
          forbidden.push_back(cand);
        } else {
          next.push_back(cand);
          alive_set[cand] = true;
        }
      }
    alive = std::move(next);
  }
  const std::vector<int> rank = name_ranks(q);
  std::sort(forbidden.begin(), forbidden.end(), [&](const Path& x, const Path& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return rank_less(rank, x, y);
  });
  return forbidden;
}

std::optional<VecF> symmetric_form(const AlgebraTable& a) {
  const int n = a.dim();
  MatF constraints(0, n);
  {
    RowSpan span(n, a.p);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) span.insert(a.mul(i, j) - a.mul(j, i));
    constraints = span.rows();
  }
  const MatF cand = kernel_basis(constraints, a.p);  // columns: symmetric forms
  if (cand.cols() == 0) return std::nullopt;
  auto gram_ok = [&](const VecF& f) {
    MatF g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = a.mul(i, j).dot(f);
    return rank_of(g, a.p) == n;
  };
  for (Index c = 0; c < cand.cols(); ++c) {
    VecF f = cand.col(c);
    if (gram_ok(f)) return f;
  }
  std::mt19937_64 rng(0x73796d6d65747279ull);
  for (int attempt = 0; attempt < 64; ++attempt) {
    VecF f = bound(MatF::Zero(n, 1), a.p);
    for (Index c = 0; c < cand.cols(); ++c)
      f += Fp(static_cast<long long>(rng() % a.p), a.p) * cand.col(c);
    if (!is_zero_mat(f) && gram_ok(f)) return f;
  }
  return std::nullopt;
}

bool is_commutative(const AlgebraTable& a) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      if (!is_zero_mat(a.mul(i, j) - a.mul(j, i))) return false;
  return true;
}

}  // namespace strand
