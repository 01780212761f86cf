#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strand/linalg.hpp"
#include "strand/quiver.hpp"

namespace strand {

/* basis label: a chosen path representative, or e_{vertex} when path is empty */
struct BasisElem {
  Path path;
  int vertex = 0;  // source vertex; for empty paths the vertex itself
};

/* Lambda = kQ/I as an explicit basis with structure constants.  Immutable
 * after build_algebra; all queries are pure. */
class AlgebraTable {
 public:
  Presentation pres;
  long long p = 0;
  std::vector<BasisElem> basis;       // empties first by vertex, then (length, name-lex)
  std::vector<int> idempotent_index;  // per vertex: basis index of e_u
  int stabilized_at = 0;              // path length L certifying closure

  int dim() const { return static_cast<int>(basis.size()); }
  int nvertices() const { return pres.quiver.nvertices(); }
  int src_of(int i) const { return basis[i].vertex; }
  int tgt_of(int i) const {
    return basis[i].path.empty() ? basis[i].vertex : path_tgt(pres.quiver, basis[i].path);
  }
  int len_of(int i) const { return static_cast<int>(basis[i].path.size()); }
  std::string label(int i) const;

  const VecF& mul(int i, int j) const { return mult_[i][j]; }
  VecF mul(const VecF& x, const VecF& y) const;
  VecF path_image(const Path& q) const;  // image of an arbitrary directed path
  VecF zero_vec() const { return bound(MatF::Zero(dim(), 1), p); }
  VecF unit_vec(int i) const;
  VecF one() const;  // sum of all idempotents

  /* matrix of left (resp. right) multiplication by x on the basis */
  MatF left_mult(const VecF& x) const;
  MatF right_mult(const VecF& x) const;

 private:
  std::vector<std::vector<VecF>> mult_;
  friend AlgebraTable build_algebra(const Presentation&, long long);
};

AlgebraTable build_algebra(const Presentation& pres, long long p);

/* linearly independent elements spanning a two-sided ideal, one per row */
struct IdealBasis {
  MatF vectors;
  Index dim() const { return vectors.rows(); }
};

IdealBasis radical(const AlgebraTable& a);
IdealBasis radical_power(const AlgebraTable& a, int m);
IdealBasis socle(const AlgebraTable& a);

/* minimal monomial generators of J with Lambda/soc = kQ/J: paths whose image
 * lies in soc union {0} while every proper subpath's image does not */
std::vector<Path> forbidden_subpaths(const AlgebraTable& a);

/* linear form f with f(ab) = f(ba) and nondegenerate pairing f(ab), if any */
std::optional<VecF> symmetric_form(const AlgebraTable& a);

bool is_commutative(const AlgebraTable& a);

}  // namespace strand
