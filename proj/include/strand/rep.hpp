#pragma once
#include <optional>
#include <string>
#include <vector>

#include "strand/algebra.hpp"

namespace strand {

/* Module over an AlgebraTable as a representation of its quiver: one vector
 * space per vertex and one matrix per arrow, of shape dims[tgt] x dims[src].
 * The algebra is referenced, not owned; keep it alive along with the module. */
struct Rep {
  const AlgebraTable* alg = nullptr;
  std::vector<int> dims;
  std::vector<MatF> arrows;

  int total() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
  long long p() const { return alg->p; }
};

/* all-zero arrow matrices of the right shapes for the given dimensions */
Rep blank_rep(const AlgebraTable& a, std::vector<int> dims);
Rep zero_rep(const AlgebraTable& a);
Rep simple(const AlgebraTable& a, int u);
Rep projective(const AlgebraTable& a, int u);
Rep regular_rep(const AlgebraTable& a);
Rep direct_sum(const Rep& x, const Rep& y);

/* product of the arrow matrices along a nonempty path */
MatF eval_path(const Rep& r, const Path& w);
MatF eval_relation(const Rep& r, const Relation& rel);

/* nullopt when r is a module; otherwise a report naming the first violation */
std::optional<std::string> validate(const Rep& r);

/* per-vertex column bases of rad M = sum of arrow images, reduced and
 * deterministic */
std::vector<MatF> radical_inclusions(const Rep& r);
std::vector<int> top_dims(const Rep& r);

/* the submodule spanned by the given per-vertex columns, with the induced
 * arrow action; the columns must be independent and arrow-invariant */
Rep submodule(const Rep& r, const std::vector<MatF>& incl);

std::string rep_to_json(const Rep& r);
Rep rep_from_json(const AlgebraTable& a, const std::string& text);

/* Sampling cannot prove two modules non-isomorphic, so the answer is a
 * trichotomy; no is only returned on conclusive evidence. */
enum class Iso { yes, no, inconclusive };
Iso is_isomorphic(const Rep& x, const Rep& y);

/* relation evaluation on arbitrary per-arrow block matrices, shared with the
 * deformation machinery where the scalars are truncated polynomials */
template <class S>
Mat<S> eval_path_mats(const std::vector<Mat<S>>& x, const Path& w) {
  Mat<S> m = x[w[0]];
  for (std::size_t i = 1; i < w.size(); ++i) m = (m * x[w[i]]).eval();
  return m;
}

template <class S>
Mat<S> eval_relation_mats(const std::vector<Mat<S>>& x, const Relation& rel) {
  Mat<S> acc = (eval_path_mats(x, rel.terms[0].path) * S(rel.terms[0].coeff)).eval();
  for (std::size_t k = 1; k < rel.terms.size(); ++k)
    acc += eval_path_mats(x, rel.terms[k].path) * S(rel.terms[k].coeff);
  return acc;
}

}  // namespace strand
