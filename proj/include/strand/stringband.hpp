#pragma once
#include <string>
#include <vector>

#include "strand/catalog.hpp"
#include "strand/rep.hpp"

namespace strand {

/* a string: a word, or the empty word 1_vertex when word is empty */
struct StringSpec {
  Word word;
  int vertex = -1;
};

std::string spec_text(const Quiver& q, const StringSpec& s);

bool is_string(const AlgebraTable& a, const Word& w);
Rep string_module(const AlgebraTable& a, const Word& w);
Rep string_module(const AlgebraTable& a, const StringSpec& s);

/* canonical representatives (w taken over w^{-1}), the empty word at each
 * vertex first, then ordered by length and letterwise name order */
std::vector<StringSpec> enumerate_strings(const AlgebraTable& a, int max_len);

bool is_band(const AlgebraTable& a, const Word& w);

/* scalar parameter in k union {infinity} */
struct Mu {
  long long value = 0;
  bool inf = false;
};
inline Mu mu_fin(long long v) { return {v, false}; }
inline Mu mu_inf() { return {0, true}; }
std::string mu_text(const Mu& mu);

/* one-vertex quivers take mu in k union {infinity}, two-vertex in k,
 * three-vertex in k^* */
MuDomain mu_domain(const AlgebraTable& a);
bool mu_allowed(const AlgebraTable& a, const Mu& mu);

/* M(B, mu, m); mu = 0 and mu = infinity degenerate to the string modules
 * M(tail(B) B^{m-1}) and M(B^{m-1} head(B)) where the domain admits them */
Rep band_module(const AlgebraTable& a, const Word& b, const Mu& mu, int m);

/* the band matrices over any scalar ring, with the seam entry taking mu;
 * the deformation machinery instantiates this with truncated polynomials */
template <class S>
struct GradedMats {
  std::vector<int> dims;
  std::vector<Mat<S>> arrows;
};

template <class S>
GradedMats<S> band_matrices(const Quiver& q, const Word& b, const S& mu, int m) {
  const int n = static_cast<int>(b.size());
  std::vector<int> grade(n);
  for (int i = 0; i < n; ++i) grade[i] = letter_tgt(q, b[i]);  // v(i) = e(w_{i+1})
  std::vector<int> dims(q.nvertices(), 0);
  std::vector<int> pos(n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) pos[i * m + j] = dims[grade[i]]++;
  GradedMats<S> g;
  g.dims = dims;
  for (const auto& ar : q.arrows)
    g.arrows.push_back(Mat<S>::Zero(dims[ar.tgt], dims[ar.src]));
  auto add = [&](int arrow, int ti, int tj, int si, int sj, const S& c) {
    g.arrows[arrow](pos[ti * m + tj], pos[si * m + sj]) += c;
  };
  for (int i = 1; i <= n; ++i) {  // letter w_i, with z_{n,j} = z_{0,j}
    const Letter& l = b[i - 1];
    for (int j = 0; j < m; ++j) {
      if (!l.inv) {
        if (i == 1) {
          add(l.arrow, 0, j, i % n, j, mu);  // seam: z_{1,j} -> mu z_{0,j} + z_{0,j+1}
          if (j + 1 < m) add(l.arrow, 0, j + 1, i % n, j, S(1));
        } else {
          add(l.arrow, i - 1, j, i % n, j, S(1));
        }
      } else {
        add(l.arrow, i % n, j, i - 1, j, S(1));  // w_i = zeta^{-1}: z_{i-1,j} -> z_{i,j}
      }
    }
  }
  return g;
}

}  // namespace strand
