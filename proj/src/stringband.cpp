#include "strand/stringband.hpp"

#include <algorithm>

#include "strand/parser.hpp"

namespace strand {
namespace {

RowSpan socle_span(const AlgebraTable& a) {
  RowSpan s(a.dim(), a.p);
  s.insert_all(socle(a).vectors);
  return s;
}

/* Every maximal directed run of w and of w^{-1} must stay out of soc + {0};
 * a run is clean exactly when all of its subpaths are, soc being an ideal. */
bool runs_clean(const AlgebraTable& a, const RowSpan& soc, const Word& w) {
  auto scan = [&](const Word& u) {
    std::size_t i = 0;
    while (i < u.size()) {
      if (u[i].inv) {
        ++i;
        continue;
      }
      Path run;
      while (i < u.size() && !u[i].inv) run.push_back(u[i++].arrow);
      if (soc.contains(a.path_image(run))) return false;
    }
    return true;
  };
  return scan(w) && scan(word_inverse(w));
}

bool string_ok(const AlgebraTable& a, const RowSpan& soc, const Word& w) {
  if (w.empty()) return false;
  return word_composable(a.pres.quiver, w) && word_reduced(w) && runs_clean(a, soc, w);
}

}  // namespace

std::string spec_text(const Quiver& q, const StringSpec& s) {
  if (s.word.empty()) return "1_" + q.vertices[s.vertex];
  return word_text(q, s.word);
}

bool is_string(const AlgebraTable& a, const Word& w) {
  return string_ok(a, socle_span(a), w);
}

Rep string_module(const AlgebraTable& a, const Word& w) {
  const Quiver& q = a.pres.quiver;
  if (!is_string(a, w)) throw DomainError("not a string: " + word_text(q, w));
  const int n = static_cast<int>(w.size());
  std::vector<int> grade(n + 1);
  for (int i = 0; i < n; ++i) grade[i] = letter_tgt(q, w[i]);  // v(i) = e(w_{i+1})
  grade[n] = letter_src(q, w[n - 1]);                          // v(n) = s(w_n)
  std::vector<int> dims(a.nvertices(), 0), pos(n + 1);
  for (int i = 0; i <= n; ++i) pos[i] = dims[grade[i]]++;
  Rep r = blank_rep(a, std::move(dims));
  const Fp one(1, a.p);
  for (int i = 1; i <= n; ++i) {
    const Letter& l = w[i - 1];
    if (!l.inv)
      r.arrows[l.arrow](pos[i - 1], pos[i]) += one;  // w_i = zeta: z_i -> z_{i-1}
    else
      r.arrows[l.arrow](pos[i], pos[i - 1]) += one;  // w_i = zeta^{-1}: z_{i-1} -> z_i
  }
  return r;
}

Rep string_module(const AlgebraTable& a, const StringSpec& s) {
  if (!s.word.empty()) return string_module(a, s.word);
  if (s.vertex < 0 || s.vertex >= a.nvertices())
    throw DomainError("empty string needs a vertex");
  return simple(a, s.vertex);
}

std::vector<StringSpec> enumerate_strings(const AlgebraTable& a, int max_len) {
  const Quiver& q = a.pres.quiver;
  const RowSpan soc = socle_span(a);
  std::vector<StringSpec> out;
  for (int u = 0; u < a.nvertices(); ++u) out.push_back({{}, u});
  std::vector<Letter> alphabet;
  for (int z = 0; z < static_cast<int>(q.arrows.size()); ++z) {
    alphabet.push_back({z, false});
    alphabet.push_back({z, true});
  }
  std::vector<Word> level;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    if (len == 1) {
      for (const Letter& l : alphabet)
        if (string_ok(a, soc, {l})) next.push_back({l});
    } else {
      for (const Word& w : level)
        for (const Letter& l : alphabet) {
          if (letter_src(q, w.back()) != letter_tgt(q, l)) continue;
          if (l.arrow == w.back().arrow && l.inv != w.back().inv) continue;
          Word w2 = w;
          w2.push_back(l);
          if (runs_clean(a, soc, w2)) next.push_back(std::move(w2));
        }
    }
    for (const Word& w : next)
      if (!word_less(q, word_inverse(w), w)) out.push_back({w, -1});
    level = std::move(next);
  }
  std::sort(out.begin() + a.nvertices(), out.end(),
            [&](const StringSpec& x, const StringSpec& y) {
              if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
              return word_less(q, x.word, y.word);
            });
  return out;
}

bool is_band(const AlgebraTable& a, const Word& w) {
  const Quiver& q = a.pres.quiver;
  const int n = static_cast<int>(w.size());
  if (n < 2 || !word_composable(q, w)) return false;
  if (letter_src(q, w.back()) != letter_tgt(q, w.front())) return false;
  for (int i = 0; i < n; ++i) {  // cyclically reduced
    const Letter &x = w[i], &y = w[(i + 1) % n];
    if (x.arrow == y.arrow && x.inv != y.inv) return false;
  }
  bool dir = false, inv = false;
  for (const Letter& l : w) (l.inv ? inv : dir) = true;
  if (!dir || !inv) return false;
  for (int d = 1; d < n; ++d) {  // no proper power
    if (n % d) continue;
    bool power = true;
    for (int i = d; i < n && power; ++i) power = w[i] == w[i % d];
    if (power) return false;
  }
  Word ww = w;
  ww.insert(ww.end(), w.begin(), w.end());
  return runs_clean(a, socle_span(a), ww);
}

std::string mu_text(const Mu& mu) {
  return mu.inf ? "infinity" : std::to_string(mu.value);
}

MuDomain mu_domain(const AlgebraTable& a) {
  switch (a.nvertices()) {
    case 1:
      return MuDomain::k_and_infinity;
    case 2:
      return MuDomain::k;
    default:
      return MuDomain::k_star;
  }
}

bool mu_allowed(const AlgebraTable& a, const Mu& mu) {
  const MuDomain dom = mu_domain(a);
  if (mu.inf) return dom == MuDomain::k_and_infinity;
  if (Fp(mu.value, a.p).is_zero()) return dom != MuDomain::k_star;
  return true;
}

Rep band_module(const AlgebraTable& a, const Word& b, const Mu& mu, int m) {
  const Quiver& q = a.pres.quiver;
  if (m < 1) throw DomainError("band multiplicity must be positive");
  if (!is_band(a, b)) throw DomainError("not a band: " + word_text(q, b));
  if (b.front().inv) throw DomainError("band must begin with a direct letter");
  if (!mu_allowed(a, mu))
    throw MuOutOfDomain("mu = " + mu_text(mu) + " is outside the parameter domain of " +
                        a.pres.name);
  if (mu.inf) {
    Word w;
    for (int c = 0; c + 1 < m; ++c) w.insert(w.end(), b.begin(), b.end());
    w.push_back(b.front());
    return string_module(a, w);
  }
  const Fp val(mu.value, a.p);
  if (val.is_zero()) {
    Word w(b.begin() + 1, b.end());
    for (int c = 0; c + 1 < m; ++c) w.insert(w.end(), b.begin(), b.end());
    return string_module(a, w);
  }
  auto g = band_matrices<Fp>(q, b, val, m);
  Rep r;
  r.alg = &a;
  r.dims = std::move(g.dims);
  r.arrows.reserve(g.arrows.size());
  for (auto& x : g.arrows) r.arrows.push_back(bound(std::move(x), a.p));
  return r;
}

}  // namespace strand
