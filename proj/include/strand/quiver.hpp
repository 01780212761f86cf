#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "strand/errors.hpp"

namespace strand {

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
};

/* Vertex labels are strings; arrows refer to vertices by index into the
 * label list.  Paths compose right to left: in c1 c2 ... ck the letter ck
 * acts first, so the word is composable iff src(c_i) == tgt(c_{i+1}); the
 * path runs from src(ck) to tgt(c1). */
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
  }
  int vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == label) return static_cast<int>(i);
    return -1;
  }
  int nvertices() const { return static_cast<int>(vertices.size()); }
};

/* directed path as a list of arrow indices, composition order c1 c2 ... ck */
using Path = std::vector<int>;

inline bool path_composable(const Quiver& q, const Path& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (q.arrows[p[i]].src != q.arrows[p[i + 1]].tgt) return false;
  return true;
}
inline int path_src(const Quiver& q, const Path& p) { return q.arrows[p.back()].src; }
inline int path_tgt(const Quiver& q, const Path& p) { return q.arrows[p.front()].tgt; }

/* letter of a walk word: an arrow or its formal inverse */
struct Letter {
  int arrow = 0;
  bool inv = false;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.arrow == b.arrow && a.inv == b.inv;
  }
};

/* word w1 w2 ... wn; like paths, wn acts first */
using Word = std::vector<Letter>;

inline int letter_src(const Quiver& q, const Letter& l) {
  return l.inv ? q.arrows[l.arrow].tgt : q.arrows[l.arrow].src;
}
inline int letter_tgt(const Quiver& q, const Letter& l) {
  return l.inv ? q.arrows[l.arrow].src : q.arrows[l.arrow].tgt;
}

inline bool word_composable(const Quiver& q, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (letter_src(q, w[i]) != letter_tgt(q, w[i + 1])) return false;
  return true;
}
inline int word_src(const Quiver& q, const Word& w) { return letter_src(q, w.back()); }
inline int word_tgt(const Quiver& q, const Word& w) { return letter_tgt(q, w.front()); }

inline Word word_inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) l.inv = !l.inv;
  return r;
}

/* no letter directly followed by its own inverse */
inline bool word_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].arrow == w[i + 1].arrow && w[i].inv != w[i + 1].inv) return false;
  return true;
}

/* letter order: by arrow name, direct before inverse; used to pick canonical
 * representatives among {w, w^-1} and to enumerate deterministically */
inline bool letter_less(const Quiver& q, const Letter& a, const Letter& b) {
  if (q.arrows[a.arrow].name != q.arrows[b.arrow].name)
    return q.arrows[a.arrow].name < q.arrows[b.arrow].name;
  return a.inv < b.inv;
}

inline bool word_less(const Quiver& q, const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a[i] == b[i])) return letter_less(q, a[i], b[i]);
  }
  return a.size() < b.size();
}

inline Word word_canonical(const Quiver& q, const Word& w) {
  const Word inv = word_inverse(w);
  return word_less(q, inv, w) ? inv : w;
}

struct Term {
  std::int64_t coeff = 1;
  Path path;
};

struct Relation {
  std::vector<Term> terms;
};

enum class CharConstraint { any, only2 };

struct Presentation {
  std::string name;
  CharConstraint chr = CharConstraint::any;
  Quiver quiver;
  std::vector<Relation> relations;
};

std::string word_text(const Quiver& q, const Word& w);
std::string path_text(const Quiver& q, const Path& p);
Word parse_word(const Quiver& q, const std::string& text);

}  // namespace strand
