#include "strand/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace strand {
namespace {

struct Tok {
  enum Kind { name, number, star, caret, lparen, rparen, plus, minus, end } kind;
  std::string text;
  std::int64_t value = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Tok next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ >= s_.size()) return {Tok::end, ""};
    const char c = s_[i_];
    if (c == '*') return ++i_, Tok{Tok::star, "*"};
    if (c == '^') return ++i_, Tok{Tok::caret, "^"};
    if (c == '(') return ++i_, Tok{Tok::lparen, "("};
    if (c == ')') return ++i_, Tok{Tok::rparen, ")"};
    if (c == '+') return ++i_, Tok{Tok::plus, "+"};
    if (c == '-') return ++i_, Tok{Tok::minus, "-"};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      Tok t{Tok::number, s_.substr(i_, j - i_)};
      t.value = std::atoll(t.text.c_str());
      i_ = j;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      Tok t{Tok::name, s_.substr(i_, j - i_)};
      i_ = j;
      return t;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'");
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

/* relation := term (('+'|'-') term)*
 * term     := [number '*'] factor ('*' factor)*
 * factor   := name | '(' factor ('*' factor)* ')' ['^' number]           */
class RelParser {
 public:
  RelParser(const Quiver& q, const std::string& line) : q_(q), lex_(line) { advance(); }

  Relation parse() {
    Relation rel;
    rel.terms.push_back(parse_term(1));
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      const std::int64_t sign = cur_.kind == Tok::plus ? 1 : -1;
      advance();
      rel.terms.push_back(parse_term(sign));
    }
    if (cur_.kind != Tok::end) throw ParseError("trailing tokens in relation");
    return rel;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  Term parse_term(std::int64_t sign) {
    Term t;
    t.coeff = sign;
    if (cur_.kind == Tok::number) {
      t.coeff *= cur_.value;
      advance();
      if (cur_.kind != Tok::star) throw ParseError("coefficient must be followed by '*'");
      advance();
    }
    append_factor(t.path);
    while (cur_.kind == Tok::star) {
      advance();
      append_factor(t.path);
    }
    if (t.path.empty()) throw ParseError("empty term in relation");
    return t;
  }

  void append_factor(Path& path) {
    if (cur_.kind == Tok::name) {
      const int a = q_.arrow_index(cur_.text);
      if (a < 0) throw ParseError("unknown arrow '" + cur_.text + "' in relation");
      path.push_back(a);
      advance();
      return;
    }
    if (cur_.kind == Tok::lparen) {
      advance();
      Path group;
      append_factor(group);
      while (cur_.kind == Tok::star) {
        advance();
        append_factor(group);
      }
      if (cur_.kind != Tok::rparen) throw ParseError("expected ')'");
      advance();
      std::int64_t n = 1;
      if (cur_.kind == Tok::caret) {
        advance();
        if (cur_.kind != Tok::number || cur_.value < 1)
          throw ParseError("expected positive exponent after '^'");
        n = cur_.value;
        advance();
      }
      for (std::int64_t k = 0; k < n; ++k) path.insert(path.end(), group.begin(), group.end());
      return;
    }
    throw ParseError("expected arrow name or '('");
  }

  const Quiver& q_;
  Lexer lex_;
  Tok cur_{Tok::end, ""};
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

bool path_name_less(const Quiver& q, const Path& a, const Path& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return q.arrows[a[i]].name < q.arrows[b[i]].name;
  return a.size() < b.size();
}

void normalize_relation(const Quiver& q, Relation& rel) {
  std::stable_sort(rel.terms.begin(), rel.terms.end(),
                   [&](const Term& a, const Term& b) { return path_name_less(q, a.path, b.path); });
  if (!rel.terms.empty() && rel.terms.front().coeff < 0)
    for (auto& t : rel.terms) t.coeff = -t.coeff;
}

void validate_relation(const Quiver& q, const Relation& rel) {
  for (const auto& t : rel.terms) {
    if (t.coeff == 0) throw ParseError("zero coefficient in relation");
    if (!path_composable(q, t.path)) throw ParseError("non-composable path in relation");
  }
  const int s = path_src(q, rel.terms.front().path);
  const int e = path_tgt(q, rel.terms.front().path);
  for (const auto& t : rel.terms)
    if (path_src(q, t.path) != s || path_tgt(q, t.path) != e)
      throw ParseError("relation mixes terms with different endpoints");
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation pres;
  bool saw_algebra = false, in_relations = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    try {
      if (in_relations) {
        Relation rel = RelParser(pres.quiver, line).parse();
        validate_relation(pres.quiver, rel);
        normalize_relation(pres.quiver, rel);
        pres.relations.push_back(std::move(rel));
        continue;
      }
      const auto words = split_ws(line);
      if (words[0] == "algebra") {
        const auto lq = line.find('"'), rq = line.rfind('"');
        if (lq == std::string::npos || rq <= lq) fail("expected algebra \"<name>\"");
        pres.name = line.substr(lq + 1, rq - lq - 1);
        saw_algebra = true;
      } else if (words[0] == "char") {
        if (words.size() != 2 || (words[1] != "any" && words[1] != "2"))
          fail("expected char any|2");
        pres.chr = words[1] == "2" ? CharConstraint::only2 : CharConstraint::any;
      } else if (words[0] == "vertex") {
        if (words.size() < 2) fail("expected vertex <id> ...");
        for (std::size_t i = 1; i < words.size(); ++i) {
          if (pres.quiver.vertex_index(words[i]) >= 0) fail("duplicate vertex");
          pres.quiver.vertices.push_back(words[i]);
        }
      } else if (words[0] == "arrow") {
        if (words.size() != 4) fail("expected arrow <name> <source> <target>");
        const int s = pres.quiver.vertex_index(words[2]);
        const int t = pres.quiver.vertex_index(words[3]);
        if (pres.quiver.arrow_index(words[1]) >= 0) fail("duplicate arrow name");
        if (s < 0 || t < 0) fail("arrow endpoint is not a declared vertex");
        pres.quiver.arrows.push_back({words[1], s, t});
      } else if (words[0] == "relations") {
        in_relations = true;
      } else {
        fail("unknown directive '" + words[0] + "'");
      }
    } catch (const ParseError& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      fail(e.what());
    }
  }
  if (!saw_algebra) throw ParseError("missing algebra \"<name>\" header");
  if (pres.quiver.vertices.empty()) throw ParseError("no vertices declared");
  return pres;
}

std::string serialize_presentation(const Presentation& pres) {
  std::ostringstream os;
  os << "algebra \"" << pres.name << "\"\n";
  os << "char " << (pres.chr == CharConstraint::only2 ? "2" : "any") << "\n";
  os << "vertex";
  for (const auto& v : pres.quiver.vertices) os << " " << v;
  os << "\n";
  for (const auto& a : pres.quiver.arrows)
    os << "arrow " << a.name << " " << pres.quiver.vertices[a.src] << " "
       << pres.quiver.vertices[a.tgt] << "\n";
  os << "relations\n";
  for (const auto& rel : pres.relations) os << relation_text(pres.quiver, rel) << "\n";
  return os.str();
}

std::string relation_text(const Quiver& q, const Relation& rel) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rel.terms.size(); ++i) {
    const Term& t = rel.terms[i];
    if (i) os << (t.coeff < 0 ? " - " : " + ");
    const std::int64_t c = i && t.coeff < 0 ? -t.coeff : t.coeff;
    if (c != 1) os << c << "*";
    os << path_text(q, t.path);
  }
  return os.str();
}

std::string path_text(const Quiver& q, const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += "*";
    out += q.arrows[p[i]].name;
  }
  return out;
}

std::string word_text(const Quiver& q, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += q.arrows[w[i].arrow].name;
    if (w[i].inv) out += "^-1";
  }
  return out;
}

Word parse_word(const Quiver& q, const std::string& text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find('*', i);
    std::string tok = text.substr(i, j == std::string::npos ? j : j - i);
    i = j == std::string::npos ? text.size() : j + 1;
    bool inv = false;
    if (tok.size() > 3 && tok.rfind("^-1") == tok.size() - 3) {
      inv = true;
      tok = tok.substr(0, tok.size() - 3);
    }
    const int a = q.arrow_index(tok);
    if (a < 0) throw ParseError("unknown arrow '" + tok + "' in word");
    w.push_back({a, inv});
  }
  if (w.empty()) throw ParseError("empty word");
  if (!word_composable(q, w)) throw DomainError("word is not composable");
  return w;
}

}  // namespace strand
