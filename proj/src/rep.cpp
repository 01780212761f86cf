#include "strand/rep.hpp"

#include <sstream>

#include "json.hpp"
#include "strand/parser.hpp"

namespace strand {
namespace {

MatF zmat(Index r, Index c, long long p) { return bound(MatF::Zero(r, c), p); }

}  // namespace

Rep blank_rep(const AlgebraTable& a, std::vector<int> dims) {
  Rep r;
  r.alg = &a;
  r.dims = std::move(dims);
  r.arrows.reserve(a.pres.quiver.arrows.size());
  for (const auto& ar : a.pres.quiver.arrows)
    r.arrows.push_back(zmat(r.dims[ar.tgt], r.dims[ar.src], a.p));
  return r;
}

Rep zero_rep(const AlgebraTable& a) { return blank_rep(a, std::vector<int>(a.nvertices(), 0)); }

Rep simple(const AlgebraTable& a, int u) {
  std::vector<int> dims(a.nvertices(), 0);
  dims[u] = 1;
  return blank_rep(a, std::move(dims));
}

Rep projective(const AlgebraTable& a, int u) {
  const Quiver& q = a.pres.quiver;
  const int nv = a.nvertices();
  std::vector<std::vector<int>> cols(nv);  // basis elements with source u, by target
  std::vector<int> offset(a.dim(), -1);
  for (int i = 0; i < a.dim(); ++i) {
    if (a.src_of(i) != u) continue;
    offset[i] = static_cast<int>(cols[a.tgt_of(i)].size());
    cols[a.tgt_of(i)].push_back(i);
  }
  std::vector<int> dims(nv);
  for (int v = 0; v < nv; ++v) dims[v] = static_cast<int>(cols[v].size());
  Rep r = blank_rep(a, std::move(dims));
  for (std::size_t z = 0; z < q.arrows.size(); ++z) {
    const VecF za = a.path_image({static_cast<int>(z)});
    MatF& x = r.arrows[z];
    for (std::size_t j = 0; j < cols[q.arrows[z].src].size(); ++j) {
      const VecF w = a.mul(za, a.unit_vec(cols[q.arrows[z].src][j]));
      for (Index i = 0; i < w.size(); ++i) {
        if (w(i).is_zero()) continue;
        if (a.src_of(i) != u || a.tgt_of(i) != q.arrows[z].tgt)
          throw InternalError("projective: product left the expected block");
        x(offset[i], static_cast<Index>(j)) = w(i);
      }
    }
  }
  return r;
}

Rep regular_rep(const AlgebraTable& a) {
  Rep r = projective(a, 0);
  for (int u = 1; u < a.nvertices(); ++u) r = direct_sum(r, projective(a, u));
  return r;
}

Rep direct_sum(const Rep& x, const Rep& y) {
  if (x.alg != y.alg) throw DomainError("direct sum of modules over different algebras");
  const AlgebraTable& a = *x.alg;
  std::vector<int> dims(a.nvertices());
  for (int v = 0; v < a.nvertices(); ++v) dims[v] = x.dims[v] + y.dims[v];
  Rep r = blank_rep(a, std::move(dims));
  for (std::size_t z = 0; z < r.arrows.size(); ++z) {
    const auto& ar = a.pres.quiver.arrows[z];
    r.arrows[z].topLeftCorner(x.dims[ar.tgt], x.dims[ar.src]) = x.arrows[z];
    r.arrows[z].bottomRightCorner(y.dims[ar.tgt], y.dims[ar.src]) = y.arrows[z];
  }
  return r;
}

MatF eval_path(const Rep& r, const Path& w) {
  if (w.empty()) throw InternalError("eval_path: empty path");
  return eval_path_mats(r.arrows, w);
}

MatF eval_relation(const Rep& r, const Relation& rel) {
  return eval_relation_mats(r.arrows, rel);
}

std::optional<std::string> validate(const Rep& r) {
  const AlgebraTable& a = *r.alg;
  const Quiver& q = a.pres.quiver;
  if (static_cast<int>(r.dims.size()) != a.nvertices()) return "wrong number of vertex dimensions";
  if (r.arrows.size() != q.arrows.size()) return "wrong number of arrow matrices";
  for (std::size_t z = 0; z < q.arrows.size(); ++z) {
    const auto& ar = q.arrows[z];
    if (r.arrows[z].rows() != r.dims[ar.tgt] || r.arrows[z].cols() != r.dims[ar.src]) {
      std::ostringstream os;
      os << "arrow " << ar.name << ": expected " << r.dims[ar.tgt] << " x " << r.dims[ar.src]
         << ", got " << r.arrows[z].rows() << " x " << r.arrows[z].cols();
      return os.str();
    }
  }
  for (const auto& rel : a.pres.relations)
    if (!is_zero_mat(eval_relation(r, rel)))
      return "relation " + relation_text(q, rel) + " does not vanish";
  return std::nullopt;
}

std::vector<MatF> radical_inclusions(const Rep& r) {
  const AlgebraTable& a = *r.alg;
  std::vector<MatF> incl(a.nvertices());
  for (int v = 0; v < a.nvertices(); ++v) {
    RowSpan span(r.dims[v], a.p);
    for (std::size_t z = 0; z < r.arrows.size(); ++z) {
      if (a.pres.quiver.arrows[z].tgt != v) continue;
      for (Index j = 0; j < r.arrows[z].cols(); ++j) span.insert(r.arrows[z].col(j));
    }
    incl[v] = span.rows().transpose();
  }
  return incl;
}

std::vector<int> top_dims(const Rep& r) {
  auto incl = radical_inclusions(r);
  std::vector<int> t(r.dims.size());
  for (std::size_t v = 0; v < r.dims.size(); ++v)
    t[v] = r.dims[v] - static_cast<int>(incl[v].cols());
  return t;
}

Rep submodule(const Rep& r, const std::vector<MatF>& incl) {
  const AlgebraTable& a = *r.alg;
  std::vector<int> dims(a.nvertices());
  for (int v = 0; v < a.nvertices(); ++v) dims[v] = static_cast<int>(incl[v].cols());
  Rep s = blank_rep(a, std::move(dims));
  for (std::size_t z = 0; z < r.arrows.size(); ++z) {
    const auto& ar = a.pres.quiver.arrows[z];
    const MatF img = r.arrows[z] * incl[ar.src];
    for (Index j = 0; j < img.cols(); ++j) {
      auto y = solve_affine(incl[ar.tgt], img.col(j), a.p);
      if (!y) throw InternalError("submodule: columns are not arrow-invariant");
      s.arrows[z].col(j) = *y;
    }
  }
  return s;
}

std::string rep_to_json(const Rep& r) {
  const AlgebraTable& a = *r.alg;
  const Quiver& q = a.pres.quiver;
  nlohmann::json j;
  j["algebra"] = a.pres.name;
  j["p"] = a.p;
  for (int v = 0; v < a.nvertices(); ++v) j["dims"][q.vertices[v]] = r.dims[v];
  for (std::size_t z = 0; z < q.arrows.size(); ++z) {
    auto rows = nlohmann::json::array();
    for (Index i = 0; i < r.arrows[z].rows(); ++i) {
      auto row = nlohmann::json::array();
      for (Index jx = 0; jx < r.arrows[z].cols(); ++jx)
        row.push_back(r.arrows[z](i, jx).bound(a.p).value());
      rows.push_back(row);
    }
    j["arrows"][q.arrows[z].name] = rows;
  }
  return j.dump(2) + "\n";
}

Rep rep_from_json(const AlgebraTable& a, const std::string& text) {
  const Quiver& q = a.pres.quiver;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("module json: ") + e.what());
  }
  try {
    if (j.at("algebra").get<std::string>() != a.pres.name)
      throw DomainError("module is for algebra " + j["algebra"].get<std::string>() +
                        ", not " + a.pres.name);
    if (j.contains("p") && j["p"].get<long long>() != a.p)
      throw DomainError("module has characteristic " + j["p"].dump());
    std::vector<int> dims(a.nvertices());
    for (int v = 0; v < a.nvertices(); ++v) dims[v] = j.at("dims").at(q.vertices[v]).get<int>();
    Rep r = blank_rep(a, std::move(dims));
    for (std::size_t z = 0; z < q.arrows.size(); ++z) {
      const auto& ar = q.arrows[z];
      const auto& rows = j.at("arrows").at(ar.name);
      if (static_cast<int>(rows.size()) != r.dims[ar.tgt])
        throw ParseError("arrow " + ar.name + ": wrong number of rows");
      for (Index i = 0; i < r.arrows[z].rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != r.dims[ar.src])
          throw ParseError("arrow " + ar.name + ": wrong number of columns");
        for (Index jx = 0; jx < r.arrows[z].cols(); ++jx)
          r.arrows[z](i, jx) = Fp(rows[i][jx].get<long long>(), a.p);
      }
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("module json: ") + e.what());
  }
}

}  // namespace strand
