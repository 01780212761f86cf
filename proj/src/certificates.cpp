#include "strand/certificates.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "strand/config.hpp"
#include "strand/errors.hpp"

namespace strand {
namespace {

using nlohmann::json;

TruncPoly poly_from_coeffs(std::int64_t p, const json& coeffs) {
  if (!coeffs.is_array()) throw ParseError("certificate: matrix entry is not a coefficient list");
  TruncPoly r;
  TruncPoly tk(Fp(1, p));
  const TruncPoly t = TruncPoly::t(p);
  for (const auto& c : coeffs) {
    if (!c.is_number_integer()) throw ParseError("certificate: coefficient is not an integer");
    r += TruncPoly(Fp(c.get<long long>(), p)) * tk;
    tk *= t;
  }
  return r;
}

}  // namespace

Certificate certificate_from_json(const AlgebraTable& a, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("certificate: top level is not an object");
  for (const char* key : {"algebra", "module", "vertices", "arrows"})
    if (!j.contains(key)) throw ParseError(std::string("certificate: missing field ") + key);

  Certificate cert;
  cert.algebra = j["algebra"].get<std::string>();
  cert.module = j["module"].get<std::string>();
  if (cert.algebra != a.pres.name)
    throw DomainError("certificate is for algebra " + cert.algebra + ", not " + a.pres.name);

  const Quiver& q = a.pres.quiver;
  const int nv = a.nvertices();

  // vertices: label -> ordered list of global row/column indices
  std::vector<std::vector<int>> slots(nv);
  int total = 0;
  for (const auto& [label, list] : j["vertices"].items()) {
    const auto it = std::find(q.vertices.begin(), q.vertices.end(), label);
    if (it == q.vertices.end())
      throw ParseError("certificate: unknown vertex " + label);
    const int v = static_cast<int>(it - q.vertices.begin());
    slots[v] = list.get<std::vector<int>>();
    total += static_cast<int>(slots[v].size());
  }
  std::vector<int> vert_of(total, -1), pos_of(total, -1);
  for (int v = 0; v < nv; ++v)
    for (std::size_t k = 0; k < slots[v].size(); ++k) {
      const int g = slots[v][k];
      if (g < 0 || g >= total || vert_of[g] != -1)
        throw ParseError("certificate: vertices do not partition 0.." + std::to_string(total - 1));
      vert_of[g] = v;
      pos_of[g] = static_cast<int>(k);
    }

  Lift lift;
  lift.alg = &a;
  lift.dims.resize(nv);
  for (int v = 0; v < nv; ++v) lift.dims[v] = static_cast<int>(slots[v].size());
  for (const Arrow& ar : q.arrows) {
    if (!j["arrows"].contains(ar.name))
      throw ParseError("certificate: missing matrix for arrow " + ar.name);
    const json& rows = j["arrows"][ar.name];
    if (!rows.is_array() || static_cast<int>(rows.size()) != total)
      throw ParseError("certificate: matrix for " + ar.name + " is not " +
                       std::to_string(total) + " rows");
    MatP block = MatP::Constant(lift.dims[ar.tgt], lift.dims[ar.src], TruncPoly(0));
    for (int r = 0; r < total; ++r) {
      const json& row = rows[r];
      if (!row.is_array() || static_cast<int>(row.size()) != total)
        throw ParseError("certificate: matrix for " + ar.name + " is not square");
      for (int c = 0; c < total; ++c) {
        const TruncPoly e = poly_from_coeffs(a.p, row[c]);
        if (e.is_zero()) continue;
        if (vert_of[r] != ar.tgt || vert_of[c] != ar.src)
          throw ParseError("certificate: entry (" + std::to_string(r) + "," +
                           std::to_string(c) + ") of " + ar.name + " is off-block");
        block(pos_of[r], pos_of[c]) = e;
      }
    }
    lift.arrows.push_back(std::move(block));
  }
  for (auto it = j["arrows"].begin(); it != j["arrows"].end(); ++it)
    if (std::none_of(q.arrows.begin(), q.arrows.end(),
                     [&](const Arrow& ar) { return ar.name == it.key(); }))
      throw ParseError("certificate: unknown arrow " + it.key());

  cert.lift = std::move(lift);
  return cert;
}

std::vector<Certificate> load_certificates(const AlgebraTable& a, const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<Certificate> out;
  if (!fs::is_directory(dir)) return out;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    json j;
    try {
      j = json::parse(buf.str());
    } catch (const json::exception& e) {
      throw ParseError(path.filename().string() + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("algebra")) continue;
    if (j["algebra"].get<std::string>() != a.pres.name) continue;
    out.push_back(certificate_from_json(a, buf.str()));
  }
  return out;
}

std::vector<Certificate> load_certificates(const AlgebraTable& a) {
  return load_certificates(a, kCertificateDir);
}

}  // namespace strand
