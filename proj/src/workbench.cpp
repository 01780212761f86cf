#include "strand/workbench.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "strand/errors.hpp"
#include "strand/parser.hpp"

namespace strand {
namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long long parse_ll(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw ParseError("trailing characters in number " + s);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("not an integer: " + s);
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dims_text(const std::vector<int>& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(dims[i]);
  }
  return out;
}

/* the band-parameter cases of the 1-tube classification */
int band_case(const std::string& name) {
  if (name == "D(1)_0" || name == "D(2A)_0" || name == "D(3A)_1" || name == "D(3K)") return 1;
  if (name == "D(1)_1" || name == "D(2A)_1") return 2;
  if (name == "D(3A)_2" || name == "D(3B)_{2,2}" || name == "D(3D)_2" || name == "D(3L)") return 3;
  return 4;  // D(3B)_{2,1}, D(3Q)
}

bool char2_only(const std::string& name) { return name == "D(1)_1" || name == "D(2A)_1"; }

int vertex_count(const std::string& name) {
  if (name.rfind("D(1)", 0) == 0) return 1;
  if (name.rfind("D(2A)", 0) == 0) return 2;
  return 3;
}

bool band_passes(int grp, long long p, const Mu& mu) {
  if (grp == 1) return p != 2 && !mu.inf && mu.value % p != 0;
  if (grp == 2) return !mu.inf;
  if (grp == 3) return (mu.value * mu.value + 1) % p != 0;
  return (mu.value * mu.value - 1) % p != 0;
}

struct Seed {
  const char* tag;
  const char* algebra;
  const char* module;
  int stable_end;  // -1: assert only a value of at least 2
  int ext1;        // -1: unchecked
  const char* verdict;
  const char* witness;
};

const Seed kSeeds[] = {
    {"3.1(i)", "D(1)_0", "simple 0", 1, 2, "Lambda", ""},
    {"3.1(i)", "D(1)_1", "simple 0", 1, 2, "Lambda", ""},
    {"3.1(ii)", "D(2A)_0", "simple 0", 1, 1, "k[[t]]/(t^2)", ""},
    {"3.1(ii)", "D(2A)_0", "string beta", 1, 1, "k[[t]]/(t^2)", ""},
    {"3.1(ii)", "D(2A)_1", "simple 0", 1, 1, "k[[t]]/(t^2)", ""},
    {"3.1(ii)", "D(2A)_1", "string beta", 1, 1, "k[[t]]/(t^2)", ""},
    {"3.1(iii)", "D(3A)_1", "simple 1", 1, 0, "k", ""},
    {"3.1(iii)", "D(3A)_1", "string beta", 1, 0, "k", ""},
    {"3.1(iii)", "D(3A)_1", "string eta", 1, 0, "k", ""},
    {"3.1(iii)", "D(3K)", "simple 1", 1, 0, "k", ""},
    {"3.1(iii)", "D(3K)", "simple 0", 1, 0, "k", ""},
    {"3.1(iii)", "D(3K)", "simple 2", 1, 0, "k", ""},
    {"3.1(iv)", "D(3A)_2", "simple 1", 1, 0, "k", ""},
    {"3.1(iv)", "D(3A)_2", "string beta", 1, 1, "k[[t]]/(t^2)", ""},
    {"3.1(iv)", "D(3A)_2", "string eta", 1, 1, "k[[t]]/(t^2)", ""},
    {"3.1(iv)", "D(3B)_{2,1}", "simple 1", 1, 0, "k", ""},
    {"3.1(iv)", "D(3B)_{2,1}", "simple 0", 1, 1, "k[[t]]/(t^2)", ""},
    {"3.1(iv)", "D(3B)_{2,1}", "string eta", 1, 1, "k[[t]]/(t^2)", ""},
    {"3.1(iv)", "D(3B)_{2,2}", "string gamma*delta^-1", 1, 0, "k", ""},
    {"3.1(iv)", "D(3B)_{2,2}", "simple 0", 1, 1, "k[[t]]/(t^2)", ""},
    {"3.1(iv)", "D(3B)_{2,2}", "string gamma", 1, 1, "k[[t]]/(t^2)", ""},
    {"3.1(iv)", "D(3D)_2", "simple 1", 1, 0, "k", ""},
    {"3.1(iv)", "D(3D)_2", "simple 0", 1, 1, "k[[t]]/(t^2)", ""},
    {"3.1(iv)", "D(3D)_2", "simple 2", 1, 1, "k[[t]]/(t^2)", ""},
    {"3.1(iv)", "D(3L)", "string beta", 1, 0, "k", ""},
    {"3.1(iv)", "D(3L)", "simple 0", 1, 1, "k[[t]]/(t^2)", ""},
    {"3.1(iv)", "D(3L)", "string delta*beta", 1, 1, "k[[t]]/(t^2)", ""},
    {"3.1(iv)", "D(3Q)", "string delta", 1, 0, "k", ""},
    {"3.1(iv)", "D(3Q)", "simple 0", 1, 1, "k[[t]]/(t^2)", ""},
    {"3.1(iv)", "D(3Q)", "simple 1", 1, 1, "k[[t]]/(t^2)", ""},

    {"3.2(ii)", "D(2A)_0", "simple 1", 1, 0, "k", ""},
    {"3.2(ii)", "D(2A)_0", "string alpha^-1", -1, -1, "versal-only", ""},
    {"3.2(ii)", "D(2A)_0", "string alpha^-1*gamma", -1, -1, "versal-only", ""},
    {"3.2(ii)", "D(2A)_0", "string alpha^-1*gamma*beta*alpha^-1*beta^-1", -1, -1, "versal-only",
     ""},
    {"3.2(ii)", "D(2A)_0", "string alpha^-1*gamma*beta*alpha^-1", -1, -1, "versal-only", ""},
    {"3.2(ii)", "D(2A)_0", "string alpha^-1*gamma*beta*alpha^-1*gamma", -1, -1, "versal-only", ""},
    {"3.2(ii)", "D(2A)_0", "string alpha^-1*gamma*beta*alpha^-1*gamma*beta*alpha^-1*beta^-1", -1,
     -1, "versal-only", ""},
    {"3.2(ii)", "D(2A)_1", "simple 1", 1, 0, "k", ""},
    {"3.2(ii)", "D(2A)_1", "string alpha^-1", -1, -1, "versal-only", ""},
    {"3.2(ii)", "D(2A)_1", "string alpha^-1*gamma", -1, -1, "versal-only", ""},
    {"3.2(ii)", "D(2A)_1", "string alpha^-1*gamma*beta*alpha^-1*beta^-1", -1, -1, "versal-only",
     ""},
    {"3.2(ii)", "D(2A)_1", "string alpha^-1*gamma*beta*alpha^-1", -1, -1, "versal-only", ""},
    {"3.2(ii)", "D(2A)_1", "string alpha^-1*gamma*beta*alpha^-1*gamma", -1, -1, "versal-only", ""},
    {"3.2(ii)", "D(2A)_1", "string alpha^-1*gamma*beta*alpha^-1*gamma*beta*alpha^-1*beta^-1", -1,
     -1, "versal-only", ""},
    {"3.2(iii)", "D(3A)_1", "simple 1", 1, 0, "k", ""},
    {"3.2(iii)", "D(3A)_1", "simple 2", 1, 0, "k", ""},
    {"3.2(iii)", "D(3K)", "string gamma", 1, 0, "k", ""},
    {"3.2(iii)", "D(3K)", "string lambda", 1, 0, "k", ""},
    {"3.2(iv)", "D(3A)_2", "simple 0", 1, 0, "k", ""},
    {"3.2(iv)", "D(3A)_2", "string gamma*delta^-1*eta^-1*delta^-1", 1, 0, "k", ""},
    {"3.2(iv)", "D(3A)_2", "string gamma*delta^-1*eta^-1", 1, 1, "k[[t]]", "certificate"},
    {"3.2(iv)", "D(3B)_{2,1}", "simple 2", 1, 0, "k", ""},
    {"3.2(iv)", "D(3B)_{2,1}", "string delta*gamma^-1", 1, 0, "k", ""},
    {"3.2(iv)", "D(3B)_{2,1}", "string delta*gamma^-1*alpha*beta^-1", 1, 1, "k[[t]]",
     "certificate"},
    {"3.2(iv)", "D(3B)_{2,2}", "string delta^-1", 1, 0, "k", ""},
    {"3.2(iv)", "D(3B)_{2,2}", "simple 1", 1, 0, "k", ""},
    {"3.2(iv)", "D(3B)_{2,2}", "string beta*alpha^-1", 1, 1, "k[[t]]", "certificate"},
    {"3.2(iv)", "D(3D)_2", "string gamma^-1", 1, 0, "k", ""},
    {"3.2(iv)", "D(3D)_2", "string gamma^-1*alpha*beta^-1", 1, 0, "k", ""},
    {"3.2(iv)", "D(3D)_2", "string gamma^-1*alpha*beta^-1*eta*xi^-1", 1, 1, "k[[t]]",
     "certificate"},
    {"3.2(iv)", "D(3L)", "simple 2", 1, 0, "k", ""},
    {"3.2(iv)", "D(3L)", "string delta", 1, 0, "k", ""},
    {"3.2(iv)", "D(3L)", "string delta*beta*alpha^-1", 1, 1, "k[[t]]", "certificate"},
    {"3.2(iv)", "D(3Q)", "simple 2", 1, 0, "k", ""},
    {"3.2(iv)", "D(3Q)", "string delta*rho^-1", 1, 0, "k", ""},
    {"3.2(iv)", "D(3Q)", "string delta*rho^-1*beta*alpha^-1", 1, 1, "k[[t]]", "certificate"},
};

const char* band_tag(int grp) {
  switch (grp) {
    case 1:
      return "3.3(i)";
    case 2:
      return "3.3(ii)";
    case 3:
      return "3.3(iii)";
    default:
      return "3.3(iv)";
  }
}

}  // namespace

Rep module_from_descriptor(const AlgebraTable& a, const std::string& text) {
  const Quiver& q = a.pres.quiver;
  const std::vector<std::string> tok = split_ws(text);
  if (tok.empty()) throw ParseError("empty module descriptor");
  const std::string& kind = tok[0];
  if (kind == "simple" || kind == "proj" || kind == "projective") {
    if (tok.size() != 2) throw ParseError("descriptor '" + kind + "' takes one vertex");
    const int u = q.vertex_index(tok[1]);
    if (u < 0) throw ParseError("unknown vertex " + tok[1]);
    return kind == "simple" ? simple(a, u) : projective(a, u);
  }
  if (kind == "string") {
    if (tok.size() != 2) throw ParseError("descriptor 'string' takes one word");
    if (tok[1].rfind("1_", 0) == 0) {
      const int u = q.vertex_index(tok[1].substr(2));
      if (u < 0) throw ParseError("unknown vertex " + tok[1].substr(2));
      return string_module(a, StringSpec{{}, u});
    }
    return string_module(a, parse_word(q, tok[1]));
  }
  if (kind == "band") {
    Mu mu;
    bool have_mu = false;
    int m = 1;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (tok[i].rfind("mu=", 0) == 0) {
        const std::string v = tok[i].substr(3);
        if (v == "inf" || v == "infinity")
          mu = mu_inf();
        else
          mu = mu_fin(parse_ll(v));
        have_mu = true;
      } else if (tok[i].rfind("m=", 0) == 0) {
        m = static_cast<int>(parse_ll(tok[i].substr(2)));
      } else {
        throw ParseError("unrecognized band field " + tok[i]);
      }
    }
    if (!have_mu) throw ParseError("descriptor 'band' needs mu=<value>");
    return band_module(a, band_of(a.pres).band, mu, m);
  }
  throw ParseError("unknown module descriptor kind " + kind);
}

std::vector<Expectation> expectation_table(long long p) {
  std::vector<Expectation> out;
  for (const Seed& s : kSeeds) {
    if (char2_only(s.algebra) && p != 2) continue;
    Expectation e;
    e.tag = s.tag;
    e.algebra = s.algebra;
    e.module = s.module;
    e.stable_end = s.stable_end;
    e.ext1 = s.ext1;
    e.verdict = s.verdict;
    e.witness = s.witness;
    out.push_back(std::move(e));
  }
  for (const std::string& name : catalog_names()) {
    if (char2_only(name) && p != 2) continue;
    const int grp = band_case(name);
    const int nv = vertex_count(name);
    std::vector<Mu> dom;
    for (long long v = (nv == 3 ? 1 : 0); v < p; ++v) dom.push_back(mu_fin(v));
    if (nv == 1) dom.push_back(mu_inf());
    for (const Mu& mu : dom) {
      Expectation e;
      e.tag = band_tag(grp);
      e.algebra = name;
      e.module = "band mu=" + mu_text(mu) + " m=1";
      if (band_passes(grp, p, mu)) {
        e.stable_end = 1;
        e.ext1 = 1;
        e.verdict = "k[[t]]";
        e.witness = "L_mu";
      } else {
        e.stable_end = -1;
        e.ext1 = -1;
        e.verdict = "versal-only";
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

ReproReport run_reproduce(long long p, int cap) {
  ReproReport out;
  out.p = p;
  std::map<std::string, AlgebraTable> cache;
  const auto table_for = [&](const std::string& name) -> const AlgebraTable& {
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, build_algebra(catalog(name, p), p)).first;
    return it->second;
  };
  for (const Expectation& e : expectation_table(p)) {
    const AlgebraTable& a = table_for(e.algebra);
    ReproRow row;
    row.want = e;
    const Rep v = module_from_descriptor(a, e.module);
    const DefReport d = classify_defring(v, cap);
    row.stable_end = d.stable_end;
    row.ext1 = d.ext1;
    row.verdict = defring_text(d);
    row.mode = d.mode;
    row.detail = d.detail;
    bool pass = e.stable_end == -1 ? d.stable_end >= 2 : d.stable_end == e.stable_end;
    if (e.ext1 != -1) pass = pass && d.ext1 == e.ext1;
    if (!e.verdict.empty()) pass = pass && row.verdict == e.verdict;
    if (!e.witness.empty())
      pass = pass && d.mode == "certified" && d.detail.rfind(e.witness, 0) == 0;
    row.pass = pass;
    out.rows.push_back(std::move(row));
  }
  bool square_minus = false;
  for (long long x = 1; x < p; ++x)
    if ((x * x + 1) % p == 0) square_minus = true;
  if (!square_minus)
    out.notes.push_back("p = " + std::to_string(p) +
                        ": mu^2 = -1 has no solution, the case (iii) exclusion set is empty");
  return out;
}

Census run_census(const AlgebraTable& a, int max_len, int cap) {
  if (max_len < 0 || max_len > 12) throw DomainError("census max_len must lie in 0..12");
  Census c;
  c.algebra = a.pres.name;
  c.p = a.p;
  c.max_len = max_len;

  std::vector<Rep> mods;
  std::vector<std::string> descs;
  for (const StringSpec& s : enumerate_strings(a, max_len)) {
    descs.push_back("string " + spec_text(a.pres.quiver, s));
    mods.push_back(string_module(a, s));
  }
  const BandSpec bs = band_of(a.pres);
  for (long long v = 0; v < a.p; ++v)
    if (mu_allowed(a, mu_fin(v))) {
      descs.push_back("band mu=" + std::to_string(v) + " m=1");
      mods.push_back(band_module(a, bs.band, mu_fin(v), 1));
    }
  if (mu_allowed(a, mu_inf())) {
    descs.push_back("band mu=infinity m=1");
    mods.push_back(band_module(a, bs.band, mu_inf(), 1));
  }

  for (std::size_t i = 0; i < mods.size(); ++i) {
    CensusRow row;
    row.algebra = c.algebra;
    row.p = c.p;
    row.module = descs[i];
    row.dims = mods[i].dims;
    const DefReport d = classify_defring(mods[i], cap);
    row.stable_end = d.stable_end;
    row.ext1 = d.ext1;
    row.verdict = defring_text(d);
    row.mode = d.mode;
    if (row.stable_end == 1 && (row.verdict == "k[[t]]" || row.verdict == "unknown"))
      c.all_finite = false;
    c.rows.push_back(std::move(row));
  }

  /* orbit ids: rows in one Omega-orbit are linked whenever one is a forward
   * syzygy iterate of the other */
  std::vector<std::size_t> ks;
  for (std::size_t i = 0; i < c.rows.size(); ++i)
    if (c.rows[i].stable_end == 1) ks.push_back(i);
  std::vector<std::vector<Rep>> iter(ks.size());
  for (std::size_t k = 0; k < ks.size(); ++k)
    iter[k] = omega_orbit(mods[ks[k]], 6).iterates;
  std::vector<std::size_t> parent(ks.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto linked = [&](std::size_t k, std::size_t l) {
    for (const Rep& w : iter[k])
      if (w.dims == mods[ks[l]].dims && is_isomorphic(w, mods[ks[l]]) == Iso::yes) return true;
    for (const Rep& w : iter[l])
      if (w.dims == mods[ks[k]].dims && is_isomorphic(w, mods[ks[k]]) == Iso::yes) return true;
    return false;
  };
  for (std::size_t k = 0; k < ks.size(); ++k)
    for (std::size_t l = k + 1; l < ks.size(); ++l) {
      if (find(k) == find(l)) continue;
      if (linked(k, l)) parent[find(k)] = find(l);
    }
  std::map<std::size_t, int> ids;
  for (std::size_t k = 0; k < ks.size(); ++k) {
    const std::size_t root = find(k);
    const auto it = ids.find(root);
    const int id = it == ids.end() ? (ids[root] = static_cast<int>(ids.size())) : it->second;
    c.rows[ks[k]].orbit = id;
  }
  return c;
}

std::string census_csv(const Census& c) {
  std::string out = "algebra,p,module,dims,total,stable_end,ext1,verdict,mode,orbit\n";
  for (const CensusRow& r : c.rows) {
    const int total = std::accumulate(r.dims.begin(), r.dims.end(), 0);
    out += csv_field(r.algebra) + ',' + std::to_string(r.p) + ',' + csv_field(r.module) + ',' +
           dims_text(r.dims) + ',' + std::to_string(total) + ',' + std::to_string(r.stable_end) +
           ',' + std::to_string(r.ext1) + ',' + csv_field(r.verdict) + ',' + csv_field(r.mode) +
           ',' + (r.orbit < 0 ? std::string() : std::to_string(r.orbit)) + '\n';
  }
  return out;
}

std::string census_json(const Census& c) {
  nlohmann::ordered_json j;
  j["kind"] = "census";
  j["algebra"] = c.algebra;
  j["p"] = c.p;
  j["max_len"] = c.max_len;
  j["all_finite"] = c.all_finite;
  j["rows"] = nlohmann::ordered_json::array();
  for (const CensusRow& r : c.rows) {
    nlohmann::ordered_json row;
    row["module"] = r.module;
    row["dims"] = r.dims;
    row["total"] = std::accumulate(r.dims.begin(), r.dims.end(), 0);
    row["stable_end"] = r.stable_end;
    row["ext1"] = r.ext1;
    row["verdict"] = r.verdict;
    row["mode"] = r.mode;
    row["orbit"] = r.orbit;
    j["rows"].push_back(std::move(row));
  }
  return j.dump(1) + "\n";
}

std::vector<ReproReport> run_reproduce_suite(long long p, int cap) {
  std::vector<ReproReport> runs;
  runs.push_back(run_reproduce(p, cap));
  if (p != 2) runs.push_back(run_reproduce(2, cap));
  return runs;
}

std::string reproduce_csv(const std::vector<ReproReport>& runs) {
  std::string out =
      "tag,algebra,p,module,want_stable_end,want_ext1,want_verdict,want_witness,"
      "got_stable_end,got_ext1,got_verdict,got_mode,got_detail,pass\n";
  for (const ReproReport& r : runs)
    for (const ReproRow& row : r.rows) {
      const Expectation& e = row.want;
      out += csv_field(e.tag) + ',' + csv_field(e.algebra) + ',' + std::to_string(r.p) + ',' +
             csv_field(e.module) + ',' +
             (e.stable_end == -1 ? std::string(">=2") : std::to_string(e.stable_end)) + ',' +
             (e.ext1 == -1 ? std::string() : std::to_string(e.ext1)) + ',' + csv_field(e.verdict) +
             ',' + csv_field(e.witness) + ',' + std::to_string(row.stable_end) + ',' +
             std::to_string(row.ext1) + ',' + csv_field(row.verdict) + ',' + csv_field(row.mode) +
             ',' + csv_field(row.detail) + ',' + (row.pass ? "yes" : "no") + '\n';
    }
  return out;
}

std::string reproduce_json(const std::vector<ReproReport>& runs) {
  nlohmann::ordered_json j;
  j["kind"] = "reproduce";
  bool all = true;
  for (const ReproReport& r : runs) all = all && r.ok();
  j["ok"] = all;
  j["runs"] = nlohmann::ordered_json::array();
  for (const ReproReport& r : runs) {
    nlohmann::ordered_json run;
    run["p"] = r.p;
    run["ok"] = r.ok();
    run["notes"] = r.notes;
    run["rows"] = nlohmann::ordered_json::array();
    for (const ReproRow& row : r.rows) {
      nlohmann::ordered_json x;
      x["tag"] = row.want.tag;
      x["algebra"] = row.want.algebra;
      x["module"] = row.want.module;
      x["want"] = {{"stable_end", row.want.stable_end},
                   {"ext1", row.want.ext1},
                   {"verdict", row.want.verdict},
                   {"witness", row.want.witness}};
      x["got"] = {{"stable_end", row.stable_end},
                  {"ext1", row.ext1},
                  {"verdict", row.verdict},
                  {"mode", row.mode},
                  {"detail", row.detail}};
      x["pass"] = row.pass;
      run["rows"].push_back(std::move(x));
    }
    j["runs"].push_back(std::move(run));
  }
  return j.dump(1) + "\n";
}

std::string reproduce_diff(const std::vector<ReproReport>& runs) {
  std::string out;
  for (const ReproReport& r : runs)
    for (const ReproRow& row : r.rows) {
      if (row.pass) continue;
      const Expectation& e = row.want;
      out += "p=" + std::to_string(r.p) + " " + e.tag + " " + e.algebra + " [" + e.module +
             "]: want ";
      out += e.stable_end == -1 ? std::string("stable_end>=2")
                                : "stable_end=" + std::to_string(e.stable_end);
      if (e.ext1 != -1) out += " ext1=" + std::to_string(e.ext1);
      if (!e.verdict.empty()) out += " verdict=" + e.verdict;
      if (!e.witness.empty()) out += " witness=" + e.witness;
      out += "; got stable_end=" + std::to_string(row.stable_end) +
             " ext1=" + std::to_string(row.ext1) + " verdict=" + row.verdict;
      if (!row.mode.empty()) out += " mode=" + row.mode;
      if (!row.detail.empty()) out += " (" + row.detail + ")";
      out += '\n';
    }
  return out;
}

std::string classify_json(const AlgebraTable& a, const std::string& descriptor, const Rep& v,
                          const DefReport& d) {
  nlohmann::ordered_json j;
  j["kind"] = "classify";
  j["algebra"] = a.pres.name;
  j["p"] = a.p;
  j["module"] = descriptor;
  j["dims"] = v.dims;
  j["total"] = v.total();
  j["stable_end"] = d.stable_end;
  j["ext1"] = d.ext1;
  j["verdict"] = defring_text(d);
  j["mode"] = d.mode;
  j["detail"] = d.detail;
  return j.dump(1) + "\n";
}

}  // namespace strand
