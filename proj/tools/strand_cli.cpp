#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "strand/catalog.hpp"
#include "strand/parser.hpp"
#include "strand/workbench.hpp"

namespace {

using namespace strand;

struct Options {
  long long p = 5;
  int cap = 10;
  int max_len = 6;
  bool json = false;
  bool csv = false;
  std::string algebra_file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/* the algebra positional is dropped when --algebra-file supplies one */
AlgebraTable resolve_table(const Options& opt, std::vector<std::string>& args) {
  if (!opt.algebra_file.empty())
    return build_algebra(parse_presentation(read_file(opt.algebra_file)), opt.p);
  if (args.empty()) throw ParseError("missing algebra name");
  const std::string name = args.front();
  args.erase(args.begin());
  return build_algebra(catalog(name, opt.p), opt.p);
}

std::string join(const std::vector<std::string>& tok) {
  std::string out;
  for (std::size_t i = 0; i < tok.size(); ++i) {
    if (i) out += ' ';
    out += tok[i];
  }
  return out;
}

std::string dims_line(const Quiver& q, const std::vector<int>& dims) {
  std::string out;
  for (std::size_t v = 0; v < dims.size(); ++v) {
    if (v) out += ' ';
    out += q.vertices[v] + "=" + std::to_string(dims[v]);
  }
  return out;
}

nlohmann::ordered_json module_report(const char* kind, const AlgebraTable& a,
                                     const std::string& desc, const std::vector<int>& dims) {
  int total = 0;
  for (int d : dims) total += d;
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["algebra"] = a.pres.name;
  j["p"] = a.p;
  j["module"] = desc;
  j["dims"] = dims;
  j["total"] = total;
  return j;
}

int cmd_algebras(const Options& opt, const std::vector<std::string>& args) {
  if (!args.empty() && args[0] == "list") {
    for (const std::string& name : catalog_names()) std::cout << name << "\n";
    return 0;
  }
  if (!args.empty() && args[0] == "show") {
    if (!opt.algebra_file.empty()) {
      std::cout << serialize_presentation(parse_presentation(read_file(opt.algebra_file)));
      return 0;
    }
    if (args.size() != 2) throw ParseError("usage: algebras show <name>");
    std::cout << catalog_text(args[1]);
    return 0;
  }
  throw ParseError("usage: algebras list | algebras show <name>");
}

int cmd_module(const Options& opt, std::vector<std::string> args) {
  const AlgebraTable a = resolve_table(opt, args);
  const std::string desc = join(args);
  const Rep v = module_from_descriptor(a, desc);
  if (opt.json) {
    std::cout << module_report("module", a, desc, v.dims).dump(1) << "\n";
    return 0;
  }
  std::cout << a.pres.name << " p=" << a.p << " [" << desc << "]\n"
            << "dims " << dims_line(a.pres.quiver, v.dims) << " total=" << v.total() << "\n";
  return 0;
}

/* two descriptors separated by the token "vs" */
std::pair<Rep, Rep> two_modules(const AlgebraTable& a, const std::vector<std::string>& args,
                                std::string& d1, std::string& d2) {
  const auto sep = std::find(args.begin(), args.end(), "vs");
  if (sep == args.end()) throw ParseError("expected two descriptors separated by 'vs'");
  d1 = join({args.begin(), sep});
  d2 = join({sep + 1, args.end()});
  return {module_from_descriptor(a, d1), module_from_descriptor(a, d2)};
}

int cmd_pair(const Options& opt, std::vector<std::string> args, bool ext) {
  const AlgebraTable a = resolve_table(opt, args);
  std::string d1, d2;
  const auto [x, y] = two_modules(a, args, d1, d2);
  const Index d = ext ? ext1_dim(x, y) : hom_dim(x, y);
  if (opt.json) {
    nlohmann::ordered_json j;
    j["kind"] = ext ? "ext" : "hom";
    j["algebra"] = a.pres.name;
    j["p"] = a.p;
    j["from"] = d1;
    j["to"] = d2;
    j["dim"] = d;
    std::cout << j.dump(1) << "\n";
    return 0;
  }
  std::cout << "dim " << (ext ? "Ext^1" : "Hom") << "([" << d1 << "], [" << d2 << "]) = " << d
            << "\n";
  return 0;
}

int cmd_stend(const Options& opt, std::vector<std::string> args) {
  const AlgebraTable a = resolve_table(opt, args);
  const std::string desc = join(args);
  const Rep v = module_from_descriptor(a, desc);
  const Index end = hom_dim(v, v), st = stable_end_dim(v);
  if (opt.json) {
    nlohmann::ordered_json j;
    j["kind"] = "stend";
    j["algebra"] = a.pres.name;
    j["p"] = a.p;
    j["module"] = desc;
    j["end"] = end;
    j["stable_end"] = st;
    std::cout << j.dump(1) << "\n";
    return 0;
  }
  std::cout << "dim End = " << end << ", dim stable End = " << st << "\n";
  return 0;
}

int cmd_omega(const Options& opt, std::vector<std::string> args) {
  const AlgebraTable a = resolve_table(opt, args);
  const std::string desc = join(args);
  const Rep w = syzygy(module_from_descriptor(a, desc)).omega;
  if (opt.json) {
    std::cout << module_report("omega", a, desc, w.dims).dump(1) << "\n";
    return 0;
  }
  std::cout << "Omega[" << desc << "] dims " << dims_line(a.pres.quiver, w.dims)
            << " total=" << w.total() << "\n";
  return 0;
}

int cmd_classify(const Options& opt, std::vector<std::string> args) {
  const AlgebraTable a = resolve_table(opt, args);
  const std::string desc = join(args);
  const Rep v = module_from_descriptor(a, desc);
  const DefReport d = classify_defring(v, opt.cap);
  if (opt.json) {
    std::cout << classify_json(a, desc, v, d);
    return 0;
  }
  std::cout << "verdict: " << defring_text(d) << "\n"
            << "stable_end: " << d.stable_end << "\n"
            << "ext1: " << d.ext1 << "\n";
  if (!d.mode.empty()) std::cout << "mode: " << d.mode << "\n";
  if (!d.detail.empty()) std::cout << "detail: " << d.detail << "\n";
  return 0;
}

int cmd_census(const Options& opt, std::vector<std::string> args) {
  const AlgebraTable a = resolve_table(opt, args);
  if (!args.empty()) throw ParseError("census takes only an algebra");
  const Census c = run_census(a, opt.max_len, opt.cap);
  std::cout << (opt.json ? census_json(c) : census_csv(c));
  return 0;
}

int cmd_reproduce(const Options& opt) {
  const std::vector<ReproReport> runs = run_reproduce_suite(opt.p, opt.cap);
  bool ok = true;
  for (const ReproReport& r : runs) ok = ok && r.ok();
  if (opt.json) {
    std::cout << reproduce_json(runs);
  } else if (opt.csv) {
    std::cout << reproduce_csv(runs);
  } else {
    for (const ReproReport& r : runs) {
      int fails = 0;
      for (const ReproRow& row : r.rows) fails += row.pass ? 0 : 1;
      std::cout << "p=" << r.p << ": " << r.rows.size() << " rows, "
                << (fails ? std::to_string(fails) + " mismatches" : "all pass") << "\n";
      for (const std::string& n : r.notes) std::cout << "note: " << n << "\n";
    }
    if (!ok) std::cout << reproduce_diff(runs);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact deformation-ring workbench for the dihedral-type catalog"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--p", opt.p, "prime field order");
  app.add_option("--cap", opt.cap, "lift extension order cap");
  app.add_option("--max-len", opt.max_len, "census string length cap");
  app.add_flag("--json", opt.json, "emit JSON");
  app.add_flag("--csv", opt.csv, "emit CSV");
  app.add_option("--algebra-file", opt.algebra_file, "presentation file instead of the catalog");

  std::vector<std::string> args;
  const auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    s->add_option("args", args, "")->expected(-1);
    return s;
  };
  CLI::App* algebras = sub("algebras", "list the catalog or show one presentation");
  CLI::App* module_ = sub("module", "build a module and print its dimensions");
  CLI::App* hom = sub("hom", "dim Hom between two modules ('vs' separates)");
  CLI::App* ext = sub("ext", "dim Ext^1 between two modules ('vs' separates)");
  CLI::App* stend = sub("stend", "endomorphism and stable endomorphism dimensions");
  CLI::App* omega = sub("omega", "dimensions of the first syzygy");
  CLI::App* classify = sub("classify", "universal deformation ring verdict");
  CLI::App* census = sub("census", "classify all strings and band boundaries");
  CLI::App* reproduce = app.add_subcommand("reproduce", "check the catalog against the tables");
  reproduce->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*algebras) return cmd_algebras(opt, args);
    if (*module_) return cmd_module(opt, args);
    if (*hom) return cmd_pair(opt, args, false);
    if (*ext) return cmd_pair(opt, args, true);
    if (*stend) return cmd_stend(opt, args);
    if (*omega) return cmd_omega(opt, args);
    if (*classify) return cmd_classify(opt, args);
    if (*census) return cmd_census(opt, args);
    if (*reproduce) return cmd_reproduce(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
