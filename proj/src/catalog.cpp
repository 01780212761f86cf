#include "strand/catalog.hpp"

#include <array>
#include <utility>

#include "strand/fp.hpp"
#include "strand/parser.hpp"

namespace strand {
namespace {

struct Entry {
  const char* name;
  const char* text;
  const char* band;
};

constexpr std::array<Entry, 12> kCatalog = {{
    {"D(1)_0",
     "algebra \"D(1)_0\"\n"
     "char any\n"
     "vertex 0\n"
     "arrow alpha 0 0\n"
     "arrow beta 0 0\n"
     "relations\n"
     "alpha*alpha\n"
     "beta*beta\n"
     "alpha*beta - beta*alpha\n",
     "beta*alpha^-1"},
    {"D(1)_1",
     "algebra \"D(1)_1\"\n"
     "char 2\n"
     "vertex 0\n"
     "arrow alpha 0 0\n"
     "arrow beta 0 0\n"
     "relations\n"
     "alpha*alpha\n"
     "beta*beta - alpha*beta\n"
     "alpha*beta - beta*alpha\n",
     "beta*alpha^-1"},
    {"D(2A)_0",
     "algebra \"D(2A)_0\"\n"
     "char any\n"
     "vertex 0 1\n"
     "arrow alpha 0 0\n"
     "arrow beta 0 1\n"
     "arrow gamma 1 0\n"
     "relations\n"
     "alpha*alpha\n"
     "beta*gamma\n"
     "alpha*gamma*beta - gamma*beta*alpha\n",
     "alpha*beta^-1*gamma^-1"},
    {"D(2A)_1",
     "algebra \"D(2A)_1\"\n"
     "char 2\n"
     "vertex 0 1\n"
     "arrow alpha 0 0\n"
     "arrow beta 0 1\n"
     "arrow gamma 1 0\n"
     "relations\n"
     "alpha*alpha - alpha*gamma*beta\n"
     "beta*gamma\n"
     "alpha*gamma*beta - gamma*beta*alpha\n",
     "alpha*beta^-1*gamma^-1"},
    {"D(3A)_1",
     "algebra \"D(3A)_1\"\n"
     "char any\n"
     "vertex 0 1 2\n"
     "arrow beta 0 1\n"
     "arrow gamma 1 0\n"
     "arrow delta 1 2\n"
     "arrow eta 2 1\n"
     "relations\n"
     "gamma*beta\n"
     "delta*eta\n"
     "beta*gamma*eta*delta - eta*delta*beta*gamma\n",
     "beta*gamma*delta^-1*eta^-1"},
    {"D(3A)_2",
     "algebra \"D(3A)_2\"\n"
     "char any\n"
     "vertex 0 1 2\n"
     "arrow beta 0 1\n"
     "arrow gamma 1 0\n"
     "arrow delta 1 2\n"
     "arrow eta 2 1\n"
     "relations\n"
     "gamma*eta\n"
     "delta*beta\n"
     "(beta*gamma)^2 - (eta*delta)^2\n",
     "beta*gamma*delta^-1*eta^-1"},
    {"D(3B)_{2,1}",
     "algebra \"D(3B)_{2,1}\"\n"
     "char any\n"
     "vertex 0 1 2\n"
     "arrow alpha 0 0\n"
     "arrow beta 0 1\n"
     "arrow gamma 1 0\n"
     "arrow delta 1 2\n"
     "arrow eta 2 1\n"
     "relations\n"
     "alpha*gamma\n"
     "beta*alpha\n"
     "gamma*eta\n"
     "delta*beta\n"
     "alpha*alpha - gamma*beta\n"
     "beta*gamma - (eta*delta)^2\n",
     "alpha*beta^-1*eta*delta*gamma^-1"},
    {"D(3B)_{2,2}",
     "algebra \"D(3B)_{2,2}\"\n"
     "char any\n"
     "vertex 0 1 2\n"
     "arrow alpha 0 0\n"
     "arrow beta 0 1\n"
     "arrow gamma 1 0\n"
     "arrow delta 1 2\n"
     "arrow eta 2 1\n"
     "relations\n"
     "alpha*gamma\n"
     "beta*alpha\n"
     "gamma*eta\n"
     "delta*beta\n"
     "alpha*alpha - (gamma*beta)^2\n"
     "(beta*gamma)^2 - eta*delta\n",
     "alpha*beta^-1*gamma^-1"},
    {"D(3D)_2",
     "algebra \"D(3D)_2\"\n"
     "char any\n"
     "vertex 0 1 2\n"
     "arrow alpha 0 0\n"
     "arrow beta 0 1\n"
     "arrow gamma 1 0\n"
     "arrow delta 1 2\n"
     "arrow eta 2 1\n"
     "arrow xi 2 2\n"
     "relations\n"
     "alpha*gamma\n"
     "beta*alpha\n"
     "gamma*eta\n"
     "delta*beta\n"
     "eta*xi\n"
     "xi*delta\n"
     "alpha*alpha - gamma*beta\n"
     "beta*gamma - eta*delta\n"
     "delta*eta - xi*xi\n",
     "alpha*beta^-1*eta*xi^-1*delta*gamma^-1"},
    {"D(3K)",
     "algebra \"D(3K)\"\n"
     "char any\n"
     "vertex 0 1 2\n"
     "arrow beta 0 1\n"
     "arrow gamma 1 0\n"
     "arrow delta 1 2\n"
     "arrow eta 2 1\n"
     "arrow kappa 0 2\n"
     "arrow lambda 2 0\n"
     "relations\n"
     "beta*lambda\n"
     "gamma*eta\n"
     "delta*beta\n"
     "eta*kappa\n"
     "kappa*gamma\n"
     "lambda*delta\n"
     "beta*gamma - eta*delta\n"
     "gamma*beta - lambda*kappa\n"
     "delta*eta - kappa*lambda\n",
     "beta*kappa^-1*delta*gamma^-1*lambda*eta^-1"},
    {"D(3L)",
     "algebra \"D(3L)\"\n"
     "char any\n"
     "vertex 0 1 2\n"
     "arrow alpha 0 0\n"
     "arrow beta 0 1\n"
     "arrow delta 1 2\n"
     "arrow lambda 2 0\n"
     "relations\n"
     "alpha*lambda\n"
     "beta*alpha\n"
     "alpha*alpha - (lambda*delta*beta)^2\n"
     "delta*(beta*lambda*delta)^2\n",
     "alpha*beta^-1*delta^-1*lambda^-1"},
    {"D(3Q)",
     "algebra \"D(3Q)\"\n"
     "char any\n"
     "vertex 0 1 2\n"
     "arrow alpha 0 0\n"
     "arrow beta 0 1\n"
     "arrow delta 1 2\n"
     "arrow lambda 2 0\n"
     "arrow rho 1 1\n"
     "relations\n"
     "alpha*lambda\n"
     "beta*alpha\n"
     "delta*rho\n"
     "rho*beta\n"
     "alpha*alpha - lambda*delta*beta\n"
     "beta*lambda*delta - rho*rho\n",
     "alpha*beta^-1*rho*delta^-1*lambda^-1"},
}};

const Entry& find_entry(const std::string& name) {
  for (const auto& e : kCatalog)
    if (name == e.name) return e;
  throw UnknownAlgebra("unknown algebra '" + name + "'");
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : kCatalog) out.emplace_back(e.name);
  return out;
}

const std::string& catalog_text(const std::string& name) {
  static std::array<std::string, 12> texts = [] {
    std::array<std::string, 12> t;
    for (std::size_t i = 0; i < kCatalog.size(); ++i) t[i] = kCatalog[i].text;
    return t;
  }();
  for (std::size_t i = 0; i < kCatalog.size(); ++i)
    if (name == kCatalog[i].name) return texts[i];
  throw UnknownAlgebra("unknown algebra '" + name + "'");
}

Presentation catalog(const std::string& name, long long p) {
  const Entry& e = find_entry(name);
  if (!is_prime(p)) throw DomainError("p must be prime");
  Presentation pres = parse_presentation(e.text);
  if (pres.chr == CharConstraint::only2 && p != 2)
    throw CharMismatch("algebra '" + name + "' requires characteristic 2");
  return pres;
}

BandSpec band_of(const Presentation& pres) {
  const Entry& e = find_entry(pres.name);
  BandSpec spec;
  spec.algebra = pres.name;
  spec.band = parse_word(pres.quiver, e.band);
  switch (pres.quiver.nvertices()) {
    case 1: spec.domain = MuDomain::k_and_infinity; break;
    case 2: spec.domain = MuDomain::k; break;
    default: spec.domain = MuDomain::k_star; break;
  }
  return spec;
}

}  // namespace strand
