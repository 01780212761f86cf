#pragma once
#include <string>
#include <vector>

#include "strand/quiver.hpp"

namespace strand {

enum class MuDomain { k_and_infinity, k, k_star };

struct BandSpec {
  std::string algebra;
  Word band;
  MuDomain domain = MuDomain::k_star;
};

std::vector<std::string> catalog_names();
const std::string& catalog_text(const std::string& name);
Presentation catalog(const std::string& name, long long p);
BandSpec band_of(const Presentation& pres);

}  // namespace strand
