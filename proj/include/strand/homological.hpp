#pragma once
#include "strand/rep.hpp"

namespace strand {

/* basis of Hom(M, N); each element is one block per vertex, N_v x M_v */
struct HomBasis {
  std::vector<std::vector<MatF>> maps;
  Index dim() const { return static_cast<Index>(maps.size()); }
};

HomBasis hom_space(const Rep& m, const Rep& n);
Index hom_dim(const Rep& m, const Rep& n);

/* dimension of the maps factoring through a projective: the span of all
 * compositions through the regular module */
Index phom_dim(const Rep& m, const Rep& n);
Index stable_hom_dim(const Rep& m, const Rep& n);
Index stable_end_dim(const Rep& m);

/* per-vertex socle dimensions: joint kernel of the arrows leaving a vertex */
std::vector<int> socle_dims(const Rep& m);

struct SyzygyResult {
  Rep omega;
  Rep cover;
  std::vector<MatF> cover_map;    // per-vertex blocks, cover -> module
  std::vector<MatF> kernel_incl;  // per-vertex inclusions, omega -> cover
};
SyzygyResult syzygy(const Rep& m);

Index ext1_dim(const Rep& m, const Rep& n);

struct OmegaOrbit {
  std::vector<Rep> iterates;  // starts at the module itself
  bool periodic = false;
  int entry = -1;  // iterate the cycle closes onto
  int period = 0;
  bool hit_zero = false;      // some syzygy vanished
  bool inconclusive = false;  // an isomorphism test could not decide
};
OmegaOrbit omega_orbit(const Rep& m, int max_steps);

}  // namespace strand
