#pragma once
#include <optional>
#include <string>
#include <vector>

#include "strand/homological.hpp"
#include "strand/stringband.hpp"

namespace strand {

/* a lift of a module over F_p[t]: the same block shapes with entries in
 * the exact polynomial ring (truncation order 0) */
struct Lift {
  const AlgebraTable* alg = nullptr;
  std::vector<int> dims;
  std::vector<MatP> arrows;
};

/* first-order deformations: per-arrow matrices D with the relations vanishing
 * to first order along X + tD, modulo the coboundaries delta(B) */
struct FirstOrderSpace {
  std::vector<std::vector<MatF>> cocycles;
  Index coboundary_dim = 0;
  Index ext1() const { return static_cast<Index>(cocycles.size()) - coboundary_dim; }
};
FirstOrderSpace first_order(const Rep& v);

/* delta(B)_zeta = B_tgt X_zeta - X_zeta B_src for per-vertex blocks B */
std::vector<MatF> coboundary(const Rep& v, const std::vector<MatF>& b);

/* derivative of the relations at the arrow matrices of v; a cocycle is a
 * kernel vector, with per-arrow unknowns flattened row-major in arrow order */
MatF relation_linearization(const Rep& v);
VecF flatten_cocycle(const Rep& v, const std::vector<MatF>& d);
std::vector<MatF> unflatten_cocycle(const Rep& v, const VecF& x);

/* v with each arrow deformed by t * d */
Lift first_order_lift(const Rep& v, const std::vector<MatF>& d);

/* the t^n coefficient of every relation along the lift, stacked in the
 * equation order of relation_linearization */
VecF relation_coefficient(const Lift& l, int n);

/* Extend X + tD_0 order by order up to t^max_order, D_0 the first nontrivial
 * cocycle direction.  Obstructions are solved against the fixed first-order
 * system; at each level the solution is unique up to c D_0 and gauge, so the
 * search branches over c only. */
struct ExtendResult {
  int order = 0;        // relations vanish mod t^{order+1} along the best lift
  bool reached = false; // order == the requested max_order
  bool capped = false;  // abandoned by the node budget, order is a lower bound
  Lift lift;
};
ExtendResult extend_lift(const Rep& v, int max_order);

/* the band lift L_mu = M(B, mu + t, 1) */
Lift band_lift(const AlgebraTable& a, const Word& b, const Mu& mu);

/* nullopt when lift certifies a nontrivial deformation of v over F_p[t]:
 * the relations vanish identically, t = 0 recovers v up to isomorphism, and
 * the t-linear term is not a coboundary */
std::optional<std::string> verify_poly_lift(const Rep& v, const Lift& lift);

enum class DefRing {
  k,             // rigid
  truncated,     // k[[t]]/(t^m)
  power_series,  // k[[t]]
  regular,       // the algebra itself
  versal_only,   // stable endomorphisms beyond k, no universal ring claimed
  unknown,
};

struct DefReport {
  DefRing ring = DefRing::unknown;
  int m = 0;                // modulus exponent when ring == truncated
  Index stable_end = 0;
  Index ext1 = 0;
  std::string mode;         // for power_series: "certified" or "verified-to-order-N"
  std::string detail;
};

DefReport classify_defring(const Rep& v, int cap = 10);
std::string defring_text(const DefReport& r);

}  // namespace strand
