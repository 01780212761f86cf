#pragma once
#include <string>
#include <vector>

#include "strand/deformation.hpp"

namespace strand {

/* A stored polynomial lift: global matrices over F_p[t] graded by the
 * vertices field, carved into the per-arrow blocks of a Lift on load. */
struct Certificate {
  std::string algebra;
  std::string module;  // descriptor of the module the lift deforms
  Lift lift;
};

Certificate certificate_from_json(const AlgebraTable& a, const std::string& text);

/* all certificates for this algebra from dir, in filename order */
std::vector<Certificate> load_certificates(const AlgebraTable& a, const std::string& dir);

/* same, from the build-time certificate directory */
std::vector<Certificate> load_certificates(const AlgebraTable& a);

}  // namespace strand
