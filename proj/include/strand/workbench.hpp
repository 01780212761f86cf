#pragma once
#include <string>
#include <vector>

#include "strand/deformation.hpp"

namespace strand {

/* module descriptors: "simple <v>", "proj <v>", "string <word or 1_v>",
 * "band mu=<value|infinity> m=<n>"; the band word is the algebra's unique
 * band */
Rep module_from_descriptor(const AlgebraTable& a, const std::string& text);

struct CensusRow {
  std::string algebra;
  long long p = 0;
  std::string module;
  std::vector<int> dims;
  Index stable_end = 0;
  Index ext1 = 0;
  std::string verdict;
  std::string mode;
  int orbit = -1;  // shared among the stable-End-k rows of one Omega-orbit
};

struct Census {
  std::string algebra;
  long long p = 0;
  int max_len = 0;
  bool all_finite = true;  // no infinite-dimensional or undecided verdict
  std::vector<CensusRow> rows;
};

/* every string up to max_len plus the band boundary modules over the full
 * parameter domain; orbit ids by pairwise syzygy-and-compare */
Census run_census(const AlgebraTable& a, int max_len, int cap = 10);

std::string census_csv(const Census& c);
std::string census_json(const Census& c);

/* one published verdict to reproduce; stable_end = -1 asserts only a value
 * of at least 2, ext1 = -1 and empty strings leave the field unchecked */
struct Expectation {
  std::string tag;
  std::string algebra;
  std::string module;
  Index stable_end = 1;
  Index ext1 = -1;
  std::string verdict;
  std::string witness;  // required certification prefix: "certificate", "L_mu"
};

/* the full table for a prime: the fixed scenario rows plus one band row per
 * mu in the parameter domain of each algebra available at p */
std::vector<Expectation> expectation_table(long long p);

struct ReproRow {
  Expectation want;
  Index stable_end = 0;
  Index ext1 = 0;
  std::string verdict;
  std::string mode;
  std::string detail;
  bool pass = false;
};

struct ReproReport {
  long long p = 0;
  std::vector<ReproRow> rows;
  std::vector<std::string> notes;
  bool ok() const {
    for (const ReproRow& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

ReproReport run_reproduce(long long p, int cap = 10);

/* the run at p plus, when p != 2, the automatic p = 2 run covering the
 * characteristic-2 algebras and sensitivity checks */
std::vector<ReproReport> run_reproduce_suite(long long p, int cap = 10);

std::string reproduce_csv(const std::vector<ReproReport>& runs);
std::string reproduce_json(const std::vector<ReproReport>& runs);
std::string reproduce_diff(const std::vector<ReproReport>& runs);  // mismatched rows only

std::string classify_json(const AlgebraTable& a, const std::string& descriptor, const Rep& v,
                          const DefReport& d);

}  // namespace strand
