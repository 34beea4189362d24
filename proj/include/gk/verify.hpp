#pragma once

#include "gk/eliminate.hpp"

namespace gk {

// Parameter grid for lemma verification campaigns.  Range floors stated by a
// table or lemma clamp the grid; clamping is recorded in the report notes.
struct GridSpec {
  std::vector<std::pair<Family, Sign>> families;  // empty = all six
  int n_min = 13;
  int n_max = 64;
  std::vector<long> qs = {2, 3, 4, 5, 7, 8, 9, 11, 13};
  long amax = 50;   // |a| range for base-dependent lemmas
  long imax = 50;   // index range
  long nmax = 100000;  // sieve range for the interval lemma
  long bmax = 200;  // eta-interval endpoint range
  int workers = 1;

  std::vector<std::pair<Family, Sign>> family_list() const;
};

struct Failure {
  std::string input;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string lemma;
  std::string grid;
  long checks = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  bool pass() const { return failures.empty(); }
};

struct LemmaInfo {
  std::string id;
  std::string description;
  VerificationReport (*run)(const GridSpec&);
  bool in_acceptance;  // part of `verify --all`, the acceptance suite
};

const std::vector<LemmaInfo>& lemma_registry();
VerificationReport run_lemma(const std::string& id, const GridSpec& grid);

// All acceptance lemmas (or every registered lemma) in registry order.
std::vector<VerificationReport> run_campaign(const GridSpec& grid, bool acceptance_only);

}  // namespace gk
