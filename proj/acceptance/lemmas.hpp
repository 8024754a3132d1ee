#pragma once

// Exhaustive and randomized property checks shared by the acceptance run and the unit tests.

#include <string>
#include <vector>

#include "oracles.hpp"

namespace qmt::acceptance {

struct Check {
  bool ok = true;
  std::string detail;
  long cases = 0;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

// Nonzero homomorphisms EA -> Z2 are exactly the gamma^*, for every n <= max_n.
Check homomorphisms_are_singletons(unsigned max_n);
// Truth sets of multiplicative co-events are principal filters generated by the dual, and
// evaluation is multiplicative.
Check principal_filters(unsigned max_n);
// Classical measures: primitives(theory, 0) = classical_coevents(theory).
Check classical_primitives(gen::Rng& rng, int count, unsigned max_n);
// Every non-(eps-)negligible event is true under some primitive; primitives match the oracle.
Check primitive_existence(gen::Rng& rng, int count_per_eps, unsigned max_n, const std::vector<Rational>& eps);
// Quadraticity on disjoint triples equals the unrestricted identity on all table co-events over
// three histories; R is 0 or 1 and Q = R mod 2 for multiplicative co-events up to max_n.
Check quadratic_lemmas(unsigned max_n_multiplicative);
// The principle classical partition is classical, matches the naive closure, and refines every
// partition that is classical with respect to the primitives.
Check principle_partition_minimality(gen::Rng& rng, int count, unsigned max_n);
// I_3 vanishes on every disjoint triple of random decoherence theories, level <= 2, and diagonal
// functionals have level 1.
Check interference_hierarchy(gen::Rng& rng, int count, unsigned max_n);

// Even/odd witness at small sizes against explicit enumeration of histories (and of co-events
// where the space is small enough).
Check even_odd_small_scale();

}  // namespace qmt::acceptance
