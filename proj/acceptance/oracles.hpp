#pragma once

// Brute-force reference computations. Each one recomputes its answer from the definition with
// plain loops and shares no algorithmic code with the library routine it is checked against.

#include <cstdint>
#include <random>
#include <vector>

#include "qmt/qmt.hpp"

namespace qmt::oracle {

// D(A, A) as the double sum over A x A.
ComplexRational measure_from_matrix(const DecoherenceMatrix& d, EventMask a);

// Events below eps (or equal to 0 when eps = 0), straight from the table.
std::vector<bool> null_family(std::span<const Rational> mu, const Rational& eps);
// A is negligible iff some null Z has A inside it: a double loop over all event pairs.
std::vector<bool> negligible_family(std::span<const Rational> mu, const Rational& eps);
// Nonempty non-negligible events all of whose proper nonempty subsets are negligible.
std::vector<EventMask> primitive_duals(std::span<const Rational> mu, const Rational& eps);

// Every nonzero ring homomorphism EA -> Z2, found by testing all 2^(2^n) truth tables.
std::vector<std::vector<bool>> homomorphism_tables(unsigned n);

// Smallest k with I_{k+1} = 0 on every disjoint (k+1)-tuple, by scanning tuples directly.
unsigned level(std::span<const Rational> mu, unsigned n);

// I_k by explicit inclusion-exclusion over the component masks.
Rational interference(std::span<const Rational> mu, std::span<const EventMask> parts);

// Connected components of the "intersects" relation on `sets`, merged until nothing changes;
// histories outside every set become singletons. Blocks sorted by mask.
std::vector<EventMask> intersection_closure(const std::vector<EventMask>& sets, unsigned n);

}  // namespace qmt::oracle

namespace qmt::gen {

using Rng = std::mt19937_64;

// Sum of 1-3 rank-one terms v v^dagger, entries of v drawn from {-1, 0, 1} + i{-1, 0, 1},
// scaled so D(Omega, Omega) = 1. Positive by construction; retries if D(Omega, Omega) = 0.
HistoriesTheory decoherence_theory(Rng& rng, unsigned n);
// Diagonal decoherence functional with weights 0..3 normalized to 1.
HistoriesTheory diagonal_theory(Rng& rng, unsigned n);
// Classical table with history weights 0..3 normalized to 1.
HistoriesTheory classical_table(Rng& rng, unsigned n);
// Uniform classical table on n histories.
HistoriesTheory uniform_table(unsigned n);

}  // namespace qmt::gen
