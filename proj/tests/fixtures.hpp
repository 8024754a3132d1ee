#pragma once

#include "oracles.hpp"
#include "qmt/qmt.hpp"

namespace fixtures {

using namespace qmt;

// Amplitudes (1, -1, 1) on {a, b, c}.
inline HistoriesTheory t3() {
  const std::vector<ComplexRational> amp = {Rational(1), Rational(-1), Rational(1)};
  return HistoriesTheory::from_decoherence(SampleSpace({"a", "b", "c"}), DecoherenceMatrix::from_amplitudes(amp));
}

inline HistoriesTheory coin(const Rational& p) {
  return HistoriesTheory::from_table(SampleSpace({"h", "t"}), {0, p, 1 - p, 1});
}

}  // namespace fixtures
