#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmt/limits.hpp"
#include "qmt/rational.hpp"
#include "qmt/theory.hpp"

namespace qmt {

// n independent tosses of a coin with heads probability p, and a preclusion threshold eps.
// Everything is computed from binomial identities; no 2^n object is ever built.
class BernoulliModel {
 public:
  // Throws InvalidArgument unless 0 <= p <= 1 and 0 < eps <= 1.
  BernoulliModel(unsigned n, Rational p, Rational eps);

  unsigned n() const { return n_; }
  const Rational& p() const { return p_; }
  const Rational& eps() const { return eps_; }

 private:
  unsigned n_;
  Rational p_;
  Rational eps_;
};

// Outcomes of a repeated trial, true = heads.
struct TrialSequence {
  std::vector<bool> outcomes;

  unsigned heads() const;
  std::string to_string() const;  // "hhtth..."
  static TrialSequence parse(const std::string& text);
};

// p^H (1-p)^(n-H): probability of one history with H heads.
Rational prob_history(const BernoulliModel& model, unsigned heads);
// P(N_H) = C(n, H) p^H (1-p)^(n-H).
Rational prob_heads_count(const BernoulliModel& model, unsigned heads);
// P(L_H) = sum over m = 0..H of P(N_m).
Rational cumulative(const BernoulliModel& model, unsigned heads);

// All P(N_H) and P(L_H) at once, as integer numerators over the common denominator b^n for p = a/b.
class BinomialTail {
 public:
  explicit BinomialTail(const BernoulliModel& model);

  const BigInt& denominator() const { return denominator_; }
  const BigInt& count_numerator(unsigned heads) const { return count_.at(heads); }
  const BigInt& cumulative_numerator(unsigned heads) const { return cumulative_.at(heads); }
  Rational count(unsigned heads) const;
  Rational cumulative(unsigned heads) const;

 private:
  BigInt denominator_;
  std::vector<BigInt> count_;
  std::vector<BigInt> cumulative_;
};

// Greatest H with P(L_H) < eps, or nullopt when already P(L_0) >= eps.
std::optional<unsigned> h_epsilon(const BernoulliModel& model);

// Int((eps - P(L_{H_eps})) / p^n) for p = 1/2: the size of a set S inside N_{H_eps + 1} such that
// S + L_{H_eps} just reaches measure eps. Throws when p != 1/2 or H_eps does not exist.
BigInt straddle_set_cardinality(const BernoulliModel& model);

// Int(eps 2^n) for p = 1/2: the smallest cardinality of a non-eps-null event, hence the size of
// every primitive dual under the uniform product measure.
BigInt uniform_primitive_cardinality(const BernoulliModel& model);

// Number of single histories with probability below eps, and the total 2^n.
struct SingletonPreclusion {
  BigInt precluded;
  BigInt total;
  bool all_precluded() const { return precluded == total; }
  bool none_precluded() const { return sgn(precluded) == 0; }
};
SingletonPreclusion singleton_preclusion(const BernoulliModel& model);

// Even/odd coarse-graining witness for n = 2m tosses at p = 1/2. Even histories are tosses
// 2, 4, ..., 2m and odd histories tosses 1, 3, ..., 2m-1 (one-based).
struct EvenOddReport {
  unsigned m = 0;
  Rational eps;
  unsigned h_even = 0;  // H_eps of the m-toss even distribution
  unsigned h_odd = 0;
  BigInt greater_even;            // |G_{H^E}| = 2^m * #{m-toss sequences with more than H^E heads}
  Rational threshold;             // eps 2^(2m)
  bool greater_exceeds_threshold = false;
  BigInt primitive_cardinality;   // Int(eps 2^(2m))
  std::string witness;            // gamma_E: heads on even tosses, tails on odd tosses
  unsigned witness_even_heads = 0;
  unsigned witness_odd_heads = 0;
  bool witness_in_greater_even = false;
  bool witness_in_lesser_odd = false;
  BigInt greater_even_lesser_odd;  // |G_{H^E} n L_{H^O}|
  // A primitive dual C inside G_{H^E} containing gamma_E can avoid being a subset of L_{H^O}
  // exactly when |G_{H^E} n L_{H^O}| < |C|; then C^* sends L^O and G^O both to 0.
  bool odd_partition_nonclassical = false;

  bool certified() const {
    return greater_exceeds_threshold && witness_in_greater_even && witness_in_lesser_odd && odd_partition_nonclassical;
  }
};

// Throws for odd n, p != 1/2, or when the m-toss distribution has no H_eps.
EvenOddReport even_odd_witness(unsigned n, const Rational& eps);

enum class TestVerdict { reject, fail_to_reject };

struct HypothesisTestResult {
  TestVerdict verdict;
  unsigned heads;
  Rational cumulative;  // P(L_H) under p0
};

// One-tailed test: reject p0 at level eps when P(L_H) < eps for the observed heads count H.
HypothesisTestResult hypothesis_test(const TrialSequence& sequence, const Rational& p0, const Rational& eps);

// Deterministic draws from std::mt19937_64 seeded with `seed`; toss i is heads when the i-th
// output u satisfies u < floor(p 2^64).
TrialSequence simulate(unsigned n, const Rational& p, std::uint64_t seed);

struct CalibrationReport {
  std::uint64_t trials = 0;
  std::uint64_t rejections = 0;
  Rational rejection_mass;  // exact probability of rejecting under p0: P(L_{H_eps}) or 0
  double frequency = 0;
  double standard_deviation = 0;  // binomial sd of the frequency
  double deviation_sigmas = 0;
  bool within(double sigmas) const { return deviation_sigmas <= sigmas; }
};

// Simulates `trials` sequences of n tosses under p0 and counts rejections at level eps.
// Trial k uses seed + k, so the result does not depend on `threads`.
CalibrationReport calibrate_rejection_rate(unsigned n, const Rational& p0, const Rational& eps, std::uint64_t trials,
                                           std::uint64_t seed, unsigned threads = 1);

// Explicit product-measure theory over the 2^tosses histories: history i has heads at toss j
// iff bit j of i is set; labels read toss 1 first ("hth...").
HistoriesTheory product_theory(unsigned tosses, const Rational& p, const Limits& limits = {});

// Heads count of history index i in product_theory.
inline unsigned heads_of(EventMask history) { return static_cast<unsigned>(std::popcount(history)); }

}  // namespace qmt
