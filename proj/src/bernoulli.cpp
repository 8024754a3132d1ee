#include "qmt/bernoulli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "qmt/error.hpp"

namespace qmt {

namespace {

BigInt pow(const BigInt& base, unsigned exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt two_to(unsigned exp) {
  BigInt r = 1;
  r <<= exp;
  return r;
}

void require_heads(const BernoulliModel& model, unsigned heads) {
  if (heads > model.n()) {
    throw InvalidArgument("heads count " + std::to_string(heads) + " exceeds " + std::to_string(model.n()) + " tosses");
  }
}

void require_fair(const BernoulliModel& model, const char* what) {
  if (model.p() != Rational(1, 2)) throw InvalidArgument(std::string(what) + " is defined for p = 1/2 only");
}

// num / den < eps, without division.
bool below_eps(const BigInt& num, const BigInt& den, const Rational& eps) {
  return num * eps.get_den() < eps.get_num() * den;
}

}  // namespace

BernoulliModel::BernoulliModel(unsigned n, Rational p, Rational eps) : n_(n), p_(std::move(p)), eps_(std::move(eps)) {
  p_.canonicalize();
  eps_.canonicalize();
  if (sgn(p_) < 0 || p_ > 1) throw InvalidArgument("coin probability must lie in [0, 1], got " + to_string(p_));
  if (sgn(eps_) <= 0 || eps_ > 1) throw InvalidArgument("eps must lie in (0, 1], got " + to_string(eps_));
}

unsigned TrialSequence::heads() const { return static_cast<unsigned>(std::count(outcomes.begin(), outcomes.end(), true)); }

std::string TrialSequence::to_string() const {
  std::string s;
  s.reserve(outcomes.size());
  for (bool h : outcomes) s.push_back(h ? 'h' : 't');
  return s;
}

TrialSequence TrialSequence::parse(const std::string& text) {
  TrialSequence seq;
  for (char c : text) {
    if (c == 'h' || c == 'H') {
      seq.outcomes.push_back(true);
    } else if (c == 't' || c == 'T') {
      seq.outcomes.push_back(false);
    } else {
      throw InvalidArgument(std::string("trial sequences use h and t only, found '") + c + "'");
    }
  }
  return seq;
}

Rational prob_history(const BernoulliModel& model, unsigned heads) {
  require_heads(model, heads);
  const Rational& p = model.p();
  const Rational q = 1 - p;
  Rational r(pow(p.get_num(), heads) * pow(q.get_num(), model.n() - heads),
             pow(p.get_den(), heads) * pow(q.get_den(), model.n() - heads));
  r.canonicalize();
  return r;
}

Rational prob_heads_count(const BernoulliModel& model, unsigned heads) {
  return binomial(model.n(), heads) * prob_history(model, heads);
}

Rational cumulative(const BernoulliModel& model, unsigned heads) {
  require_heads(model, heads);
  return BinomialTail(model).cumulative(heads);
}

BinomialTail::BinomialTail(const BernoulliModel& model) {
  const unsigned n = model.n();
  const BigInt a = model.p().get_num();
  const BigInt b = model.p().get_den();
  const BigInt c = b - a;
  denominator_ = pow(b, n);
  std::vector<BigInt> c_pow(n + 1);
  c_pow[0] = 1;
  for (unsigned k = 1; k <= n; ++k) c_pow[k] = c_pow[k - 1] * c;
  count_.resize(n + 1);
  cumulative_.resize(n + 1);
  BigInt choose = 1;
  BigInt a_pow = 1;
  BigInt running = 0;
  for (unsigned h = 0; h <= n; ++h) {
    count_[h] = choose * a_pow * c_pow[n - h];
    running += count_[h];
    cumulative_[h] = running;
    if (h < n) {
      choose = choose * (n - h) / (h + 1);
      a_pow *= a;
    }
  }
}

Rational BinomialTail::count(unsigned heads) const {
  Rational r(count_.at(heads), denominator_);
  r.canonicalize();
  return r;
}

Rational BinomialTail::cumulative(unsigned heads) const {
  Rational r(cumulative_.at(heads), denominator_);
  r.canonicalize();
  return r;
}

std::optional<unsigned> h_epsilon(const BernoulliModel& model) {
  const BinomialTail tail(model);
  std::optional<unsigned> h;
  for (unsigned k = 0; k <= model.n(); ++k) {
    if (!below_eps(tail.cumulative_numerator(k), tail.denominator(), model.eps())) break;
    h = k;
  }
  return h;
}

BigInt straddle_set_cardinality(const BernoulliModel& model) {
  require_fair(model, "the straddle set cardinality");
  const auto h = h_epsilon(model);
  if (!h) throw InvalidArgument("no H_eps: already P(L_0) >= eps");
  const BinomialTail tail(model);
  return ceil((model.eps() - tail.cumulative(*h)) * tail.denominator());
}

BigInt uniform_primitive_cardinality(const BernoulliModel& model) {
  require_fair(model, "the uniform primitive cardinality");
  return ceil(model.eps() * two_to(model.n()));
}

SingletonPreclusion singleton_preclusion(const BernoulliModel& model) {
  SingletonPreclusion out{0, two_to(model.n())};
  for (unsigned h = 0; h <= model.n(); ++h) {
    if (prob_history(model, h) < model.eps()) out.precluded += binomial(model.n(), h);
  }
  return out;
}

EvenOddReport even_odd_witness(unsigned n, const Rational& eps) {
  if (n == 0 || n % 2 != 0) throw InvalidArgument("the even/odd split needs an even, positive number of tosses");
  EvenOddReport r;
  r.m = n / 2;
  r.eps = eps;
  const BernoulliModel half(r.m, Rational(1, 2), eps);
  const auto h = h_epsilon(half);
  if (!h) {
    throw InvalidArgument("no H_eps for " + std::to_string(r.m) + " tosses at eps = " + to_string(eps) +
                          ": P(L_0) = 2^-" + std::to_string(r.m) + " is not below eps");
  }
  // Even and odd halves are identically distributed, so H^E = H^O.
  r.h_even = *h;
  r.h_odd = *h;
  const BinomialTail tail(half);
  const BigInt lesser = tail.cumulative_numerator(*h);  // m-toss sequences with at most H heads
  const BigInt greater = tail.denominator() - lesser;
  r.greater_even = two_to(r.m) * greater;
  r.threshold = eps * two_to(n);
  r.greater_exceeds_threshold = Rational(r.greater_even) > r.threshold;
  r.primitive_cardinality = ceil(r.threshold);

  r.witness.reserve(n);
  for (unsigned i = 1; i <= n; ++i) r.witness.push_back(i % 2 == 0 ? 'h' : 't');
  r.witness_even_heads = r.m;
  r.witness_odd_heads = 0;
  r.witness_in_greater_even = r.witness_even_heads > r.h_even;
  r.witness_in_lesser_odd = r.witness_odd_heads <= r.h_odd;
  r.greater_even_lesser_odd = greater * lesser;
  r.odd_partition_nonclassical = r.greater_even_lesser_odd < r.primitive_cardinality;
  return r;
}

HypothesisTestResult hypothesis_test(const TrialSequence& sequence, const Rational& p0, const Rational& eps) {
  const BernoulliModel model(static_cast<unsigned>(sequence.outcomes.size()), p0, eps);
  const unsigned heads = sequence.heads();
  Rational cum = cumulative(model, heads);
  const TestVerdict verdict = cum < eps ? TestVerdict::reject : TestVerdict::fail_to_reject;
  return {verdict, heads, std::move(cum)};
}

namespace {

static_assert(sizeof(unsigned long) == 8, "mpz_get_ui must return 64 bits");

// u < floor(p 2^64) for a 64-bit draw u; p = 1 makes every draw heads.
class HeadsThreshold {
 public:
  explicit HeadsThreshold(const Rational& p) {
    if (sgn(p) < 0 || p > 1) throw InvalidArgument("coin probability must lie in [0, 1]");
    always_ = p == 1;
    if (!always_) {
      const BigInt t = (BigInt(p.get_num()) << 64) / p.get_den();
      bound_ = mpz_get_ui(t.get_mpz_t());
    }
  }
  bool heads(std::uint64_t u) const { return always_ || u < bound_; }

 private:
  bool always_ = false;
  std::uint64_t bound_ = 0;
};

unsigned count_heads(unsigned n, const HeadsThreshold& threshold, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  unsigned heads = 0;
  for (unsigned i = 0; i < n; ++i) heads += threshold.heads(gen());
  return heads;
}

}  // namespace

TrialSequence simulate(unsigned n, const Rational& p, std::uint64_t seed) {
  const HeadsThreshold threshold(p);
  std::mt19937_64 gen(seed);
  TrialSequence seq;
  seq.outcomes.reserve(n);
  for (unsigned i = 0; i < n; ++i) seq.outcomes.push_back(threshold.heads(gen()));
  return seq;
}

CalibrationReport calibrate_rejection_rate(unsigned n, const Rational& p0, const Rational& eps, std::uint64_t trials,
                                           std::uint64_t seed, unsigned threads) {
  const BernoulliModel model(n, p0, eps);
  const auto h = h_epsilon(model);
  CalibrationReport r;
  r.trials = trials;
  r.rejection_mass = h ? BinomialTail(model).cumulative(*h) : Rational(0);
  const HeadsThreshold threshold(p0);

  // Rejection happens exactly when the heads count is at most H_eps.
  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t rejected = 0;
    if (!h) return rejected;
    for (std::uint64_t k = begin; k < end; ++k) rejected += count_heads(n, threshold, seed + k) <= *h;
    return rejected;
  };
  threads = std::max(1U, threads);
  if (threads == 1 || trials < threads) {
    r.rejections = run(0, trials);
  } else {
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (trials + threads - 1) / threads;
    for (unsigned k = 0; k < threads; ++k) {
      pool.emplace_back([&, k] { partial[k] = run(std::min(trials, k * chunk), std::min(trials, (k + 1) * chunk)); });
    }
    for (auto& t : pool) t.join();
    for (auto v : partial) r.rejections += v;
  }

  const double q = r.rejection_mass.get_d();
  r.frequency = trials ? static_cast<double>(r.rejections) / static_cast<double>(trials) : 0.0;
  r.standard_deviation = trials ? std::sqrt(q * (1 - q) / static_cast<double>(trials)) : 0.0;
  const double gap = std::abs(r.frequency - q);
  if (r.standard_deviation > 0) {
    r.deviation_sigmas = gap / r.standard_deviation;
  } else {
    r.deviation_sigmas = gap == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return r;
}

HistoriesTheory product_theory(unsigned tosses, const Rational& p, const Limits& limits) {
  // Even the largest cap (24 histories) stops at 4 tosses.
  if (tosses > 4) {
    throw CapExceeded("product theory over " + std::to_string(tosses) + " tosses needs 2^" + std::to_string(tosses) +
                      " histories, beyond any explicit cap");
  }
  const unsigned histories = 1U << tosses;
  require_within(histories, limits.enumeration_cap, "product theory");
  const BernoulliModel model(tosses, p, 1);

  std::vector<std::string> labels;
  std::vector<Rational> weight;
  for (unsigned i = 0; i < histories; ++i) {
    std::string label;
    for (unsigned j = 0; j < tosses; ++j) label.push_back(((i >> j) & 1U) ? 'h' : 't');
    labels.push_back(tosses == 0 ? "-" : label);
    weight.push_back(prob_history(model, heads_of(i)));
  }
  std::vector<Rational> mu(std::size_t{1} << histories);
  for (std::size_t a = 1; a < mu.size(); ++a) mu[a] = mu[a & (a - 1)] + weight[std::countr_zero(a)];
  return HistoriesTheory::from_table(SampleSpace(std::move(labels)), std::move(mu), limits);
}

}  // namespace qmt
