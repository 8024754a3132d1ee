#include "oracles.hpp"

#include <algorithm>

namespace qmt::oracle {

ComplexRational measure_from_matrix(const DecoherenceMatrix& d, EventMask a) {
  ComplexRational sum;
  for (unsigned i = 0; i < d.size(); ++i) {
    for (unsigned j = 0; j < d.size(); ++j) {
      if (((a >> i) & 1U) && ((a >> j) & 1U)) sum += d(i, j);
    }
  }
  return sum;
}

std::vector<bool> null_family(std::span<const Rational> mu, const Rational& eps) {
  std::vector<bool> out(mu.size());
  for (std::size_t a = 0; a < mu.size(); ++a) out[a] = sgn(eps) == 0 ? sgn(mu[a]) == 0 : mu[a] < eps;
  return out;
}

std::vector<bool> negligible_family(std::span<const Rational> mu, const Rational& eps) {
  const auto null = null_family(mu, eps);
  std::vector<bool> out(mu.size(), false);
  for (std::size_t a = 0; a < mu.size(); ++a) {
    for (std::size_t z = 0; z < mu.size() && !out[a]; ++z) {
      if (null[z] && (a & ~z) == 0) out[a] = true;
    }
  }
  return out;
}

std::vector<EventMask> primitive_duals(std::span<const Rational> mu, const Rational& eps) {
  const auto negligible = negligible_family(mu, eps);
  std::vector<EventMask> out;
  for (EventMask a = 1; a < mu.size(); ++a) {
    if (negligible[a]) continue;
    bool minimal = true;
    for (EventMask b = (a - 1) & a; b != 0 && minimal; b = (b - 1) & a) {
      if (!negligible[b]) minimal = false;
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<bool>> homomorphism_tables(unsigned n) {
  const unsigned events = 1U << n;
  const std::uint64_t tables = std::uint64_t{1} << events;
  std::vector<std::vector<bool>> out;
  for (std::uint64_t t = 1; t < tables; ++t) {
    auto f = [t](unsigned a) { return ((t >> a) & 1U) != 0; };
    if (f(0)) continue;
    bool ok = true;
    for (unsigned a = 0; a < events && ok; ++a) {
      for (unsigned b = 0; b < events && ok; ++b) {
        ok = f(a ^ b) == (f(a) != f(b)) && f(a & b) == (f(a) && f(b));
      }
    }
    if (!ok) continue;
    std::vector<bool> row(events);
    for (unsigned a = 0; a < events; ++a) row[a] = f(a);
    out.push_back(std::move(row));
  }
  return out;
}

Rational interference(std::span<const Rational> mu, std::span<const EventMask> parts) {
  const std::size_t k = parts.size();
  Rational sum = 0;
  for (std::uint32_t s = 1; s < (1U << k); ++s) {
    EventMask u = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if ((s >> i) & 1U) u |= parts[i];
    }
    const bool negative = (k - static_cast<std::size_t>(std::popcount(s))) % 2 == 1;
    if (negative) {
      sum -= mu[u];
    } else {
      sum += mu[u];
    }
  }
  return sum;
}

unsigned level(std::span<const Rational> mu, unsigned n) {
  for (unsigned k = 1; k < n; ++k) {
    // Assign every history to one of k+1 parts or to none.
    const unsigned base = k + 2;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= base;
    bool vanishes = true;
    std::vector<EventMask> parts(k + 1);
    for (std::uint64_t t = 0; t < total && vanishes; ++t) {
      std::fill(parts.begin(), parts.end(), 0);
      std::uint64_t rest = t;
      for (unsigned i = 0; i < n; ++i) {
        const unsigned digit = static_cast<unsigned>(rest % base);
        rest /= base;
        if (digit > 0) parts[digit - 1] |= EventMask{1} << i;
      }
      if (sgn(interference(mu, parts)) != 0) vanishes = false;
    }
    if (vanishes) return k;
  }
  return std::max(n, 1U);
}

std::vector<EventMask> intersection_closure(const std::vector<EventMask>& sets, unsigned n) {
  std::vector<EventMask> blocks(sets.begin(), sets.end());
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < blocks.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < blocks.size() && !merged; ++j) {
        if (blocks[i] & blocks[j]) {
          blocks[i] |= blocks[j];
          blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
      }
    }
  }
  EventMask covered = 0;
  for (EventMask b : blocks) covered |= b;
  for (unsigned i = 0; i < n; ++i) {
    if (!((covered >> i) & 1U)) blocks.push_back(EventMask{1} << i);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace qmt::oracle

namespace qmt::gen {

namespace {

int draw(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<Rational> table_from_weights(const std::vector<Rational>& w) {
  std::vector<Rational> mu(std::size_t{1} << w.size());
  for (std::size_t a = 1; a < mu.size(); ++a) mu[a] = mu[a & (a - 1)] + w[std::countr_zero(a)];
  return mu;
}

std::vector<Rational> normalized_weights(Rng& rng, unsigned n) {
  while (true) {
    std::vector<Rational> w(n);
    Rational total = 0;
    for (auto& x : w) {
      x = draw(rng, 0, 3);
      total += x;
    }
    if (sgn(total) == 0) continue;
    for (auto& x : w) x /= total;
    return w;
  }
}

}  // namespace

HistoriesTheory decoherence_theory(Rng& rng, unsigned n) {
  while (true) {
    DecoherenceMatrix d(n);
    const int rank = draw(rng, 1, 3);
    for (int r = 0; r < rank; ++r) {
      std::vector<ComplexRational> v(n);
      for (auto& x : v) x = ComplexRational(draw(rng, -1, 1), draw(rng, -1, 1));
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) d(i, j) += v[i] * v[j].conj();
      }
    }
    const Rational total = oracle::measure_from_matrix(d, (EventMask{1} << n) - 1).re;
    if (sgn(total) == 0) continue;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) d(i, j) = ComplexRational(d(i, j).re / total, d(i, j).im / total);
    }
    return HistoriesTheory::from_decoherence(SampleSpace::anonymous(n), std::move(d));
  }
}

HistoriesTheory diagonal_theory(Rng& rng, unsigned n) {
  const auto w = normalized_weights(rng, n);
  return HistoriesTheory::from_decoherence(SampleSpace::anonymous(n), DecoherenceMatrix::diagonal(w));
}

HistoriesTheory classical_table(Rng& rng, unsigned n) {
  return HistoriesTheory::from_table(SampleSpace::anonymous(n), table_from_weights(normalized_weights(rng, n)));
}

HistoriesTheory uniform_table(unsigned n) {
  return HistoriesTheory::from_table(SampleSpace::anonymous(n),
                                     table_from_weights(std::vector<Rational>(n, Rational(1, n))));
}

}  // namespace qmt::gen
