#include "lemmas.hpp"

#include <algorithm>
#include <set>

namespace qmt::acceptance {

namespace {

std::string dual_list(const std::vector<CoEvent>& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + to_hex(set[i].dual());
  return s + "}";
}

std::vector<EventMask> duals(const std::vector<CoEvent>& set) {
  std::vector<EventMask> out;
  for (const auto& phi : set) out.push_back(phi.dual().mask());
  return out;
}

HistoriesTheory random_theory(gen::Rng& rng, unsigned n, int i) {
  switch (i % 3) {
    case 0: return gen::decoherence_theory(rng, n);
    case 1: return gen::classical_table(rng, n);
    default: return gen::decoherence_theory(rng, n);
  }
}

}  // namespace

Check homomorphisms_are_singletons(unsigned max_n) {
  Check c;
  for (unsigned n = 1; n <= max_n; ++n) {
    const auto tables = oracle::homomorphism_tables(n);
    std::set<std::vector<bool>> found(tables.begin(), tables.end());
    std::set<std::vector<bool>> expected;
    for (unsigned i = 0; i < n; ++i) {
      std::vector<bool> row(std::size_t{1} << n);
      for (EventMask a = 0; a < row.size(); ++a) row[a] = (a >> i) & 1U;
      expected.insert(row);
      const CoEvent gamma = CoEvent::multiplicative(Event::singleton(i, n));
      if (!is_homomorphism(gamma)) c.fail("gamma^* for history " + std::to_string(i) + " is not a homomorphism");
    }
    c.cases += static_cast<long>(tables.size());
    if (found != expected) {
      c.fail(std::to_string(tables.size()) + " homomorphisms on " + std::to_string(n) + " histories, expected " +
             std::to_string(n));
    }
  }
  return c;
}

Check principal_filters(unsigned max_n) {
  Check c;
  for (unsigned n = 1; n <= max_n; ++n) {
    const EventMask count = EventMask{1} << n;
    for (EventMask d = 1; d < count; ++d) {
      const CoEvent phi = CoEvent::multiplicative(Event(d, n));
      std::vector<EventMask> truth;
      for (EventMask a = 0; a < count; ++a) {
        if (eval(phi, Event(a, n))) truth.push_back(a);
      }
      EventMask meet = count - 1;
      for (EventMask a : truth) meet &= a;
      if (meet != d) c.fail("least true event of " + to_hex(d) + " is " + to_hex(meet));
      for (EventMask a = 0; a < count; ++a) {
        for (EventMask b = 0; b < count; ++b) {
          ++c.cases;
          const bool fa = eval(phi, Event(a, n));
          const bool fb = eval(phi, Event(b, n));
          if (fa && (a & ~b) == 0 && !fb) c.fail("truth set of " + to_hex(d) + " not upward closed");
          if (eval(phi, Event(a & b, n)) != (fa && fb)) c.fail("evaluation of " + to_hex(d) + " is not multiplicative");
        }
      }
    }
  }
  return c;
}

Check classical_primitives(gen::Rng& rng, int count, unsigned max_n) {
  Check c;
  for (int i = 0; i < count; ++i) {
    const unsigned n = 2 + static_cast<unsigned>(i) % (max_n - 1);
    const auto theory = gen::classical_table(rng, n);
    const auto prim = primitives(theory);
    const auto classical = classical_coevents(theory);
    ++c.cases;
    if (prim != classical) c.fail("primitives " + dual_list(prim) + " differ from classical " + dual_list(classical));
  }
  return c;
}

Check primitive_existence(gen::Rng& rng, int count_per_eps, unsigned max_n, const std::vector<Rational>& eps_list) {
  Check c;
  for (const Rational& eps : eps_list) {
    for (int i = 0; i < count_per_eps; ++i) {
      const unsigned n = 2 + static_cast<unsigned>(i) % (max_n - 1);
      const auto theory = random_theory(rng, n, i);
      const auto prim = primitives(theory, eps);
      const auto oracle_duals = oracle::primitive_duals(theory.mu_table(), eps);
      if (duals(prim) != oracle_duals) c.fail("primitives disagree with the oracle at eps = " + to_string(eps));
      const auto negligible = oracle::negligible_family(theory.mu_table(), eps);
      for (EventMask a = 1; a < negligible.size(); ++a) {
        if (negligible[a]) continue;
        ++c.cases;
        const bool covered = std::any_of(prim.begin(), prim.end(), [&](const CoEvent& phi) { return eval(phi, Event(a, n)); });
        if (!covered) c.fail("no primitive is true on non-negligible " + to_hex(a) + " at eps = " + to_string(eps));
      }
    }
  }
  return c;
}

Check quadratic_lemmas(unsigned max_n_multiplicative) {
  Check c;
  const unsigned n = 3;
  for (unsigned t = 1; t < (1U << 7); ++t) {
    EventBitmap bits(n);
    for (unsigned a = 1; a < 8; ++a) bits.assign(a, (t >> (a - 1)) & 1U);
    const CoEvent phi = CoEvent::from_table(bits);
    ++c.cases;
    if (is_quadratic(phi).is_quadratic != satisfies_quadratic_identity(phi)) {
      c.fail("disjoint and unrestricted quadratic checks differ on table " + std::to_string(t));
    }
  }
  for (unsigned m = 1; m <= max_n_multiplicative; ++m) {
    const std::uint32_t triples = 1U << (2 * m);
    for (EventMask d = 1; d < (EventMask{1} << m); ++d) {
      const CoEvent phi = CoEvent::multiplicative(Event(d, m));
      for (std::uint32_t t = 0; t < triples; ++t) {
        EventMask part[4] = {0, 0, 0, 0};
        for (unsigned i = 0; i < m; ++i) part[(t >> (2 * i)) & 3U] |= EventMask{1} << i;
        const Event a(part[1], m), b(part[2], m), cc(part[3], m);
        const int r = r_value(phi, a, b, cc);
        const bool q = q_value(phi, a, b, cc);
        ++c.cases;
        if (r != 0 && r != 1) c.fail("R = " + std::to_string(r) + " for dual " + to_hex(d));
        if (q != ((r & 1) != 0)) c.fail("Q differs from R mod 2 for dual " + to_hex(d));
        if (r == 0 && q) c.fail("R = 0 but Q = 1 for dual " + to_hex(d));
      }
    }
  }
  return c;
}

Check principle_partition_minimality(gen::Rng& rng, int count, unsigned max_n) {
  Check c;
  for (int i = 0; i < count; ++i) {
    const unsigned n = 2 + static_cast<unsigned>(i) % (max_n - 1);
    const auto theory = random_theory(rng, n, i);
    const auto prim = primitives(theory);
    const auto pcp = principle_classical_partition(theory);
    if (!is_classical_wrt_primitives(prim, pcp.partition)) c.fail("principle classical partition is not classical");
    std::vector<EventMask> blocks;
    for (const Event& b : pcp.partition.blocks()) blocks.push_back(b.mask());
    std::sort(blocks.begin(), blocks.end());
    if (blocks != oracle::intersection_closure(oracle::primitive_duals(theory.mu_table(), 0), n)) {
      c.fail("principle classical partition differs from the naive intersection closure");
    }
    for (const Partition& p : all_partitions(n)) {
      if (!is_classical_wrt_primitives(prim, p)) continue;
      ++c.cases;
      if (!refines(pcp.partition, p)) c.fail("a classical partition is not refined by the principle one");
    }
  }
  return c;
}

Check interference_hierarchy(gen::Rng& rng, int count, unsigned max_n) {
  Check c;
  for (int i = 0; i < count; ++i) {
    const unsigned n = 2 + static_cast<unsigned>(i) % (max_n - 1);
    const auto theory = gen::decoherence_theory(rng, n);
    const std::uint32_t triples = 1U << (2 * n);
    for (std::uint32_t t = 0; t < triples; ++t) {
      EventMask part[4] = {0, 0, 0, 0};
      for (unsigned h = 0; h < n; ++h) part[(t >> (2 * h)) & 3U] |= EventMask{1} << h;
      const Event args[3] = {Event(part[1], n), Event(part[2], n), Event(part[3], n)};
      ++c.cases;
      if (sgn(interference(theory, args)) != 0) {
        c.fail("I_3 nonzero on " + to_hex(part[1]) + "," + to_hex(part[2]) + "," + to_hex(part[3]));
      }
    }
    const unsigned k = level(theory);
    if (k > 2) c.fail("random decoherence theory has level " + std::to_string(k));
    if (k != oracle::level(theory.mu_table(), n)) c.fail("level disagrees with the tuple-scan oracle");
  }
  for (int i = 0; i < 20; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(i) % max_n;
    const auto theory = gen::diagonal_theory(rng, n);
    ++c.cases;
    if (level(theory) != 1) c.fail("diagonal decoherence functional with level " + std::to_string(level(theory)));
  }
  return c;
}

namespace {

// Histories of 2m tosses as masks: bit j is toss j + 1, so even tosses sit on odd bits.
struct EvenOddSpace {
  unsigned tosses;
  EventMask even_bits = 0;
  EventMask odd_bits = 0;

  explicit EvenOddSpace(unsigned n) : tosses(n) {
    for (unsigned j = 0; j < n; ++j) (j % 2 == 1 ? even_bits : odd_bits) |= EventMask{1} << j;
  }
  unsigned even_heads(EventMask h) const { return static_cast<unsigned>(std::popcount(h & even_bits)); }
  unsigned odd_heads(EventMask h) const { return static_cast<unsigned>(std::popcount(h & odd_bits)); }
};

// Greatest H with #{m-toss sequences with at most H heads} / 2^m < eps, by counting sequences.
std::optional<unsigned> counted_h_epsilon(unsigned m, const Rational& eps) {
  std::optional<unsigned> h;
  for (unsigned k = 0; k <= m; ++k) {
    unsigned at_most = 0;
    for (EventMask s = 0; s < (EventMask{1} << m); ++s) at_most += std::popcount(s) <= static_cast<int>(k);
    if (!(Rational(at_most, 1U << m) < eps)) break;
    h = k;
  }
  return h;
}

}  // namespace

Check even_odd_small_scale() {
  Check c;

  // 4 tosses per half leave P(L_0) = 1/16, so eps = 3/256 has no H_eps for the halves.
  try {
    (void)even_odd_witness(8, Rational(3, 256));
    c.fail("expected no H_eps for 2m = 8 at eps = 3/256");
  } catch (const InvalidArgument&) {
  }

  // 2m = 8 at eps = 5/16 over all 256 histories.
  {
    const Rational eps(5, 16);
    const auto r = even_odd_witness(8, eps);
    const EvenOddSpace s(8);
    const auto h = counted_h_epsilon(4, eps);
    if (!h || *h != r.h_even || *h != r.h_odd) c.fail("H^E for 2m = 8 differs from direct counting");
    std::vector<EventMask> greater_even;
    std::size_t ge_lo = 0;
    for (EventMask g = 0; g < 256; ++g) {
      ++c.cases;
      if (s.even_heads(g) > r.h_even) {
        greater_even.push_back(g);
        if (s.odd_heads(g) <= r.h_odd) ++ge_lo;
      }
    }
    if (BigInt(greater_even.size()) != r.greater_even) c.fail("|G^E| for 2m = 8 differs from enumeration");
    if (BigInt(ge_lo) != r.greater_even_lesser_odd) c.fail("|G^E n L^O| for 2m = 8 differs from enumeration");
    if (r.primitive_cardinality != ceil(eps * 256)) c.fail("primitive cardinality for 2m = 8 is wrong");
    const EventMask gamma = s.even_bits;
    if (s.even_heads(gamma) <= r.h_even || s.odd_heads(gamma) > r.h_odd) c.fail("gamma_E misplaced for 2m = 8");
    // C = gamma_E plus the smallest other members of G^E until |C| = Int(eps 2^8).
    std::vector<EventMask> cset = {gamma};
    for (EventMask g : greater_even) {
      if (BigInt(cset.size()) == r.primitive_cardinality) break;
      if (g != gamma) cset.push_back(g);
    }
    const Rational measure(static_cast<unsigned>(cset.size()), 256U);
    const Rational reduced(static_cast<unsigned>(cset.size() - 1), 256U);
    if (measure < eps || !(reduced < eps)) c.fail("constructed C for 2m = 8 is not a primitive dual");
    const bool meets_greater_odd =
        std::any_of(cset.begin(), cset.end(), [&](EventMask g) { return s.odd_heads(g) > r.h_odd; });
    if (!meets_greater_odd) c.fail("constructed C for 2m = 8 lies inside L^O");
    if (!r.certified()) c.fail("even/odd report for 2m = 8 is not certified");
  }

  // 2m = 4 at eps = 5/16 with every primitive co-event of the explicit 16-history theory.
  {
    const Rational eps(5, 16);
    const auto r = even_odd_witness(4, eps);
    const EvenOddSpace s(4);
    const auto theory = product_theory(4, Rational(1, 2));
    const auto prim = primitives(theory, eps);
    EventMask ge = 0, le = 0, go = 0, lo = 0;
    for (EventMask g = 0; g < 16; ++g) {
      (s.even_heads(g) > r.h_even ? ge : le) |= EventMask{1} << g;
      (s.odd_heads(g) > r.h_odd ? go : lo) |= EventMask{1} << g;
    }
    const EventMask gamma_bit = EventMask{1} << s.even_bits;
    std::size_t witnesses = 0;
    for (const CoEvent& phi : prim) {
      ++c.cases;
      if (BigInt(phi.dual().cardinality()) != r.primitive_cardinality) c.fail("primitive of unexpected size at 2m = 4");
      const EventMask d = phi.dual().mask();
      if (!(d & gamma_bit) || (d & ~ge)) continue;
      ++witnesses;
      const bool classical_even = eval(phi, Event(ge, 16)) && !eval(phi, Event(le, 16));
      const bool both_odd_false = !eval(phi, Event(go, 16)) && !eval(phi, Event(lo, 16));
      if (!classical_even || !both_odd_false) c.fail("primitive inside G^E through gamma_E treats the odd split classically");
    }
    BigInt expected_witnesses;
    const unsigned card = static_cast<unsigned>(r.primitive_cardinality.get_ui());
    mpz_bin_uiui(expected_witnesses.get_mpz_t(), static_cast<unsigned long>(std::popcount(ge)) - 1, card - 1);
    if (BigInt(witnesses) != expected_witnesses || witnesses == 0) c.fail("unexpected number of even/odd witnesses at 2m = 4");
    BigInt all;
    mpz_bin_uiui(all.get_mpz_t(), 16, card);
    if (BigInt(prim.size()) != all) c.fail("primitives at 2m = 4 are not all the Int(eps 16)-subsets");
  }
  return c;
}

}  // namespace qmt::acceptance
