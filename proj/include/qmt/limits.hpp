#pragma once

#include <string>

#include "qmt/event.hpp"

namespace qmt {

// Bounds on brute-force work. Explicit theories materialise all 2^n events, so n is capped at
// `enumeration_cap` (16 by default, up to kMaxHistories when `allow_large` is set). Scans over
// all disjoint triples cost 4^n and have their own cap.
struct Limits {
  unsigned enumeration_cap = 16;
  unsigned triple_scan_cap = 12;
  unsigned threads = 1;

  static Limits large() {
    Limits l;
    l.enumeration_cap = kMaxHistories;
    l.triple_scan_cap = 16;
    return l;
  }
};

// Throws CapExceeded when n exceeds `cap`.
void require_within(unsigned n, unsigned cap, const std::string& what);

}  // namespace qmt
