#pragma once

#include <cstddef>
#include <vector>

#include "qmt/rational.hpp"

namespace qmt {

// Equality-form linear program: A x = b, x >= 0, optionally maximizing c . x.
struct LinearProgram {
  std::size_t columns = 0;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> x;  // a vertex of the feasible region (optimal for the objective)
  Rational objective;
  // Infeasible only: y with y^T A <= 0 componentwise and y^T b > 0.
  std::vector<Rational> farkas;
};

// Exact two-phase simplex with Bland's rule. An empty objective asks for any feasible vertex.
LpResult solve_lp(const LinearProgram& lp, const std::vector<Rational>& objective = {});

}  // namespace qmt
