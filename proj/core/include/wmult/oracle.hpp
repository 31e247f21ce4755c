#pragma once

#include <unordered_map>
#include <vector>

#include "wmult/rootsystem.hpp"

namespace wmult::oracle {

struct VecHash {
  size_t operator()(const IntVec& v) const {
    // FNV-1a over the raw limbs
    size_t h = 1469598103934665603ull;
    for (Int x : v) {
      unsigned long long u = (unsigned long long)x;
      for (int b = 0; b < 8; ++b) {
        h ^= (u >> (8 * b)) & 0xff;
        h *= 1099511628211ull;
      }
    }
    return h;
  }
};

// Exact multiplicities of the dominant weights of V(lambda), keyed by root
// coordinates of the dominant representative.
struct WeightDiagram {
  RootCoordWeight highest;
  std::unordered_map<IntVec, Int, VecHash> table;

  // dim V_mu; mu is reduced to its dominant representative first.
  Int at(const RootCoordWeight& mu) const;
};

// Full diagram: every dominant nu with nu <= lambda in the dominance order.
// Throws std::invalid_argument unless lambda is dominant.
WeightDiagram weight_diagram(const RootCoordWeight& lambda);

// dim V_mu in V(lambda), via the level-by-level recursion
//   ((l+r,l+r)-(n+r,n+r)) m_n = 2 sum_{a>0} sum_{k>=1} (n+ka, a) m_{n+ka},
// with multiplicities of non-dominant weights resolved through make_dominant.
// Returns 0 when no Weyl image of mu lies under lambda.
Int multiplicity(const RootCoordWeight& lambda, const RootCoordWeight& mu);

// Weyl dimension formula, exact. The omega-coordinate overload also covers
// dominant weights outside the root lattice.
unsigned long long dimension(const RootCoordWeight& lambda);
unsigned long long dimension(const OmegaCoordWeight& lambda);

// Count of recursion denominators verified positive so far (a zero or negative
// denominator throws std::logic_error; this counter feeds the self-check
// report).
long long denominator_checks();

// Full Weyl orbit by breadth-first reflection; intended for small ranks.
std::vector<IntVec> weyl_orbit(const RootCoordWeight& w);

// Steps from w to its dominant representative in the reflection BFS; equals
// make_dominant(w).reflections.
int orbit_distance_to_dominant(const RootCoordWeight& w);

}  // namespace wmult::oracle
