#pragma once

#include <vector>

#include "wmult/rootsystem.hpp"

// Hand-coded dominance inequality systems, one branch per family and rank
// shape, kept deliberately independent of the Cartan-matrix route in the
// library. These are the test oracle for is_dominant.
namespace testsupport {

using wmult::Int;
using wmult::IntVec;
using wmult::LieType;
using wmult::Family;

inline bool reference_dominant(const LieType& t, const IntVec& m) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: {
      if (n == 1) return m[0] >= 0;
      if (n == 2) return m[1] <= 2 * m[0] && m[0] <= 2 * m[1];
      if (n == 3)
        return m[1] <= 2 * m[0] && m[0] + m[2] <= 2 * m[1] && m[1] <= 2 * m[2];
      if (m[1] > 2 * m[0]) return false;
      for (int i = 1; i + 1 < n; ++i)
        if (m[i - 1] + m[i + 1] > 2 * m[i]) return false;
      return m[n - 2] <= 2 * m[n - 1];
    }
    case Family::B: {
      if (n == 2) return m[1] <= 2 * m[0] && m[0] <= m[1];
      if (m[1] > 2 * m[0]) return false;
      for (int i = 1; i + 1 < n; ++i)
        if (m[i - 1] + m[i + 1] > 2 * m[i]) return false;
      return m[n - 2] <= m[n - 1];
    }
    case Family::C: {
      if (n == 3)
        return m[1] <= 2 * m[0] && m[0] + 2 * m[2] <= 2 * m[1] && m[1] <= 2 * m[2];
      if (m[1] > 2 * m[0]) return false;
      for (int i = 1; i + 1 < n - 1; ++i)
        if (m[i - 1] + m[i + 1] > 2 * m[i]) return false;
      if (m[n - 3] + 2 * m[n - 1] > 2 * m[n - 2]) return false;
      return m[n - 2] <= 2 * m[n - 1];
    }
    case Family::D: {
      if (n == 4)
        return m[1] <= 2 * m[0] && m[0] + m[2] + m[3] <= 2 * m[1] && m[1] <= 2 * m[2] &&
               m[1] <= 2 * m[3];
      if (m[1] > 2 * m[0]) return false;
      for (int i = 1; i + 1 < n - 2; ++i)
        if (m[i - 1] + m[i + 1] > 2 * m[i]) return false;
      if (m[n - 4] + m[n - 2] + m[n - 1] > 2 * m[n - 3]) return false;
      return m[n - 3] <= 2 * m[n - 2] && m[n - 3] <= 2 * m[n - 1];
    }
    case Family::E: {
      if (m[2] > 2 * m[0]) return false;
      if (m[3] > 2 * m[1]) return false;
      if (m[0] + m[3] > 2 * m[2]) return false;
      if (m[1] + m[2] + m[4] > 2 * m[3]) return false;
      if (n == 6) return m[3] + m[5] <= 2 * m[4] && m[4] <= 2 * m[5];
      if (n == 7)
        return m[3] + m[5] <= 2 * m[4] && m[4] + m[6] <= 2 * m[5] && m[5] <= 2 * m[6];
      return m[3] + m[5] <= 2 * m[4] && m[4] + m[6] <= 2 * m[5] &&
             m[5] + m[7] <= 2 * m[6] && m[6] <= 2 * m[7];
    }
    case Family::F:
      return m[1] <= 2 * m[0] && m[0] + m[2] <= 2 * m[1] && 2 * m[1] + m[3] <= 2 * m[2] &&
             m[2] <= 2 * m[3];
    case Family::G:
      return 3 * m[1] <= 2 * m[0] && m[0] <= 2 * m[1];
  }
  return false;
}

// Types whose inequality systems are pinned above.
inline std::vector<LieType> covered_types() {
  return {
      {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::A, 5}, {Family::A, 6},
      {Family::B, 2}, {Family::B, 3}, {Family::B, 4}, {Family::B, 5}, {Family::B, 6},
      {Family::C, 3}, {Family::C, 4}, {Family::C, 5}, {Family::C, 6},
      {Family::D, 4}, {Family::D, 5}, {Family::D, 6},
      {Family::E, 6}, {Family::E, 7}, {Family::E, 8},
      {Family::F, 4}, {Family::G, 2},
  };
}

// Walks every integer vector in [lo, hi]^rank, invoking f(m).
template <typename F>
void sweep_box(int rank, Int lo, Int hi, F&& f) {
  IntVec m(rank, lo);
  for (;;) {
    f(m);
    int i = 0;
    while (i < rank && m[i] == hi) m[i++] = lo;
    if (i == rank) break;
    ++m[i];
  }
}

}  // namespace testsupport
