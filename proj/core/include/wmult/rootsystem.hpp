#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wmult/rational.hpp"

namespace wmult {

using Int = long long;
using IntVec = std::vector<Int>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Simple-algebra family tag plus rank. Valid ranks: A n>=1, B n>=2, C n>=3,
// D n>=4, E n in {6,7,8}, F n==4, G n==2.
struct LieType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const LieType& a, const LieType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator!=(const LieType& a, const LieType& b) { return !(a == b); }
  friend bool operator<(const LieType& a, const LieType& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.rank < b.rank;
  }
  std::string to_string() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
  }
};

bool lie_type_valid(const LieType& t);
void require_valid(const LieType& t);  // throws std::invalid_argument with a diagnostic

// Weight written over the simple roots: w = sum_i coeffs[i] * alpha_{i+1}.
// Negative entries are allowed (weight differences reuse this type).
struct RootCoordWeight {
  LieType type;
  IntVec coeffs;

  friend bool operator==(const RootCoordWeight& a, const RootCoordWeight& b) {
    return a.type == b.type && a.coeffs == b.coeffs;
  }
  friend bool operator!=(const RootCoordWeight& a, const RootCoordWeight& b) { return !(a == b); }
};

// Weight written over the fundamental weights: w = sum_i coords[i] * omega_{i+1}.
struct OmegaCoordWeight {
  LieType type;
  IntVec coords;

  friend bool operator==(const OmegaCoordWeight& a, const OmegaCoordWeight& b) {
    return a.type == b.type && a.coords == b.coords;
  }
  friend bool operator!=(const OmegaCoordWeight& a, const OmegaCoordWeight& b) { return !(a == b); }
};

// Result of solving A*m = c exactly: root coefficients over the rationals.
struct RationalRootCoords {
  LieType type;
  std::vector<Rational> coeffs;

  bool integral() const;
  RootCoordWeight to_integral() const;  // throws if not integral
};

// Cartan data for one simple type. matrix[j][i] = <alpha_i, alpha_j^vee> =
// 2(alpha_i,alpha_j)/(alpha_j,alpha_j), so row j is the dominance functional
// at node j and omega coordinates are c = matrix * m. Node numbering matches
// the per-type inequality systems this library is tested against.
struct CartanData {
  LieType type;
  std::vector<std::vector<int>> matrix;
  std::vector<std::vector<int>> adjacency;  // neighbor lists, ascending
  std::vector<Rational> lengths;            // (alpha_i, alpha_i); long roots normalized to 2
};

const CartanData& cartan_matrix(const LieType& type);

// (highest short root, highest long root); equal for simply-laced types.
std::pair<RootCoordWeight, RootCoordWeight> highest_roots(const LieType& type);

OmegaCoordWeight to_omega_coords(const RootCoordWeight& w);
RationalRootCoords from_omega_coords(const OmegaCoordWeight& w);

bool is_dominant(const RootCoordWeight& w);
bool is_dominant(const OmegaCoordWeight& w);

// lambda >= mu in the dominance order: lambda - mu has nonnegative coefficients.
bool succeeds(const RootCoordWeight& lambda, const RootCoordWeight& mu);

Rational inner_product(const RootCoordWeight& v, const RootCoordWeight& w);

const std::vector<RootCoordWeight>& positive_roots(const LieType& type);

// rho: all omega coordinates equal to 1.
OmegaCoordWeight weyl_vector(const LieType& type);

struct DominantRep {
  RootCoordWeight weight;
  int reflections;  // simple reflections applied; equals #{alpha>0 : (w,alpha)<0}
};
DominantRep make_dominant(const RootCoordWeight& w);

struct RationalDominantRep {
  RationalRootCoords weight;
  int reflections;
};
RationalDominantRep make_dominant(const RationalRootCoords& w);

Int height(const RootCoordWeight& w);  // sum of root coefficients

RootCoordWeight operator+(const RootCoordWeight& a, const RootCoordWeight& b);
RootCoordWeight operator-(const RootCoordWeight& a, const RootCoordWeight& b);

// All dominant weights m with lo <= m <= hi componentwise, in lexicographic
// order. With max_defect set, only weights with sum(hi - m) <= max_defect are
// produced. Plumbing shared by the multiplicity oracle and the survey sweeps.
std::vector<IntVec> dominant_weights_in_box(const LieType& type, const IntVec& lo,
                                            const IntVec& hi,
                                            std::optional<Int> max_defect = std::nullopt);

// Weight text format used by every CLI command:
//   root coordinates   "B3:1,2,3"
//   omega coordinates  "B3:w:1,0,2"
// Integers only; anything else is rejected.
std::string to_text(const RootCoordWeight& w);
std::string to_text(const OmegaCoordWeight& w);

// Parses either format. Omega input is converted to root coordinates and must
// land in the root lattice. Throws std::invalid_argument naming the bad token.
RootCoordWeight parse_weight(const std::string& text);

}  // namespace wmult
