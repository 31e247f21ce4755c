#pragma once

#include <map>
#include <string>
#include <vector>

#include "wmult/bz.hpp"
#include "wmult/rootsystem.hpp"

namespace wmult::survey {

enum class Target : char { Short = 's', Long = 'l' };

std::string target_name(Target t);

// One examined pair (zeta; mu_i) from the bounded sweep.
struct SurveyRecord {
  LieType type;
  RootCoordWeight zeta;
  Target target;
  RootCoordWeight mu;
  bz::PairKind pair_class;
  bool fastpath_verdict;
  Int oracle_value;
};

// All dominant zeta with zeta > mu, every coefficient <= cap, lexicographic,
// excluding zeta = mu. A cap below max(mu) yields the empty sequence.
std::vector<RootCoordWeight> enumerate_dominant_above(const LieType& type,
                                                      const RootCoordWeight& mu, Int cap);

struct SweepOptions {
  Int cap = 8;
  bool e8_full = false;  // E8 defaults to the m8 = 2 slice
};

// Nonprimitive pairs (zeta; mu_i) over the sweep whose exact multiplicity is
// one, in lexicographic zeta order (short target before long). Enforces
// fastpath == (oracle == 1) on every examined nonprimitive pair.
std::vector<SurveyRecord> find_nonprimitive_multone(const LieType& type, Int cap);
std::vector<SurveyRecord> find_nonprimitive_multone(const LieType& type,
                                                    const SweepOptions& options);

// Closed-form membership test for the classification table of nonprimitive
// multiplicity-one highest weights (syntactic; dominance not required):
//   A2 {(1,2),(2,1)}; A3 {(1,2,1)};
//   Bn (2,...,2); B3 (1,2,m3) m3>=3; Bn>=4 (1,2,3,3,...,3);
//   Dn (2,...,2,1,1); D4 also (1,2,2,1) and (1,2,1,2);
//   G2 (4,2); everything else false.
bool table2_predicate(const LieType& type, const RootCoordWeight& zeta);

// Table members with coefficients <= cap that are dominant weights strictly
// dominating the highest long root (the weights a bounded sweep can witness).
std::vector<RootCoordWeight> table2_members(const LieType& type, Int cap);

struct TypeReport {
  LieType type;
  Int cap = 0;
  bool e8_slice = false;
  std::vector<SurveyRecord> multone;                 // oracle == 1
  std::vector<SurveyRecord> not_one;                 // oracle != 1
  std::vector<RootCoordWeight> not_in_table;         // multone zeta missing from the table
  std::vector<RootCoordWeight> missed_by_enumeration;  // table members the sweep did not find
  std::vector<SurveyRecord> disagreements;           // fastpath != (oracle == 1)

  bool pass() const {
    return not_in_table.empty() && missed_by_enumeration.empty() && disagreements.empty();
  }
};

// Machine verification of the classification for one type at the given cap:
// sweep, compare against table2, cross-check every oracle value against the
// fast path. Failures are report content, not errors.
TypeReport verify_theorem_main(const LieType& type, const SweepOptions& options = {});

struct Divergence {
  RootCoordWeight lambda;
  RootCoordWeight mu;
  bool drop_verdict;
  bool restrict_verdict;
  Int oracle_value;
};

// Pairs in the all-dominant-pairs sweep (coefficients <= cap) where the two
// projection conventions disagree, annotated with the exact multiplicity.
std::vector<Divergence> cross_validate(const LieType& type, Int cap);

// Aggregated verification across every type the classification covers, keyed
// by case name. E8 always runs its m8 = 2 slice at cap >= 10.
struct PaperVerification {
  Int cap = 8;
  std::vector<std::pair<std::string, std::vector<TypeReport>>> lemmas;

  bool pass() const;
};

PaperVerification verify_paper(Int cap);

}  // namespace wmult::survey
