// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. All values are exact integers;
// there are no tolerances to tune. Exits nonzero if any criterion fails.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "dominance_reference.hpp"
#include "wmult/bz.hpp"
#include "wmult/oracle.hpp"
#include "wmult/rootsystem.hpp"
#include "wmult/survey.hpp"

using namespace wmult;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& summary,
            const std::vector<std::string>& detail = {}) {
  std::cout << "criterion " << criterion << " [" << (pass ? "PASS" : "FAIL") << "] " << summary
            << "\n";
  for (const auto& line : detail) std::cout << "    " << line << "\n";
  if (!pass) ++g_failures;
}

RootCoordWeight w(const LieType& t, IntVec m) { return RootCoordWeight{t, std::move(m)}; }

// ---------------------------------------------------------------------------
// 1. Classification-table reproduction at cap 8.

void criterion_1() {
  const std::vector<LieType> types = {
      {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::A, 5}, {Family::B, 2},
      {Family::B, 3}, {Family::B, 4}, {Family::B, 5}, {Family::B, 6}, {Family::C, 3},
      {Family::C, 4}, {Family::C, 5}, {Family::D, 4}, {Family::D, 5}, {Family::D, 6},
      {Family::E, 6}, {Family::E, 7}, {Family::F, 4}, {Family::G, 2}};
  bool pass = true;
  size_t multone = 0, notone = 0;
  std::vector<std::string> detail;
  for (const LieType& t : types) {
    auto rep = survey::verify_theorem_main(t, survey::SweepOptions{8, false});
    multone += rep.multone.size();
    notone += rep.not_one.size();
    if (!rep.disagreements.empty()) {
      pass = false;
      detail.push_back(t.to_string() + ": " + std::to_string(rep.disagreements.size()) +
                       " fast-path/oracle disagreements");
    }
    if (!rep.missed_by_enumeration.empty()) {
      pass = false;
      std::string s = t.to_string() + ": table members missed by the sweep:";
      for (const auto& z : rep.missed_by_enumeration) s += " " + to_text(z);
      detail.push_back(s);
    }
    if (!rep.not_in_table.empty()) {
      pass = false;
      std::string s = t.to_string() + ": multiplicity-one weights absent from the table:";
      for (const auto& z : rep.not_in_table) s += " " + to_text(z);
      detail.push_back(s);
    }
  }
  if (!pass)
    detail.push_back(
        "every surplus weight above is oracle-exact; the A-type ones are the "
        "Sym^(n+1) family (1,2,...,n) and its reversal, whose modules are "
        "multiplicity-free, and C3:2,3,2 is confirmed by the 6x14' tensor "
        "bookkeeping");
  report(1, pass,
         "table reproduction at cap 8 across " + std::to_string(types.size()) + " types (" +
             std::to_string(multone) + " multiplicity-one pairs, " + std::to_string(notone) +
             " confirmed non-examples)",
         detail);
}

// ---------------------------------------------------------------------------
// 2. The rank-one anchor: K(2 alpha1, alpha1) = 1.

void criterion_2() {
  Int k = oracle::multiplicity(w({Family::A, 1}, {2}), w({Family::A, 1}, {1}));
  report(2, k == 1, "rank-one anchor multiplicity(A1:2, A1:1) = " + std::to_string(k));
}

// ---------------------------------------------------------------------------
// 3. Named non-example candidates with frozen exact multiplicities. The
// claimed property is K != 1; the frozen value pins the oracle output either
// way.

void criterion_3() {
  struct Candidate {
    RootCoordWeight zeta;
    RootCoordWeight mu;
    Int frozen;
  };
  const LieType a3{Family::A, 3}, c3{Family::C, 3}, f4{Family::F, 4}, e7{Family::E, 7},
      d5{Family::D, 5};
  const std::vector<Candidate> cands = {
      {w(a3, {1, 2, 2}), w(a3, {1, 1, 1}), 2},
      {w(a3, {1, 2, 3}), w(a3, {1, 1, 1}), 1},  // Sym^4 dual module, multiplicity-free
      {w(a3, {2, 2, 1}), w(a3, {1, 1, 1}), 2},
      {w(a3, {3, 2, 1}), w(a3, {1, 1, 1}), 1},  // Sym^4 module, multiplicity-free
      {w(c3, {2, 3, 2}), w(c3, {2, 2, 1}), 1},  // 64 of C3, 6x14' bookkeeping
      {w(c3, {2, 4, 2}), w(c3, {2, 2, 1}), 2},
      {w(c3, {2, 4, 3}), w(c3, {2, 2, 1}), 2},
      {w(f4, {2, 4, 6, 3}), w(f4, {2, 3, 4, 2}), 2},
      {w(f4, {2, 4, 6, 4}), w(f4, {2, 3, 4, 2}), 3},
      {w(e7, {2, 3, 4, 6, 5, 4, 2}), w(e7, {2, 2, 3, 4, 3, 2, 1}), 6},
      {w(e7, {2, 3, 4, 6, 5, 4, 3}), w(e7, {2, 2, 3, 4, 3, 2, 1}), 5},
      {w(d5, {1, 2, 3, 2, 2}), w(d5, {1, 2, 2, 1, 1}), 3},
  };
  bool pass = true;
  std::vector<std::string> detail;
  for (const auto& c : cands) {
    Int k = oracle::multiplicity(c.zeta, c.mu);
    if (k != c.frozen) {
      pass = false;
      detail.push_back("regression: K(" + to_text(c.zeta) + ", " + to_text(c.mu) + ") = " +
                       std::to_string(k) + ", frozen value " + std::to_string(c.frozen));
    }
    if (k == 1) {
      pass = false;
      detail.push_back("claimed non-example has K = 1: (" + to_text(c.zeta) + "; " +
                       to_text(c.mu) + ")");
    }
  }
  report(3, pass, "named non-example candidates, exact values frozen", detail);
}

// ---------------------------------------------------------------------------
// 4. E8 slice: at cap 10 with m8 = 2, exactly one nonprimitive pair exists
// and its multiplicity is not one.

void criterion_4() {
  auto rep = survey::verify_theorem_main({Family::E, 8}, survey::SweepOptions{10, false});
  size_t pairs = rep.multone.size() + rep.not_one.size();
  bool unique = pairs == 1 && rep.not_one.size() == 1 &&
                rep.not_one[0].zeta.coeffs == IntVec{4, 5, 7, 10, 8, 6, 4, 2};
  bool pass = unique && rep.not_one[0].oracle_value == 7;
  std::vector<std::string> detail;
  if (unique)
    detail.push_back("unique weight E8:4,5,7,10,8,6,4,2 with K = " +
                     std::to_string(rep.not_one[0].oracle_value) + " (frozen 7, the 3875 module)");
  report(4, pass, "E8 slice m8=2 at cap 10: " + std::to_string(pairs) + " nonprimitive pair(s)",
         detail);
}

// ---------------------------------------------------------------------------
// 5. Oracle self-consistency: dimension conservation, reflection invariance,
// denominator positivity.

void criterion_5() {
  std::mt19937 rng(2024);
  const std::vector<LieType> types = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3},
                                      {Family::A, 4}, {Family::B, 2}, {Family::B, 3},
                                      {Family::B, 4}, {Family::C, 3}, {Family::C, 4},
                                      {Family::D, 4}, {Family::F, 4}, {Family::G, 2}};
  // pool of dominant weights with coefficient sum <= 10
  std::vector<RootCoordWeight> pool;
  for (const LieType& t : types) {
    IntVec lo(t.rank, 0), hi(t.rank, 10);
    for (IntVec& m : dominant_weights_in_box(t, lo, hi)) {
      if (std::accumulate(m.begin(), m.end(), Int(0)) <= 10) pool.push_back(w(t, m));
    }
  }
  std::shuffle(pool.begin(), pool.end(), rng);

  bool pass = true;
  std::vector<std::string> detail;
  int conserved = 0;
  for (int i = 0; i < 50 && i < (int)pool.size(); ++i) {
    const RootCoordWeight& lam = pool[i];
    auto wd = oracle::weight_diagram(lam);
    unsigned long long total = 0;
    for (const auto& [nu, mult] : wd.table)
      total += oracle::weyl_orbit(w(lam.type, nu)).size() * (unsigned long long)mult;
    if (total != oracle::dimension(lam)) {
      pass = false;
      detail.push_back("dimension conservation failed for " + to_text(lam));
    } else {
      ++conserved;
    }
  }

  int invariant = 0;
  std::uniform_int_distribution<Int> shift(-2, 2);
  for (int i = 0; i < 100; ++i) {
    const RootCoordWeight& lam = pool[i % pool.size()];
    IntVec m = lam.coeffs;
    for (auto& x : m) x = std::max<Int>(0, x + shift(rng));
    RootCoordWeight mu = w(lam.type, m);
    std::uniform_int_distribution<int> node(0, lam.type.rank - 1);
    int j = node(rng);
    OmegaCoordWeight c = to_omega_coords(mu);
    IntVec refl = mu.coeffs;
    refl[j] -= c.coords[j];
    if (oracle::multiplicity(lam, mu) != oracle::multiplicity(lam, w(lam.type, refl))) {
      pass = false;
      detail.push_back("reflection invariance failed for " + to_text(lam) + " at " + to_text(mu));
    } else {
      ++invariant;
    }
  }

  long long checks = oracle::denominator_checks();
  if (checks <= 0) {
    pass = false;
    detail.push_back("no recursion denominators were checked");
  }
  report(5, pass,
         "oracle self-consistency: " + std::to_string(conserved) +
             "/50 dimension conservations, " + std::to_string(invariant) +
             "/100 reflection invariances, " + std::to_string(checks) +
             " denominators verified positive, 0 violations",
         detail);
}

// ---------------------------------------------------------------------------
// 6. Fast-path/oracle equivalence sweep over every dominant pair with
// coefficients <= 6 in all types of rank <= 5. The drop convention carries
// the pass/fail verdict; the restrict convention is reported alongside and
// the divergence table is written as an artifact.

void criterion_6() {
  const std::vector<LieType> types = {
      {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::A, 5},
      {Family::B, 2}, {Family::B, 3}, {Family::B, 4}, {Family::B, 5}, {Family::C, 3},
      {Family::C, 4}, {Family::C, 5}, {Family::D, 4}, {Family::D, 5}, {Family::F, 4},
      {Family::G, 2}};
  long long pairs = 0, drop_bad = 0, restrict_bad = 0;
  std::vector<std::string> drop_examples;
  std::ostringstream artifact;
  artifact << "type\tlambda\tmu\tdrop\trestrict\toracle\n";
  for (const LieType& t : types) {
    IntVec lo(t.rank, 0), hi(t.rank, 6);
    for (IntVec& lm : dominant_weights_in_box(t, lo, hi)) {
      RootCoordWeight lam = w(t, lm);
      auto wd = oracle::weight_diagram(lam);
      std::vector<IntVec> keys;
      keys.reserve(wd.table.size());
      for (const auto& [nu, mult] : wd.table) keys.push_back(nu);
      std::sort(keys.begin(), keys.end());
      for (const IntVec& nu : keys) {
        RootCoordWeight mu = w(t, nu);
        Int k = wd.table.at(nu);
        bool drop = bz::multiplicity_one(lam, mu, bz::Projection::Drop);
        bool restrict = bz::multiplicity_one(lam, mu, bz::Projection::Restrict);
        ++pairs;
        if (drop != (k == 1)) {
          ++drop_bad;
          if (drop_examples.size() < 4)
            drop_examples.push_back("drop says " + std::string(drop ? "yes" : "no") + ", K = " +
                                    std::to_string(k) + " at (" + to_text(lam) + "; " +
                                    to_text(mu) + ")");
        }
        if (restrict != (k == 1)) ++restrict_bad;
        if (drop != restrict)
          artifact << t.to_string() << "\t" << to_text(lam) << "\t" << to_text(mu) << "\t"
                   << (drop ? "yes" : "no") << "\t" << (restrict ? "yes" : "no") << "\t" << k
                   << "\n";
      }
    }
  }
  std::ofstream out("drop_vs_restrict.tsv");
  out << artifact.str();
  out.close();
  bool pass = drop_bad == 0;
  std::vector<std::string> detail = drop_examples;
  detail.push_back("restrict-convention disagreements: " + std::to_string(restrict_bad));
  detail.push_back("divergence report written to drop_vs_restrict.tsv");
  report(6, pass,
         "drop-convention fast path vs oracle over " + std::to_string(pairs) +
             " dominant pairs: " + std::to_string(drop_bad) + " disagreements",
         detail);
}

// ---------------------------------------------------------------------------
// 7. Dominance equivalence: omega-coordinate test vs the hand-coded
// inequality systems, exhaustive over [0,8]^rank.

void criterion_7() {
  bool pass = true;
  long long checked = 0;
  std::vector<std::string> detail;
  for (const LieType& t : testsupport::covered_types()) {
    RootCoordWeight probe{t, IntVec(t.rank, 0)};
    long long bad = 0;
    testsupport::sweep_box(t.rank, 0, 8, [&](const IntVec& m) {
      probe.coeffs = m;
      ++checked;
      if (is_dominant(probe) != testsupport::reference_dominant(t, m)) ++bad;
    });
    if (bad) {
      pass = false;
      detail.push_back(t.to_string() + ": " + std::to_string(bad) + " mismatches");
    }
  }
  report(7, pass,
         "dominance equivalence on an exhaustive [0,8] sweep, " + std::to_string(checked) +
             " vectors across " + std::to_string(testsupport::covered_types().size()) + " types",
         detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  std::cout << "acceptance: " << (7 - g_failures) << "/7 criteria passed\n";
  if (g_failures) {
    std::cout << "failing criteria assert claims of the bundled classification table that the\n"
                 "exact oracle refutes; see the per-criterion detail above and README notes.\n";
  }
  return g_failures == 0 ? 0 : 1;
}
