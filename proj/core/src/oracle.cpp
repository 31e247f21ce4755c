#include "wmult/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace wmult::oracle {

namespace {

std::atomic<long long> g_denominator_checks{0};

// Per-type tables with every inner product scaled by 6, which clears all
// denominators (worst case 2/3 for the short G2 root, 1/2 for adjacent short
// pairs in F4).
struct Tables {
  LieType type;
  std::vector<std::vector<Int>> gram6;  // 6*(alpha_i, alpha_j)
  std::vector<IntVec> roots;            // positive roots, root coords
  std::vector<IntVec> pair6;            // pair6[r][j] = 6*(alpha_j, root_r)
  IntVec norm6;                         // 6*(root_r, root_r)
  IntVec l3;                            // 3*(alpha_j, alpha_j)

  Int dot6(const IntVec& x, const IntVec& y) const {
    const int n = type.rank;
    Int acc = 0;
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < n; ++j)
        if (y[j] != 0) acc += x[i] * gram6[i][j] * y[j];
    }
    return acc;
  }
};

const Tables& tables_for(const LieType& t) {
  static std::mutex mu;
  static std::map<LieType, std::unique_ptr<const Tables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it != cache.end()) return *it->second;

  auto tb = std::make_unique<Tables>();
  tb->type = t;
  const CartanData& cd = cartan_matrix(t);
  const int n = t.rank;
  tb->gram6.assign(n, IntVec(n, 0));
  tb->l3.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    tb->gram6[i][i] = (cd.lengths[i] * Rational(6)).num();
    tb->l3[i] = (cd.lengths[i] * Rational(3)).num();
    for (int j : cd.adjacency[i])
      tb->gram6[i][j] = (Rational(cd.matrix[j][i]) * cd.lengths[j] * Rational(3)).num();
  }
  for (const RootCoordWeight& r : positive_roots(t)) tb->roots.push_back(r.coeffs);
  tb->pair6.assign(tb->roots.size(), IntVec(n, 0));
  tb->norm6.assign(tb->roots.size(), 0);
  for (size_t r = 0; r < tb->roots.size(); ++r) {
    for (int j = 0; j < n; ++j) {
      Int acc = 0;
      for (int i = 0; i < n; ++i) acc += tb->gram6[j][i] * tb->roots[r][i];
      tb->pair6[r][j] = acc;
    }
    tb->norm6[r] = tb->dot6(tb->roots[r], tb->roots[r]);
  }
  auto res = cache.emplace(t, std::move(tb));
  return *res.first->second;
}

// In-place dominant representative over raw coordinate vectors.
int reduce_dominant(const CartanData& cd, IntVec& x, IntVec& c_scratch) {
  const int n = cd.type.rank;
  for (int j = 0; j < n; ++j) {
    Int v = 2 * x[j];
    for (int i : cd.adjacency[j]) v += cd.matrix[j][i] * x[i];
    c_scratch[j] = v;
  }
  int count = 0;
  for (;;) {
    int neg = -1;
    for (int j = 0; j < n; ++j)
      if (c_scratch[j] < 0) { neg = j; break; }
    if (neg < 0) break;
    Int cj = c_scratch[neg];
    x[neg] -= cj;
    for (int i : cd.adjacency[neg]) c_scratch[i] -= cj * cd.matrix[i][neg];
    c_scratch[neg] = -cj;
    ++count;
  }
  return count;
}

// Diagram restricted to levels <= max_level (level = height(lambda - nu)).
// Negative max_level means no bound.
WeightDiagram diagram_to_level(const RootCoordWeight& lambda, Int max_level) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("highest weight is not dominant: " + to_text(lambda));
  const LieType t = lambda.type;
  const CartanData& cd = cartan_matrix(t);
  const Tables& tb = tables_for(t);
  const int n = t.rank;

  // Dominant weights under lambda live in the coefficient box [0, lambda].
  IntVec lo(n, 0);
  std::optional<Int> defect_bound;
  if (max_level >= 0) defect_bound = max_level;
  std::vector<IntVec> doms = dominant_weights_in_box(t, lo, lambda.coeffs, defect_bound);

  std::sort(doms.begin(), doms.end(), [&](const IntVec& a, const IntVec& b) {
    Int ha = std::accumulate(a.begin(), a.end(), Int(0));
    Int hb = std::accumulate(b.begin(), b.end(), Int(0));
    if (ha != hb) return ha > hb;  // level = height(lambda) - height(nu)
    return a < b;
  });

  WeightDiagram wd;
  wd.highest = lambda;
  wd.table.reserve(doms.size());

  const Int lam_norm6 = tb.dot6(lambda.coeffs, lambda.coeffs);
  OmegaCoordWeight lam_omega = to_omega_coords(lambda);

  IntVec xi(n), scratch(n), nu_omega(n);
  for (const IntVec& nu : doms) {
    if (nu == lambda.coeffs) {
      wd.table.emplace(nu, 1);
      continue;
    }
    __int128 rhs = 0;
    const Int nu_norm6 = tb.dot6(nu, nu);
    for (size_t r = 0; r < tb.roots.size(); ++r) {
      Int s6 = 0;
      for (int j = 0; j < n; ++j)
        if (nu[j] != 0) s6 += nu[j] * tb.pair6[r][j];
      const Int a6 = tb.norm6[r];
      for (Int k = 1;; ++k) {
        // |nu + k a|^2 grows with k because (nu, a) >= 0 for dominant nu
        Int q6 = nu_norm6 + 2 * k * s6 + k * k * a6;
        if (q6 > lam_norm6) break;
        for (int j = 0; j < n; ++j) xi[j] = nu[j] + k * tb.roots[r][j];
        reduce_dominant(cd, xi, scratch);
        auto it = wd.table.find(xi);
        if (it != wd.table.end()) rhs += (__int128)(s6 + k * a6) * it->second;
      }
    }
    // 6[(l+r,l+r) - (n+r,n+r)] = sum_j (lambda-nu)_j (c_l + c_n + 2)_j 3(a_j,a_j)
    for (int j = 0; j < n; ++j) {
      Int v = 2 * nu[j];
      for (int i : cd.adjacency[j]) v += cd.matrix[j][i] * nu[i];
      nu_omega[j] = v;
    }
    __int128 denom = 0;
    for (int j = 0; j < n; ++j)
      denom += (__int128)(lambda.coeffs[j] - nu[j]) * (lam_omega.coords[j] + nu_omega[j] + 2) *
               tb.l3[j];
    g_denominator_checks.fetch_add(1, std::memory_order_relaxed);
    if (denom <= 0)
      throw std::logic_error("nonpositive recursion denominator at " +
                             to_text(RootCoordWeight{t, nu}));
    __int128 num = 2 * rhs;
    if (num % denom != 0)
      throw std::logic_error("recursion value is not integral at " +
                             to_text(RootCoordWeight{t, nu}));
    Int m = (Int)(num / denom);
    if (m < 1)
      throw std::logic_error("recursion produced a nonpositive multiplicity at " +
                             to_text(RootCoordWeight{t, nu}));
    wd.table.emplace(nu, m);
  }
  return wd;
}

}  // namespace

Int WeightDiagram::at(const RootCoordWeight& mu) const {
  if (mu.type != highest.type)
    throw std::invalid_argument("type mismatch: " + mu.type.to_string() + " vs " +
                                highest.type.to_string());
  DominantRep rep = make_dominant(mu);
  auto it = table.find(rep.weight.coeffs);
  return it == table.end() ? 0 : it->second;
}

WeightDiagram weight_diagram(const RootCoordWeight& lambda) {
  return diagram_to_level(lambda, -1);
}

Int multiplicity(const RootCoordWeight& lambda, const RootCoordWeight& mu) {
  if (lambda.type != mu.type)
    throw std::invalid_argument("type mismatch: " + lambda.type.to_string() + " vs " +
                                mu.type.to_string());
  if (!is_dominant(lambda))
    throw std::invalid_argument("highest weight is not dominant: " + to_text(lambda));
  DominantRep rep = make_dominant(mu);
  for (size_t i = 0; i < rep.weight.coeffs.size(); ++i)
    if (rep.weight.coeffs[i] > lambda.coeffs[i]) return 0;
  Int level = height(lambda) - height(rep.weight);
  WeightDiagram wd = diagram_to_level(lambda, level);
  auto it = wd.table.find(rep.weight.coeffs);
  return it == wd.table.end() ? 0 : it->second;
}

unsigned long long dimension(const RootCoordWeight& lambda) {
  return dimension(to_omega_coords(lambda));
}

unsigned long long dimension(const OmegaCoordWeight& lam_omega) {
  if (!is_dominant(lam_omega))
    throw std::invalid_argument("highest weight is not dominant: " + to_text(lam_omega));
  const Tables& tb = tables_for(lam_omega.type);
  const int n = lam_omega.type.rank;
  unsigned __int128 num = 1, den = 1;
  for (size_t r = 0; r < tb.roots.size(); ++r) {
    Int a = 0, b = 0;
    for (int j = 0; j < n; ++j) {
      a += (lam_omega.coords[j] + 1) * tb.roots[r][j] * tb.l3[j];
      b += tb.roots[r][j] * tb.l3[j];
    }
    num *= (unsigned __int128)a;
    den *= (unsigned __int128)b;
    unsigned __int128 x = num, y = den;
    while (y != 0) { unsigned __int128 t = x % y; x = y; y = t; }
    if (x > 1) { num /= x; den /= x; }
  }
  if (den != 1) throw std::logic_error("dimension formula did not reduce to an integer");
  if (num > (unsigned __int128)~0ull)
    throw std::overflow_error("dimension exceeds 64 bits");
  return (unsigned long long)num;
}

long long denominator_checks() { return g_denominator_checks.load(); }

std::vector<IntVec> weyl_orbit(const RootCoordWeight& w) {
  const CartanData& cd = cartan_matrix(w.type);
  const int n = w.type.rank;
  std::unordered_map<IntVec, int, VecHash> seen;
  std::deque<IntVec> queue{w.coeffs};
  seen.emplace(w.coeffs, 0);
  while (!queue.empty()) {
    IntVec x = queue.front();
    queue.pop_front();
    int d = seen[x];
    for (int j = 0; j < n; ++j) {
      Int c = 2 * x[j];
      for (int i : cd.adjacency[j]) c += cd.matrix[j][i] * x[i];
      if (c == 0) continue;
      IntVec y = x;
      y[j] -= c;
      if (seen.emplace(y, d + 1).second) queue.push_back(y);
    }
  }
  std::vector<IntVec> orbit;
  orbit.reserve(seen.size());
  for (auto& [v, _] : seen) orbit.push_back(v);
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

int orbit_distance_to_dominant(const RootCoordWeight& w) {
  const CartanData& cd = cartan_matrix(w.type);
  const int n = w.type.rank;
  std::unordered_map<IntVec, int, VecHash> seen;
  std::deque<IntVec> queue{w.coeffs};
  seen.emplace(w.coeffs, 0);
  while (!queue.empty()) {
    IntVec x = queue.front();
    queue.pop_front();
    int d = seen[x];
    bool dominant = true;
    for (int j = 0; j < n; ++j) {
      Int c = 2 * x[j];
      for (int i : cd.adjacency[j]) c += cd.matrix[j][i] * x[i];
      if (c < 0) { dominant = false; break; }
    }
    if (dominant) return d;
    for (int j = 0; j < n; ++j) {
      Int c = 2 * x[j];
      for (int i : cd.adjacency[j]) c += cd.matrix[j][i] * x[i];
      if (c == 0) continue;
      IntVec y = x;
      y[j] -= c;
      if (seen.emplace(y, d + 1).second) queue.push_back(y);
    }
  }
  throw std::logic_error("orbit contains no dominant element");
}

}  // namespace wmult::oracle
