#include "wmult/rootsystem.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace wmult {

bool lie_type_valid(const LieType& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 3;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

void require_valid(const LieType& t) {
  if (!lie_type_valid(t))
    throw std::invalid_argument("invalid rank for family: " + t.to_string());
}

static void require_same_type(const RootCoordWeight& a, const RootCoordWeight& b) {
  if (a.type != b.type)
    throw std::invalid_argument("type mismatch: " + a.type.to_string() + " vs " +
                                b.type.to_string());
}

bool RationalRootCoords::integral() const {
  for (const auto& c : coeffs)
    if (!c.is_integer()) return false;
  return true;
}

RootCoordWeight RationalRootCoords::to_integral() const {
  RootCoordWeight w{type, IntVec(coeffs.size())};
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_integer())
      throw std::invalid_argument("weight is not in the root lattice");
    w.coeffs[i] = coeffs[i].num();
  }
  return w;
}

// ---------------------------------------------------------------------------
// Cartan data

static CartanData build_cartan(const LieType& t) {
  const int n = t.rank;
  CartanData cd;
  cd.type = t;
  cd.matrix.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cd.matrix[i][i] = 2;

  // Edges as (i, j) pairs, 0-based; default single bond -1/-1.
  std::vector<std::pair<int, int>> edges;
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 1; ++i) edges.push_back({i, i + 1});
      edges.push_back({n - 3, n - 1});
      break;
    case Family::E:
      // chain 1-3-4-5-...-n with node 2 attached to node 4
      edges.push_back({0, 2});
      for (int i = 2; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({1, 3});
      break;
    case Family::F:
      edges = {{0, 1}, {1, 2}, {2, 3}};
      break;
    case Family::G:
      edges = {{0, 1}};
      break;
  }
  for (auto [i, j] : edges) {
    cd.matrix[i][j] = -1;
    cd.matrix[j][i] = -1;
  }
  // Arrows: matrix[j][i] = 2(alpha_i,alpha_j)/(alpha_j,alpha_j), so the -2/-3
  // entry sits in the short root's row.
  cd.lengths.assign(n, Rational(2));
  switch (t.family) {
    case Family::B:
      cd.matrix[n - 1][n - 2] = -2;
      cd.lengths[n - 1] = Rational(1);
      break;
    case Family::C:
      cd.matrix[n - 2][n - 1] = -2;
      for (int i = 0; i < n - 1; ++i) cd.lengths[i] = Rational(1);
      break;
    case Family::F:
      cd.matrix[2][1] = -2;
      cd.lengths[2] = cd.lengths[3] = Rational(1);
      break;
    case Family::G:
      cd.matrix[0][1] = -3;
      cd.lengths[0] = Rational(2, 3);
      break;
    default:
      break;
  }
  cd.adjacency.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && cd.matrix[i][j] != 0) cd.adjacency[i].push_back(j);
  return cd;
}

const CartanData& cartan_matrix(const LieType& t) {
  require_valid(t);
  static std::mutex mu;
  static std::map<LieType, std::unique_ptr<const CartanData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end())
    it = cache.emplace(t, std::make_unique<const CartanData>(build_cartan(t))).first;
  return *it->second;
}

std::pair<RootCoordWeight, RootCoordWeight> highest_roots(const LieType& t) {
  require_valid(t);
  const int n = t.rank;
  IntVec s(n, 1), l(n, 1);
  switch (t.family) {
    case Family::A:
      break;  // both (1,...,1)
    case Family::B:
      for (int i = 1; i < n; ++i) l[i] = 2;
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) s[i] = 2;
      l = s;
      l[0] = 2;
      break;
    case Family::D:
      for (int i = 1; i < n - 2; ++i) s[i] = 2;
      l = s;
      break;
    case Family::E:
      if (n == 6) s = {1, 2, 2, 3, 2, 1};
      if (n == 7) s = {2, 2, 3, 4, 3, 2, 1};
      if (n == 8) s = {2, 3, 4, 6, 5, 4, 3, 2};
      l = s;
      break;
    case Family::F:
      s = {1, 2, 3, 2};
      l = {2, 3, 4, 2};
      break;
    case Family::G:
      s = {2, 1};
      l = {3, 2};
      break;
  }
  return {RootCoordWeight{t, std::move(s)}, RootCoordWeight{t, std::move(l)}};
}

// ---------------------------------------------------------------------------
// Coordinate conversions, dominance, ordering

OmegaCoordWeight to_omega_coords(const RootCoordWeight& w) {
  const CartanData& cd = cartan_matrix(w.type);
  const int n = w.type.rank;
  if ((int)w.coeffs.size() != n)
    throw std::invalid_argument("coefficient count does not match rank");
  OmegaCoordWeight o{w.type, IntVec(n, 0)};
  for (int j = 0; j < n; ++j) {
    Int c = 2 * w.coeffs[j];
    for (int i : cd.adjacency[j]) c += cd.matrix[j][i] * w.coeffs[i];
    o.coords[j] = c;
  }
  return o;
}

RationalRootCoords from_omega_coords(const OmegaCoordWeight& w) {
  const CartanData& cd = cartan_matrix(w.type);
  const int n = w.type.rank;
  if ((int)w.coords.size() != n)
    throw std::invalid_argument("coordinate count does not match rank");
  // Exact Gaussian elimination on [A | c]; A is invertible for simple types.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rational(cd.matrix[i][j]);
    m[i][n] = Rational(w.coords[i]);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != Rational(0)) { pivot = r; break; }
    if (pivot < 0) throw std::logic_error("singular Cartan matrix");
    std::swap(m[col], m[pivot]);
    Rational inv = Rational(1) / m[col][col];
    for (int j = col; j <= n; ++j) m[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == Rational(0)) continue;
      Rational f = m[r][col];
      for (int j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  RationalRootCoords out{w.type, std::vector<Rational>(n)};
  for (int i = 0; i < n; ++i) out.coeffs[i] = m[i][n];
  return out;
}

bool is_dominant(const RootCoordWeight& w) {
  const CartanData& cd = cartan_matrix(w.type);
  const int n = w.type.rank;
  if ((int)w.coeffs.size() != n)
    throw std::invalid_argument("coefficient count does not match rank");
  for (int j = 0; j < n; ++j) {
    Int c = 2 * w.coeffs[j];
    for (int i : cd.adjacency[j]) c += cd.matrix[j][i] * w.coeffs[i];
    if (c < 0) return false;
  }
  return true;
}

bool is_dominant(const OmegaCoordWeight& w) {
  for (Int c : w.coords)
    if (c < 0) return false;
  return true;
}

bool succeeds(const RootCoordWeight& lambda, const RootCoordWeight& mu) {
  require_same_type(lambda, mu);
  for (size_t i = 0; i < lambda.coeffs.size(); ++i)
    if (lambda.coeffs[i] < mu.coeffs[i]) return false;
  return true;
}

// 6*(alpha_i, alpha_j), integral for every simple type.
static std::vector<std::vector<Int>> gram6_for(const CartanData& cd) {
  const int n = cd.type.rank;
  std::vector<std::vector<Int>> g(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) {
    Rational li = cd.lengths[i] * Rational(6);
    g[i][i] = li.num();  // (2, 1, or 2/3) * 6 is an integer
    for (int j : cd.adjacency[i]) {
      // (alpha_i, alpha_j) = matrix[j][i] * (alpha_j, alpha_j) / 2
      Rational v = Rational(cd.matrix[j][i]) * cd.lengths[j] * Rational(3);
      g[i][j] = v.num();
    }
  }
  return g;
}

Rational inner_product(const RootCoordWeight& v, const RootCoordWeight& w) {
  require_same_type(v, w);
  const CartanData& cd = cartan_matrix(v.type);
  auto g = gram6_for(cd);
  Int acc = 0;
  const int n = v.type.rank;
  for (int i = 0; i < n; ++i) {
    if (v.coeffs[i] == 0) continue;
    acc += v.coeffs[i] * g[i][i] * w.coeffs[i];
    for (int j : cd.adjacency[i]) acc += v.coeffs[i] * g[i][j] * w.coeffs[j];
  }
  return Rational(acc, 6);
}

// ---------------------------------------------------------------------------
// Positive roots by closure: beta + alpha_i is a root iff the alpha_i-string
// down-length p satisfies p - <beta, alpha_i^vee> >= 1.

static std::vector<RootCoordWeight> build_positive_roots(const LieType& t) {
  const CartanData& cd = cartan_matrix(t);
  const int n = t.rank;
  std::set<IntVec> found;
  std::vector<IntVec> frontier;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    found.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const IntVec& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        Int pairing = 2 * beta[i];
        for (int j : cd.adjacency[i]) pairing += cd.matrix[i][j] * beta[j];
        Int p = 0;
        IntVec down = beta;
        for (;;) {
          down[i] -= 1;
          bool zero = std::all_of(down.begin(), down.end(), [](Int x) { return x == 0; });
          if (zero || !found.count(down)) break;
          ++p;
        }
        if (p - pairing >= 1) {
          IntVec up = beta;
          up[i] += 1;
          if (found.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<RootCoordWeight> roots;
  roots.reserve(found.size());
  for (const IntVec& v : found) roots.push_back(RootCoordWeight{t, v});
  return roots;
}

const std::vector<RootCoordWeight>& positive_roots(const LieType& t) {
  require_valid(t);
  static std::mutex mu;
  static std::map<LieType, std::unique_ptr<const std::vector<RootCoordWeight>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end())
    it = cache
             .emplace(t, std::make_unique<const std::vector<RootCoordWeight>>(
                             build_positive_roots(t)))
             .first;
  return *it->second;
}

OmegaCoordWeight weyl_vector(const LieType& t) {
  require_valid(t);
  return OmegaCoordWeight{t, IntVec(t.rank, 1)};
}

// ---------------------------------------------------------------------------
// Dominant representative: reflect at a strictly negative omega coordinate
// until none is left. Each step fixes exactly one separating positive root,
// so the step count is order-independent.

template <typename Coeff>
static int make_dominant_loop(const CartanData& cd, std::vector<Coeff>& x) {
  const int n = cd.type.rank;
  std::vector<Coeff> c(n);
  for (int j = 0; j < n; ++j) {
    Coeff v = Coeff(2) * x[j];
    for (int i : cd.adjacency[j]) v += Coeff(cd.matrix[j][i]) * x[i];
    c[j] = v;
  }
  int count = 0;
  for (;;) {
    int neg = -1;
    for (int j = 0; j < n; ++j)
      if (c[j] < Coeff(0)) { neg = j; break; }
    if (neg < 0) break;
    Coeff cj = c[neg];
    x[neg] -= cj;
    for (int i : cd.adjacency[neg]) c[i] -= cj * Coeff(cd.matrix[i][neg]);
    c[neg] = -cj;
    ++count;
  }
  return count;
}

DominantRep make_dominant(const RootCoordWeight& w) {
  const CartanData& cd = cartan_matrix(w.type);
  RootCoordWeight out = w;
  int count = make_dominant_loop<Int>(cd, out.coeffs);
  return DominantRep{std::move(out), count};
}

RationalDominantRep make_dominant(const RationalRootCoords& w) {
  const CartanData& cd = cartan_matrix(w.type);
  RationalRootCoords out = w;
  int count = make_dominant_loop<Rational>(cd, out.coeffs);
  return RationalDominantRep{std::move(out), count};
}

Int height(const RootCoordWeight& w) {
  Int h = 0;
  for (Int c : w.coeffs) h += c;
  return h;
}

RootCoordWeight operator+(const RootCoordWeight& a, const RootCoordWeight& b) {
  require_same_type(a, b);
  RootCoordWeight r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

RootCoordWeight operator-(const RootCoordWeight& a, const RootCoordWeight& b) {
  require_same_type(a, b);
  RootCoordWeight r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

// ---------------------------------------------------------------------------
// Dominant enumeration in a coefficient box. Depth-first in node order, which
// yields lexicographic output; the dominance row at node j is checked as soon
// as j and all its neighbors are assigned.

std::vector<IntVec> dominant_weights_in_box(const LieType& t, const IntVec& lo,
                                            const IntVec& hi,
                                            std::optional<Int> max_defect) {
  const CartanData& cd = cartan_matrix(t);
  const int n = t.rank;
  if ((int)lo.size() != n || (int)hi.size() != n)
    throw std::invalid_argument("bound size does not match rank");
  for (int i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return {};

  std::vector<std::vector<int>> rows_ready_at(n);
  for (int j = 0; j < n; ++j) {
    int last = j;
    for (int i : cd.adjacency[j]) last = std::max(last, i);
    rows_ready_at[last].push_back(j);
  }

  std::vector<IntVec> out;
  IntVec m(n, 0);
  std::function<void(int, Int)> rec = [&](int pos, Int defect) {
    if (pos == n) {
      out.push_back(m);
      return;
    }
    // sum(hi - m) shrinks as v grows, so a defect budget raises the start
    Int start = lo[pos];
    if (max_defect) {
      Int budget = *max_defect - defect;
      start = std::max(start, hi[pos] - budget);
    }
    for (Int v = start; v <= hi[pos]; ++v) {
      m[pos] = v;
      bool ok = true;
      for (int j : rows_ready_at[pos]) {
        Int c = 2 * m[j];
        for (int i : cd.adjacency[j]) c += cd.matrix[j][i] * m[i];
        if (c < 0) { ok = false; break; }
      }
      if (ok) rec(pos + 1, defect + (hi[pos] - v));
    }
    m[pos] = 0;
  };
  rec(0, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Text format

std::string to_text(const RootCoordWeight& w) {
  std::string s = w.type.to_string() + ":";
  for (size_t i = 0; i < w.coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.coeffs[i]);
  }
  return s;
}

std::string to_text(const OmegaCoordWeight& w) {
  std::string s = w.type.to_string() + ":w:";
  for (size_t i = 0; i < w.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.coords[i]);
  }
  return s;
}

static Int parse_int_strict(const std::string& tok, const std::string& whole) {
  Int value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument("malformed weight '" + whole + "': bad integer '" + tok + "'");
  return value;
}

RootCoordWeight parse_weight(const std::string& text) {
  auto fail = [&](const std::string& why) -> RootCoordWeight {
    throw std::invalid_argument("malformed weight '" + text + "': " + why);
  };
  size_t colon = text.find(':');
  if (colon == std::string::npos || colon < 2) return fail("expected '<FAMILY><rank>:'");
  char fam = text[0];
  if (fam < 'A' || fam > 'G') return fail("unknown family '" + std::string(1, fam) + "'");
  Int rank = parse_int_strict(text.substr(1, colon - 1), text);
  LieType t{static_cast<Family>(fam), (int)rank};
  require_valid(t);

  size_t body_start = colon + 1;
  bool omega = false;
  if (text.compare(body_start, 2, "w:") == 0) {
    omega = true;
    body_start += 2;
  }
  std::string body = text.substr(body_start);
  if (body.empty()) return fail("missing coordinates");
  IntVec vals;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string tok =
        comma == std::string::npos ? body.substr(pos) : body.substr(pos, comma - pos);
    vals.push_back(parse_int_strict(tok, text));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if ((int)vals.size() != t.rank)
    return fail("expected " + std::to_string(t.rank) + " coordinates, got " +
                std::to_string(vals.size()));
  if (!omega) return RootCoordWeight{t, std::move(vals)};
  RationalRootCoords rc = from_omega_coords(OmegaCoordWeight{t, std::move(vals)});
  if (!rc.integral()) return fail("omega coordinates are not in the root lattice");
  return rc.to_integral();
}

}  // namespace wmult
