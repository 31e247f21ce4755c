#include "wmult/bz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wmult::bz {

PairClass classify_pair(const RootCoordWeight& lambda, const RootCoordWeight& mu) {
  if (lambda.type != mu.type)
    throw std::invalid_argument("type mismatch: " + lambda.type.to_string() + " vs " +
                                mu.type.to_string());
  bool any_negative = false, any_zero = false, any_positive = false;
  for (size_t i = 0; i < lambda.coeffs.size(); ++i) {
    Int d = lambda.coeffs[i] - mu.coeffs[i];
    if (d < 0) any_negative = true;
    else if (d == 0) any_zero = true;
    else any_positive = true;
  }
  if (any_negative) return {PairKind::NotComparable, {}};
  if (!any_positive) return {PairKind::Equal, {}};
  if (!any_zero) return {PairKind::Primitive, {}};
  return {PairKind::Nonprimitive, support(lambda - mu)};
}

std::vector<int> support(const RootCoordWeight& delta) {
  std::vector<int> s;
  for (size_t i = 0; i < delta.coeffs.size(); ++i) {
    if (delta.coeffs[i] < 0)
      throw std::invalid_argument("support of a weight with a negative coefficient: " +
                                  to_text(delta));
    if (delta.coeffs[i] > 0) s.push_back((int)i);
  }
  return s;
}

std::vector<std::vector<int>> components(const LieType& type, const std::vector<int>& nodes) {
  const CartanData& cd = cartan_matrix(type);
  std::vector<bool> in_set(type.rank, false);
  for (int v : nodes) {
    if (v < 0 || v >= type.rank)
      throw std::invalid_argument("node index out of range: " + std::to_string(v));
    in_set[v] = true;
  }
  std::vector<bool> visited(type.rank, false);
  std::vector<std::vector<int>> comps;
  for (int start = 0; start < type.rank; ++start) {
    if (!in_set[start] || visited[start]) continue;
    std::vector<int> comp, stack{start};
    visited[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : cd.adjacency[v])
        if (in_set[w] && !visited[w]) {
          visited[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

int SubdiagramComponent::ambient_node_of(int standard_label) const {
  for (size_t k = 0; k < nodes.size(); ++k)
    if (standard_of[k] == standard_label) return nodes[k];
  throw std::invalid_argument("standard label out of range");
}

SubdiagramComponent classify_subdiagram(const LieType& type, const std::vector<int>& nodes_in) {
  if (nodes_in.empty()) throw std::invalid_argument("empty component");
  std::vector<int> nodes = nodes_in;
  std::sort(nodes.begin(), nodes.end());
  const CartanData& cd = cartan_matrix(type);
  const int k = (int)nodes.size();

  // Induced Cartan submatrix in the order of `nodes`.
  std::vector<std::vector<int>> sub(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) sub[a][b] = cd.matrix[nodes[a]][nodes[b]];

  // Connectivity check doubles as input validation.
  if (components(type, nodes).size() != 1)
    throw std::invalid_argument("component is not connected");

  std::vector<LieType> candidates;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
    LieType t{f, k};
    if (lie_type_valid(t)) candidates.push_back(t);
  }

  // perm[s] = position in `nodes` of the root carrying standard label s.
  std::vector<int> perm(k);
  for (const LieType& cand : candidates) {
    const CartanData& std_cd = cartan_matrix(cand);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool match = true;
      for (int a = 0; a < k && match; ++a)
        for (int b = 0; b < k; ++b)
          if (std_cd.matrix[a][b] != sub[perm[a]][perm[b]]) { match = false; break; }
      if (match) {
        SubdiagramComponent comp;
        comp.nodes = nodes;
        comp.classified = cand;
        comp.standard_of.assign(k, -1);
        for (int s = 0; s < k; ++s) comp.standard_of[perm[s]] = s;
        return comp;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  // Subdiagrams of simple diagrams are always simple diagrams themselves.
  throw std::logic_error("induced subdiagram matched no standard type");
}

RootCoordWeight project_drop(const RootCoordWeight& w, const SubdiagramComponent& comp) {
  const int k = (int)comp.nodes.size();
  RootCoordWeight out{comp.classified, IntVec(k, 0)};
  for (int pos = 0; pos < k; ++pos) out.coeffs[comp.standard_of[pos]] = w.coeffs[comp.nodes[pos]];
  return out;
}

OmegaCoordWeight project_restrict(const RootCoordWeight& w, const SubdiagramComponent& comp) {
  OmegaCoordWeight ambient = to_omega_coords(w);
  const int k = (int)comp.nodes.size();
  OmegaCoordWeight out{comp.classified, IntVec(k, 0)};
  for (int pos = 0; pos < k; ++pos) out.coords[comp.standard_of[pos]] = ambient.coords[comp.nodes[pos]];
  return out;
}

namespace {

// lambda = l * omega_{node} with l >= 1 and every other coordinate zero.
Int single_omega_scale(const IntVec& c, int node) {
  for (size_t i = 0; i < c.size(); ++i)
    if ((int)i != node && c[i] != 0) return 0;
  return c[node] >= 1 ? c[node] : 0;
}

bool multone_type_a(const IntVec& lam, const IntVec& mu) {
  const int n = (int)lam.size();
  Int l = single_omega_scale(lam, 0);
  if (l == 0) return false;
  Int s = 0;
  for (int i = 0; i < n; ++i) s += (Int)(i + 1) * mu[i];
  Int diff = l - s;
  return diff > 0 && diff % (n + 1) == 0;
}

bool multone_type_b(const IntVec& lam, const IntVec& mu) {
  const int n = (int)lam.size();
  Int l = single_omega_scale(lam, 0);
  if (l == 0) return false;
  if (mu[n - 1] % 2 != 0) return false;
  Int s = 0;
  for (int i = 0; i + 1 < n; ++i) s += (Int)(i + 1) * mu[i];
  s += (Int)n * mu[n - 1] / 2;
  return l - 1 == s;
}

bool multone_type_g(const IntVec& lam, const IntVec& mu) {
  Int l = single_omega_scale(lam, 1);
  if (l >= 1 && 3 * l - 1 == 2 * mu[0] + 3 * mu[1]) return true;
  return lam[0] == 1 && lam[1] == 0 && mu[0] == 0 && mu[1] == 0;
}

}  // namespace

bool bz_primitive_multone(const OmegaCoordWeight& lambda, const OmegaCoordWeight& mu) {
  if (lambda.type != mu.type)
    throw std::invalid_argument("type mismatch: " + lambda.type.to_string() + " vs " +
                                mu.type.to_string());
  if (!is_dominant(lambda) || !is_dominant(mu))
    throw std::invalid_argument("primitive-pair criteria need dominant weights");
  switch (lambda.type.family) {
    case Family::A: {
      if (multone_type_a(lambda.coords, mu.coords)) return true;
      IntVec lr(lambda.coords.rbegin(), lambda.coords.rend());
      IntVec mr(mu.coords.rbegin(), mu.coords.rend());
      return multone_type_a(lr, mr);
    }
    case Family::B:
      return multone_type_b(lambda.coords, mu.coords);
    case Family::G:
      return multone_type_g(lambda.coords, mu.coords);
    default:
      return false;
  }
}

bool bz_primitive_multone(const RootCoordWeight& lambda, const RootCoordWeight& mu) {
  PairClass pc = classify_pair(lambda, mu);
  if (pc.kind != PairKind::Primitive)
    throw std::invalid_argument("pair is not primitive: " + to_text(lambda) + ", " + to_text(mu));
  return bz_primitive_multone(to_omega_coords(lambda), to_omega_coords(mu));
}

bool multiplicity_one(const RootCoordWeight& lambda, const RootCoordWeight& mu, Projection proj) {
  if (!succeeds(lambda, mu))
    throw std::invalid_argument("pair is not ordered: " + to_text(lambda) + " does not succeed " +
                                to_text(mu));
  PairClass pc = classify_pair(lambda, mu);
  switch (pc.kind) {
    case PairKind::Equal:
      return true;
    case PairKind::Primitive:
      return bz_primitive_multone(to_omega_coords(lambda), to_omega_coords(mu));
    case PairKind::NotComparable:
      throw std::logic_error("unreachable");
    case PairKind::Nonprimitive:
      break;
  }
  // K factors over the connected components of the support; each projected
  // difference is strictly positive on its component, so every factor lands
  // in the primitive (or equal) case and the recursion depth stays bounded
  // by the rank.
  for (const std::vector<int>& comp_nodes : components(lambda.type, pc.support)) {
    SubdiagramComponent comp = classify_subdiagram(lambda.type, comp_nodes);
    if (proj == Projection::Drop) {
      if (!multiplicity_one(project_drop(lambda, comp), project_drop(mu, comp), proj))
        return false;
    } else {
      OmegaCoordWeight pl = project_restrict(lambda, comp);
      OmegaCoordWeight pm = project_restrict(mu, comp);
      if (pl == pm) continue;
      if (!bz_primitive_multone(pl, pm)) return false;
    }
  }
  return true;
}

}  // namespace wmult::bz
