#include "pm3/isomorphism.hpp"

#include <algorithm>
#include <set>

namespace pm3 {

namespace {

struct VertexSig {
  std::size_t degree;
  std::size_t link_triangles;
  std::vector<std::size_t> nbr_degrees;  // sorted
  bool operator==(const VertexSig&) const = default;
};

VertexSig signature(const Complex3& K, VertexId v) {
  VertexSig s;
  s.degree = K.degree(v);
  s.link_triangles = K.link_triangles(v).size();
  for (VertexId w : K.link_vertices(v)) s.nbr_degrees.push_back(K.degree(w));
  std::sort(s.nbr_degrees.begin(), s.nbr_degrees.end());
  return s;
}

struct Search {
  const Complex3& K1;
  const Complex3& K2;
  std::vector<VertexId> order;                 // K1 vertices, search order
  std::map<VertexId, VertexSig> sig1, sig2;
  std::map<VertexId, VertexId> fwd;
  std::set<VertexId> used;

  bool consistent(VertexId v, VertexId w) {
    if (sig1.at(v) != sig2.at(w)) return false;
    // adjacency with already-mapped vertices must match
    for (const auto& [a, b] : fwd) {
      if (K1.adjacent(v, a) != K2.adjacent(w, b)) return false;
    }
    // every fully-mapped facet through v must exist in K2
    for (const auto& t : K1.link_triangles(v)) {
      auto m0 = fwd.find(t[0]);
      auto m1 = fwd.find(t[1]);
      auto m2 = fwd.find(t[2]);
      if (m0 == fwd.end() || m1 == fwd.end() || m2 == fwd.end()) continue;
      Facet img{w, m0->second, m1->second, m2->second};
      std::sort(img.begin(), img.end());
      if (!K2.has_facet(img)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    VertexId v = order[depth];
    for (VertexId w : K2.vertices()) {
      if (used.count(w)) continue;
      if (!consistent(v, w)) continue;
      fwd[v] = w;
      used.insert(w);
      if (extend(depth + 1)) return true;
      fwd.erase(v);
      used.erase(w);
    }
    return false;
  }
};

}  // namespace

std::optional<std::map<VertexId, VertexId>> is_isomorphic(const Complex3& K1,
                                                          const Complex3& K2) {
  if (f_vector(K1) != f_vector(K2)) return std::nullopt;

  Search s{K1, K2, {}, {}, {}, {}, {}};
  for (VertexId v : K1.vertices()) s.sig1[v] = signature(K1, v);
  for (VertexId w : K2.vertices()) s.sig2[w] = signature(K2, w);

  // quick reject on the signature multiset
  {
    std::vector<VertexSig> a, b;
    for (auto& [v, sig] : s.sig1) a.push_back(sig);
    for (auto& [w, sig] : s.sig2) b.push_back(sig);
    auto key = [](const VertexSig& x) {
      return std::tuple(x.degree, x.link_triangles, x.nbr_degrees);
    };
    auto cmp = [&](const VertexSig& x, const VertexSig& y) {
      return key(x) < key(y);
    };
    std::sort(a.begin(), a.end(), cmp);
    std::sort(b.begin(), b.end(), cmp);
    if (a != b) return std::nullopt;
  }

  // rarest signature first, then prefer vertices adjacent to mapped ones by
  // construction of the facet checks; plain rarity ordering works fine here
  std::map<std::size_t, int> deg_freq;
  for (VertexId v : K1.vertices()) ++deg_freq[K1.degree(v)];
  s.order.assign(K1.vertices().begin(), K1.vertices().end());
  std::sort(s.order.begin(), s.order.end(), [&](VertexId a, VertexId b) {
    int fa = deg_freq[K1.degree(a)], fb = deg_freq[K1.degree(b)];
    if (fa != fb) return fa < fb;
    return a < b;
  });

  if (!s.extend(0)) return std::nullopt;

  // sanity: image facet set equals K2's
  std::vector<Facet> img;
  for (const auto& f : K1.facets()) {
    Facet g{s.fwd.at(f[0]), s.fwd.at(f[1]), s.fwd.at(f[2]), s.fwd.at(f[3])};
    std::sort(g.begin(), g.end());
    img.push_back(g);
  }
  std::sort(img.begin(), img.end());
  if (img != K2.facets()) return std::nullopt;
  return s.fwd;
}

}  // namespace pm3
