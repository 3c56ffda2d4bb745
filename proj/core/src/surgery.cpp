#include "pm3/surgery.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "pm3/surface.hpp"

namespace pm3 {

namespace {

long g2_of(const Complex3& K) { return g_invariants(K).g2; }

void check_valid_result(const Complex3& K, const char* op) {
  ValidationReport rep = validate_normal(K);
  if (!rep.ok()) {
    std::string msg = std::string(op) + " produced an invalid complex:";
    for (const auto& f : rep.failures) msg += "\n  " + f;
    throw error(msg);
  }
}

bool facet_contains(const Facet& f, VertexId v) {
  return std::binary_search(f.begin(), f.end(), v);
}

Triangle facet_minus(const Facet& f, VertexId v) {
  Triangle t;
  int n = 0;
  for (VertexId x : f)
    if (x != v) t[n++] = x;
  if (n != 3) throw error("vertex " + std::to_string(v) + " not in facet");
  return t;
}

// shortest path between a and b in the 1-skeleton, inclusive of endpoints
std::optional<std::vector<VertexId>> shortest_path(const Complex3& K,
                                                   VertexId a, VertexId b) {
  if (a == b) return std::vector<VertexId>{a};
  std::map<VertexId, VertexId> parent;
  parent[a] = a;
  std::queue<VertexId> q;
  q.push(a);
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId w : K.link_vertices(u)) {
      if (parent.count(w)) continue;
      parent[w] = u;
      if (w == b) {
        std::vector<VertexId> path{b};
        VertexId cur = b;
        while (cur != a) {
          cur = parent[cur];
          path.push_back(cur);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push(w);
    }
  }
  return std::nullopt;
}

std::vector<VertexId> common_neighbours(const Complex3& K, VertexId a,
                                        VertexId b) {
  std::vector<VertexId> out;
  std::set_intersection(K.link_vertices(a).begin(), K.link_vertices(a).end(),
                        K.link_vertices(b).begin(), K.link_vertices(b).end(),
                        std::back_inserter(out));
  return out;
}

// Identify psi-paired vertices (target labels replaced by source labels) and
// drop the doubled facet. Fails on any other face collision.
Complex3 identify_and_remove(const Complex3& K, const FacetBijection& psi,
                             const char* op) {
  std::map<VertexId, VertexId> back;
  for (int i = 0; i < 4; ++i) back[psi.image[static_cast<std::size_t>(i)]] =
      psi.source[static_cast<std::size_t>(i)];
  std::vector<Facet> mapped;
  mapped.reserve(K.facets().size());
  for (const auto& f : K.facets()) {
    Facet g = f;
    for (auto& x : g) {
      auto it = back.find(x);
      if (it != back.end()) x = it->second;
    }
    std::sort(g.begin(), g.end());
    if (g[0] == g[1] || g[1] == g[2] || g[2] == g[3])
      throw error(std::string(op) + ": identification degenerates facet " +
                  to_string(f));
    mapped.push_back(g);
  }
  std::sort(mapped.begin(), mapped.end());
  // exactly one collision allowed: sigma1 with the image of sigma2
  std::vector<Facet> out;
  for (std::size_t i = 0; i < mapped.size();) {
    std::size_t j = i;
    while (j < mapped.size() && mapped[j] == mapped[i]) ++j;
    const std::size_t count = j - i;
    if (count == 1) {
      out.push_back(mapped[i]);
    } else if (count == 2 && mapped[i] == psi.source) {
      // identified facet removed
    } else {
      throw error(std::string(op) + ": identification doubles facet " +
                  to_string(mapped[i]));
    }
    i = j;
  }
  return Complex3::from_facets(std::move(out));
}

}  // namespace

const char* to_string(GlueKind k) {
  switch (k) {
    case GlueKind::Sum: return "sum";
    case GlueKind::Handle: return "handle";
    case GlueKind::VertexFold: return "vfold";
    case GlueKind::EdgeFold: return "efold";
  }
  return "?";
}

VertexId FacetBijection::apply(VertexId x) const {
  for (int i = 0; i < 4; ++i)
    if (source[static_cast<std::size_t>(i)] == x)
      return image[static_cast<std::size_t>(i)];
  throw error("vertex " + std::to_string(x) + " not in source facet");
}

std::vector<std::pair<VertexId, VertexId>> FacetBijection::pairs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (int i = 0; i < 4; ++i)
    out.emplace_back(source[static_cast<std::size_t>(i)],
                     image[static_cast<std::size_t>(i)]);
  return out;
}

FacetBijection make_bijection(
    const Facet& source, const Facet& target,
    const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  if (pairs.size() != 4) throw error("bijection needs exactly 4 pairs");
  FacetBijection psi;
  psi.source = source;
  psi.target = target;
  std::sort(psi.source.begin(), psi.source.end());
  std::sort(psi.target.begin(), psi.target.end());
  std::set<VertexId> seen_src, seen_tgt;
  for (const auto& [s, t] : pairs) {
    if (!facet_contains(psi.source, s))
      throw error("pair source " + std::to_string(s) + " not in facet " +
                  to_string(psi.source));
    if (!facet_contains(psi.target, t))
      throw error("pair target " + std::to_string(t) + " not in facet " +
                  to_string(psi.target));
    seen_src.insert(s);
    seen_tgt.insert(t);
    for (int i = 0; i < 4; ++i)
      if (psi.source[static_cast<std::size_t>(i)] == s)
        psi.image[static_cast<std::size_t>(i)] = t;
  }
  if (seen_src.size() != 4 || seen_tgt.size() != 4)
    throw error("pairing is not a bijection");
  return psi;
}

Admissibility check_admissible(const Complex3& K, const FacetBijection& psi,
                               GlueKind kind) {
  Admissibility adm;
  auto fail = [&](const std::string& why, std::vector<VertexId> path = {}) {
    adm.ok = false;
    adm.reason = why;
    adm.witness_path = std::move(path);
    return adm;
  };

  if (!K.has_facet(psi.source))
    return fail("source " + to_string(psi.source) + " is not a facet");
  if (!K.has_facet(psi.target))
    return fail("target " + to_string(psi.target) + " is not a facet");
  if (psi.source == psi.target) return fail("facets coincide");

  std::vector<VertexId> shared;
  std::set_intersection(psi.source.begin(), psi.source.end(),
                        psi.target.begin(), psi.target.end(),
                        std::back_inserter(shared));

  switch (kind) {
    case GlueKind::Sum:
    case GlueKind::Handle: {
      for (const auto& [x, y] : psi.pairs()) {
        auto path = shortest_path(K, x, y);
        if (path && static_cast<int>(path->size()) - 1 < 3)
          return fail("path of length " +
                          std::to_string(path->size() - 1) + " from " +
                          std::to_string(x) + " to its image",
                      *path);
      }
      break;
    }
    case GlueKind::VertexFold: {
      if (shared.size() != 1)
        return fail("facets share " + std::to_string(shared.size()) +
                    " vertices, need exactly 1");
      const VertexId x = shared[0];
      if (psi.apply(x) != x) return fail("shared vertex is not fixed");
      for (const auto& [y, z] : psi.pairs()) {
        if (y == x) continue;
        if (z == y) return fail("non-shared vertex fixed by psi");
        if (K.adjacent(y, z))
          return fail("paired vertices " + std::to_string(y) + "," +
                          std::to_string(z) + " are adjacent",
                      {y, z});
        for (VertexId w : common_neighbours(K, y, z))
          if (w != x)
            return fail("length-2 path from " + std::to_string(y) +
                            " to its image avoiding the fixed vertex",
                        {y, w, z});
      }
      break;
    }
    case GlueKind::EdgeFold: {
      if (shared.size() != 2)
        return fail("facets share " + std::to_string(shared.size()) +
                    " vertices, need exactly 2");
      for (VertexId f : shared)
        if (psi.apply(f) != f) return fail("shared edge is not fixed");
      for (const auto& [y, z] : psi.pairs()) {
        if (y == shared[0] || y == shared[1]) continue;
        if (z == y) return fail("non-shared vertex fixed by psi");
        if (K.adjacent(y, z))
          return fail("paired vertices " + std::to_string(y) + "," +
                          std::to_string(z) + " are adjacent",
                      {y, z});
        for (VertexId w : common_neighbours(K, y, z))
          if (w != shared[0] && w != shared[1])
            return fail("length-2 path from " + std::to_string(y) +
                            " to its image avoiding the fixed edge",
                        {y, w, z});
      }
      break;
    }
  }
  return adm;
}

Complex3 connected_sum(const Complex3& K1, const Facet& sigma1,
                       const Complex3& K2, const Facet& sigma2,
                       const std::vector<std::pair<VertexId, VertexId>>& pairs,
                       SurgeryRecord* rec) {
  if (!K1.has_facet(sigma1))
    throw error("sum: " + to_string(sigma1) + " not a facet of the left part");
  if (!K2.has_facet(sigma2))
    throw error("sum: " + to_string(sigma2) + " not a facet of the right part");
  FacetBijection psi = make_bijection(sigma1, sigma2, pairs);

  // relabel K2: sigma2 vertices take their psi-preimages, others keep their
  // labels unless colliding with K1
  std::map<VertexId, VertexId> relabel;
  for (const auto& [s, t] : psi.pairs()) relabel[t] = s;
  VertexId next = std::max(K1.max_vertex(), K2.max_vertex()) + 1;
  for (VertexId v : K2.vertices()) {
    if (relabel.count(v)) continue;
    if (K1.has_vertex(v))
      relabel[v] = next++;
    else
      relabel[v] = v;
  }

  std::vector<Facet> facets;
  for (const auto& f : K1.facets())
    if (f != psi.source) facets.push_back(f);
  for (const auto& f : K2.facets()) {
    if (f == psi.target) continue;
    Facet g{relabel.at(f[0]), relabel.at(f[1]), relabel.at(f[2]),
            relabel.at(f[3])};
    std::sort(g.begin(), g.end());
    facets.push_back(g);
  }
  const std::size_t expected = K1.facets().size() + K2.facets().size() - 2;
  Complex3 out = Complex3::from_facets(std::move(facets));
  if (out.facets().size() != expected)
    throw error("sum: facet collision while gluing");
  check_valid_result(out, "sum");
  const long delta = g2_of(out) - g2_of(K1) - g2_of(K2);
  if (delta != 0)
    throw error("sum: g2 not additive (excess " + std::to_string(delta) + ")");

  if (rec) {
    rec->kind = GlueKind::Sum;
    rec->sigma1 = psi.source;
    rec->sigma2 = psi.target;
    rec->image = psi.image;
    rec->relabel = relabel;
    rec->g2_delta = 0;
  }
  return out;
}

namespace {

Complex3 glue_one_complex(const Complex3& K, const FacetBijection& psi,
                          GlueKind kind, long expected_delta,
                          SurgeryRecord* rec) {
  const char* op = to_string(kind);
  Admissibility adm = check_admissible(K, psi, kind);
  if (!adm.ok) throw error(std::string(op) + ": inadmissible: " + adm.reason);
  Complex3 out = identify_and_remove(K, psi, op);
  check_valid_result(out, op);
  const long delta = g2_of(out) - g2_of(K);
  if (delta != expected_delta)
    throw error(std::string(op) + ": g2 delta " + std::to_string(delta) +
                ", expected " + std::to_string(expected_delta));
  if (rec) {
    rec->kind = kind;
    rec->sigma1 = psi.source;
    rec->sigma2 = psi.target;
    rec->image = psi.image;
    rec->g2_delta = expected_delta;
  }
  return out;
}

}  // namespace

Complex3 handle_addition(const Complex3& K, const FacetBijection& psi,
                         SurgeryRecord* rec) {
  return glue_one_complex(K, psi, GlueKind::Handle, 10, rec);
}

Complex3 vertex_folding(const Complex3& K, const FacetBijection& psi,
                        SurgeryRecord* rec) {
  return glue_one_complex(K, psi, GlueKind::VertexFold, 6, rec);
}

Complex3 edge_folding(const Complex3& K, const FacetBijection& psi,
                      SurgeryRecord* rec) {
  return glue_one_complex(K, psi, GlueKind::EdgeFold, 3, rec);
}

namespace {

// Facets meeting the duplicated set D get a side in {0,1} from the link
// separations; facets meeting two or three vertices of D must agree.
struct SideAssignment {
  std::map<Facet, int> side;                 // facets meeting D
  std::map<VertexId, std::array<int, 2>> orient;  // per-vertex side -> global
};

SideAssignment assign_sides(const Complex3& K, const Facet& sigma,
                            const std::vector<VertexId>& dup,
                            const char* op) {
  // per-vertex separations
  std::map<VertexId, std::pair<std::set<Triangle>, std::set<Triangle>>> sides;
  for (VertexId x : dup) {
    Separation sep = separates_link(K, x, facet_minus(sigma, x));
    if (!sep.separates)
      throw error(std::string(op) + ": boundary of " +
                  to_string(facet_minus(sigma, x)) + " does not separate lk(" +
                  std::to_string(x) + ")");
    sides[x] = {std::set<Triangle>(sep.side1.begin(), sep.side1.end()),
                std::set<Triangle>(sep.side2.begin(), sep.side2.end())};
  }
  auto local_side = [&](VertexId x, const Facet& f) -> int {
    Triangle t = facet_minus(f, x);
    const auto& [s1, s2] = sides.at(x);
    if (s1.count(t)) return 0;
    if (s2.count(t)) return 1;
    throw error(std::string(op) + ": triangle " + to_string(t) +
                " not in either side of lk(" + std::to_string(x) + ")");
  };

  // union-find over (vertex, local side) nodes
  std::map<std::pair<VertexId, int>, std::pair<VertexId, int>> parent;
  for (VertexId x : dup)
    for (int s : {0, 1}) parent[{x, s}] = {x, s};
  std::function<std::pair<VertexId, int>(std::pair<VertexId, int>)> find =
      [&](std::pair<VertexId, int> a) {
        while (parent[a] != a) {
          parent[a] = parent[parent[a]];
          a = parent[a];
        }
        return a;
      };
  auto unite = [&](std::pair<VertexId, int> a, std::pair<VertexId, int> b) {
    parent[find(a)] = find(b);
  };

  std::set<Facet> touched;
  for (VertexId x : dup)
    for (const auto& f : K.star(x)) touched.insert(f);
  for (const auto& f : touched) {
    std::vector<VertexId> present;
    for (VertexId x : dup)
      if (facet_contains(f, x)) present.push_back(x);
    for (std::size_t i = 1; i < present.size(); ++i) {
      const VertexId x = present[0], y = present[i];
      const int sx = local_side(x, f), sy = local_side(y, f);
      unite({x, sx}, {y, sy});
      unite({x, 1 - sx}, {y, 1 - sy});
    }
  }
  for (VertexId x : dup)
    if (find({x, 0}) == find({x, 1}))
      throw error(std::string(op) + ": inconsistent side propagation at vertex " +
                  std::to_string(x));

  SideAssignment out;
  const auto class0 = find({dup.front(), 0});
  for (VertexId x : dup) {
    int g0 = (find({x, 0}) == class0) ? 0 : 1;
    out.orient[x] = {g0, 1 - g0};
  }
  for (const auto& f : touched) {
    // global side via the first duplicated vertex it contains
    for (VertexId x : dup) {
      if (!facet_contains(f, x)) continue;
      const int ls = local_side(x, f);
      out.side[f] = out.orient[x][static_cast<std::size_t>(ls)];
      break;
    }
    // consistency across all contained vertices (redundant with union-find,
    // kept as a loud cross-check naming the facet)
    for (VertexId x : dup) {
      if (!facet_contains(f, x)) continue;
      const int ls = local_side(x, f);
      if (out.orient[x][static_cast<std::size_t>(ls)] != out.side[f])
        throw error(std::string(op) + ": side conflict at facet " +
                    to_string(f));
    }
  }
  return out;
}

}  // namespace

SplitOutcome split_connected_sum(const Complex3& K, const Facet& sigma) {
  for (int i = 0; i < 4; ++i) {
    Triangle t = facet_minus(sigma, sigma[static_cast<std::size_t>(i)]);
    if (!K.has_triangle(t))
      throw error("split: " + to_string(sigma) +
                  " is not missing (boundary incomplete)");
  }
  if (K.has_facet(sigma))
    throw error("split: " + to_string(sigma) + " is a facet");
  for (VertexId x : sigma) {
    Separation sep = separates_link(K, x, facet_minus(sigma, x));
    if (!sep.separates)
      throw error("split: boundary of " + to_string(facet_minus(sigma, x)) +
                  " does not separate lk(" + std::to_string(x) +
                  "); use unfolding instead");
  }

  // components of the facet graph cut along the four boundary triangles
  std::set<Triangle> wall;
  for (VertexId x : sigma) wall.insert(facet_minus(sigma, x));
  std::map<Triangle, std::vector<std::size_t>> tri_facets;
  const auto& facets = K.facets();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const auto& f = facets[i];
    for (int a = 0; a < 4; ++a)
      tri_facets[facet_minus(f, f[static_cast<std::size_t>(a)])].push_back(i);
  }
  std::vector<int> comp(facets.size(), -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < facets.size(); ++s) {
    if (comp[s] != -1) continue;
    std::queue<std::size_t> q;
    q.push(s);
    comp[s] = ncomp;
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      const auto& f = facets[i];
      for (int a = 0; a < 4; ++a) {
        Triangle t = facet_minus(f, f[static_cast<std::size_t>(a)]);
        if (wall.count(t)) continue;
        for (std::size_t k : tri_facets[t])
          if (comp[k] == -1) {
            comp[k] = comp[i];
            q.push(k);
          }
      }
    }
    ++ncomp;
  }

  SplitOutcome out;
  out.sigma = sigma;
  if (ncomp == 2) {
    std::vector<Facet> f1, f2;
    for (std::size_t i = 0; i < facets.size(); ++i)
      (comp[i] == 0 ? f1 : f2).push_back(facets[i]);
    f1.push_back(sigma);
    f2.push_back(sigma);
    Complex3 left = Complex3::from_facets(std::move(f1));
    Complex3 right = Complex3::from_facets(std::move(f2));
    check_valid_result(left, "split");
    check_valid_result(right, "split");
    if (g2_of(left) + g2_of(right) != g2_of(K))
      throw error("split: g2 does not sum across the parts");
    out.is_sum = true;
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
  }
  if (ncomp != 1)
    throw error("split: cut yields " + std::to_string(ncomp) + " components");

  // handle case: duplicate all four vertices, restore both facets
  std::vector<VertexId> dup(sigma.begin(), sigma.end());
  SideAssignment sa = assign_sides(K, sigma, dup, "split");
  std::map<VertexId, VertexId> copy2;
  VertexId next = K.fresh_vertex();
  for (VertexId x : dup) copy2[x] = next++;

  std::vector<Facet> newf;
  for (const auto& f : facets) {
    auto it = sa.side.find(f);
    if (it == sa.side.end() || it->second == 0) {
      newf.push_back(f);
      continue;
    }
    Facet g = f;
    for (auto& x : g)
      if (copy2.count(x)) x = copy2[x];
    std::sort(g.begin(), g.end());
    newf.push_back(g);
  }
  newf.push_back(sigma);
  Facet sigma2{copy2[sigma[0]], copy2[sigma[1]], copy2[sigma[2]],
               copy2[sigma[3]]};
  std::sort(sigma2.begin(), sigma2.end());
  newf.push_back(sigma2);

  Complex3 unfolded = Complex3::from_facets(std::move(newf));
  check_valid_result(unfolded, "split(handle)");
  if (g2_of(unfolded) != g2_of(K) - 10)
    throw error("split(handle): g2 delta is not -10");

  HandleWitness w{std::move(unfolded), FacetBijection{}, {}};
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId x : dup) {
    pairs.emplace_back(x, copy2[x]);
    w.fresh.push_back(copy2[x]);
  }
  w.rehandle = make_bijection(sigma, sigma2, pairs);
  out.is_sum = false;
  out.handle = std::move(w);
  return out;
}

Complex3 vertex_unfolding(const Complex3& K, const Facet& sigma, VertexId apex,
                          UnfoldRecord* rec) {
  if (!facet_contains(sigma, apex))
    throw error("vunfold: apex not in " + to_string(sigma));
  if (K.has_facet(sigma)) throw error("vunfold: " + to_string(sigma) + " is a facet");
  const Triangle base = facet_minus(sigma, apex);
  Separation apex_sep = separates_link(K, apex, base);
  if (apex_sep.separates)
    throw error("vunfold: boundary of " + to_string(base) + " separates lk(" +
                std::to_string(apex) + "), not a vertex-folding pattern");
  if (neighborhood_type(K.vertex_link(apex), base) != NeighborhoodType::Annulus)
    throw error("vunfold: fold cycle is one-sided in lk(" +
                std::to_string(apex) + "); edge unfolding applies instead");

  std::vector<VertexId> dup(base.begin(), base.end());
  SideAssignment sa = assign_sides(K, sigma, dup, "vunfold");
  std::map<VertexId, VertexId> copy2;
  VertexId next = K.fresh_vertex();
  for (VertexId x : dup) copy2[x] = next++;

  std::vector<Facet> newf;
  for (const auto& f : K.facets()) {
    auto it = sa.side.find(f);
    if (it == sa.side.end() || it->second == 0) {
      newf.push_back(f);
      continue;
    }
    Facet g = f;
    for (auto& x : g)
      if (copy2.count(x)) x = copy2[x];
    std::sort(g.begin(), g.end());
    newf.push_back(g);
  }
  newf.push_back(sigma);
  Facet sigma2{apex, copy2[base[0]], copy2[base[1]], copy2[base[2]]};
  std::sort(sigma2.begin(), sigma2.end());
  newf.push_back(sigma2);

  Complex3 out = Complex3::from_facets(std::move(newf));
  check_valid_result(out, "vunfold");
  if (g2_of(out) != g2_of(K) - 6)
    throw error("vunfold: g2 delta is not -6");

  if (rec) {
    rec->kind = GlueKind::VertexFold;
    std::vector<std::pair<VertexId, VertexId>> pairs{{apex, apex}};
    for (VertexId x : dup) {
      pairs.emplace_back(x, copy2[x]);
      rec->fresh.push_back(copy2[x]);
    }
    rec->refold = make_bijection(sigma, sigma2, pairs);
    rec->g2_delta = -6;
  }
  return out;
}

Complex3 edge_unfolding(const Complex3& K, const Facet& sigma, const Edge& uv,
                        UnfoldRecord* rec) {
  if (!facet_contains(sigma, uv[0]) || !facet_contains(sigma, uv[1]))
    throw error("eunfold: edge not in " + to_string(sigma));
  if (K.has_facet(sigma)) throw error("eunfold: " + to_string(sigma) + " is a facet");
  std::vector<VertexId> dup;
  for (VertexId x : sigma)
    if (x != uv[0] && x != uv[1]) dup.push_back(x);

  for (VertexId w : uv) {
    const Triangle cyc = facet_minus(sigma, w);
    Separation sep = separates_link(K, w, cyc);
    if (sep.separates)
      throw error("eunfold: boundary of " + to_string(cyc) + " separates lk(" +
                  std::to_string(w) + "), not an edge-folding pattern");
    if (neighborhood_type(K.vertex_link(w), cyc) != NeighborhoodType::Moebius)
      throw error("eunfold: neighbourhood of the fold cycle in lk(" +
                  std::to_string(w) + ") is an annulus, not a Moebius strip");
  }

  SideAssignment sa = assign_sides(K, sigma, dup, "eunfold");
  std::map<VertexId, VertexId> copy2;
  VertexId next = K.fresh_vertex();
  for (VertexId x : dup) copy2[x] = next++;

  std::vector<Facet> newf;
  for (const auto& f : K.facets()) {
    auto it = sa.side.find(f);
    if (it == sa.side.end() || it->second == 0) {
      newf.push_back(f);
      continue;
    }
    Facet g = f;
    for (auto& x : g)
      if (copy2.count(x)) x = copy2[x];
    std::sort(g.begin(), g.end());
    newf.push_back(g);
  }
  newf.push_back(sigma);
  Facet sigma2{uv[0], uv[1], copy2[dup[0]], copy2[dup[1]]};
  std::sort(sigma2.begin(), sigma2.end());
  newf.push_back(sigma2);

  Complex3 out = Complex3::from_facets(std::move(newf));
  check_valid_result(out, "eunfold");
  if (g2_of(out) != g2_of(K) - 3)
    throw error("eunfold: g2 delta is not -3");

  if (rec) {
    rec->kind = GlueKind::EdgeFold;
    std::vector<std::pair<VertexId, VertexId>> pairs{{uv[0], uv[0]},
                                                     {uv[1], uv[1]}};
    for (VertexId x : dup) {
      pairs.emplace_back(x, copy2[x]);
      rec->fresh.push_back(copy2[x]);
    }
    rec->refold = make_bijection(sigma, sigma2, pairs);
    rec->g2_delta = -3;
  }
  return out;
}

}  // namespace pm3
