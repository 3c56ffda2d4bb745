#include "pm3/moves.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "pm3/detection.hpp"
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

void check_delta(long got, long want, const char* op) {
  if (got != want)
    throw error(std::string(op) + ": g2 delta " + std::to_string(got) +
                ", expected " + std::to_string(want));
}

bool facet_contains(const Facet& f, VertexId v) {
  return std::binary_search(f.begin(), f.end(), v);
}

std::vector<Edge> cycle_edges(const std::vector<VertexId>& cycle) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    out.push_back(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
  return out;
}

}  // namespace

const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::Bistellar1: return "bistellar1";
    case MoveKind::Bistellar2: return "bistellar2";
    case MoveKind::EdgeContraction: return "contract";
    case MoveKind::EdgeExpansion: return "expand";
    case MoveKind::CentralRetriangulation: return "retriangulate";
    case MoveKind::OpC: return "opc";
    case MoveKind::OpCPrime: return "opcprime";
    case MoveKind::OpD: return "opd";
  }
  return "?";
}

MoveResult bistellar_2_move(const Complex3& K, const Edge& uv) {
  if (!K.has_edge(uv)) throw error("bistellar2: " + to_string(uv) + " not an edge");
  const auto& lk = K.edge_link_vertices(uv);
  if (lk.size() != 3)
    throw error("bistellar2: d(" + to_string(uv) + ") = " +
                std::to_string(lk.size()) + ", need 3");
  Triangle abc = make_triangle(lk[0], lk[1], lk[2]);
  if (K.has_triangle(abc))
    throw error("bistellar2: triangle " + to_string(abc) +
                " already present, move undefined");
  std::vector<Facet> facets;
  for (const auto& f : K.facets())
    if (!(facet_contains(f, uv[0]) && facet_contains(f, uv[1])))
      facets.push_back(f);
  facets.push_back(make_facet(uv[0], abc[0], abc[1], abc[2]));
  facets.push_back(make_facet(uv[1], abc[0], abc[1], abc[2]));
  Complex3 out = Complex3::from_facets(std::move(facets));
  check_valid_result(out, "bistellar2");
  check_delta(g2_of(out) - g2_of(K), -1, "bistellar2");

  MoveRecord rec;
  rec.kind = MoveKind::Bistellar2;
  rec.args = {uv[0], uv[1], abc[0], abc[1], abc[2]};
  rec.g2_delta = -1;
  return {std::move(out), std::move(rec)};
}

MoveResult bistellar_1_move(const Complex3& K, const Triangle& abc) {
  if (!K.has_triangle(abc))
    throw error("bistellar1: " + to_string(abc) + " not a triangle");
  std::vector<Facet> cofacets;
  for (const auto& f : K.facets()) {
    if (facet_contains(f, abc[0]) && facet_contains(f, abc[1]) &&
        facet_contains(f, abc[2]))
      cofacets.push_back(f);
  }
  if (cofacets.size() != 2)
    throw error("bistellar1: " + to_string(abc) + " lies in " +
                std::to_string(cofacets.size()) + " facets");
  auto opposite = [&](const Facet& f) {
    for (VertexId x : f)
      if (x != abc[0] && x != abc[1] && x != abc[2]) return x;
    throw error("unreachable");
  };
  VertexId u = opposite(cofacets[0]);
  VertexId v = opposite(cofacets[1]);
  if (u > v) std::swap(u, v);
  if (K.has_edge(make_edge(u, v)))
    throw error("bistellar1: edge {" + std::to_string(u) + " " +
                std::to_string(v) + "} already present, move undefined");
  std::vector<Facet> facets;
  for (const auto& f : K.facets())
    if (f != cofacets[0] && f != cofacets[1]) facets.push_back(f);
  facets.push_back(make_facet(u, v, abc[0], abc[1]));
  facets.push_back(make_facet(u, v, abc[0], abc[2]));
  facets.push_back(make_facet(u, v, abc[1], abc[2]));
  Complex3 out = Complex3::from_facets(std::move(facets));
  check_valid_result(out, "bistellar1");
  check_delta(g2_of(out) - g2_of(K), +1, "bistellar1");

  MoveRecord rec;
  rec.kind = MoveKind::Bistellar1;
  rec.args = {abc[0], abc[1], abc[2], u, v};
  rec.g2_delta = +1;
  return {std::move(out), std::move(rec)};
}

MoveResult edge_contraction(const Complex3& K, const Edge& uv,
                            VertexId survivor) {
  if (!K.has_edge(uv)) throw error("contract: " + to_string(uv) + " not an edge");
  const VertexId u = uv[0], v = uv[1];
  if (survivor != u && survivor != v && K.has_vertex(survivor))
    throw error("contract: survivor label " + std::to_string(survivor) +
                " already in use");

  // link condition lk(u) cap lk(v) = lk(uv) at every dimension
  const auto& luv = K.edge_link_vertices(uv);
  {
    std::vector<VertexId> common;
    std::set_intersection(K.link_vertices(u).begin(), K.link_vertices(u).end(),
                          K.link_vertices(v).begin(), K.link_vertices(v).end(),
                          std::back_inserter(common));
    if (common != luv)
      throw error("contract: link condition fails for " + to_string(uv) +
                  " (common neighbours exceed lk(uv))");
    std::set<Edge> cyc(cycle_edges(K.edge_link_cycle(uv)).begin(),
                       cycle_edges(K.edge_link_cycle(uv)).end());
    auto link_edges = [&](VertexId x) {
      std::set<Edge> out;
      for (const auto& t : K.link_triangles(x))
        for (const Edge e :
             {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}})
          out.insert(e);
      return out;
    };
    std::set<Edge> eu = link_edges(u), ev = link_edges(v);
    for (const auto& e : eu)
      if (ev.count(e) && !cyc.count(e))
        throw error("contract: link condition fails for " + to_string(uv) +
                    " (shared link edge " + to_string(e) + ")");
    std::set<Triangle> tu(K.link_triangles(u).begin(),
                          K.link_triangles(u).end());
    for (const auto& t : K.link_triangles(v))
      if (tu.count(t))
        throw error("contract: link condition fails for " + to_string(uv) +
                    " (shared link triangle " + to_string(t) + ")");
  }
  if (K.vertices().size() <= 5)
    throw error("contract: result would have fewer than 5 vertices");

  const long n = static_cast<long>(luv.size());
  const std::vector<VertexId> lk_cycle = K.edge_link_cycle(uv);
  // remember one triangle of lk(u) - st(v) for the inverse expansion
  Triangle u_side_rep{};
  bool have_rep = false;
  for (const auto& t : K.link_triangles(u)) {
    if (t[0] != v && t[1] != v && t[2] != v) {
      u_side_rep = t;
      have_rep = true;
      break;
    }
  }
  if (!have_rep)
    throw error("contract: lk(" + std::to_string(u) + ") is contained in st(" +
                std::to_string(v) + ")");

  std::vector<Facet> facets;
  for (const auto& f : K.facets()) {
    bool hu = facet_contains(f, u), hv = facet_contains(f, v);
    if (hu && hv) continue;
    if (!hu && !hv) {
      facets.push_back(f);
      continue;
    }
    Facet g = f;
    for (auto& x : g)
      if (x == u || x == v) x = survivor;
    std::sort(g.begin(), g.end());
    if (g[0] == g[1] || g[1] == g[2] || g[2] == g[3])
      throw error("contract: identification degenerates facet " + to_string(f));
    facets.push_back(g);
  }
  Complex3 out = Complex3::from_facets(std::move(facets));
  check_valid_result(out, "contract");
  check_delta(g2_of(out) - g2_of(K), -(n - 3), "contract");

  MoveRecord rec;
  rec.kind = MoveKind::EdgeContraction;
  rec.args = {u, v, survivor};
  rec.cycle = lk_cycle;
  rec.side_rep = u_side_rep;
  rec.has_side_rep = true;
  if (survivor != u && survivor != v) rec.fresh = {survivor};
  rec.g2_delta = -(n - 3);
  return {std::move(out), std::move(rec)};
}

MoveResult edge_expansion(const Complex3& K, VertexId w,
                          const std::vector<VertexId>& cycle, VertexId u,
                          VertexId v, const Triangle& u_side_rep) {
  if (!K.has_vertex(w)) throw error("expand: no vertex " + std::to_string(w));
  if (cycle.size() < 3) throw error("expand: cycle has fewer than 3 vertices");
  if (u == v) throw error("expand: cone labels coincide");
  for (VertexId x : {u, v})
    if (x != w && K.has_vertex(x))
      throw error("expand: label " + std::to_string(x) + " already in use");
  {
    std::set<VertexId> uniq(cycle.begin(), cycle.end());
    if (uniq.size() != cycle.size()) throw error("expand: cycle repeats a vertex");
  }
  const auto cyc_edges = cycle_edges(cycle);
  for (const auto& e : cyc_edges) {
    Triangle t = make_triangle(w, e[0], e[1]);
    if (!K.has_triangle(t))
      throw error("expand: " + to_string(e) + " is not an edge of lk(" +
                  std::to_string(w) + ")");
  }

  auto comps = cut_components(K.link_triangles(w), cyc_edges);
  if (comps.size() != 2)
    throw error("expand: cycle does not separate lk(" + std::to_string(w) +
                ") (got " + std::to_string(comps.size()) + " components)");
  if (!side_is_disc_edges(comps[0], cyc_edges) &&
      !side_is_disc_edges(comps[1], cyc_edges))
    throw error("expand: neither side of the cycle is a disc");

  int u_side = -1;
  for (int s = 0; s < 2; ++s) {
    const auto& side = comps[static_cast<std::size_t>(s)];
    if (std::find(side.begin(), side.end(), u_side_rep) != side.end())
      u_side = s;
  }
  if (u_side == -1)
    throw error("expand: side representative " + to_string(u_side_rep) +
                " not a triangle of lk(" + std::to_string(w) + ")");

  std::vector<Facet> facets;
  for (const auto& f : K.facets())
    if (!facet_contains(f, w)) facets.push_back(f);
  for (const auto& t : comps[static_cast<std::size_t>(u_side)])
    facets.push_back(make_facet(u, t[0], t[1], t[2]));
  for (const auto& t : comps[static_cast<std::size_t>(1 - u_side)])
    facets.push_back(make_facet(v, t[0], t[1], t[2]));
  for (const auto& e : cyc_edges) facets.push_back(make_facet(u, v, e[0], e[1]));

  const long n = static_cast<long>(cycle.size());
  Complex3 out = Complex3::from_facets(std::move(facets));
  check_valid_result(out, "expand");
  check_delta(g2_of(out) - g2_of(K), n - 3, "expand");

  MoveRecord rec;
  rec.kind = MoveKind::EdgeExpansion;
  rec.args = {w, u, v};
  rec.cycle = cycle;
  rec.side_rep = u_side_rep;
  rec.has_side_rep = true;
  for (VertexId x : {u, v})
    if (x != w) rec.fresh.push_back(x);
  rec.g2_delta = n - 3;
  return {std::move(out), std::move(rec)};
}

MoveResult central_retriangulation(const Complex3& K, const Edge& uv,
                                   VertexId center) {
  if (!K.has_edge(uv))
    throw error("retriangulate: " + to_string(uv) + " not an edge");
  if (K.has_vertex(center))
    throw error("retriangulate: center label " + std::to_string(center) +
                " already in use");
  const long n = static_cast<long>(K.edge_degree(uv));
  std::vector<Facet> facets;
  for (const auto& f : K.facets()) {
    if (facet_contains(f, uv[0]) && facet_contains(f, uv[1])) {
      VertexId p[2];
      int k = 0;
      for (VertexId x : f)
        if (x != uv[0] && x != uv[1]) p[k++] = x;
      facets.push_back(make_facet(center, uv[0], p[0], p[1]));
      facets.push_back(make_facet(center, uv[1], p[0], p[1]));
    } else {
      facets.push_back(f);
    }
  }
  Complex3 out = Complex3::from_facets(std::move(facets));
  check_valid_result(out, "retriangulate");
  const FVector f0 = f_vector(K), f1 = f_vector(out);
  if (f1.f1 - f0.f1 != n + 1)
    throw error("retriangulate: f1 delta " + std::to_string(f1.f1 - f0.f1) +
                ", expected " + std::to_string(n + 1));
  check_delta(g2_of(out) - g2_of(K), n - 3, "retriangulate");

  MoveRecord rec;
  rec.kind = MoveKind::CentralRetriangulation;
  rec.args = {uv[0], uv[1], center};
  rec.fresh = {center};
  rec.g2_delta = n - 3;
  return {std::move(out), std::move(rec)};
}

MoveResult op_c(const Complex3& K, VertexId w, const Triangle& abc) {
  if (!K.has_vertex(w)) throw error("opc: no vertex " + std::to_string(w));
  if (K.has_triangle(abc))
    throw error("opc: triangle " + to_string(abc) + " already present");
  const std::vector<Edge> cyc = {make_edge(abc[0], abc[1]),
                                 make_edge(abc[0], abc[2]),
                                 make_edge(abc[1], abc[2])};
  for (const auto& e : cyc)
    if (!K.has_triangle(make_triangle(w, e[0], e[1])))
      throw error("opc: boundary of " + to_string(abc) + " not in lk(" +
                  std::to_string(w) + ")");
  if (!classify_surface(K.vertex_link(w)).is_sphere())
    throw error("opc: lk(" + std::to_string(w) + ") is not a sphere");

  auto comps = cut_components(K.link_triangles(w), cyc);
  if (comps.size() != 2)
    throw error("opc: cycle does not separate lk(" + std::to_string(w) + ")");
  // deterministic: x1 cones the side holding the smallest triangle
  int side1 = std::min(comps[0].front(), comps[1].front()) == comps[0].front()
                  ? 0
                  : 1;
  const VertexId x1 = K.fresh_vertex();
  const VertexId x2 = x1 + 1;

  std::vector<Facet> facets;
  for (const auto& f : K.facets())
    if (!facet_contains(f, w)) facets.push_back(f);
  for (const auto& t : comps[static_cast<std::size_t>(side1)])
    facets.push_back(make_facet(x1, t[0], t[1], t[2]));
  facets.push_back(make_facet(x1, abc[0], abc[1], abc[2]));
  for (const auto& t : comps[static_cast<std::size_t>(1 - side1)])
    facets.push_back(make_facet(x2, t[0], t[1], t[2]));
  facets.push_back(make_facet(x2, abc[0], abc[1], abc[2]));

  Complex3 out = Complex3::from_facets(std::move(facets));
  check_valid_result(out, "opc");
  check_delta(g2_of(out) - g2_of(K), -1, "opc");

  MoveRecord rec;
  rec.kind = MoveKind::OpC;
  rec.args = {w, abc[0], abc[1], abc[2], x1, x2};
  rec.side_rep = comps[static_cast<std::size_t>(side1)].front();
  rec.has_side_rep = true;
  rec.fresh = {x1, x2};
  rec.g2_delta = -1;
  return {std::move(out), std::move(rec)};
}

MoveResult op_c_prime(const Complex3& K, VertexId u, VertexId v, VertexId z) {
  if (u == v) throw error("opcprime: vertices coincide");
  if (!K.has_vertex(u) || !K.has_vertex(v))
    throw error("opcprime: vertex not in complex");
  if (K.adjacent(u, v))
    throw error("opcprime: " + std::to_string(u) + std::string(" and ") +
                std::to_string(v) + " are adjacent");
  if (z != u && z != v && K.has_vertex(z))
    throw error("opcprime: label " + std::to_string(z) + " already in use");
  for (VertexId x : {u, v})
    if (!classify_surface(K.vertex_link(x)).is_sphere())
      throw error("opcprime: lk(" + std::to_string(x) + ") is not a sphere");

  // st(u) cap st(v) must be exactly one triangle with its faces
  std::vector<VertexId> common;
  std::set_intersection(K.link_vertices(u).begin(), K.link_vertices(u).end(),
                        K.link_vertices(v).begin(), K.link_vertices(v).end(),
                        std::back_inserter(common));
  if (common.size() != 3)
    throw error("opcprime: st(u) cap st(v) is not a single triangle (" +
                std::to_string(common.size()) + " shared vertices)");
  Triangle abc = make_triangle(common[0], common[1], common[2]);
  if (!K.has_triangle(abc))
    throw error("opcprime: shared vertices span no triangle");
  for (VertexId x : {u, v})
    if (!K.has_facet(make_facet(x, abc[0], abc[1], abc[2])))
      throw error("opcprime: facet " + std::to_string(x) + "*" +
                  to_string(abc) + " missing");
  // shared faces must not exceed the triangle
  {
    std::set<Triangle> tu(K.link_triangles(u).begin(),
                          K.link_triangles(u).end());
    for (const auto& t : K.link_triangles(v))
      if (tu.count(t) && t != abc)
        throw error("opcprime: stars share extra triangle " + to_string(t));
  }

  std::vector<Facet> facets;
  for (const auto& f : K.facets())
    if (!facet_contains(f, u) && !facet_contains(f, v)) facets.push_back(f);
  for (VertexId x : {u, v})
    for (const auto& t : K.link_triangles(x))
      if (t != abc) facets.push_back(make_facet(z, t[0], t[1], t[2]));

  Complex3 out = Complex3::from_facets(std::move(facets));
  check_valid_result(out, "opcprime");
  check_delta(g2_of(out) - g2_of(K), +1, "opcprime");

  MoveRecord rec;
  rec.kind = MoveKind::OpCPrime;
  rec.args = {u, v, z, abc[0], abc[1], abc[2]};
  if (z != u && z != v) rec.fresh = {z};
  rec.g2_delta = +1;
  return {std::move(out), std::move(rec)};
}

MoveResult op_d(const Complex3& K, const Edge& uw, VertexId center,
                const Edge& ut, VertexId survivor) {
  MoveResult step1 = central_retriangulation(K, uw, center);
  MoveResult step2 = edge_contraction(step1.complex, ut, survivor);
  MoveRecord rec;
  rec.kind = MoveKind::OpD;
  rec.args = {uw[0], uw[1], center, ut[0], ut[1], survivor};
  rec.cycle = step2.record.cycle;
  rec.side_rep = step2.record.side_rep;
  rec.has_side_rep = true;
  rec.fresh = {center};
  rec.g2_delta = step1.record.g2_delta + step2.record.g2_delta;
  return {std::move(step2.complex), std::move(rec)};
}

namespace {

std::optional<MoveResult> scan_a(const Complex3& K) {
  for (const auto& e : K.edges()) {
    if (K.edge_degree(e) != 3) continue;
    try {
      return bistellar_2_move(K, e);
    } catch (const error&) {
    }
  }
  return std::nullopt;
}

std::optional<MoveResult> scan_b(const Complex3& K) {
  std::set<VertexId> singular;
  for (const auto& [v, t] : singular_vertices(K)) singular.insert(v);
  for (const auto& e : K.edges()) {
    if (K.edge_degree(e) < 4) continue;  // not reducing
    for (const auto [keep, absorb] :
         {std::pair{e[0], e[1]}, std::pair{e[1], e[0]}}) {
      if (singular.count(absorb)) continue;
      try {
        return edge_contraction(K, e, keep);
      } catch (const error&) {
      }
    }
  }
  return std::nullopt;
}

std::optional<MoveResult> scan_c(const Complex3& K) {
  for (VertexId w : K.vertices()) {
    const auto& lk = K.link_vertices(w);
    if (!classify_surface(K.vertex_link(w)).is_sphere()) continue;
    for (std::size_t i = 0; i < lk.size(); ++i)
      for (std::size_t j = i + 1; j < lk.size(); ++j)
        for (std::size_t k = j + 1; k < lk.size(); ++k) {
          Triangle abc = make_triangle(lk[i], lk[j], lk[k]);
          if (K.has_triangle(abc)) continue;
          bool boundary_in_link = true;
          for (const Edge be : {Edge{abc[0], abc[1]}, Edge{abc[0], abc[2]},
                                Edge{abc[1], abc[2]}})
            if (!K.has_triangle(make_triangle(w, be[0], be[1]))) {
              boundary_in_link = false;
              break;
            }
          if (!boundary_in_link) continue;
          try {
            return op_c(K, w, abc);
          } catch (const error&) {
          }
        }
  }
  return std::nullopt;
}

std::optional<MoveResult> scan_d(const Complex3& K) {
  const VertexId center = K.fresh_vertex();
  for (VertexId u : K.vertices()) {
    for (VertexId w : K.link_vertices(u)) {
      const Edge uw = make_edge(u, w);
      const long duw = static_cast<long>(K.edge_degree(uw));
      std::optional<Complex3> K1;
      try {
        K1 = central_retriangulation(K, uw, center).complex;
      } catch (const error&) {
        continue;
      }
      // Lemma 3.6 pattern contracts ut with lk(u) a sphere after the
      // retriangulation
      if (!classify_surface(K1->vertex_link(u)).is_sphere()) continue;
      for (VertexId t : K.link_vertices(u)) {
        if (t == w) continue;
        const Edge ut = make_edge(u, t);
        if (!K1->has_edge(ut)) continue;
        const long dut = static_cast<long>(K1->edge_degree(ut));
        if (duw - dut >= 0) continue;  // not reducing
        try {
          return op_d(K, uw, center, ut, t);
        } catch (const error&) {
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<MoveResult> find_g2_reducing_move(const Complex3& K,
                                                MoveScanMode mode) {
  switch (mode) {
    case MoveScanMode::A: return scan_a(K);
    case MoveScanMode::B: return scan_b(K);
    case MoveScanMode::C: return scan_c(K);
    case MoveScanMode::D: return scan_d(K);
    case MoveScanMode::All: break;
  }
  if (auto r = scan_a(K)) return r;
  if (auto r = scan_b(K)) return r;
  if (auto r = scan_c(K)) return r;
  if (auto r = scan_d(K)) return r;
  return std::nullopt;
}

}  // namespace pm3
