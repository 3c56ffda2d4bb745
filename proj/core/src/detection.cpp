#include "pm3/detection.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace pm3 {

std::vector<Triangle> missing_triangles(const Complex3& K) {
  std::vector<Triangle> out;
  for (const auto& e : K.edges()) {
    // candidates above both endpoints avoid duplicates
    for (VertexId c : K.link_vertices(e[1])) {
      if (c <= e[1]) continue;
      if (!K.adjacent(e[0], c)) continue;
      Triangle t{e[0], e[1], c};
      if (!K.has_triangle(t)) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Facet> missing_tetrahedra(const Complex3& K) {
  std::vector<Facet> out;
  const auto& vs = K.vertices();
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!K.adjacent(vs[i], vs[j])) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!K.has_triangle(Triangle{vs[i], vs[j], vs[k]})) continue;
        for (std::size_t l = k + 1; l < n; ++l) {
          Facet f{vs[i], vs[j], vs[k], vs[l]};
          if (K.has_facet(f)) continue;
          bool all = true;
          for (int drop = 0; drop < 4 && all; ++drop) {
            Triangle t;
            int m = 0;
            for (int p = 0; p < 4; ++p)
              if (p != drop) t[m++] = f[p];
            all = K.has_triangle(t);
          }
          if (all) out.push_back(f);
        }
      }
    }
  return out;
}

std::vector<std::vector<Triangle>> cut_components(
    const std::vector<Triangle>& tris, const std::vector<Edge>& cut) {
  std::map<Edge, std::vector<std::size_t>> edge_tris;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto& t = tris[i];
    for (const Edge e : {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}})
      edge_tris[e].push_back(i);
  }
  std::set<Edge> banned(cut.begin(), cut.end());
  std::vector<int> comp(tris.size(), -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < tris.size(); ++s) {
    if (comp[s] != -1) continue;
    std::queue<std::size_t> q;
    q.push(s);
    comp[s] = ncomp;
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      const auto& t = tris[i];
      for (const Edge e :
           {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}}) {
        if (banned.count(e)) continue;
        for (std::size_t k : edge_tris[e])
          if (comp[k] == -1) {
            comp[k] = comp[i];
            q.push(k);
          }
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<Triangle>> out(static_cast<std::size_t>(ncomp));
  for (std::size_t i = 0; i < tris.size(); ++i)
    out[static_cast<std::size_t>(comp[i])].push_back(tris[i]);
  return out;
}

Separation separates_link(const Complex3& K, VertexId x, const Triangle& abc) {
  const std::vector<Edge> cut = {make_edge(abc[0], abc[1]),
                                 make_edge(abc[0], abc[2]),
                                 make_edge(abc[1], abc[2])};
  for (const auto& e : cut)
    if (!K.has_triangle(make_triangle(x, e[0], e[1])))
      throw error("cycle edge " + to_string(e) + " not in lk(" +
                  std::to_string(x) + ")");
  auto comps = cut_components(K.link_triangles(x), cut);
  Separation sep;
  if (comps.size() == 2) {
    sep.separates = true;
    sep.side1 = std::move(comps[0]);
    sep.side2 = std::move(comps[1]);
    if (sep.side2.front() < sep.side1.front()) std::swap(sep.side1, sep.side2);
  } else if (comps.size() != 1) {
    throw error("cycle splits lk(" + std::to_string(x) + ") into " +
                std::to_string(comps.size()) + " parts");
  }
  return sep;
}

bool side_is_disc_edges(const std::vector<Triangle>& side,
                        const std::vector<Edge>& cycle_edges) {
  std::set<VertexId> verts;
  std::set<Edge> edges(cycle_edges.begin(), cycle_edges.end());
  for (const auto& e : cycle_edges) {
    verts.insert(e[0]);
    verts.insert(e[1]);
  }
  for (const auto& t : side) {
    for (VertexId v : t) verts.insert(v);
    for (const Edge e : {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}})
      edges.insert(e);
  }
  const long chi = static_cast<long>(verts.size()) -
                   static_cast<long>(edges.size()) +
                   static_cast<long>(side.size());
  return chi == 1;
}

bool side_is_disc(const std::vector<Triangle>& side, const Triangle& cycle) {
  return side_is_disc_edges(side, {make_edge(cycle[0], cycle[1]),
                                   make_edge(cycle[0], cycle[2]),
                                   make_edge(cycle[1], cycle[2])});
}

NeighborhoodType neighborhood_type(const Surface2& S, const Triangle& cycle) {
  for (const Edge e : {Edge{cycle[0], cycle[1]}, Edge{cycle[0], cycle[2]},
                       Edge{cycle[1], cycle[2]}})
    if (!S.has_edge(e))
      throw error("cycle edge " + to_string(e) + " not in surface");

  auto flanking = [&](const Edge& e) {
    std::vector<Triangle> out;
    for (const auto& t : S.triangles())
      if (std::binary_search(t.begin(), t.end(), e[0]) &&
          std::binary_search(t.begin(), t.end(), e[1]))
        out.push_back(t);
    if (out.size() != 2)
      throw error("edge " + to_string(e) + " not in exactly two triangles");
    return out;
  };

  // walk the corner fan at y from the flank of {x,y} to the flank of {y,z}
  auto corner_step = [&](const Triangle& flank, VertexId x, VertexId y,
                         VertexId z) -> Triangle {
    Triangle cur = flank;
    Edge last = make_edge(x, y);
    const Edge target = make_edge(y, z);
    for (std::size_t guard = 0; guard <= S.triangles().size(); ++guard) {
      // the other edge of cur at y
      std::vector<Edge> at_y;
      for (const Edge e :
           {Edge{cur[0], cur[1]}, Edge{cur[0], cur[2]}, Edge{cur[1], cur[2]}})
        if (e[0] == y || e[1] == y) at_y.push_back(e);
      Edge other = (at_y[0] == last) ? at_y[1] : at_y[0];
      if (other == target) return cur;
      auto fl = flanking(other);
      cur = (fl[0] == cur) ? fl[1] : fl[0];
      last = other;
    }
    throw error("corner walk did not terminate");
  };

  const VertexId a = cycle[0], b = cycle[1], c = cycle[2];
  const Triangle start = flanking(make_edge(a, b))[0];
  Triangle f = start;
  f = corner_step(f, a, b, c);  // now flanks bc
  f = corner_step(f, b, c, a);  // now flanks ca
  f = corner_step(f, c, a, b);  // back at ab
  if (f == start) return NeighborhoodType::Annulus;
  return NeighborhoodType::Moebius;
}

const char* to_string(TetraType t) {
  switch (t) {
    case TetraType::T1_NoSingular: return "T1_NoSingular";
    case TetraType::T2_SepDisc: return "T2_SepDisc";
    case TetraType::T3_Unfoldable: return "T3_Unfoldable";
    case TetraType::T4_VertexFoldPattern: return "T4_VertexFoldPattern";
    case TetraType::T5_SepNoDisc: return "T5_SepNoDisc";
  }
  return "?";
}

MissingTetraReport classify_missing_tetra(
    const Complex3& K, const Facet& sigma,
    const std::vector<VertexId>& singular) {
  if (K.has_facet(sigma))
    throw error(to_string(sigma) + " is a facet, not missing");
  for (int drop = 0; drop < 4; ++drop) {
    Triangle t;
    int m = 0;
    for (int p = 0; p < 4; ++p)
      if (p != drop) t[m++] = sigma[p];
    if (!K.has_triangle(t))
      throw error(to_string(sigma) + " is not missing: boundary triangle " +
                  to_string(t) + " absent");
  }

  MissingTetraReport rep;
  rep.tetra = sigma;
  std::map<VertexId, const PerVertexReport*> by_vertex;
  for (int i = 0; i < 4; ++i) {
    PerVertexReport pv;
    pv.vertex = sigma[static_cast<std::size_t>(i)];
    Triangle opp;
    int m = 0;
    for (int p = 0; p < 4; ++p)
      if (p != i) opp[m++] = sigma[static_cast<std::size_t>(p)];
    pv.separation = separates_link(K, pv.vertex, opp);
    if (pv.separation.separates) {
      pv.disc1 = side_is_disc(pv.separation.side1, opp);
      pv.disc2 = side_is_disc(pv.separation.side2, opp);
    } else {
      pv.neighborhood = neighborhood_type(K.vertex_link(pv.vertex), opp);
    }
    rep.per_vertex.push_back(std::move(pv));
  }
  for (const auto& pv : rep.per_vertex) by_vertex[pv.vertex] = &pv;

  auto in_sigma = [&](VertexId v) {
    return std::binary_search(sigma.begin(), sigma.end(), v);
  };
  std::vector<VertexId> tracked;
  for (VertexId s : singular)
    if (in_sigma(s)) tracked.push_back(s);

  if (tracked.empty()) {
    rep.type_tag = TetraType::T1_NoSingular;
    return rep;
  }

  const VertexId t = tracked.front();
  const PerVertexReport& pt = *by_vertex.at(t);
  if (!pt.separation.separates) {
    if (pt.neighborhood == NeighborhoodType::Moebius) {
      // Lemma 2.8 pattern needs the folded edge inside sigma: the partner is
      // the other tracked singular vertex with a Moebius neighbourhood
      for (std::size_t i = 1; i < tracked.size(); ++i) {
        const PerVertexReport& q = *by_vertex.at(tracked[i]);
        if (!q.separation.separates &&
            q.neighborhood == NeighborhoodType::Moebius) {
          rep.type_tag = TetraType::T3_Unfoldable;
          rep.fold_vertices = {t, tracked[i]};
          return rep;
        }
      }
      rep.type_tag = TetraType::T3_Unfoldable;  // pattern incomplete
      return rep;
    }
    rep.type_tag = TetraType::T4_VertexFoldPattern;
    rep.fold_vertices = {t};
    return rep;
  }

  // t separated; a second tracked vertex may still carry the fold pattern
  for (std::size_t i = 1; i < tracked.size(); ++i) {
    const PerVertexReport& q = *by_vertex.at(tracked[i]);
    if (!q.separation.separates) {
      if (q.neighborhood == NeighborhoodType::Moebius) {
        rep.type_tag = TetraType::T3_Unfoldable;  // incomplete without t
        return rep;
      }
      rep.type_tag = TetraType::T4_VertexFoldPattern;
      rep.fold_vertices = {tracked[i]};
      return rep;
    }
  }

  if (pt.disc1 || pt.disc2)
    rep.type_tag = TetraType::T2_SepDisc;
  else
    rep.type_tag = TetraType::T5_SepNoDisc;
  return rep;
}

}  // namespace pm3
