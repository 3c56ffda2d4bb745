#include "pm3/surface.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace pm3 {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Surface2 Surface2::from_triangles(std::vector<Triangle> triangles) {
  if (triangles.empty()) throw error("empty triangle list");
  for (auto& t : triangles) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
      throw error("triangle with repeated vertex");
  }
  sort_unique(triangles);
  Surface2 S;
  S.triangles_ = std::move(triangles);
  for (const auto& t : S.triangles_) {
    for (int i = 0; i < 3; ++i) {
      S.vertices_.push_back(t[i]);
      for (int j = i + 1; j < 3; ++j) S.edges_.push_back(Edge{t[i], t[j]});
    }
  }
  sort_unique(S.vertices_);
  sort_unique(S.edges_);
  S.nbrs_.assign(S.vertices_.size(), {});
  for (const auto& e : S.edges_) {
    S.nbrs_[S.vertex_index(e[0])].push_back(e[1]);
    S.nbrs_[S.vertex_index(e[1])].push_back(e[0]);
  }
  for (auto& nb : S.nbrs_) sort_unique(nb);
  return S;
}

std::size_t Surface2::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    throw error("vertex " + std::to_string(v) + " not in surface");
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Surface2::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}
bool Surface2::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}
bool Surface2::has_triangle(const Triangle& t) const {
  return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

const std::vector<VertexId>& Surface2::link_vertices(VertexId v) const {
  return nbrs_[vertex_index(v)];
}

std::vector<Triangle> Surface2::star_triangles(VertexId v) const {
  std::vector<Triangle> out;
  for (const auto& t : triangles_)
    if (t[0] == v || t[1] == v || t[2] == v) out.push_back(t);
  return out;
}

long Surface2::euler_characteristic() const {
  return static_cast<long>(vertices_.size()) -
         static_cast<long>(edges_.size()) +
         static_cast<long>(triangles_.size());
}

bool Surface2::is_closed_surface(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };

  std::map<Edge, int> edge_count;
  for (const auto& t : triangles_) {
    ++edge_count[Edge{t[0], t[1]}];
    ++edge_count[Edge{t[0], t[2]}];
    ++edge_count[Edge{t[1], t[2]}];
  }
  for (const auto& [e, c] : edge_count)
    if (c != 2)
      return fail("edge " + to_string(e) + " lies in " + std::to_string(c) +
                  " triangles");

  // connectivity over triangle adjacency
  std::map<Edge, std::vector<std::size_t>> edge_tris;
  for (std::size_t i = 0; i < triangles_.size(); ++i) {
    const auto& t = triangles_[i];
    edge_tris[Edge{t[0], t[1]}].push_back(i);
    edge_tris[Edge{t[0], t[2]}].push_back(i);
    edge_tris[Edge{t[1], t[2]}].push_back(i);
  }
  std::vector<char> seen(triangles_.size(), 0);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    const auto& t = triangles_[q.front()];
    q.pop();
    for (const Edge e :
         {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}}) {
      for (std::size_t k : edge_tris[e])
        if (!seen[k]) {
          seen[k] = 1;
          ++reached;
          q.push(k);
        }
    }
  }
  if (reached != triangles_.size()) return fail("surface is disconnected");

  // vertex links must be single cycles
  for (VertexId v : vertices_) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& t : triangles_) {
      if (t[0] != v && t[1] != v && t[2] != v) continue;
      VertexId o[2];
      int n = 0;
      for (VertexId x : t)
        if (x != v) o[n++] = x;
      adj[o[0]].push_back(o[1]);
      adj[o[1]].push_back(o[0]);
    }
    for (const auto& [w, nb] : adj)
      if (nb.size() != 2)
        return fail("link of vertex " + std::to_string(v) +
                    " is not a cycle at " + std::to_string(w));
    // single cycle: walk from one vertex and count
    VertexId start = adj.begin()->first;
    VertexId prev = start, cur = adj[start][0];
    std::size_t steps = 1;
    while (cur != start) {
      const auto& nb = adj[cur];
      VertexId next = (nb[0] == prev) ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++steps;
    }
    if (steps != adj.size())
      return fail("link of vertex " + std::to_string(v) +
                  " is not a single cycle");
  }
  return true;
}

std::string to_string(const SurfaceType& t) {
  std::ostringstream os;
  switch (t.kind) {
    case SurfaceKind::Sphere:
      os << "sphere";
      break;
    case SurfaceKind::OrientableGenus:
      os << "orientable genus " << t.genus;
      break;
    case SurfaceKind::NonOrientableGenus:
      os << "non-orientable genus " << t.genus;
      break;
  }
  os << " (chi=" << t.euler_characteristic << ")";
  return os.str();
}

SurfaceType classify_surface(const Surface2& S) {
  std::string why;
  if (!S.is_closed_surface(&why))
    throw error("not a closed surface: " + why);

  // orientation propagation: orientations as cyclic orderings; adjacent
  // triangles must induce opposite directions on the shared edge.
  const auto& tris = S.triangles();
  std::map<Edge, std::vector<std::size_t>> edge_tris;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto& t = tris[i];
    edge_tris[Edge{t[0], t[1]}].push_back(i);
    edge_tris[Edge{t[0], t[2]}].push_back(i);
    edge_tris[Edge{t[1], t[2]}].push_back(i);
  }
  // orient[i]: 0 = as sorted (t0,t1,t2), 1 = reversed
  std::vector<int> orient(tris.size(), -1);
  bool orientable = true;
  orient[0] = 0;
  std::queue<std::size_t> q;
  q.push(0);
  // directed boundary edges of triangle (a,b,c) oriented +: ab, bc, ca
  auto has_directed = [&](std::size_t i, VertexId a, VertexId b) {
    const auto& t = tris[i];
    VertexId v0 = t[0], v1 = t[1], v2 = t[2];
    if (orient[i] == 1) std::swap(v1, v2);
    return (v0 == a && v1 == b) || (v1 == a && v2 == b) || (v2 == a && v0 == b);
  };
  while (!q.empty() && orientable) {
    std::size_t i = q.front();
    q.pop();
    const auto& t = tris[i];
    for (const Edge e :
         {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}}) {
      for (std::size_t k : edge_tris[e]) {
        if (k == i) continue;
        // neighbour must traverse e in the opposite direction
        bool i_fwd = has_directed(i, e[0], e[1]);
        // try orientation 0 for k
        const auto& tk = tris[k];
        auto dir_with = [&](int o, VertexId a, VertexId b) {
          VertexId v0 = tk[0], v1 = tk[1], v2 = tk[2];
          if (o == 1) std::swap(v1, v2);
          return (v0 == a && v1 == b) || (v1 == a && v2 == b) ||
                 (v2 == a && v0 == b);
        };
        int need = dir_with(0, e[0], e[1]) != i_fwd ? 0 : 1;
        if (orient[k] == -1) {
          orient[k] = need;
          q.push(k);
        } else if (orient[k] != need) {
          orientable = false;
          break;
        }
      }
      if (!orientable) break;
    }
  }

  SurfaceType out;
  out.euler_characteristic = S.euler_characteristic();
  const long chi = out.euler_characteristic;
  if (orientable && chi == 2) {
    out.kind = SurfaceKind::Sphere;
    out.genus = 0;
    out.first_betti_mod2 = 0;
  } else if (orientable) {
    if ((2 - chi) % 2 != 0)
      throw error("orientable surface with odd 2-chi");
    out.kind = SurfaceKind::OrientableGenus;
    out.genus = static_cast<int>((2 - chi) / 2);
    out.first_betti_mod2 = static_cast<int>(2 - chi);
  } else {
    out.kind = SurfaceKind::NonOrientableGenus;
    out.genus = static_cast<int>(2 - chi);
    out.first_betti_mod2 = static_cast<int>(2 - chi);
  }
  return out;
}

long g2_of_surface(const Surface2& S) {
  return static_cast<long>(S.edges().size()) -
         3 * static_cast<long>(S.vertices().size()) + 6;
}

std::vector<std::pair<VertexId, SurfaceType>> singular_vertices(
    const Complex3& K) {
  std::vector<std::pair<VertexId, SurfaceType>> out;
  for (VertexId v : K.vertices()) {
    SurfaceType t = classify_surface(K.vertex_link(v));
    if (!t.is_sphere()) out.emplace_back(v, t);
  }
  return out;
}

std::optional<VertexId> distinguished_singular_vertex(const Complex3& K) {
  auto sing = singular_vertices(K);
  if (sing.empty()) return std::nullopt;
  int max_b1 = 0;
  for (const auto& [v, t] : sing) max_b1 = std::max(max_b1, t.first_betti_mod2);
  std::vector<VertexId> best;
  for (const auto& [v, t] : sing)
    if (t.first_betti_mod2 == max_b1) best.push_back(v);
  // prefer d(t) >= 8 when achievable, then smallest label
  std::vector<VertexId> deg8;
  for (VertexId v : best)
    if (K.degree(v) >= 8) deg8.push_back(v);
  const auto& pool = deg8.empty() ? best : deg8;
  return *std::min_element(pool.begin(), pool.end());
}

}  // namespace pm3
