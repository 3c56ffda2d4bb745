#include "pm3/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "pm3/surface.hpp"

namespace pm3 {

namespace {

template <typename T>
bool contains_sorted(const std::vector<T>& v, const T& x) {
  return std::binary_search(v.begin(), v.end(), x);
}

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Edge make_edge(VertexId a, VertexId b) {
  if (a == b) throw error("degenerate edge " + std::to_string(a));
  Edge e{a, b};
  std::sort(e.begin(), e.end());
  return e;
}

Triangle make_triangle(VertexId a, VertexId b, VertexId c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) throw error("degenerate triangle");
  return t;
}

Facet make_facet(VertexId a, VertexId b, VertexId c, VertexId d) {
  Facet f{a, b, c, d};
  std::sort(f.begin(), f.end());
  if (f[0] == f[1] || f[1] == f[2] || f[2] == f[3])
    throw error("facet with repeated vertex");
  return f;
}

template <typename Simplex>
static std::string simplex_str(const Simplex& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ' ';
    os << s[i];
  }
  os << '}';
  return os.str();
}

std::string to_string(const Edge& e) { return simplex_str(e); }
std::string to_string(const Triangle& t) { return simplex_str(t); }
std::string to_string(const Facet& f) { return simplex_str(f); }

Complex3 Complex3::from_facets(std::vector<Facet> facets) {
  if (facets.empty()) throw error("empty facet list");
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (f[0] == f[1] || f[1] == f[2] || f[2] == f[3])
      throw error("facet with repeated vertex: " + to_string(f));
  }
  sort_unique(facets);
  Complex3 K;
  K.facets_ = std::move(facets);
  K.build_caches();
  return K;
}

void Complex3::build_caches() {
  vertices_.clear();
  edges_.clear();
  triangles_.clear();
  for (const auto& f : facets_) {
    for (int i = 0; i < 4; ++i) {
      vertices_.push_back(f[i]);
      for (int j = i + 1; j < 4; ++j) {
        edges_.push_back(Edge{f[i], f[j]});
        for (int k = j + 1; k < 4; ++k)
          triangles_.push_back(Triangle{f[i], f[j], f[k]});
      }
    }
  }
  sort_unique(vertices_);
  sort_unique(edges_);
  sort_unique(triangles_);

  vertex_links_.assign(vertices_.size(), {});
  vertex_nbrs_.assign(vertices_.size(), {});
  edge_links_.assign(edges_.size(), {});
  for (const auto& f : facets_) {
    for (int i = 0; i < 4; ++i) {
      Triangle opp;
      int n = 0;
      for (int j = 0; j < 4; ++j)
        if (j != i) opp[n++] = f[j];
      vertex_links_[vertex_index(f[i])].push_back(opp);
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        std::vector<VertexId>& lk = edge_links_[edge_index(Edge{f[i], f[j]})];
        for (int k = 0; k < 4; ++k)
          if (k != i && k != j) lk.push_back(f[k]);
      }
  }
  for (auto& lk : vertex_links_) sort_unique(lk);
  for (auto& lk : edge_links_) sort_unique(lk);
  for (const auto& e : edges_) {
    vertex_nbrs_[vertex_index(e[0])].push_back(e[1]);
    vertex_nbrs_[vertex_index(e[1])].push_back(e[0]);
  }
  for (auto& nb : vertex_nbrs_) sort_unique(nb);
}

std::size_t Complex3::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    throw error("vertex " + std::to_string(v) + " not in complex");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Complex3::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    throw error("edge " + to_string(e) + " not in complex");
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Complex3::has_vertex(VertexId v) const {
  return contains_sorted(vertices_, v);
}
bool Complex3::has_edge(const Edge& e) const { return contains_sorted(edges_, e); }
bool Complex3::has_triangle(const Triangle& t) const {
  return contains_sorted(triangles_, t);
}
bool Complex3::has_facet(const Facet& f) const {
  return contains_sorted(facets_, f);
}

const std::vector<Triangle>& Complex3::link_triangles(VertexId v) const {
  return vertex_links_[vertex_index(v)];
}

const std::vector<VertexId>& Complex3::link_vertices(VertexId v) const {
  return vertex_nbrs_[vertex_index(v)];
}

const std::vector<VertexId>& Complex3::edge_link_vertices(const Edge& e) const {
  return edge_links_[edge_index(e)];
}

std::vector<VertexId> Complex3::edge_link_cycle(const Edge& e) const {
  // adjacency inside lk(uv): w,z adjacent iff uvwz is a facet
  const auto& verts = edge_link_vertices(e);
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& f : star(e)) {
    VertexId o[2];
    int n = 0;
    for (VertexId x : f)
      if (x != e[0] && x != e[1]) o[n++] = x;
    adj[o[0]].push_back(o[1]);
    adj[o[1]].push_back(o[0]);
  }
  for (auto& [v, nb] : adj)
    if (nb.size() != 2)
      throw error("link of " + to_string(e) + " is not a cycle at vertex " +
                  std::to_string(v));
  std::vector<VertexId> cycle;
  cycle.reserve(verts.size());
  VertexId start = verts.front();
  VertexId prev = start, cur = std::min(adj[start][0], adj[start][1]);
  cycle.push_back(start);
  while (cur != start) {
    cycle.push_back(cur);
    const auto& nb = adj[cur];
    VertexId next = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (cycle.size() != verts.size())
    throw error("link of " + to_string(e) + " is not a single cycle");
  return cycle;
}

Surface2 Complex3::vertex_link(VertexId v) const {
  return Surface2::from_triangles(link_triangles(v));
}

std::vector<Facet> Complex3::star(VertexId v) const {
  std::vector<Facet> out;
  for (const auto& t : link_triangles(v)) {
    Facet f{v, t[0], t[1], t[2]};
    std::sort(f.begin(), f.end());
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Facet> Complex3::star(const Edge& e) const {
  std::vector<Facet> out;
  for (const auto& f : facets_) {
    if (std::binary_search(f.begin(), f.end(), e[0]) &&
        std::binary_search(f.begin(), f.end(), e[1]))
      out.push_back(f);
  }
  return out;
}

bool Complex3::adjacent(VertexId u, VertexId v) const {
  if (u == v) return false;
  return has_edge(make_edge(u, v));
}

bool Complex3::in_star(VertexId u, VertexId v) const {
  return u == v || adjacent(u, v);
}

FVector f_vector(const Complex3& K) {
  FVector f;
  f.f0 = static_cast<long>(K.vertices().size());
  f.f1 = static_cast<long>(K.edges().size());
  f.f2 = static_cast<long>(K.triangles().size());
  f.f3 = static_cast<long>(K.facets().size());
  return f;
}

GInvariants g_invariants(const Complex3& K) {
  const FVector f = f_vector(K);
  const long fv[5] = {1, f.f0, f.f1, f.f2, f.f3};
  auto binom = [](long n, long k) -> long {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };
  GInvariants g;
  for (int i = 0; i <= 4; ++i) {
    long h = 0;
    for (int j = 0; j <= i; ++j) {
      long sign = ((i - j) % 2 == 0) ? 1 : -1;
      h += sign * binom(4 - j, i - j) * fv[j];
    }
    g.h[static_cast<std::size_t>(i)] = h;
  }
  g.g2 = g.h[2] - g.h[1];
  const long closed_form = f.f1 - 4 * f.f0 + 10;
  if (g.g2 != closed_form)
    throw error("h-vector g2 disagrees with closed form");  // unreachable
  return g;
}

StarCounts star_counts(const Complex3& K, VertexId v) {
  StarCounts c;
  const auto& nbrs = K.link_vertices(v);
  c.f0 = static_cast<long>(nbrs.size()) + 1;
  // edges of st(v): the d(v) edges at v plus the edges of lk(v)
  std::set<Edge> link_edges;
  for (const auto& t : K.link_triangles(v)) {
    link_edges.insert(Edge{t[0], t[1]});
    link_edges.insert(Edge{t[0], t[2]});
    link_edges.insert(Edge{t[1], t[2]});
  }
  c.f1 = static_cast<long>(nbrs.size() + link_edges.size());
  return c;
}

ValidationReport validate_normal(const Complex3& K) {
  ValidationReport rep;

  // every triangle in exactly two facets
  std::map<Triangle, int> tri_count;
  for (const auto& f : K.facets()) {
    for (int i = 0; i < 4; ++i) {
      Triangle t;
      int n = 0;
      for (int j = 0; j < 4; ++j)
        if (j != i) t[n++] = f[j];
      ++tri_count[t];
    }
  }
  for (const auto& [t, c] : tri_count) {
    if (c != 2) {
      rep.triangles_in_two_facets = false;
      rep.failures.push_back("triangle " + to_string(t) + " lies in " +
                             std::to_string(c) + " facets");
    }
  }

  // strong connectivity: facet adjacency through shared triangles
  if (!K.facets().empty()) {
    std::map<Triangle, std::vector<std::size_t>> tri_facets;
    for (std::size_t i = 0; i < K.facets().size(); ++i) {
      const auto& f = K.facets()[i];
      for (int a = 0; a < 4; ++a) {
        Triangle t;
        int n = 0;
        for (int j = 0; j < 4; ++j)
          if (j != a) t[n++] = f[j];
        tri_facets[t].push_back(i);
      }
    }
    std::vector<char> seen(K.facets().size(), 0);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      const auto& f = K.facets()[i];
      for (int a = 0; a < 4; ++a) {
        Triangle t;
        int n = 0;
        for (int j = 0; j < 4; ++j)
          if (j != a) t[n++] = f[j];
        for (std::size_t k : tri_facets[t]) {
          if (!seen[k]) {
            seen[k] = 1;
            ++reached;
            q.push(k);
          }
        }
      }
    }
    if (reached != K.facets().size()) {
      rep.strongly_connected = false;
      rep.failures.push_back("facet adjacency graph is disconnected (" +
                             std::to_string(reached) + "/" +
                             std::to_string(K.facets().size()) + " reached)");
    }
  }

  for (VertexId v : K.vertices()) {
    Surface2 lk = K.vertex_link(v);
    std::string why;
    if (!lk.is_closed_surface(&why)) {
      rep.vertex_links_closed_surfaces = false;
      rep.failures.push_back("link of vertex " + std::to_string(v) +
                             " is not a closed surface: " + why);
    }
  }

  for (const auto& e : K.edges()) {
    try {
      K.edge_link_cycle(e);
    } catch (const error& err) {
      rep.edge_links_single_cycles = false;
      rep.failures.push_back(err.what());
    }
  }

  return rep;
}

std::optional<int> skeleton_distance(const Complex3& K, VertexId a, VertexId b) {
  if (a == b) return 0;
  std::map<VertexId, int> dist;
  dist[a] = 0;
  std::queue<VertexId> q;
  q.push(a);
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId w : K.link_vertices(u)) {
      if (!dist.count(w)) {
        dist[w] = dist[u] + 1;
        if (w == b) return dist[w];
        q.push(w);
      }
    }
  }
  return std::nullopt;
}

}  // namespace pm3
