#include "pm3/generators.hpp"

#include <algorithm>

#include "pm3/surgery.hpp"

namespace pm3 {

namespace {

std::vector<std::pair<VertexId, VertexId>> index_pairs(const Facet& a,
                                                       const Facet& b) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (int i = 0; i < 4; ++i)
    out.emplace_back(a[static_cast<std::size_t>(i)],
                     b[static_cast<std::size_t>(i)]);
  return out;
}

// glue a fresh boundary 4-simplex onto `at`, returning the new complex and
// the label of the block's free vertex
std::pair<Complex3, VertexId> attach_block(const Complex3& K, const Facet& at) {
  Complex3 block = boundary_4_simplex();
  const Facet base{0, 1, 2, 3};
  Complex3 out = connected_sum(K, at, block, base, index_pairs(at, base));
  return {out, out.max_vertex()};
}

// grow an arm of `len` blocks whose glue facets all contain the vertices of
// `keep` (0, 1 or 2 labels); state starts from the remaining vertices of
// `root`. Returns the complex and the final free facet.
std::pair<Complex3, Facet> grow_arm(Complex3 K, const Facet& root,
                                    const std::vector<VertexId>& keep,
                                    int len) {
  std::vector<VertexId> state;
  for (VertexId x : root)
    if (std::find(keep.begin(), keep.end(), x) == keep.end())
      state.push_back(x);
  Facet glue = root;
  for (int i = 0; i < len; ++i) {
    auto [next, fresh] = attach_block(K, glue);
    K = std::move(next);
    state.erase(state.begin());
    state.push_back(fresh);
    Facet g{};
    std::size_t m = 0;
    for (VertexId x : keep) g[m++] = x;
    for (VertexId x : state) g[m++] = x;
    std::sort(g.begin(), g.end());
    glue = g;
  }
  return {std::move(K), glue};
}

constexpr int kMaxChainSearch = 40;

}  // namespace

Complex3 boundary_4_simplex() {
  std::vector<Facet> facets;
  for (VertexId drop = 0; drop < 5; ++drop) {
    Facet f{};
    std::size_t n = 0;
    for (VertexId v = 0; v < 5; ++v)
      if (v != drop) f[n++] = v;
    facets.push_back(f);
  }
  return Complex3::from_facets(std::move(facets));
}

Complex3 chain_sum(int k) {
  if (k < 1) throw error("chain_sum: need at least one block");
  auto [K, end] = grow_arm(boundary_4_simplex(), Facet{1, 2, 3, 4}, {}, k - 1);
  (void)end;
  return K;
}

Complex3 handle_example() {
  const Facet start{0, 1, 2, 3};
  for (int len = 1; len <= kMaxChainSearch; ++len) {
    auto [K, fin] = grow_arm(boundary_4_simplex(), Facet{1, 2, 3, 4}, {}, len);
    // farthest-apart pairing first: smallest source label onto largest target
    for (bool reversed : {true, false}) {
      Facet tgt = fin;
      if (reversed) std::reverse(tgt.begin(), tgt.end());
      FacetBijection psi = make_bijection(start, fin, index_pairs(start, tgt));
      if (!check_admissible(K, psi, GlueKind::Handle).ok) continue;
      Complex3 out = handle_addition(K, psi);
      if (!singular_vertices(out).empty()) continue;
      return out;
    }
  }
  throw error("handle_example: no admissible pair up to chain length " +
              std::to_string(kMaxChainSearch));
}

Complex3 folded_sphere_block(bool orientable) {
  for (int len = 3; len <= kMaxChainSearch; ++len) {
    // two arms meeting at vertex 0
    auto [K1, endA] =
        grow_arm(boundary_4_simplex(), Facet{0, 1, 2, 3}, {0}, len);
    auto [K2, endB] = grow_arm(K1, Facet{0, 1, 2, 4}, {0}, len);
    // pair the three non-shared vertices in each of the six ways
    std::array<VertexId, 3> ys{}, zs{};
    std::size_t m = 0;
    for (VertexId x : endA)
      if (x != 0) ys[m++] = x;
    m = 0;
    for (VertexId x : endB)
      if (x != 0) zs[m++] = x;
    std::sort(zs.begin(), zs.end());
    do {
      std::vector<std::pair<VertexId, VertexId>> pairs{{0, 0}};
      for (std::size_t i = 0; i < 3; ++i) pairs.emplace_back(ys[i], zs[i]);
      FacetBijection psi = make_bijection(endA, endB, pairs);
      if (!check_admissible(K2, psi, GlueKind::VertexFold).ok) continue;
      Complex3 out = vertex_folding(K2, psi);
      if (classify_surface(out.vertex_link(0)).orientable() != orientable)
        continue;
      return out;
    } while (std::next_permutation(zs.begin(), zs.end()));
  }
  throw error("folded_sphere_block: no admissible fold up to arm length " +
              std::to_string(kMaxChainSearch));
}

Complex3 sharp_one_singularity(int n, bool orientable) {
  if (n < 1) throw error("sharp_one_singularity: need n >= 1");
  Complex3 acc = handle_example();
  bool have_singular = false;
  VertexId v = 0;
  for (int i = 0; i < n; ++i) {
    Complex3 block = folded_sphere_block(orientable);
    const VertexId vi = 0;  // the block's singular vertex
    // lexicographically smallest facet of acc containing the running
    // singular vertex (any facet on the first step)
    Facet sigma_acc{};
    bool found = false;
    for (const auto& f : acc.facets()) {
      if (!have_singular ||
          std::binary_search(f.begin(), f.end(), v)) {
        sigma_acc = f;
        found = true;
        break;
      }
    }
    if (!found) throw error("sharp_one_singularity: no facet at the singular vertex");
    const VertexId xbar = have_singular ? v : sigma_acc[0];

    Facet sigma_blk{};
    for (const auto& f : block.facets())
      if (std::binary_search(f.begin(), f.end(), vi)) {
        sigma_blk = f;
        break;
      }
    // pairing sends xbar to the block's singular vertex, rest in order
    std::vector<std::pair<VertexId, VertexId>> pairs{{xbar, vi}};
    std::vector<VertexId> rest_src, rest_tgt;
    for (VertexId x : sigma_acc)
      if (x != xbar) rest_src.push_back(x);
    for (VertexId x : sigma_blk)
      if (x != vi) rest_tgt.push_back(x);
    for (std::size_t k = 0; k < 3; ++k)
      pairs.emplace_back(rest_src[k], rest_tgt[k]);
    acc = connected_sum(acc, sigma_acc, block, sigma_blk, pairs);
    v = xbar;
    have_singular = true;
  }
  return acc;
}

Complex3 sharp_two_singularities(int m) {
  if (m < 1) throw error("sharp_two_singularities: need m >= 1");
  Complex3 base = (m == 1) ? handle_example() : sharp_one_singularity(m - 1);
  auto sing = singular_vertices(base);
  const VertexId t = sing.empty() ? *base.vertices().begin() : sing[0].first;
  // the fold edge ta, a = smallest neighbour of t
  const VertexId a = base.link_vertices(t).front();
  const Edge ta = make_edge(t, a);

  // two arms rooted at distinct facets around ta keep the edge in every
  // glue facet, so the arm tips share exactly {t, a}
  std::vector<Facet> roots = base.star(ta);
  for (int len = 3; len <= kMaxChainSearch; ++len) {
    auto [K1, endA] = grow_arm(base, roots[0], {ta[0], ta[1]}, len);
    auto [K2, endB] = grow_arm(K1, roots[1], {ta[0], ta[1]}, len);
    std::array<VertexId, 2> ys{}, zs{};
    std::size_t k = 0;
    for (VertexId x : endA)
      if (x != ta[0] && x != ta[1]) ys[k++] = x;
    k = 0;
    for (VertexId x : endB)
      if (x != ta[0] && x != ta[1]) zs[k++] = x;
    for (int swap = 0; swap < 2; ++swap) {
      std::vector<std::pair<VertexId, VertexId>> pairs{
          {ta[0], ta[0]},
          {ta[1], ta[1]},
          {ys[0], zs[static_cast<std::size_t>(swap)]},
          {ys[1], zs[static_cast<std::size_t>(1 - swap)]}};
      FacetBijection psi = make_bijection(endA, endB, pairs);
      if (!check_admissible(K2, psi, GlueKind::EdgeFold).ok) continue;
      return edge_folding(K2, psi);
    }
  }
  throw error("sharp_two_singularities: no admissible edge fold up to arm length " +
              std::to_string(kMaxChainSearch));
}

Surface2 rp2_6() {
  return Surface2::from_triangles({{1, 2, 5},
                                   {1, 2, 6},
                                   {1, 3, 4},
                                   {1, 3, 6},
                                   {1, 4, 5},
                                   {2, 3, 4},
                                   {2, 3, 5},
                                   {2, 4, 6},
                                   {3, 5, 6},
                                   {4, 5, 6}});
}

Surface2 torus_7() {
  std::vector<Triangle> tris;
  for (VertexId i = 0; i < 7; ++i) {
    tris.push_back(make_triangle(i, (i + 1) % 7, (i + 3) % 7));
    tris.push_back(make_triangle(i, (i + 2) % 7, (i + 3) % 7));
  }
  return Surface2::from_triangles(std::move(tris));
}

Complex3 generate_complex(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::Boundary4Simplex: return boundary_4_simplex();
    case GeneratorKind::ChainSum: return chain_sum(spec.n);
    case GeneratorKind::HandleExample: return handle_example();
    case GeneratorKind::SharpOneSingularity:
      return sharp_one_singularity(spec.n, spec.orientable);
    case GeneratorKind::SharpTwoSingularities:
      return sharp_two_singularities(spec.n);
    case GeneratorKind::SurfaceRP2_6:
    case GeneratorKind::SurfaceTorus7:
      throw error("generator kind produces a surface, not a complex");
  }
  throw error("unknown generator kind");
}

Surface2 generate_surface(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::SurfaceRP2_6: return rp2_6();
    case GeneratorKind::SurfaceTorus7: return torus_7();
    default: throw error("generator kind produces a complex, not a surface");
  }
}

}  // namespace pm3
