#include "isores/realgraphs.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "isores/counting.hpp"

namespace isores {

namespace {

struct Edge {
  int u = 0;      // 0-based endpoints
  int v = 0;
  bool from_u = true;  // oriented u -> v
};

// One admissible rotation at a vertex: edge darts in cyclic order (the first
// dart is anchored) and the number of half-edges in each gap. The gap after
// dart i must hold an even number of half-edges when dart i and its cyclic
// successor have equal orientation and an odd number otherwise.
struct RotOption {
  std::vector<int> order;
  std::vector<int> gaps;
};

void compositions(int total, int parts, std::vector<int>& current,
                  const std::function<void(const std::vector<int>&)>& sink) {
  if (parts == 1) {
    current.push_back(total);
    sink(current);
    current.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    current.push_back(first);
    compositions(total - first, parts - 1, current, sink);
    current.pop_back();
  }
}

std::vector<RotOption> rotation_options(const std::vector<int>& darts,
                                        const std::vector<char>& dart_out,
                                        int half_edges) {
  std::vector<RotOption> options;
  const int deg = static_cast<int>(darts.size());
  if (deg == 0) return options;

  std::vector<int> rest(darts.begin() + 1, darts.end());
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<int> order{darts[0]};
    order.insert(order.end(), rest.begin(), rest.end());
    std::vector<int> parity(deg);
    int parity_sum = 0;
    for (int i = 0; i < deg; ++i) {
      parity[i] = dart_out[order[i]] == dart_out[order[(i + 1) % deg]] ? 0 : 1;
      parity_sum += parity[i];
    }
    const int spare = half_edges - parity_sum;
    if (spare < 0 || spare % 2 != 0) continue;
    std::vector<int> current;
    compositions(spare / 2, deg, current, [&](const std::vector<int>& halves) {
      RotOption opt;
      opt.order = order;
      opt.gaps.resize(deg);
      for (int i = 0; i < deg; ++i) opt.gaps[i] = parity[i] + 2 * halves[i];
      options.push_back(std::move(opt));
    });
  } while (std::next_permutation(rest.begin(), rest.end()));
  return options;
}

std::vector<int> build_rot_next(const DecoratedGraph& g) {
  std::vector<int> rot_next(g.vert.size(), -1);
  for (const auto& list : g.rot) {
    const int n = static_cast<int>(list.size());
    for (int i = 0; i < n; ++i) rot_next[list[i]] = list[(i + 1) % n];
  }
  return rot_next;
}

void trace_faces(DecoratedGraph& g) {
  const std::vector<int> rot_next = build_rot_next(g);
  const int darts = static_cast<int>(g.vert.size());
  g.face_of.assign(darts, -1);
  g.face_sides.clear();
  g.face_half_edges.clear();
  for (int start = 0; start < darts; ++start) {
    if (g.face_of[start] >= 0) continue;
    const int f = static_cast<int>(g.face_sides.size());
    g.face_sides.push_back(0);
    g.face_half_edges.push_back(0);
    int cur = start;
    do {
      g.face_of[cur] = f;
      if (g.rev[cur] >= 0) {
        ++g.face_sides[f];
        cur = rot_next[g.rev[cur]];
      } else {
        ++g.face_half_edges[f];
        cur = rot_next[cur];
      }
    } while (cur != start);
  }
  g.face_label.assign(g.face_sides.size(), 0);
}

// Canonical encoding of the labeled oriented map: breadth-first dart
// relabeling from every root, keeping the lexicographically smallest
// serialization. Half-edge darts are indistinguishable; vertex labels,
// orientations and face labels are part of the code.
std::string canonical_code(const DecoratedGraph& g) {
  const std::vector<int> rot_next = build_rot_next(g);
  const int darts = static_cast<int>(g.vert.size());
  std::string best;
  std::vector<int> id(darts);
  std::vector<int> order;
  order.reserve(darts);
  for (int root = 0; root < darts; ++root) {
    std::fill(id.begin(), id.end(), -1);
    order.clear();
    id[root] = 0;
    order.push_back(root);
    for (size_t qi = 0; qi < order.size(); ++qi) {
      const int d = order[qi];
      const int nx = rot_next[d];
      if (id[nx] < 0) {
        id[nx] = static_cast<int>(order.size());
        order.push_back(nx);
      }
      const int rv = g.rev[d];
      if (rv >= 0 && id[rv] < 0) {
        id[rv] = static_cast<int>(order.size());
        order.push_back(rv);
      }
    }
    std::string code;
    code.reserve(darts * 5);
    for (int d : order) {
      code.push_back(static_cast<char>(g.vert[d]));
      code.push_back(static_cast<char>(g.out[d] ? 1 : 0));
      code.push_back(static_cast<char>(id[rot_next[d]]));
      code.push_back(g.rev[d] >= 0 ? static_cast<char>(id[g.rev[d]])
                                   : static_cast<char>(0xff));
      code.push_back(static_cast<char>(g.face_label[g.face_of[d]]));
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

// Assembles every admissible rotation system over the oriented edge skeleton
// and hands the finished maps to the sink.
void assemble_maps(int p, const std::vector<int>& b, int positive_pole,
                   const std::vector<Edge>& edges,
                   const std::function<void(DecoratedGraph&&)>& sink) {
  int total_darts = static_cast<int>(edges.size()) * 2;
  for (int bv : b) total_darts += 2 * bv - 2;
  if (total_darts > 250)  // dart ids are bytes in the canonical encoding
    throw Error(Errc::ResourceLimit, "decorated graph exceeds 250 darts");
  const int edge_darts = static_cast<int>(edges.size()) * 2;
  std::vector<int> dart_vertex(edge_darts);
  std::vector<int> dart_rev(edge_darts);
  std::vector<char> dart_out(edge_darts);
  std::vector<std::vector<int>> at_vertex(p);
  for (size_t e = 0; e < edges.size(); ++e) {
    const int d0 = static_cast<int>(2 * e), d1 = d0 + 1;
    dart_vertex[d0] = edges[e].u;
    dart_vertex[d1] = edges[e].v;
    dart_rev[d0] = d1;
    dart_rev[d1] = d0;
    dart_out[d0] = edges[e].from_u;
    dart_out[d1] = !edges[e].from_u;
    at_vertex[edges[e].u].push_back(d0);
    at_vertex[edges[e].v].push_back(d1);
  }

  std::vector<std::vector<RotOption>> options(p);
  for (int v = 0; v < p; ++v) {
    options[v] = rotation_options(at_vertex[v], dart_out, 2 * b[v] - 2);
    if (options[v].empty()) return;
  }

  std::vector<const RotOption*> chosen(p);
  std::function<void(int)> walk = [&](int v) {
    if (v == p) {
      DecoratedGraph g;
      g.p = p;
      g.pole_orders = b;
      g.positive_pole = positive_pole;
      g.vert = dart_vertex;
      g.rev = dart_rev;
      g.out = dart_out;
      for (int& label : g.vert) ++label;  // store 1-based labels
      g.rot.assign(p, {});
      for (int w = 0; w < p; ++w) {
        const RotOption& opt = *chosen[w];
        for (size_t i = 0; i < opt.order.size(); ++i) {
          g.rot[w].push_back(opt.order[i]);
          for (int h = 0; h < opt.gaps[i]; ++h) {
            const int dart = static_cast<int>(g.vert.size());
            g.vert.push_back(w + 1);
            g.rev.push_back(-1);
            g.out.push_back(0);
            g.rot[w].push_back(dart);
          }
        }
      }
      trace_faces(g);
      sink(std::move(g));
      return;
    }
    for (const RotOption& opt : options[v]) {
      chosen[v] = &opt;
      walk(v + 1);
    }
  };
  walk(0);
}

void check_limits(const Stratum& s, const GraphLimits& limits) {
  if (s.num_zeros() != 2)
    throw Error(Errc::WrongZeroCount, "decorated-graph enumeration needs exactly 2 zeros");
  if (limits.override_limits) return;
  const int p = s.num_poles();
  const bool all_simple = std::all_of(s.pole_orders.begin(), s.pole_orders.end(),
                                      [](int b) { return b == 1; });
  if (all_simple) {
    if (p > limits.max_poles_simple)
      throw Error(Errc::ResourceLimit,
                  "graph enumeration bound for simple poles is p <= " +
                      std::to_string(limits.max_poles_simple));
  } else {
    const int a = s.zero_orders[0] + s.zero_orders[1];
    if (p > limits.max_poles || a > limits.max_zero_order)
      throw Error(Errc::ResourceLimit,
                  "graph enumeration bound is p <= " + std::to_string(limits.max_poles) +
                      " and a1 + a2 <= " + std::to_string(limits.max_zero_order));
  }
}

void check_positive_pole(const Stratum& s, int positive_pole) {
  if (positive_pole < 1 || positive_pole > s.num_poles())
    throw Error(Errc::IndexOutOfRange, "positive pole index out of range");
}

// Parent assignments attaching the vertices outside the cycle as trees; the
// resulting edge sets {v, parent(v)} range over all unicyclic graphs with the
// given cycle, each exactly once.
void enumerate_forests(
    int p, const std::vector<int>& cycle,
    const std::function<void(const std::vector<int>&, const std::vector<int>&)>& sink) {
  std::vector<char> on_cycle(p, 0);
  for (int v : cycle) on_cycle[v] = 1;
  std::vector<int> rest;
  for (int v = 0; v < p; ++v)
    if (!on_cycle[v]) rest.push_back(v);
  std::vector<int> parent(p, -1);
  if (rest.empty()) {
    sink(cycle, parent);
    return;
  }
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == rest.size()) {
      for (int v : rest) {
        int w = v, steps = 0;
        while (!on_cycle[w]) {
          w = parent[w];
          if (++steps > p) return;  // cyclic among the tree vertices
        }
      }
      sink(cycle, parent);
      return;
    }
    for (int q = 0; q < p; ++q) {
      if (q == rest[i]) continue;
      parent[rest[i]] = q;
      rec(i + 1);
    }
    parent[rest[i]] = -1;
  };
  rec(0);
}

// Labeled trees on p vertices by Prüfer decoding; p >= 2.
void for_each_tree(int p, const std::function<void(const std::vector<std::pair<int, int>>&)>& sink) {
  if (p == 2) {
    sink({{0, 1}});
    return;
  }
  std::vector<int> seq(p - 2, 0);
  std::vector<std::pair<int, int>> edges(p - 1);
  while (true) {
    std::vector<int> degree(p, 1);
    for (int x : seq) ++degree[x];
    std::vector<char> used(p, 0);
    int e = 0;
    std::vector<int> deg = degree;
    for (int x : seq) {
      int leaf = -1;
      for (int v = 0; v < p; ++v)
        if (deg[v] == 1 && !used[v]) {
          leaf = v;
          break;
        }
      used[leaf] = 1;
      edges[e++] = {leaf, x};
      --deg[x];
    }
    int last1 = -1, last2 = -1;
    for (int v = 0; v < p; ++v)
      if (!used[v] && deg[v] == 1) (last1 < 0 ? last1 : last2) = v;
    edges[e++] = {last1, last2};
    sink(edges);

    int i = p - 3;
    while (i >= 0 && seq[i] == p - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

} // namespace

int DecoratedGraph::num_edges() const {
  int c = 0;
  for (int r : rev)
    if (r >= 0) ++c;
  return c / 2;
}

int DecoratedGraph::num_half_edges() const {
  int c = 0;
  for (int r : rev)
    if (r < 0) ++c;
  return c;
}

std::vector<DecoratedGraph> enumerate_zero_graphs(const Stratum& s, int positive_pole,
                                                  const GraphLimits& limits) {
  check_limits(s, limits);
  check_positive_pole(s, positive_pole);
  const int p = s.num_poles();
  const std::vector<int>& b = s.pole_orders;
  const int a = s.zero_orders[0] + s.zero_orders[1];
  if (p == 1) return {};  // empty generic fiber

  const int root = positive_pole - 1;
  std::map<std::string, DecoratedGraph> found;

  for_each_tree(p, [&](const std::vector<std::pair<int, int>>& tree) {
    // orient every edge toward the side containing the positive pole
    std::vector<std::vector<int>> adj(p);
    for (const auto& [u, v] : tree) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<int> parent(p, -1);
    std::vector<int> stack{root};
    std::vector<char> seen(p, 0);
    seen[root] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          stack.push_back(w);
        }
    }
    std::vector<Edge> edges;
    edges.reserve(tree.size());
    for (const auto& [u, v] : tree) {
      if (parent[u] == v)
        edges.push_back({u, v, true});
      else
        edges.push_back({v, u, true});
    }
    assemble_maps(p, b, positive_pole, edges, [&](DecoratedGraph&& g) {
      if (g.num_faces() != 1)
        throw Error(Errc::NonIntegral, "tree rotation system traced more than one face");
      if (g.face_sides[0] + g.face_half_edges[0] != 2 * a + 2)
        throw Error(Errc::NonIntegral, "tree face weight mismatch");
      g.canonical = canonical_code(g);
      found.emplace(g.canonical, std::move(g));
    });
  });

  std::vector<DecoratedGraph> out;
  out.reserve(found.size());
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

namespace {

DecoratedGraph delete_edge(const DecoratedGraph& g, int dart) {
  const int r = g.rev[dart];
  const int darts = static_cast<int>(g.vert.size());
  std::vector<int> remap(darts, -1);
  int next_id = 0;
  for (int d = 0; d < darts; ++d)
    if (d != dart && d != r) remap[d] = next_id++;

  DecoratedGraph out;
  out.p = g.p;
  out.pole_orders = g.pole_orders;
  out.positive_pole = g.positive_pole;
  out.vert.resize(next_id);
  out.rev.resize(next_id);
  out.out.resize(next_id);
  for (int d = 0; d < darts; ++d) {
    if (remap[d] < 0) continue;
    out.vert[remap[d]] = g.vert[d];
    out.rev[remap[d]] = g.rev[d] >= 0 ? remap[g.rev[d]] : -1;
    out.out[remap[d]] = g.out[d];
  }
  out.rot.assign(g.p, {});
  for (int v = 0; v < g.p; ++v)
    for (int d : g.rot[v])
      if (remap[d] >= 0) out.rot[v].push_back(remap[d]);
  trace_faces(out);
  out.canonical = canonical_code(out);
  return out;
}

} // namespace

std::vector<SaddleGraph> enumerate_saddle_graphs(const Stratum& s, int positive_pole,
                                                 const GraphLimits& limits) {
  check_limits(s, limits);
  check_positive_pole(s, positive_pole);
  const int p = s.num_poles();
  const std::vector<int>& b = s.pole_orders;
  const int a1 = s.zero_orders[0], a2 = s.zero_orders[1];
  if (p == 1) return {};

  const int P = positive_pole - 1;
  std::map<std::string, SaddleGraph> found;

  // visit one unicyclic structure: cycle vertex list + parent map on the rest
  auto handle_structure = [&](const std::vector<int>& cycle, const std::vector<int>& parent) {
    const int c = static_cast<int>(cycle.size());
    std::vector<char> on_cycle(p, 0);
    std::vector<int> pos(p, -1);
    for (int i = 0; i < c; ++i) {
      on_cycle[cycle[i]] = 1;
      pos[cycle[i]] = i;
    }
    // anchor of every vertex on the cycle
    std::vector<int> anchor(p, -1);
    for (int i = 0; i < c; ++i) anchor[cycle[i]] = cycle[i];
    for (int v = 0; v < p; ++v) {
      if (anchor[v] >= 0) continue;
      std::vector<int> chain;
      int w = v;
      while (anchor[w] < 0) {
        chain.push_back(w);
        w = parent[w];
      }
      for (int x : chain) anchor[x] = anchor[w];
    }
    // vertices on the parent chain of the positive pole (P's side of tree edges)
    std::vector<char> on_p_chain(p, 0);
    if (!on_cycle[P]) {
      int w = P;
      while (!on_cycle[w]) {
        on_p_chain[w] = 1;
        w = parent[w];
      }
    }
    const int T = anchor[P];

    for (int bi = 0; bi < c; ++bi) {
      const int B = cycle[bi];
      if (B == T) continue;

      std::vector<Edge> edges;
      const int ti = pos[T];
      // forward arc B -> ... -> T
      for (int k = bi; k != ti; k = (k + 1) % c)
        edges.push_back({cycle[k], cycle[(k + 1) % c], true});
      // backward arc B -> ... -> T
      for (int k = bi; k != ti; k = (k - 1 + c) % c)
        edges.push_back({cycle[k], cycle[(k - 1 + c) % c], true});
      const int cycle_edge_count = static_cast<int>(edges.size());
      // tree edges: toward the cycle, except along the chain that leads to P
      for (int v = 0; v < p; ++v) {
        if (on_cycle[v]) continue;
        if (on_p_chain[v])
          edges.push_back({parent[v], v, true});
        else
          edges.push_back({v, parent[v], true});
      }

      assemble_maps(p, b, positive_pole, edges, [&](DecoratedGraph&& g) {
        if (g.num_faces() != 2)
          throw Error(Errc::NonIntegral, "unicyclic rotation system traced != 2 faces");
        const int w0 = g.face_sides[0] + g.face_half_edges[0];
        const int w1 = g.face_sides[1] + g.face_half_edges[1];
        std::vector<std::pair<int, int>> labelings;  // face 0 label, face 1 label
        if (w0 == 2 * a1 + 2 && w1 == 2 * a2 + 2) labelings.emplace_back(1, 2);
        if (w0 == 2 * a2 + 2 && w1 == 2 * a1 + 2 && a1 != a2) labelings.emplace_back(2, 1);
        if (w0 == w1 && a1 == a2) labelings.emplace_back(2, 1);
        if (labelings.empty()) return;

        // the two loop darts at B (cycle edges 0 and cycle_edge_count/... the
        // arcs both start at B, so darts 0 and 2*(forward arc length) are at B)
        std::vector<int> loop_darts_at_b;
        for (int e = 0; e < cycle_edge_count; ++e) {
          if (g.vert[2 * e] == B + 1 && g.out[2 * e]) loop_darts_at_b.push_back(2 * e);
        }
        if (loop_darts_at_b.size() != 2)
          throw Error(Errc::NonIntegral, "bottom vertex does not carry two outgoing loop darts");

        ResidueForm length = zero_form(p);
        for (int v = 0; v < p; ++v)
          if (v == B || (!on_cycle[v] && anchor[v] == B)) length.coeffs[v] = 1;

        for (auto [l0, l1] : labelings) {
          DecoratedGraph labeled = g;
          labeled.face_label[0] = l0;
          labeled.face_label[1] = l1;
          labeled.canonical = canonical_code(labeled);
          if (found.count(labeled.canonical)) continue;
          SaddleGraph sg;
          sg.bottom_vertex = B + 1;
          sg.length_form = length;
          sg.endpoint_first = delete_edge(labeled, loop_darts_at_b[0]);
          sg.endpoint_second = delete_edge(labeled, loop_darts_at_b[1]);
          std::string key = labeled.canonical;
          sg.graph = std::move(labeled);
          found.emplace(std::move(key), std::move(sg));
        }
      });
    }
  };

  // bigons
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v) {
      std::vector<int> cycle{u, v};
      enumerate_forests(p, cycle, handle_structure);
    }
  // longer cycles
  for (int mask = 0; mask < (1 << p); ++mask) {
    const int c = std::popcount(static_cast<unsigned>(mask));
    if (c < 3) continue;
    std::vector<int> members;
    for (int v = 0; v < p; ++v)
      if ((mask >> v) & 1) members.push_back(v);
    std::vector<int> rest(members.begin() + 1, members.end());
    std::sort(rest.begin(), rest.end());
    do {
      if (rest.front() > rest.back()) continue;  // one orientation per cycle graph
      std::vector<int> cycle{members[0]};
      cycle.insert(cycle.end(), rest.begin(), rest.end());
      enumerate_forests(p, cycle, handle_structure);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  std::vector<SaddleGraph> out;
  out.reserve(found.size());
  for (auto& [code, sg] : found) out.push_back(std::move(sg));
  return out;
}

int adjacency_components(const Stratum& s, int positive_pole, const GraphLimits& limits) {
  const std::vector<DecoratedGraph> zeros = enumerate_zero_graphs(s, positive_pole, limits);
  if (zeros.empty()) return 0;
  std::map<std::string, int> index;
  for (size_t i = 0; i < zeros.size(); ++i) index.emplace(zeros[i].canonical, static_cast<int>(i));

  std::vector<int> dsu(zeros.size());
  std::iota(dsu.begin(), dsu.end(), 0);
  std::function<int(int)> find = [&](int x) { return dsu[x] == x ? x : dsu[x] = find(dsu[x]); };

  for (const SaddleGraph& sg : enumerate_saddle_graphs(s, positive_pole, limits)) {
    auto ia = index.find(sg.endpoint_first.canonical);
    auto ib = index.find(sg.endpoint_second.canonical);
    if (ia == index.end() || ib == index.end())
      throw Error(Errc::NonIntegral, "saddle-graph endpoint is not an enumerated zero graph");
    dsu[find(ia->second)] = find(ib->second);
  }
  std::set<int> roots;
  for (size_t i = 0; i < zeros.size(); ++i) roots.insert(find(static_cast<int>(i)));
  return static_cast<int>(roots.size());
}

std::string export_dot(const std::vector<DecoratedGraph>& graphs) {
  std::string out =
      "// decorated graphs: vertices are poles, arrows follow the forced edge "
      "orientations,\n// dashed stubs are half-edges, faces are listed as comments\n";
  for (size_t gi = 0; gi < graphs.size(); ++gi) {
    const DecoratedGraph& g = graphs[gi];
    out += "digraph g" + std::to_string(gi) + " {\n";
    for (int v = 1; v <= g.p; ++v)
      out += "  p" + std::to_string(v) + " [label=\"p" + std::to_string(v) + " (b=" +
             std::to_string(g.pole_orders[v - 1]) + ")\"];\n";
    const int darts = static_cast<int>(g.vert.size());
    int stub = 0;
    for (int d = 0; d < darts; ++d) {
      if (g.rev[d] > d) {
        const int tail = g.out[d] ? g.vert[d] : g.vert[g.rev[d]];
        const int head = g.out[d] ? g.vert[g.rev[d]] : g.vert[d];
        out += "  p" + std::to_string(tail) + " -> p" + std::to_string(head) + ";\n";
      } else if (g.rev[d] < 0) {
        const std::string name = "h" + std::to_string(gi) + "_" + std::to_string(stub++);
        out += "  " + name + " [shape=point, label=\"\"];\n";
        out += "  p" + std::to_string(g.vert[d]) + " -> " + name +
               " [style=dashed, arrowhead=none];\n";
      }
    }
    for (int f = 0; f < g.num_faces(); ++f) {
      out += "  // face " + std::to_string(f) + ": sides " + std::to_string(g.face_sides[f]) +
             ", half-edges " + std::to_string(g.face_half_edges[f]);
      if (g.face_label[f] > 0) out += ", zero z" + std::to_string(g.face_label[f]);
      out += "\n";
    }
    out += "}\n";
  }
  return out;
}

} // namespace isores
