#include "ua/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ua {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Iterative Tarjan; returns an scc id per vertex (ids arbitrary).
std::vector<std::size_t> tarjan(std::vector<std::vector<std::size_t>> const& out) {
  auto const n = out.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next edge)
  std::size_t counter = 0, comp_count = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < out[v].size()) {
        auto const w = out[v][next++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      auto const done = v;
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comp_count;
        } while (w != done);
        ++comp_count;
      }
      call.pop_back();
      if (!call.empty()) {
        auto const parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

}  // namespace

std::vector<std::vector<std::size_t>> AlgebraDigraph::out_neighbours() const {
  std::vector<std::vector<std::size_t>> out(vertex_count);
  for (auto const& e : edges) out[e.source].push_back(e.target);
  for (auto& list : out) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return out;
}

std::vector<std::vector<std::size_t>> AlgebraDigraph::in_neighbours() const {
  std::vector<std::vector<std::size_t>> in(vertex_count);
  for (auto const& e : edges) in[e.target].push_back(e.source);
  for (auto& list : in) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return in;
}

AlgebraDigraph gamma(UnaryAlgebra const& algebra) {
  AlgebraDigraph g;
  g.vertex_count = algebra.size();
  g.edges.reserve(algebra.size() * algebra.op_count());
  for (std::size_t a = 0; a < algebra.size(); ++a) {
    for (auto const& [name, table] : algebra.ops()) {
      g.edges.push_back({a, table[a], name});
    }
  }
  return g;
}

std::size_t ComponentAnalysis::component_of_scc(std::size_t scc) const {
  for (std::size_t v = 0; v < sccs.size(); ++v) {
    if (sccs.block_of(v) == scc) return connected_components.block_of(v);
  }
  return static_cast<std::size_t>(-1);
}

bool ComponentAnalysis::scc_reaches(std::size_t from, std::size_t to) const {
  std::vector<bool> seen(scc_successors.size(), false);
  std::vector<std::size_t> todo{from};
  seen[from] = true;
  while (!todo.empty()) {
    auto const s = todo.back();
    todo.pop_back();
    if (s == to) return true;
    for (auto t : scc_successors[s]) {
      if (!seen[t]) {
        seen[t] = true;
        todo.push_back(t);
      }
    }
  }
  return false;
}

std::vector<std::size_t> ComponentAnalysis::minimal_sccs() const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < scc_successors.size(); ++s) {
    if (scc_successors[s].empty()) out.push_back(s);
  }
  return out;
}

ComponentAnalysis analyze_components(AlgebraDigraph const& graph) {
  auto const n = graph.vertex_count;
  ComponentAnalysis ca;

  DisjointSets ds(n);
  for (auto const& e : graph.edges) ds.unite(e.source, e.target);
  std::vector<std::size_t> roots(n);
  for (std::size_t v = 0; v < n; ++v) roots[v] = ds.find(v);
  ca.connected_components = Partition::from_labels(std::span<std::size_t const>(roots));

  auto const out = graph.out_neighbours();
  auto const raw = tarjan(out);
  ca.sccs = Partition::from_labels(std::span<std::size_t const>(raw));

  auto const scc_count = ca.sccs.block_count();
  ca.scc_successors.assign(scc_count, {});
  std::vector<bool> has_pred(scc_count, false);
  for (auto const& e : graph.edges) {
    auto const s = ca.sccs.block_of(e.source), t = ca.sccs.block_of(e.target);
    if (s != t) {
      ca.scc_successors[s].push_back(t);
      has_pred[t] = true;
    }
  }
  for (auto& list : ca.scc_successors) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  for (std::size_t s = 0; s < scc_count; ++s) {
    if (!has_pred[s]) ca.top_sccs.push_back(s);
  }

  // In a finite poset a unique minimal element is the minimum.
  auto const comp_count = ca.connected_components.block_count();
  std::vector<std::size_t> minimal_count(comp_count, 0);
  ca.bottom_scc_per_component.assign(comp_count, std::nullopt);
  std::vector<std::size_t> scc_component(scc_count);
  for (std::size_t v = 0; v < n; ++v) {
    scc_component[ca.sccs.block_of(v)] = ca.connected_components.block_of(v);
  }
  for (std::size_t s = 0; s < scc_count; ++s) {
    if (!ca.scc_successors[s].empty()) continue;
    auto const c = scc_component[s];
    if (++minimal_count[c] == 1) ca.bottom_scc_per_component[c] = s;
  }
  for (std::size_t c = 0; c < comp_count; ++c) {
    if (minimal_count[c] != 1) ca.bottom_scc_per_component[c] = std::nullopt;
  }
  return ca;
}

AlgebraDigraph OuterSection::to_digraph() const {
  AlgebraDigraph g;
  g.vertex_count = vertices.size();
  auto local = [&](std::size_t v) {
    return static_cast<std::size_t>(
        std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  for (auto const& e : edges) g.edges.push_back({local(e.source), local(e.target), e.op});
  std::sort(g.edges.begin(), g.edges.end(), [](auto const& a, auto const& b) {
    return std::tie(a.source, a.op, a.target) < std::tie(b.source, b.op, b.target);
  });
  return g;
}

std::vector<OuterSection> outer_sections(AlgebraDigraph const& graph) {
  auto const ca = analyze_components(graph);
  if (ca.connected_components.block_count() != 1) {
    throw Error(ErrorCode::NotConnected, "outer sections need a connected algebra");
  }
  auto const bottom = ca.bottom_scc_per_component.front();
  if (!bottom) {
    throw Error(ErrorCode::NoBottom, "connected component has no bottom component");
  }
  auto const n = graph.vertex_count;
  std::vector<bool> outside(n);
  for (std::size_t v = 0; v < n; ++v) outside[v] = ca.sccs.block_of(v) != *bottom;

  DisjointSets ds(n);
  for (auto const& e : graph.edges) {
    if (outside[e.source] && outside[e.target]) ds.unite(e.source, e.target);
  }
  std::vector<OuterSection> sections;
  std::vector<std::size_t> section_of(n, static_cast<std::size_t>(-1));
  std::vector<std::size_t> root_section(n, static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < n; ++v) {
    if (!outside[v]) continue;
    auto const r = ds.find(v);
    if (root_section[r] == static_cast<std::size_t>(-1)) {
      root_section[r] = sections.size();
      sections.emplace_back();
    }
    section_of[v] = root_section[r];
    sections[section_of[v]].vertices.push_back(v);
  }
  for (auto const& e : graph.edges) {
    if (outside[e.source] && outside[e.target]) {
      sections[section_of[e.source]].edges.push_back(e);
    }
  }
  return sections;
}

std::vector<OuterSection> outer_sections(UnaryAlgebra const& algebra) {
  return outer_sections(gamma(algebra));
}

std::vector<std::size_t> predecessor_profile(AlgebraDigraph const& graph,
                                             std::string_view op) {
  std::vector<std::size_t> counts(graph.vertex_count, 0);
  bool seen = false;
  for (auto const& e : graph.edges) {
    if (e.op != op) continue;
    seen = true;
    if (e.source != e.target) ++counts[e.target];
  }
  if (!seen && graph.vertex_count > 0) {
    throw Error(ErrorCode::UnknownOp, "no edges labelled '" + std::string(op) + "'");
  }
  return counts;
}

std::size_t induced_undirected_component_count(AlgebraDigraph const& graph,
                                                std::vector<std::size_t> const& vertices) {
  std::vector<bool> inside(graph.vertex_count, false);
  for (auto v : vertices) inside[v] = true;
  DisjointSets ds(graph.vertex_count);
  for (auto const& e : graph.edges) {
    if (inside[e.source] && inside[e.target]) ds.unite(e.source, e.target);
  }
  std::vector<std::size_t> roots;
  for (auto v : vertices) roots.push_back(ds.find(v));
  std::sort(roots.begin(), roots.end());
  return static_cast<std::size_t>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

std::string to_dot(AlgebraDigraph const& graph, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < graph.vertex_count; ++v) out << "  " << v << ";\n";
  for (auto const& e : graph.edges) {
    out << "  " << e.source << " -> " << e.target << " [label=\"" << e.op << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ua
