#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/partition.hpp"

namespace ua {

struct LabeledEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string op;

  friend bool operator==(LabeledEdge const&, LabeledEdge const&) = default;
  friend auto operator<=>(LabeledEdge const&, LabeledEdge const&) = default;
};

// Γ(A) and induced pieces of it. Edges are kept sorted by (source, op, target).
struct AlgebraDigraph {
  std::size_t vertex_count = 0;
  std::vector<LabeledEdge> edges;

  std::vector<std::vector<std::size_t>> out_neighbours() const;
  std::vector<std::vector<std::size_t>> in_neighbours() const;
};

// One edge a -> f(a) per element a and operation f.
AlgebraDigraph gamma(UnaryAlgebra const& algebra);

struct ComponentAnalysis {
  Partition connected_components;
  // Strongly connected components; scc ids are the block ids of `sccs`.
  Partition sccs;
  // Direct successor sccs in the condensation (no self entries), sorted.
  std::vector<std::vector<std::size_t>> scc_successors;
  // sccs with no incoming edge from another scc, increasing.
  std::vector<std::size_t> top_sccs;
  // Indexed by connected-component id: the unique minimal scc, if any.
  std::vector<std::optional<std::size_t>> bottom_scc_per_component;

  std::size_t component_of_scc(std::size_t scc) const;
  // Reflexive reachability in the condensation.
  bool scc_reaches(std::size_t from, std::size_t to) const;
  std::vector<std::size_t> minimal_sccs() const;
};

ComponentAnalysis analyze_components(AlgebraDigraph const& graph);

struct OuterSection {
  std::vector<std::size_t> vertices;  // increasing, global vertex ids
  std::vector<LabeledEdge> edges;     // induced, global ids

  // The section on local ids 0..|vertices|-1 (position in `vertices`).
  AlgebraDigraph to_digraph() const;
};

// Components of Γ(A) minus its bottom scc, ordered by least vertex. Throws
// NotConnected / NoBottom when the algebra has several components or no
// unique minimal scc.
std::vector<OuterSection> outer_sections(UnaryAlgebra const& algebra);
std::vector<OuterSection> outer_sections(AlgebraDigraph const& graph);

// Strict in-degree per vertex along the edges labelled `op`. Throws UnknownOp
// when no such label is present and the graph has vertices.
std::vector<std::size_t> predecessor_profile(AlgebraDigraph const& graph,
                                             std::string_view op);

// Connected components of the undirected graph induced on `vertices`.
std::size_t induced_undirected_component_count(AlgebraDigraph const& graph,
                                                std::vector<std::size_t> const& vertices);

std::string to_dot(AlgebraDigraph const& graph, std::string_view name = "G");

}  // namespace ua
