#include "ua/iso.hpp"

#include <algorithm>
#include <numeric>

namespace ua {

namespace {

using Colors = std::vector<std::uint32_t>;
using Clock = std::chrono::steady_clock;

// Vertex-coloured digraph with edge labels 0..labels-1; the common shape of
// Γ(A) and of unlabelled digraphs.
struct Structure {
  std::size_t n = 0;
  std::vector<std::vector<std::vector<std::uint32_t>>> out;  // [label][v]
  std::vector<std::vector<std::vector<std::uint32_t>>> in;   // [label][v]

  void finish() {
    in.assign(out.size(), std::vector<std::vector<std::uint32_t>>(n));
    for (std::size_t l = 0; l < out.size(); ++l) {
      for (std::uint32_t v = 0; v < n; ++v) {
        std::sort(out[l][v].begin(), out[l][v].end());
        for (auto w : out[l][v]) in[l][w].push_back(v);
      }
    }
  }
};

Structure structure_of(UnaryAlgebra const& algebra) {
  Structure s;
  s.n = algebra.size();
  for (auto const& [name, table] : algebra.ops()) {
    std::vector<std::vector<std::uint32_t>> adj(s.n);
    for (std::size_t v = 0; v < s.n; ++v) adj[v].push_back(table[v]);
    s.out.push_back(std::move(adj));
  }
  s.finish();
  return s;
}

Structure structure_of(AlgebraDigraph const& graph) {
  Structure s;
  s.n = graph.vertex_count;
  std::vector<std::vector<std::uint32_t>> adj(s.n);
  for (std::size_t v = 0; auto const& list : graph.out_neighbours()) {
    for (auto w : list) adj[v].push_back(static_cast<std::uint32_t>(w));
    ++v;
  }
  s.out.push_back(std::move(adj));
  s.finish();
  return s;
}

// Replace colours by the ranks of their distinct values.
std::size_t compress(std::vector<std::uint64_t> const& keys, Colors& colors) {
  std::vector<std::uint64_t> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    colors[v] = static_cast<std::uint32_t>(
        std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  }
  return sorted.size();
}

std::size_t count_colors(Colors const& colors) {
  std::vector<bool> seen(colors.size(), false);
  std::size_t k = 0;
  for (auto c : colors) {
    if (!seen[c]) {
      seen[c] = true;
      ++k;
    }
  }
  return k;
}

// Colour refinement to the coarsest equitable partition finer than `colors`.
// New colours are ranks of (old colour, per-label out/in colour multisets),
// so the result depends only on the coloured structure, not on vertex ids.
void refine(Structure const& s, Colors& colors) {
  auto count = count_colors(colors);
  std::vector<std::vector<std::uint32_t>> sig(s.n);
  std::vector<std::uint32_t> order(s.n);
  while (count < s.n) {
    for (std::uint32_t v = 0; v < s.n; ++v) {
      auto& g = sig[v];
      g.clear();
      g.push_back(colors[v]);
      for (std::size_t l = 0; l < s.out.size(); ++l) {
        auto const mark = g.size();
        g.push_back(static_cast<std::uint32_t>(s.out[l][v].size()));
        for (auto w : s.out[l][v]) g.push_back(colors[w]);
        std::sort(g.begin() + static_cast<std::ptrdiff_t>(mark) + 1, g.end());
        auto const mark_in = g.size();
        g.push_back(static_cast<std::uint32_t>(s.in[l][v].size()));
        for (auto w : s.in[l][v]) g.push_back(colors[w]);
        std::sort(g.begin() + static_cast<std::ptrdiff_t>(mark_in) + 1, g.end());
      }
    }
    std::iota(order.begin(), order.end(), 0U);
    std::sort(order.begin(), order.end(),
              [&](auto a, auto b) { return sig[a] < sig[b]; });
    std::uint32_t rank = 0;
    Colors next(s.n);
    for (std::size_t i = 0; i < s.n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    auto const next_count = static_cast<std::size_t>(rank) + 1;
    colors = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }
}

std::vector<std::uint32_t> certificate(Structure const& s, Colors const& lab) {
  std::vector<std::uint32_t> inverse(s.n);
  for (std::uint32_t v = 0; v < s.n; ++v) inverse[lab[v]] = v;
  std::vector<std::uint32_t> cert;
  std::vector<std::uint32_t> row;
  for (std::size_t l = 0; l < s.out.size(); ++l) {
    for (std::uint32_t p = 0; p < s.n; ++p) {
      auto const v = inverse[p];
      row.clear();
      for (auto w : s.out[l][v]) row.push_back(lab[w]);
      std::sort(row.begin(), row.end());
      cert.push_back(static_cast<std::uint32_t>(row.size()));
      cert.insert(cert.end(), row.begin(), row.end());
    }
  }
  return cert;
}

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Individualisation-refinement search for the least certificate, with
// pruning by automorphisms discovered from equal leaves.
class CanonicalSearch {
 public:
  CanonicalSearch(Structure const& s, SearchOptions const& options) : s_(s) {
    if (options.timeout) deadline_ = Clock::now() + *options.timeout;
  }

  Colors run() {
    Colors colors(s_.n, 0);
    refine(s_, colors);
    std::vector<std::uint32_t> prefix;
    descend(colors, prefix);
    return best_lab_;
  }

 private:
  void descend(Colors const& colors, std::vector<std::uint32_t>& prefix) {
    if (deadline_ && Clock::now() > *deadline_) {
      throw Error(ErrorCode::Timeout, "isomorphism search timed out");
    }
    // First non-singleton cell in colour order.
    std::vector<std::uint32_t> cell_size(s_.n, 0);
    for (auto c : colors) ++cell_size[c];
    std::optional<std::uint32_t> target;
    for (std::uint32_t c = 0; c < s_.n; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }
    if (!target) {
      leaf(colors, prefix);
      return;
    }
    std::vector<std::uint32_t> explored;
    std::vector<std::uint32_t> orbits;
    std::size_t orbits_from = 0;  // automorphisms_.size() when `orbits` was built
    auto const depth = prefix.size();
    for (std::uint32_t w = 0; w < s_.n; ++w) {
      if (colors[w] != *target) continue;
      if (!explored.empty()) {
        if (orbits.empty() || orbits_from != automorphisms_.size()) {
          orbits = orbit_roots(prefix);
          orbits_from = automorphisms_.size();
        }
        auto const rw = orbits[w];
        if (std::any_of(explored.begin(), explored.end(), [&](auto e) { return orbits[e] == rw; })) {
          continue;
        }
      }
      explored.push_back(w);

      std::vector<std::uint64_t> keys(s_.n);
      for (std::uint32_t v = 0; v < s_.n; ++v) {
        keys[v] = 2 * std::uint64_t{colors[v]} + (v == w ? 0 : 1);
      }
      Colors child(s_.n);
      compress(keys, child);
      refine(s_, child);
      prefix.push_back(w);
      descend(child, prefix);
      prefix.pop_back();
      if (abort_to_ && *abort_to_ < depth) return;
      abort_to_.reset();
    }
  }

  // Orbit representative of every vertex under the automorphisms found so
  // far that fix the prefix pointwise.
  std::vector<std::uint32_t> orbit_roots(std::vector<std::uint32_t> const& prefix) const {
    std::vector<std::uint32_t> parent(s_.n);
    std::iota(parent.begin(), parent.end(), 0U);
    for (auto const& gamma : automorphisms_) {
      bool const fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](auto v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (std::uint32_t v = 0; v < s_.n; ++v) {
        parent[find_root(parent, v)] = find_root(parent, gamma[v]);
      }
    }
    for (std::uint32_t v = 0; v < s_.n; ++v) parent[v] = find_root(parent, v);
    return parent;
  }

  void leaf(Colors const& lab, std::vector<std::uint32_t> const& prefix) {
    auto cert = certificate(s_, lab);
    if (first_lab_.empty()) {
      first_lab_ = lab;
      first_prefix_ = prefix;
      first_cert_ = cert;
      best_lab_ = lab;
      best_cert_ = std::move(cert);
      return;
    }
    if (cert == first_cert_) {
      record_automorphism(first_lab_, lab);
      // The subtree where this path left the first path is the image of one
      // already searched; resume above it.
      std::size_t common = 0;
      while (common < prefix.size() && common < first_prefix_.size() &&
             prefix[common] == first_prefix_[common]) {
        ++common;
      }
      abort_to_ = common;
      return;
    }
    if (cert == best_cert_) {
      if (best_lab_ != first_lab_) record_automorphism(best_lab_, lab);
    } else if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = lab;
    }
  }

  // Both labellings give the same labelled structure, so
  // v -> (vertex at position from[v] under `to`) is an automorphism.
  void record_automorphism(Colors const& from, Colors const& to) {
    std::vector<std::uint32_t> inverse(s_.n);
    for (std::uint32_t v = 0; v < s_.n; ++v) inverse[to[v]] = v;
    std::vector<std::uint32_t> gamma(s_.n);
    bool trivial = true;
    for (std::uint32_t v = 0; v < s_.n; ++v) {
      gamma[v] = inverse[from[v]];
      trivial = trivial && gamma[v] == v;
    }
    if (!trivial) automorphisms_.push_back(std::move(gamma));
  }

  Structure const& s_;
  std::optional<Clock::time_point> deadline_;
  Colors first_lab_, best_lab_;
  std::vector<std::uint32_t> first_prefix_;
  std::vector<std::uint32_t> first_cert_, best_cert_;
  // Set after a leaf matching the first leaf: unwind to this depth.
  std::optional<std::size_t> abort_to_;
  std::vector<std::vector<std::uint32_t>> automorphisms_;
};

void put_u32(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xff));
  }
}

CanonicalCode algebra_code(UnaryAlgebra const& algebra, std::vector<Element> const& lab) {
  CanonicalCode code;
  auto& b = code.bytes;
  auto const n = algebra.size();
  put_u32(b, n);
  put_u32(b, algebra.op_count());
  for (auto const& [name, table] : algebra.ops()) {
    put_u32(b, name.size());
    b.insert(b.end(), name.begin(), name.end());
  }
  std::vector<Element> inverse(n);
  for (std::size_t v = 0; v < n; ++v) inverse[lab[v]] = static_cast<Element>(v);
  for (auto const& [name, table] : algebra.ops()) {
    for (std::size_t p = 0; p < n; ++p) put_u32(b, lab[table[inverse[p]]]);
  }
  return code;
}

CanonicalLabelling canonical_connected(UnaryAlgebra const& algebra,
                                       SearchOptions const& options) {
  auto const s = structure_of(algebra);
  auto lab = CanonicalSearch(s, options).run();
  std::vector<Element> labelling(lab.begin(), lab.end());
  return {algebra_code(algebra, labelling), std::move(labelling)};
}

std::vector<std::vector<std::size_t>> components_of(UnaryAlgebra const& algebra) {
  std::vector<std::uint32_t> parent(algebra.size());
  std::iota(parent.begin(), parent.end(), 0U);
  for (auto const& [name, table] : algebra.ops()) {
    for (std::uint32_t v = 0; v < algebra.size(); ++v) {
      parent[find_root(parent, v)] = find_root(parent, table[v]);
    }
  }
  std::vector<std::uint32_t> roots(algebra.size());
  for (std::uint32_t v = 0; v < algebra.size(); ++v) roots[v] = find_root(parent, v);
  return Partition::from_labels(std::span<std::uint32_t const>(roots)).blocks();
}

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto byte : bytes) {
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 0xf]);
  }
  return out;
}

UnaryAlgebra subalgebra_on(UnaryAlgebra const& algebra,
                           std::vector<std::size_t> const& vertices) {
  std::vector<Element> local(algebra.size(), static_cast<Element>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Element>(i);
  OpMap ops;
  for (auto const& [name, table] : algebra.ops()) {
    Table t(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      auto const image = local[table[vertices[i]]];
      if (image == static_cast<Element>(-1)) {
        throw Error(ErrorCode::InvalidArgument, "vertex set is not closed under '" + name + "'");
      }
      t[i] = image;
    }
    ops.emplace(name, std::move(t));
  }
  return UnaryAlgebra(vertices.size(), std::move(ops), algebra.name());
}

// Components are canonised separately and laid out in increasing code order,
// so equal components contribute identical blocks.
CanonicalLabelling canonical_labelling(UnaryAlgebra const& algebra,
                                       SearchOptions const& options) {
  auto const components = components_of(algebra);
  if (components.size() == 1) return canonical_connected(algebra, options);

  std::vector<CanonicalLabelling> parts;
  parts.reserve(components.size());
  for (auto const& verts : components) {
    parts.push_back(canonical_connected(subalgebra_on(algebra, verts), options));
  }
  std::vector<std::size_t> order(components.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return parts[a].code < parts[b].code; });
  std::vector<Element> labelling(algebra.size());
  Element offset = 0;
  for (auto c : order) {
    auto const& verts = components[c];
    for (std::size_t i = 0; i < verts.size(); ++i) {
      labelling[verts[i]] = offset + parts[c].labelling[i];
    }
    offset += static_cast<Element>(verts.size());
  }
  return {algebra_code(algebra, labelling), std::move(labelling)};
}

CanonicalCode canonical_form(UnaryAlgebra const& algebra, SearchOptions const& options) {
  return canonical_labelling(algebra, options).code;
}

bool is_isomorphism(UnaryAlgebra const& a, UnaryAlgebra const& b,
                    std::vector<Element> const& phi) {
  if (a.size() != b.size() || phi.size() != a.size()) return false;
  if (image_size(phi) != phi.size()) return false;
  for (auto const& [name, table] : a.ops()) {
    if (!b.has_op(name)) return false;
    auto const& other = b.op(name);
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (phi[table[x]] != other[phi[x]]) return false;
    }
  }
  return true;
}

AlgebraInvariants algebra_invariants(UnaryAlgebra const& algebra) {
  AlgebraInvariants inv;
  inv.size = algebra.size();
  auto const graph = gamma(algebra);
  auto const ca = analyze_components(graph);
  for (auto const& block : ca.connected_components.blocks()) {
    inv.component_sizes.push_back(block.size());
  }
  for (auto const& block : ca.sccs.blocks()) inv.scc_sizes.push_back(block.size());
  std::sort(inv.component_sizes.begin(), inv.component_sizes.end());
  std::sort(inv.scc_sizes.begin(), inv.scc_sizes.end());
  inv.top_count = ca.top_sccs.size();
  if (ca.connected_components.block_count() == 1 && ca.bottom_scc_per_component.front()) {
    std::vector<CanonicalCode> codes;
    for (auto const& section : outer_sections(graph)) {
      codes.push_back(digraph_canonical_form(section.to_digraph()));
    }
    std::sort(codes.begin(), codes.end());
    inv.outer_section_codes = std::move(codes);
  }
  return inv;
}

std::optional<std::vector<Element>> are_isomorphic(UnaryAlgebra const& a,
                                                   UnaryAlgebra const& b,
                                                   SearchOptions const& options) {
  if (a.op_names() != b.op_names()) {
    throw Error(ErrorCode::OpSignatureMismatch, "algebras have different operation names");
  }
  if (a.size() != b.size()) return std::nullopt;
  if (algebra_invariants(a) != algebra_invariants(b)) return std::nullopt;

  auto const la = canonical_labelling(a, options);
  auto const lb = canonical_labelling(b, options);
  if (la.code != lb.code) return std::nullopt;
  std::vector<Element> inverse_b(b.size());
  for (std::size_t v = 0; v < b.size(); ++v) inverse_b[lb.labelling[v]] = static_cast<Element>(v);
  std::vector<Element> phi(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) phi[v] = inverse_b[la.labelling[v]];
  return phi;
}

CanonicalCode digraph_canonical_form(AlgebraDigraph const& graph,
                                     SearchOptions const& options) {
  auto const s = structure_of(graph);
  auto const lab = CanonicalSearch(s, options).run();
  CanonicalCode code;
  put_u32(code.bytes, s.n);
  for (auto v : certificate(s, lab)) put_u32(code.bytes, v);
  return code;
}

bool digraph_isomorphic(AlgebraDigraph const& g, AlgebraDigraph const& h) {
  if (g.vertex_count != h.vertex_count) return false;
  return digraph_canonical_form(g) == digraph_canonical_form(h);
}

}  // namespace ua
