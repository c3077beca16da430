#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/digraph.hpp"

namespace ua {

// Byte string identifying an algebra up to isomorphism: carrier size, the
// sorted op names, then every table under the canonical relabelling. All
// integers are 4-byte big endian; names are length-prefixed.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;

  friend bool operator==(CanonicalCode const&, CanonicalCode const&) = default;
  friend auto operator<=>(CanonicalCode const&, CanonicalCode const&) = default;
};

struct SearchOptions {
  // Abandon the individualisation search after this long (throws Timeout).
  std::optional<std::chrono::milliseconds> timeout;
};

struct CanonicalLabelling {
  CanonicalCode code;
  // labelling[a] = canonical position of element a.
  std::vector<Element> labelling;
};

CanonicalLabelling canonical_labelling(UnaryAlgebra const& algebra,
                                       SearchOptions const& options = {});
CanonicalCode canonical_form(UnaryAlgebra const& algebra,
                             SearchOptions const& options = {});

// A carrier bijection phi with phi(f(a)) = f(phi(a)) for every op f, or
// nullopt. Throws OpSignatureMismatch when the op-name sets differ.
std::optional<std::vector<Element>> are_isomorphic(UnaryAlgebra const& a,
                                                   UnaryAlgebra const& b,
                                                   SearchOptions const& options = {});

bool is_isomorphism(UnaryAlgebra const& a, UnaryAlgebra const& b,
                    std::vector<Element> const& phi);

// Isomorphism invariants used to reject before searching.
struct AlgebraInvariants {
  std::size_t size = 0;
  std::vector<std::size_t> component_sizes;  // sorted
  std::vector<std::size_t> scc_sizes;        // sorted
  std::size_t top_count = 0;
  // Sorted outer-section digraph codes; set when connected with a bottom.
  std::optional<std::vector<CanonicalCode>> outer_section_codes;

  friend bool operator==(AlgebraInvariants const&, AlgebraInvariants const&) = default;
};

AlgebraInvariants algebra_invariants(UnaryAlgebra const& algebra);

// Unlabelled digraph canonical code: labels are dropped and parallel edges
// merged.
CanonicalCode digraph_canonical_form(AlgebraDigraph const& graph,
                                     SearchOptions const& options = {});
bool digraph_isomorphic(AlgebraDigraph const& g, AlgebraDigraph const& h);

// The algebra induced on one connected component's vertices (given
// increasing).
UnaryAlgebra subalgebra_on(UnaryAlgebra const& algebra, std::vector<std::size_t> const& vertices);

}  // namespace ua
