#pragma once

// Data-parallel inner loops of the library. Each kernel exists twice: an
// OpenMP version used by the public operations and a straight serial version
// kept as the reference the tests and benchmarks compare against. Both return
// identical results in identical order for any thread count.

#include <cstddef>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/iso.hpp"
#include "ua/partition.hpp"
#include "ua/powers.hpp"

namespace ua {
class FieldOfSets;
}

namespace ua::kernels {

// Every partition of {0..n-1}, in increasing restricted-growth-string order.
std::vector<Partition> all_partitions(std::size_t n);

namespace serial {

std::vector<Partition> filter_congruences(UnaryAlgebra const& algebra,
                                          std::vector<Partition> const& candidates);

// Closure of `generators` under the basic ops, sorted. Throws Capacity past
// `cap` elements.
std::vector<Tuple> closure(UnaryAlgebra const& algebra, std::vector<Tuple> const& generators,
                           std::size_t cap);

// Sorted distinct canonical codes of <x> over the first `count` tuples of A^N
// in lexicographic order.
std::vector<CanonicalCode> monogenic_codes(UnaryAlgebra const& algebra, std::size_t exponent,
                                           std::size_t count);

// Tuples of A^X (lexicographic order) whose format blocks all lie in `field`.
std::vector<Tuple> boolean_power_members(UnaryAlgebra const& algebra, FieldOfSets const& field,
                                         std::size_t count);

}  // namespace serial

namespace parallel {

std::vector<Partition> filter_congruences(UnaryAlgebra const& algebra,
                                          std::vector<Partition> const& candidates);
std::vector<Tuple> closure(UnaryAlgebra const& algebra, std::vector<Tuple> const& generators,
                           std::size_t cap);
std::vector<CanonicalCode> monogenic_codes(UnaryAlgebra const& algebra, std::size_t exponent,
                                           std::size_t count);
std::vector<Tuple> boolean_power_members(UnaryAlgebra const& algebra, FieldOfSets const& field,
                                         std::size_t count);

}  // namespace parallel

// Cap the OpenMP team size; 0 restores the runtime default. No-op without
// OpenMP.
void set_thread_limit(std::size_t threads);
std::size_t thread_limit();

}  // namespace ua::kernels
