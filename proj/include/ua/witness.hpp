#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ua/algebra.hpp"
#include "ua/partition.hpp"
#include "ua/powers.hpp"

namespace ua {

// Inputs of the non-isomorphic subdirect power family for an algebra of
// uncountable type: the carrier order a_1..a_n with the f_min-merged pair
// last, and the primes p whose residue classes index the tuples.
struct WitnessConfig {
  UnaryAlgebra algebra;
  Table f_min;
  std::vector<Element> order;        // order[i] = a_{i+1}
  std::vector<std::uint64_t> primes;  // strictly increasing, each >= n
  std::size_t exponent = 0;           // N = product of primes

  std::size_t carrier() const noexcept { return algebra.size(); }
};

// Throws NotUncountable, InvalidArgument (bad primes), Capacity (N too big
// for limits.enumeration, or monoid generation).
WitnessConfig make_witness_config(UnaryAlgebra const& algebra,
                                  std::vector<std::uint64_t> primes,
                                  Limits const& limits = {});

bool is_prime(std::uint64_t p);

// Residue classes mod p on 0..N-1. Throws NotDivisible.
IndexPartition sigma(std::uint64_t p, std::size_t exponent);

// t_{p,l}: class i of sigma(p) (residue i-1) gets a_i for i <= n-2, classes
// n-1 .. n-1+l get a_{n-1}, the rest a_n. Throws Range unless 0 <= l <= p-n,
// InvalidArgument if p is not a configured prime.
Tuple build_t(WitnessConfig const& cfg, std::uint64_t p, std::size_t l);

// T_p = <t_{p,0}, ..., t_{p,p-n}>.
Subpower build_T(WitnessConfig const& cfg, std::uint64_t p, Limits const& limits = {});

// S_K = D ∪ (union of T_p, p in K).
Subpower build_S(WitnessConfig const& cfg, std::vector<std::uint64_t> const& subset,
                 Limits const& limits = {});

struct ClaimCheck {
  std::string claim;
  nlohmann::json params;
  nlohmann::json computed;
  nlohmann::json expected;
  bool pass = false;
  std::string method;  // how the check was decided
  std::string note;
  bool skipped = false;  // precondition not met; excluded from all_pass()
};

struct ClaimReport {
  std::vector<ClaimCheck> checks;

  bool all_pass() const;
  nlohmann::json to_json() const;
  std::string to_table() const;
};

struct VerifyOptions {
  // Largest |K| considered in the S_K pairwise check.
  std::size_t subsets_max = static_cast<std::size_t>(-1);
  // Per-pair budget for the full isomorphism search before falling back to
  // the outer-section top-count argument.
  std::optional<std::chrono::milliseconds> pair_timeout = std::chrono::seconds(30);
  Limits limits;
};

ClaimReport verify_claims(WitnessConfig const& cfg, VerifyOptions const& options = {});

}  // namespace ua
