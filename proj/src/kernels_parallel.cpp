#include <algorithm>
#include <exception>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kernels_detail.hpp"
#include "ua/kernels.hpp"

namespace ua::kernels {

namespace {

std::size_t g_thread_limit = 0;

int team_size() {
#ifdef _OPENMP
  return g_thread_limit == 0 ? omp_get_max_threads() : static_cast<int>(g_thread_limit);
#else
  return 1;
#endif
}

// Collects the first exception thrown inside a parallel loop so it can be
// rethrown on the calling thread.
class ExceptionSlot {
 public:
  template <typename F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(ua_exception_slot)
#endif
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

}  // namespace

void set_thread_limit(std::size_t threads) { g_thread_limit = threads; }
std::size_t thread_limit() { return static_cast<std::size_t>(team_size()); }

namespace parallel {

std::vector<Partition> filter_congruences(UnaryAlgebra const& algebra,
                                          std::vector<Partition> const& candidates) {
  auto const count = static_cast<std::ptrdiff_t>(candidates.size());
  std::vector<char> keep(candidates.size(), 0);
#pragma omp parallel for schedule(static) num_threads(team_size())
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    keep[i] = is_congruence(algebra, candidates[i]) ? 1 : 0;
  }
  std::vector<Partition> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i]) out.push_back(candidates[i]);
  }
  return out;
}

// Level-synchronous breadth-first closure: images of one frontier are
// computed in parallel, then merged in frontier order.
std::vector<Tuple> closure(UnaryAlgebra const& algebra, std::vector<Tuple> const& generators,
                           std::size_t cap) {
  std::vector<Table const*> tables;
  for (auto const& [name, table] : algebra.ops()) tables.push_back(&table);
  auto const ops = tables.size();

  std::unordered_set<Tuple, TupleHash> seen(generators.begin(), generators.end());
  std::vector<Tuple> frontier(seen.begin(), seen.end());
  std::sort(frontier.begin(), frontier.end());
  std::vector<Tuple> all = frontier;
  if (all.size() > cap) throw Error(ErrorCode::Capacity, "subpower exceeds element cap");

  while (!frontier.empty() && ops > 0) {
    std::vector<Tuple> images(frontier.size() * ops);
    auto const work = static_cast<std::ptrdiff_t>(images.size());
#pragma omp parallel for schedule(static) num_threads(team_size())
    for (std::ptrdiff_t k = 0; k < work; ++k) {
      images[k] = apply_pointwise(*tables[k % ops], frontier[k / ops]);
    }
    std::vector<Tuple> next;
    for (auto& y : images) {
      if (seen.insert(y).second) {
        all.push_back(y);
        next.push_back(std::move(y));
        if (all.size() > cap) {
          throw Error(ErrorCode::Capacity,
                      "subpower exceeds element cap " + std::to_string(cap));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<CanonicalCode> monogenic_codes(UnaryAlgebra const& algebra, std::size_t exponent,
                                           std::size_t count) {
  std::vector<CanonicalCode> codes(count);
  ExceptionSlot slot;
  auto const work = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 16) num_threads(team_size())
  for (std::ptrdiff_t idx = 0; idx < work; ++idx) {
    slot.run([&] {
      auto const x = tuple_at(static_cast<std::size_t>(idx), algebra.size(), exponent);
      Subpower sub(algebra, exponent, serial::closure(algebra, {x}, count), {x});
      codes[idx] = canonical_form(induced_algebra(sub).algebra);
    });
  }
  slot.rethrow();
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

std::vector<Tuple> boolean_power_members(UnaryAlgebra const& algebra, FieldOfSets const& field,
                                         std::size_t count) {
  std::vector<char> keep(count, 0);
  auto const work = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static) num_threads(team_size())
  for (std::ptrdiff_t idx = 0; idx < work; ++idx) {
    auto const x = tuple_at(static_cast<std::size_t>(idx), algebra.size(), field.ground());
    keep[idx] = field_admits(field, x, algebra.size()) ? 1 : 0;
  }
  std::vector<Tuple> out;
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (keep[idx]) out.push_back(tuple_at(idx, algebra.size(), field.ground()));
  }
  return out;
}

}  // namespace parallel
}  // namespace ua::kernels
