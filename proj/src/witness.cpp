#include "ua/witness.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ua/digraph.hpp"
#include "ua/iso.hpp"
#include "ua/kernels.hpp"

namespace ua {

using nlohmann::json;

namespace {

std::size_t prime_index(WitnessConfig const& cfg, std::uint64_t p) {
  auto it = std::find(cfg.primes.begin(), cfg.primes.end(), p);
  if (it == cfg.primes.end()) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not a configured prime");
  }
  return static_cast<std::size_t>(it - cfg.primes.begin());
}

json diagonal_summary(std::vector<Tuple> const& tuples) {
  // Tuples here are long; report constant tuples by their value.
  json values = json::array();
  std::size_t off_diagonal = 0;
  for (auto const& t : tuples) {
    if (!t.empty() && is_constant(t)) {
      values.push_back(t.front());
    } else {
      ++off_diagonal;
    }
  }
  return json{{"diagonal_values", values}, {"off_diagonal", off_diagonal}};
}

// Sorted top-scc counts of the outer sections when the algebra is connected
// with a bottom, else of its connected components.
std::vector<std::size_t> section_top_counts(UnaryAlgebra const& algebra) {
  auto const graph = gamma(algebra);
  auto const ca = analyze_components(graph);
  std::vector<std::size_t> counts;
  if (ca.connected_components.block_count() == 1 && ca.bottom_scc_per_component.front()) {
    for (auto const& section : outer_sections(graph)) {
      counts.push_back(analyze_components(section.to_digraph()).top_sccs.size());
    }
  } else {
    std::vector<std::size_t> per(ca.connected_components.block_count(), 0);
    for (auto s : ca.top_sccs) ++per[ca.component_of_scc(s)];
    counts = per;
  }
  std::sort(counts.begin(), counts.end());
  return counts;
}

std::vector<std::vector<std::uint64_t>> subsets_up_to(std::vector<std::uint64_t> const& primes,
                                                      std::size_t max_size) {
  std::vector<std::vector<std::uint64_t>> out;
  auto const k = primes.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::uint64_t> subset;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) subset.push_back(primes[i]);
    }
    if (subset.size() <= max_size) out.push_back(std::move(subset));
  }
  std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

WitnessConfig make_witness_config(UnaryAlgebra const& algebra, std::vector<std::uint64_t> primes,
                                  Limits const& limits) {
  auto const n = algebra.size();
  auto f_min = min_image_nonconstant(algebra, limits);

  if (primes.empty()) throw Error(ErrorCode::InvalidArgument, "at least one prime is required");
  std::size_t exponent = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    auto const p = primes[i];
    if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    if (p < n) {
      throw Error(ErrorCode::InvalidArgument,
                  "prime " + std::to_string(p) + " is smaller than the carrier size");
    }
    if (i > 0 && primes[i - 1] >= p) {
      throw Error(ErrorCode::InvalidArgument, "primes must be strictly increasing");
    }
    if (exponent > limits.enumeration / p) {
      throw Error(ErrorCode::Capacity, "product of primes exceeds the enumeration cap");
    }
    exponent *= p;
  }

  // Lexicographically least merged pair (a, b), a < b, goes last.
  std::optional<std::pair<Element, Element>> pair;
  for (Element a = 0; a < n && !pair; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (f_min[a] == f_min[b]) {
        pair = {a, b};
        break;
      }
    }
  }
  std::vector<Element> order;
  for (Element a = 0; a < n; ++a) {
    if (a != pair->first && a != pair->second) order.push_back(a);
  }
  order.push_back(pair->first);
  order.push_back(pair->second);

  return WitnessConfig{algebra, std::move(f_min), std::move(order), std::move(primes), exponent};
}

IndexPartition sigma(std::uint64_t p, std::size_t exponent) {
  if (p == 0 || exponent % p != 0) {
    throw Error(ErrorCode::NotDivisible,
                std::to_string(p) + " does not divide " + std::to_string(exponent));
  }
  std::vector<std::uint64_t> residue(exponent);
  for (std::size_t i = 0; i < exponent; ++i) residue[i] = i % p;
  return Partition::from_labels(std::span<std::uint64_t const>(residue));
}

Tuple build_t(WitnessConfig const& cfg, std::uint64_t p, std::size_t l) {
  prime_index(cfg, p);
  auto const n = cfg.carrier();
  if (l > p - n) {
    throw Error(ErrorCode::Range, "l = " + std::to_string(l) + " outside 0.." +
                                      std::to_string(p - n));
  }
  Tuple t(cfg.exponent);
  for (std::size_t pos = 0; pos < cfg.exponent; ++pos) {
    auto const cls = pos % p + 1;  // 1-based class index C_cls
    if (cls <= n - 2) {
      t[pos] = cfg.order[cls - 1];
    } else if (cls <= n - 1 + l) {
      t[pos] = cfg.order[n - 2];
    } else {
      t[pos] = cfg.order[n - 1];
    }
  }
  return t;
}

Subpower build_T(WitnessConfig const& cfg, std::uint64_t p, Limits const& limits) {
  prime_index(cfg, p);
  std::vector<Tuple> generators;
  for (std::size_t l = 0; l <= p - cfg.carrier(); ++l) generators.push_back(build_t(cfg, p, l));
  return generate_subpower(cfg.algebra, cfg.exponent, generators, limits);
}

Subpower build_S(WitnessConfig const& cfg, std::vector<std::uint64_t> const& subset,
                 Limits const& limits) {
  std::vector<Tuple> elements, generators;
  for (Element a = 0; a < cfg.carrier(); ++a) {
    elements.push_back(constant_tuple(a, cfg.exponent));
  }
  generators = elements;
  for (auto p : subset) {
    auto const t = build_T(cfg, p, limits);
    elements.insert(elements.end(), t.elements().begin(), t.elements().end());
    generators.insert(generators.end(), t.generators().begin(), t.generators().end());
  }
  if (elements.size() > limits.subpower_elements) {
    throw Error(ErrorCode::Capacity, "S_K exceeds the element cap");
  }
  return Subpower(cfg.algebra, cfg.exponent, std::move(elements), std::move(generators));
}

bool ClaimReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](auto const& c) { return c.skipped || c.pass; });
}

json ClaimReport::to_json() const {
  json records = json::array();
  for (auto const& c : checks) {
    json r{{"claim", c.claim}, {"params", c.params},     {"computed", c.computed},
           {"expected", c.expected}, {"pass", c.pass}, {"skipped", c.skipped}};
    if (!c.method.empty()) r["method"] = c.method;
    if (!c.note.empty()) r["note"] = c.note;
    records.push_back(std::move(r));
  }
  return records;
}

std::string ClaimReport::to_table() const {
  std::ostringstream out;
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (auto const& c : checks) {
    char const* status = c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL");
    out << status << "  " << c.claim << "  " << c.params.dump() << "  computed="
        << c.computed.dump() << "  expected=" << c.expected.dump();
    if (!c.method.empty()) out << "  [" << c.method << "]";
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << '\n';
    if (c.skipped) {
      ++skipped;
    } else if (c.pass) {
      ++passed;
    } else {
      ++failed;
    }
  }
  out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return out.str();
}

ClaimReport verify_claims(WitnessConfig const& cfg, VerifyOptions const& options) {
  auto const& limits = options.limits;
  auto const n = cfg.carrier();
  auto const N = cfg.exponent;
  ClaimReport report;
  auto add = [&](ClaimCheck c) { report.checks.push_back(std::move(c)); };

  // Residue classes: counts, sizes and pairwise meets.
  {
    bool increasing = true;
    for (std::size_t i = 0; i < cfg.primes.size(); ++i) {
      if (cfg.primes[i] < n || (i > 0 && cfg.primes[i - 1] >= cfg.primes[i])) increasing = false;
    }
    add({"residues.class_counts_increasing", json{{"n", n}, {"primes", cfg.primes}},
         json{{"class_counts", cfg.primes}}, json{{"condition", "n <= c_1 < c_2 < ..."}},
         increasing, "direct", ""});
  }
  for (auto p : cfg.primes) {
    auto const part = sigma(p, N);
    std::vector<std::size_t> sizes;
    for (auto const& b : part.blocks()) sizes.push_back(b.size());
    bool const uniform = std::all_of(sizes.begin(), sizes.end(),
                                     [&](auto s) { return s == N / p; });
    add({"residues.uniform_blocks", json{{"p", p}, {"N", N}},
         json{{"blocks", part.block_count()}, {"uniform_size", uniform}},
         json{{"blocks", p}, {"uniform_size", true}},
         part.block_count() == p && uniform, "direct", ""});
  }
  for (std::size_t i = 0; i < cfg.primes.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.primes.size(); ++j) {
      auto const p = cfg.primes[i], q = cfg.primes[j];
      auto const sp = sigma(p, N), sq = sigma(q, N);
      std::vector<bool> met(p * q, false);
      for (std::size_t pos = 0; pos < N; ++pos) met[sp.block_of(pos) * q + sq.block_of(pos)] = true;
      auto const meeting = static_cast<std::size_t>(std::count(met.begin(), met.end(), true));
      add({"residues.classes_intersect", json{{"p", p}, {"q", q}, {"N", N}},
           json{{"meeting_pairs", meeting}}, json{{"meeting_pairs", p * q}},
           meeting == p * q, "enumeration", ""});
    }
  }

  auto const D0_values = constant_images(cfg.algebra, limits);
  json const D0_expected{{"diagonal_values", D0_values}, {"off_diagonal", 0}};

  std::vector<Subpower> Ts;
  for (auto p : cfg.primes) Ts.push_back(build_T(cfg, p, limits));

  for (std::size_t i = 0; i < cfg.primes.size(); ++i) {
    auto const p = cfg.primes[i];
    auto const& T = Ts[i];
    auto const induced = induced_algebra(T);
    auto const graph = gamma(induced.algebra);
    auto const ca = analyze_components(graph);

    // Formats: sigma(p) refines each generator, f_min merges them all.
    auto const sp = sigma(p, N);
    bool refines = true, collapses = true, incomparable = true;
    std::optional<Tuple> image;
    for (auto const& t : T.generators()) {
      refines = refines && sp.refines(format(t));
      auto const ft = apply_pointwise(cfg.f_min, t);
      if (image && *image != ft) collapses = false;
      image = ft;
    }
    for (std::size_t a = 0; a < T.generators().size(); ++a) {
      for (std::size_t b = 0; b < T.generators().size(); ++b) {
        if (a != b && format(T.generators()[a]).refines(format(T.generators()[b]))) {
          incomparable = false;
        }
      }
    }
    add({"generators.residues_refine_format", json{{"p", p}}, json{{"holds", refines}},
         json{{"holds", true}}, refines, "direct", ""});
    add({"generators.f_min_identifies", json{{"p", p}}, json{{"holds", collapses}},
         json{{"holds", true}}, collapses, "direct", ""});
    add({"generators.formats_incomparable", json{{"p", p}}, json{{"holds", incomparable}},
         json{{"holds", true}}, incomparable, "direct", ""});

    // One top scc per generator.
    std::vector<std::size_t> generator_tops;
    for (auto const& t : T.generators()) {
      generator_tops.push_back(ca.sccs.block_of(*T.index_of(t)));
    }
    std::sort(generator_tops.begin(), generator_tops.end());
    bool const distinct_tops =
        std::adjacent_find(generator_tops.begin(), generator_tops.end()) == generator_tops.end() &&
        std::includes(ca.top_sccs.begin(), ca.top_sccs.end(), generator_tops.begin(),
                      generator_tops.end());
    auto const tops = ca.top_sccs.size();
    auto const components = ca.connected_components.block_count();
    add({"T.top_components", json{{"p", p}, {"n", n}, {"N", N}},
         json{{"top_sccs", tops}, {"size", T.size()}, {"connected_components", components},
              {"generators_in_distinct_tops", distinct_tops}},
         json{{"top_sccs", p - n + 1}, {"connected_components", 1},
              {"generators_in_distinct_tops", true}},
         tops == p - n + 1 && components == 1 && distinct_tops, "scc analysis", ""});

    // T_p against the diagonal, and connectivity away from D_0.
    std::vector<Tuple> on_diagonal;
    for (auto const& x : T.elements()) {
      if (is_constant(x)) on_diagonal.push_back(x);
    }
    auto const diag = diagonal_summary(on_diagonal);
    add({"T.meets_diagonal", json{{"p", p}}, diag, D0_expected, diag == D0_expected,
         "direct", ""});

    std::vector<std::size_t> outside;
    for (std::size_t v = 0; v < T.size(); ++v) {
      auto const& x = T.elements()[v];
      bool const in_D0 = is_constant(x) && std::binary_search(D0_values.begin(), D0_values.end(),
                                                              x.front());
      if (!in_D0) outside.push_back(v);
    }
    auto const pieces = induced_undirected_component_count(graph, outside);
    add({"T.outer_part_connected", json{{"p", p}},
         json{{"components", pieces}, {"vertices", outside.size()}}, json{{"components", 1}},
         pieces == 1, "union-find", ""});
  }

  // Pairwise intersections of the T_p.
  for (std::size_t i = 0; i < cfg.primes.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.primes.size(); ++j) {
      auto const meet = diagonal_summary(intersection(Ts[i], Ts[j]));
      add({"T.pairwise_meet", json{{"p", cfg.primes[i]}, {"q", cfg.primes[j]}}, meet,
           D0_expected, meet == D0_expected, "direct", ""});
    }
  }

  // S_K against S_L for distinct subsets K, L.
  auto const small = std::find_if(cfg.primes.begin(), cfg.primes.end(),
                                  [&](auto p) { return p <= 2 * n; });
  if (small != cfg.primes.end()) {
    ClaimCheck c{"S.pairwise_non_isomorphic", json{{"primes", cfg.primes}, {"n", n}},
                 json(nullptr), json(nullptr), false, "skipped",
                 "prime " + std::to_string(*small) + " <= 2n = " + std::to_string(2 * n) +
                     "; the top-count argument needs every p > 2n"};
    c.skipped = true;
    add(std::move(c));
    return report;
  }

  auto const subsets = subsets_up_to(cfg.primes, options.subsets_max);
  std::vector<UnaryAlgebra> S_algebras;
  std::vector<std::vector<std::size_t>> S_tops;
  for (auto const& K : subsets) {
    S_algebras.push_back(induced_algebra(build_S(cfg, K, limits)).algebra);
    S_tops.push_back(section_top_counts(S_algebras.back()));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    for (std::size_t b = a + 1; b < subsets.size(); ++b) pairs.emplace_back(a, b);
  }
  std::vector<ClaimCheck> pair_checks(pairs.size());
  SearchOptions search;
  search.timeout = options.pair_timeout;
  auto const work = static_cast<std::ptrdiff_t>(pairs.size());
  auto const threads = static_cast<int>(kernels::thread_limit());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t k = 0; k < work; ++k) {
    auto const [a, b] = pairs[static_cast<std::size_t>(k)];
    auto& c = pair_checks[static_cast<std::size_t>(k)];
    c.claim = "S.pair_non_isomorphic";
    c.params = json{{"K", subsets[a]}, {"L", subsets[b]}};
    bool const invariant_differs = S_tops[a] != S_tops[b];
    std::string search_result;
    try {
      auto const phi = are_isomorphic(S_algebras[a], S_algebras[b], search);
      search_result = phi ? "isomorphic" : "not isomorphic";
    } catch (Error const& e) {
      search_result = e.code() == ErrorCode::Timeout ? "timeout" : std::string("error: ") + e.what();
    }
    c.computed = json{{"full_search", search_result},
                      {"section_top_counts_K", S_tops[a]},
                      {"section_top_counts_L", S_tops[b]},
                      {"invariant_distinguishes", invariant_differs},
                      {"size_K", S_algebras[a].size()},
                      {"size_L", S_algebras[b].size()}};
    c.expected = json{{"isomorphic", false}};
    if (search_result == "isomorphic" || search_result == "not isomorphic") {
      c.method = "full-search";
      c.pass = search_result == "not isomorphic";
    } else {
      c.method = "top-count invariant";
      c.pass = invariant_differs;
      c.note = "full search " + search_result;
    }
  }
  for (auto& c : pair_checks) add(std::move(c));
  return report;
}

}  // namespace ua
