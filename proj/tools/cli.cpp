#include "cli.hpp"

#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ua/algebra.hpp"
#include "ua/casebook.hpp"
#include "ua/digraph.hpp"
#include "ua/io.hpp"
#include "ua/iso.hpp"
#include "ua/kernels.hpp"
#include "ua/powers.hpp"
#include "ua/witness.hpp"

namespace ua::cli {

using nlohmann::json;

namespace {

struct Globals {
  bool json = false;
  std::size_t threads = 0;
  std::optional<std::size_t> cap_elements;
  std::optional<std::size_t> cap_carrier;

  Limits limits() const {
    Limits l;
    if (cap_elements) {
      l.subpower_elements = *cap_elements;
      l.enumeration = *cap_elements;
    }
    if (cap_carrier) {
      l.monoid_carrier = *cap_carrier;
      l.congruence_carrier = *cap_carrier;
    }
    return l;
  }
};

json envelope(std::string const& command) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

CommandResult emit(Globals const& g, json doc, std::string text, int exit_code = 0) {
  CommandResult r;
  r.exit_code = exit_code;
  r.out = g.json ? doc.dump(2) + "\n" : std::move(text);
  return r;
}

std::string join(std::vector<std::string> const& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

json table_json(Table const& t) { return json(std::vector<Element>(t.begin(), t.end())); }

std::string table_text(Table const& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out + "]";
}

json partition_json(Partition const& p) { return json(p.blocks()); }

std::string algebra_label(UnaryAlgebra const& a) {
  return a.name().empty() ? std::string("<unnamed>") : a.name();
}

CommandResult cmd_classify(Globals const& g, std::string const& path) {
  auto const a = read_algebra(path);
  auto const v = classify_type(a);
  auto doc = envelope("classify");
  doc["algebra"] = a.name();
  doc["verdict"] = std::string(to_string(v.verdict));
  std::string text;
  if (v.verdict == Verdict::Uncountable) {
    doc["witness"] = *v.witness;
    text = "Uncountable (witness op: " + *v.witness + ")\n";
  } else {
    doc["bijections"] = v.bijections;
    doc["constants"] = v.constants;
    text = "Countable (bijections: " + join(v.bijections, ",") +
           "; constants: " + join(v.constants, ",") + ")\n";
  }
  return emit(g, doc, text);
}

CommandResult cmd_monoid(Globals const& g, std::string const& path) {
  auto const a = read_algebra(path);
  auto const mon = generate_monoid(a, g.limits());
  auto doc = envelope("monoid");
  doc["algebra"] = a.name();
  doc["size"] = mon.size();
  json elements = json::array();
  std::ostringstream text;
  text << "Mon(" << algebra_label(a) << ") has " << mon.size() << " elements\n";
  for (std::size_t i = 0; i < mon.size(); ++i) {
    auto const& t = mon.elements()[i];
    auto const word = mon.words()[i].empty() ? std::string("id") : join(mon.words()[i], " ");
    elements.push_back({{"table", table_json(t)},
                        {"word", mon.words()[i]},
                        {"image_size", image_size(t)},
                        {"kind", std::string(to_string(op_kind(t)))}});
    text << "  " << table_text(t) << "  word: " << word << '\n';
  }
  doc["elements"] = elements;
  return emit(g, doc, text.str());
}

CommandResult cmd_components(Globals const& g, std::string const& path, bool dot) {
  auto const a = read_algebra(path);
  auto const graph = gamma(a);
  if (dot && !g.json) {
    return CommandResult{0, to_dot(graph, a.name().empty() ? "G" : a.name()), ""};
  }
  auto const ca = analyze_components(graph);
  auto doc = envelope("components");
  doc["algebra"] = a.name();
  doc["connected_components"] = partition_json(ca.connected_components);
  doc["sccs"] = partition_json(ca.sccs);
  doc["scc_successors"] = ca.scc_successors;
  doc["top_sccs"] = ca.top_sccs;
  json bottoms = json::array();
  for (auto const& b : ca.bottom_scc_per_component) bottoms.push_back(b ? json(*b) : json(nullptr));
  doc["bottom_scc_per_component"] = bottoms;
  if (dot) doc["dot"] = to_dot(graph, a.name().empty() ? "G" : a.name());

  std::ostringstream text;
  text << "connected components: " << ca.connected_components.to_string() << '\n'
       << "strongly connected components: " << ca.sccs.to_string() << '\n'
       << "top scc indices:";
  for (auto s : ca.top_sccs) text << ' ' << s;
  text << '\n';
  for (std::size_t c = 0; c < ca.bottom_scc_per_component.size(); ++c) {
    auto const& b = ca.bottom_scc_per_component[c];
    text << "component " << c << " bottom: " << (b ? "scc " + std::to_string(*b) : "none") << '\n';
  }
  return emit(g, doc, text.str());
}

CommandResult cmd_outer_sections(Globals const& g, std::string const& path) {
  auto const a = read_algebra(path);
  auto const sections = outer_sections(a);
  auto doc = envelope("outer-sections");
  doc["algebra"] = a.name();
  json list = json::array();
  std::ostringstream text;
  text << sections.size() << " outer section(s)\n";
  for (auto const& s : sections) {
    json edges = json::array();
    text << "  vertices {";
    for (std::size_t i = 0; i < s.vertices.size(); ++i) text << (i ? "," : "") << s.vertices[i];
    text << "} edges";
    for (auto const& e : s.edges) {
      edges.push_back({{"source", e.source}, {"target", e.target}, {"op", e.op}});
      text << ' ' << e.source << "->" << e.target << '(' << e.op << ')';
    }
    auto const tops = analyze_components(s.to_digraph()).top_sccs.size();
    text << "  top components " << tops << '\n';
    list.push_back({{"vertices", s.vertices}, {"edges", edges}, {"top_components", tops}});
  }
  doc["sections"] = list;
  return emit(g, doc, text.str());
}

CommandResult cmd_congruences(Globals const& g, std::string const& path) {
  auto const a = read_algebra(path);
  auto const lattice = congruence_lattice(a, g.limits());
  auto doc = envelope("congruences");
  doc["algebra"] = a.name();
  json list = json::array();
  std::ostringstream text;
  text << lattice.size() << " congruence(s)\n";
  for (auto const& c : lattice) {
    list.push_back(partition_json(c));
    text << "  " << c.to_string() << '\n';
  }
  doc["congruences"] = list;
  return emit(g, doc, text.str());
}

CommandResult cmd_si(Globals const& g, std::string const& path) {
  auto const a = read_algebra(path);
  bool const si = is_subdirectly_irreducible(a, g.limits());
  auto doc = envelope("si");
  doc["algebra"] = a.name();
  doc["subdirectly_irreducible"] = si;
  return emit(g, doc, si ? "subdirectly irreducible\n" : "not subdirectly irreducible\n",
              si ? 0 : 1);
}

CommandResult cmd_enumerate(Globals const& g, std::string const& path, std::size_t exponent) {
  auto const a = read_algebra(path);
  auto const codes = enumerate_monogenic_up_to_iso(a, exponent, g.limits());
  auto doc = envelope("enumerate");
  doc["algebra"] = a.name();
  doc["exponent"] = exponent;
  doc["count"] = codes.size();
  json list = json::array();
  std::ostringstream text;
  text << codes.size() << " monogenic subpower(s) of A^" << exponent << " up to isomorphism\n";
  for (auto const& c : codes) {
    list.push_back(c.hex());
    text << "  " << c.hex() << '\n';
  }
  doc["codes"] = list;
  return emit(g, doc, text.str());
}

CommandResult cmd_iso(Globals const& g, std::string const& path_a, std::string const& path_b) {
  auto const a = read_algebra(path_a);
  auto const b = read_algebra(path_b);
  auto const phi = are_isomorphic(a, b);
  auto doc = envelope("iso");
  doc["isomorphic"] = phi.has_value();
  std::string text;
  if (phi) {
    doc["bijection"] = *phi;
    text = "isomorphic: " + table_text(*phi) + "\n";
  } else {
    doc["bijection"] = nullptr;
    text = "not isomorphic\n";
  }
  return emit(g, doc, text, phi ? 0 : 1);
}

CommandResult cmd_canon(Globals const& g, std::string const& path) {
  auto const a = read_algebra(path);
  auto const lab = canonical_labelling(a);
  auto doc = envelope("canon");
  doc["algebra"] = a.name();
  doc["code"] = lab.code.hex();
  doc["labelling"] = lab.labelling;
  return emit(g, doc, lab.code.hex() + "\n");
}

std::vector<std::uint64_t> parse_primes(std::string const& list) {
  std::vector<std::uint64_t> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      auto const v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (std::exception const&) {
      throw Error(ErrorCode::InvalidArgument, "bad prime '" + item + "'");
    }
  }
  return out;
}

CommandResult cmd_witness(Globals const& g, std::string const& path, std::string const& primes,
                          bool verify, std::optional<std::size_t> subsets_max,
                          std::optional<std::size_t> timeout_ms) {
  auto const a = read_algebra(path);
  auto const cfg = make_witness_config(a, parse_primes(primes), g.limits());
  auto doc = envelope("witness");
  doc["algebra"] = a.name();
  doc["f_min"] = table_json(cfg.f_min);
  doc["order"] = cfg.order;
  doc["primes"] = cfg.primes;
  doc["N"] = cfg.exponent;
  std::ostringstream text;
  text << "f_min " << table_text(cfg.f_min) << ", carrier order " << table_text(cfg.order)
       << ", N = " << cfg.exponent << '\n';
  if (!verify) {
    json sizes = json::object();
    for (auto p : cfg.primes) {
      auto const T = build_T(cfg, p, g.limits());
      auto const tops = analyze_components(gamma(induced_algebra(T).algebra)).top_sccs.size();
      sizes[std::to_string(p)] = {{"size", T.size()}, {"top_sccs", tops}};
      text << "T_" << p << ": " << T.size() << " elements, " << tops << " top components\n";
    }
    doc["T"] = sizes;
    return emit(g, doc, text.str());
  }
  VerifyOptions options;
  options.limits = g.limits();
  if (subsets_max) options.subsets_max = *subsets_max;
  if (timeout_ms) options.pair_timeout = std::chrono::milliseconds(*timeout_ms);
  auto const report = verify_claims(cfg, options);
  doc["checks"] = report.to_json();
  doc["all_pass"] = report.all_pass();
  text << report.to_table();
  return emit(g, doc, text.str(), report.all_pass() ? 0 : 1);
}

CommandResult cmd_boolean_power(Globals const& g, std::string const& path,
                                std::string const& field_path, bool profile) {
  auto const a = read_algebra(path);
  auto const field = read_field(field_path);
  auto doc = envelope("boolean-power");
  doc["algebra"] = a.name();
  doc["ground"] = field.ground();
  if (profile) {
    auto const p = boolean_power_profile(a, field, g.limits());
    json preds = json::array();
    std::ostringstream text;
    text << "sink " << format_tuple(p.sink) << " has " << p.sink_predecessors
         << " strict predecessor(s)\n";
    for (auto const& [t, c] : p.predecessors) {
      preds.push_back({{"tuple", format_tuple(t)}, {"predecessors", c}});
      text << "  " << format_tuple(t) << ": " << c << '\n';
    }
    json hist = json::object();
    for (auto const& [count, mult] : p.histogram) hist[std::to_string(count)] = mult;
    doc["sink"] = format_tuple(p.sink);
    doc["sink_predecessors"] = p.sink_predecessors;
    doc["predecessors"] = preds;
    doc["histogram"] = hist;
    return emit(g, doc, text.str());
  }
  auto const power = boolean_power(a, field, g.limits());
  doc["size"] = power.size();
  doc["subdirect"] = is_subdirect(power);
  json elements = json::array();
  for (auto const& x : power.elements()) elements.push_back(format_tuple(x));
  doc["elements"] = elements;
  return emit(g, doc, format_subpower(power));
}

CommandResult cmd_subpower(Globals const& g, std::string const& path, std::size_t exponent,
                           std::vector<std::string> const& gens) {
  auto const a = read_algebra(path);
  std::vector<Tuple> generators;
  for (auto const& s : gens) generators.push_back(parse_tuple(s));
  auto const sub = generate_subpower(a, exponent, generators, g.limits());
  auto doc = envelope("subpower");
  doc["algebra"] = a.name();
  doc["exponent"] = exponent;
  doc["size"] = sub.size();
  doc["subdirect"] = is_subdirect(sub);
  json elements = json::array();
  for (auto const& x : sub.elements()) elements.push_back(format_tuple(x));
  doc["elements"] = elements;
  return emit(g, doc, format_subpower(sub));
}

CommandResult cmd_cycle_lcm(Globals const& g, std::vector<std::uint64_t> const& lengths,
                            std::string const& alg_path, std::string const& op,
                            std::string const& tuple) {
  std::vector<std::uint64_t> seq = lengths;
  if (!alg_path.empty()) {
    auto const a = read_algebra(alg_path);
    auto const name = op.empty() ? a.ops().begin()->first : op;
    seq = cycle_lengths(a, name, parse_tuple(tuple));
  }
  auto const m = tuple_cycle_length(seq);
  auto doc = envelope("cycle-lcm");
  doc["cycle_lengths"] = seq;
  doc["lcm"] = m;
  return emit(g, doc, std::to_string(m) + "\n");
}

CommandResult cmd_transposition_distance(Globals const& g, std::size_t m, std::string const& x,
                                         std::string const& y) {
  auto const d = transposition_distance(m, parse_tuple(x), parse_tuple(y), g.limits());
  auto doc = envelope("transposition-distance");
  doc["m"] = m;
  doc["distance"] = d ? json(*d) : json(nullptr);
  doc["reachable"] = d.has_value();
  return emit(g, doc, d ? std::to_string(*d) + "\n" : std::string("unreachable\n"));
}

}  // namespace

CommandResult run(std::vector<std::string> const& args) {
  CLI::App app{"Finite unary algebras: type classification, subdirect power witnesses, "
               "monoids, congruences and boolean powers"};
  app.name(args.empty() ? "ua" : args.front());
  app.require_subcommand(1);

  Globals g;
  app.add_flag("--json", g.json, "Emit a single JSON document");
  app.add_option("--threads", g.threads, "Cap internal parallelism (0 = runtime default)");
  app.add_option("--cap-elements", g.cap_elements, "Subpower / enumeration element cap");
  app.add_option("--cap-carrier", g.cap_carrier, "Carrier cap for monoids and congruences");

  std::function<CommandResult()> action;
  std::string alg, alg_b, field, primes, op, tuple, x, y;
  std::size_t exponent = 1, m = 0;
  bool flag_a = false;
  std::optional<std::size_t> subsets_max, timeout_ms;
  std::vector<std::uint64_t> lengths;
  std::vector<std::string> gens;

  auto single = [&](std::string const& name, std::string const& help,
                    CommandResult (*fn)(Globals const&, std::string const&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("algebra", alg, "Algebra file")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(g, alg); }; });
    return sub;
  };
  single("classify", "Countable/uncountable type of the algebra", cmd_classify);
  single("monoid", "Transformation monoid generated by the operations", cmd_monoid);
  single("outer-sections", "Outer sections of a connected algebra with a bottom",
         cmd_outer_sections);
  single("congruences", "Congruence lattice", cmd_congruences);
  single("si", "Subdirect irreducibility (exit 1 when not)", cmd_si);
  single("canon", "Canonical code (hex)", cmd_canon);

  auto* components = app.add_subcommand("components", "Connected and strongly connected components");
  components->add_option("algebra", alg, "Algebra file")->required();
  components->add_flag("--dot", flag_a, "Print the digraph as DOT");
  components->callback([&] { action = [&] { return cmd_components(g, alg, flag_a); }; });

  auto* enumerate = app.add_subcommand("enumerate", "Monogenic subpowers of A^N up to isomorphism");
  enumerate->add_option("algebra", alg, "Algebra file")->required();
  enumerate->add_option("--exponent", exponent, "Index set size N")->required();
  enumerate->callback([&] { action = [&] { return cmd_enumerate(g, alg, exponent); }; });

  auto* iso = app.add_subcommand("iso", "Decide isomorphism (exit 1 when not isomorphic)");
  iso->add_option("a", alg, "First algebra file")->required();
  iso->add_option("b", alg_b, "Second algebra file")->required();
  iso->callback([&] { action = [&] { return cmd_iso(g, alg, alg_b); }; });

  auto* witness = app.add_subcommand("witness", "Build T_p / S_K and optionally verify their properties");
  witness->add_option("algebra", alg, "Algebra file")->required();
  witness->add_option("--primes", primes, "Comma-separated increasing primes")->required();
  witness->add_flag("--verify", flag_a, "Run every witness check (exit 1 on failure)");
  witness->add_option("--subsets-max", subsets_max, "Largest |K| in the S_K comparison");
  witness->add_option("--pair-timeout-ms", timeout_ms, "Per-pair isomorphism search budget");
  witness->callback([&] {
    action = [&] { return cmd_witness(g, alg, primes, flag_a, subsets_max, timeout_ms); };
  });

  auto* bpower = app.add_subcommand("boolean-power", "Boolean power over a field of sets");
  bpower->add_option("algebra", alg, "Algebra file")->required();
  bpower->add_option("--field", field, "Field-of-sets file")->required();
  bpower->add_flag("--profile", flag_a, "Predecessor profile (chain algebra only)");
  bpower->callback([&] { action = [&] { return cmd_boolean_power(g, alg, field, flag_a); }; });

  auto* subpower = app.add_subcommand("subpower", "Subpower of A^N generated by tuples");
  subpower->add_option("algebra", alg, "Algebra file")->required();
  subpower->add_option("--exponent", exponent, "Index set size N")->required();
  subpower->add_option("--gen", gens, "Generator tuple literal, e.g. (2,1)");
  subpower->callback([&] { action = [&] { return cmd_subpower(g, alg, exponent, gens); }; });

  auto* lcm = app.add_subcommand("cycle-lcm", "Cycle length of a tuple over a bijective op");
  lcm->add_option("lengths", lengths, "Per-coordinate cycle lengths");
  lcm->add_option("--algebra", alg, "Compute lengths from this algebra instead");
  lcm->add_option("--op", op, "Operation name (default: first)");
  lcm->add_option("--tuple", tuple, "Tuple literal for --algebra");
  lcm->callback([&] { action = [&] { return cmd_cycle_lcm(g, lengths, alg, op, tuple); }; });

  auto* tdist = app.add_subcommand("transposition-distance",
                                   "Shortest transposition path between equal-format tuples");
  tdist->add_option("--m", m, "Carrier size")->required();
  tdist->add_option("x", x, "Tuple literal")->required();
  tdist->add_option("y", y, "Tuple literal")->required();
  tdist->callback([&] { action = [&] { return cmd_transposition_distance(g, m, x, y); }; });

  std::vector<char const*> argv;
  for (auto const& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("ua");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const& e) {
    std::ostringstream out, err;
    auto const code = app.exit(e, out, err);
    return CommandResult{code == 0 ? 0 : 2, out.str(), err.str()};
  }

  kernels::set_thread_limit(g.threads);
  try {
    return action();
  } catch (ParseError const& e) {
    return CommandResult{2, "", std::string("input error: ") + e.what() + "\n"};
  } catch (Error const& e) {
    int const code = e.code() == ErrorCode::Capacity ? 3 : 2;
    return CommandResult{code, "", std::string(to_string(e.code())) + ": " + e.what() + "\n"};
  }
}

}  // namespace ua::cli
