#include "ua/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ua {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    auto const start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

// Lines with comments stripped, paired with their 1-based numbers.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t number = 0;
  while (!text.empty()) {
    auto const end = text.find('\n');
    auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    out.emplace_back(number, line);
  }
  return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view word) {
  T value{};
  auto const* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

std::string read_text_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

UnaryAlgebra parse_algebra(std::string_view text) {
  std::optional<std::size_t> carrier;
  std::string name;
  bool named = false;
  std::vector<std::tuple<std::size_t, std::string, std::vector<std::string_view>>> op_lines;

  for (auto const& [number, line] : content_lines(text)) {
    auto const words = split_words(line);
    if (words.empty()) continue;
    auto const keyword = words.front();
    if (keyword == "algebra") {
      if (named) throw ParseError(number, "duplicate 'algebra' line");
      if (words.size() != 2) throw ParseError(number, "expected 'algebra <name>'");
      name = std::string(words[1]);
      named = true;
    } else if (keyword == "carrier") {
      if (carrier) throw ParseError(number, "duplicate 'carrier' line");
      if (words.size() != 2) throw ParseError(number, "expected 'carrier <n>'");
      auto const n = parse_number<std::size_t>(words[1]);
      if (!n || *n == 0) throw ParseError(number, "carrier size must be a positive integer");
      carrier = *n;
    } else if (keyword == "op") {
      if (words.size() < 2) throw ParseError(number, "expected 'op <name> <values...>'");
      op_lines.emplace_back(number, std::string(words[1]),
                            std::vector<std::string_view>(words.begin() + 2, words.end()));
    } else {
      throw ParseError(number, "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!carrier) throw ParseError(0, "missing 'carrier' line");

  OpMap ops;
  for (auto const& [number, op_name, values] : op_lines) {
    if (values.size() != *carrier) {
      throw ParseError(number, "operation '" + op_name + "' has " +
                                   std::to_string(values.size()) + " values, expected " +
                                   std::to_string(*carrier));
    }
    Table table;
    for (auto word : values) {
      auto const v = parse_number<Element>(word);
      if (!v) throw ParseError(number, "'" + std::string(word) + "' is not a decimal value");
      if (*v >= *carrier) {
        throw ParseError(number, "value " + std::to_string(*v) + " outside the carrier");
      }
      table.push_back(*v);
    }
    if (!ops.emplace(op_name, std::move(table)).second) {
      throw ParseError(number, "duplicate operation name '" + op_name + "'");
    }
  }
  return UnaryAlgebra(*carrier, std::move(ops), name);
}

UnaryAlgebra read_algebra(std::filesystem::path const& path) {
  return parse_algebra(read_text_file(path));
}

std::string format_algebra(UnaryAlgebra const& algebra) {
  std::ostringstream out;
  if (!algebra.name().empty()) out << "algebra " << algebra.name() << '\n';
  out << "carrier " << algebra.size() << '\n';
  for (auto const& [name, table] : algebra.ops()) {
    out << "op " << name;
    for (auto v : table) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

Tuple parse_tuple(std::string_view text) {
  auto const first = text.find_first_not_of(" \t\r\n");
  auto const last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError(0, "empty tuple literal");
  text = text.substr(first, last - first + 1);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError(0, "tuple literal must be parenthesised: '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  Tuple out;
  while (true) {
    auto const comma = text.find(',');
    auto word = text.substr(0, comma);
    auto const a = word.find_first_not_of(" \t");
    auto const b = word.find_last_not_of(" \t");
    word = a == std::string_view::npos ? std::string_view{} : word.substr(a, b - a + 1);
    auto const v = parse_number<Element>(word);
    if (!v) throw ParseError(0, "bad tuple entry '" + std::string(word) + "'");
    out.push_back(*v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

std::string format_tuple(Tuple const& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(tuple[i]);
  }
  out += ')';
  return out;
}

std::string format_subpower(Subpower const& subpower) {
  std::ostringstream out;
  out << "subpower N=" << subpower.exponent() << " base=" << subpower.base().name() << '\n';
  std::vector<Tuple> gens = subpower.generators();
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto const& g : gens) out << "gen " << format_tuple(g) << '\n';
  for (auto const& x : subpower.elements()) {
    if (!std::binary_search(gens.begin(), gens.end(), x)) out << format_tuple(x) << '\n';
  }
  return out.str();
}

Subpower parse_subpower(std::string_view text, UnaryAlgebra const& base) {
  std::optional<std::size_t> exponent;
  std::vector<Tuple> elements, generators;
  for (auto const& [number, line] : content_lines(text)) {
    auto const words = split_words(line);
    if (words.empty()) continue;
    try {
      if (!exponent) {
        if (words.size() != 3 || words[0] != "subpower" || !words[1].starts_with("N=") ||
            !words[2].starts_with("base=")) {
          throw ParseError(number, "expected 'subpower N=<N> base=<name>'");
        }
        exponent = parse_number<std::size_t>(words[1].substr(2));
        if (!exponent) throw ParseError(number, "bad exponent");
        if (words[2].substr(5) != base.name()) {
          throw ParseError(number, "base '" + std::string(words[2].substr(5)) +
                                       "' does not match algebra '" + base.name() + "'");
        }
      } else if (words[0] == "gen") {
        std::string joined;
        for (std::size_t i = 1; i < words.size(); ++i) joined += words[i];
        auto t = parse_tuple(joined);
        generators.push_back(t);
        elements.push_back(std::move(t));
      } else {
        std::string joined;
        for (auto w : words) joined += w;
        elements.push_back(parse_tuple(joined));
      }
    } catch (ParseError const& e) {
      if (e.line() != 0) throw;
      throw ParseError(number, e.reason());
    }
  }
  if (!exponent) throw ParseError(0, "missing 'subpower' header");
  std::optional<Subpower> subpower;
  try {
    subpower.emplace(base, *exponent, std::move(elements), std::move(generators));
  } catch (Error const& e) {
    throw ParseError(0, e.what());
  }
  if (!subpower->is_closed()) throw ParseError(0, "element set is not closed under the operations");
  return std::move(*subpower);
}

FieldOfSets parse_field(std::string_view text) {
  std::optional<std::size_t> ground;
  std::vector<FieldOfSets::Mask> members;
  for (auto const& [number, line] : content_lines(text)) {
    auto const words = split_words(line);
    if (words.empty()) continue;
    if (words[0] == "ground") {
      if (ground) throw ParseError(number, "duplicate 'ground' line");
      if (words.size() != 2) throw ParseError(number, "expected 'ground <m>'");
      ground = parse_number<std::size_t>(words[1]);
      if (!ground || *ground == 0 || *ground > 64) {
        throw ParseError(number, "ground size must be in 1..64");
      }
    } else if (words[0] == "members") {
      if (!ground) throw ParseError(number, "'members' before 'ground'");
      for (std::size_t i = 1; i < words.size(); ++i) {
        auto const w = words[i];
        if (w.size() != *ground || w.find_first_not_of("01") != std::string_view::npos) {
          throw ParseError(number, "member '" + std::string(w) + "' is not a " +
                                       std::to_string(*ground) + "-digit binary mask");
        }
        FieldOfSets::Mask mask = 0;
        for (auto ch : w) mask = (mask << 1) | static_cast<FieldOfSets::Mask>(ch - '0');
        members.push_back(mask);
      }
    } else {
      throw ParseError(number, "unknown keyword '" + std::string(words[0]) + "'");
    }
  }
  if (!ground) throw ParseError(0, "missing 'ground' line");
  try {
    return FieldOfSets(*ground, std::move(members));
  } catch (Error const& e) {
    throw ParseError(0, e.what());
  }
}

FieldOfSets read_field(std::filesystem::path const& path) {
  return parse_field(read_text_file(path));
}

std::string format_field(FieldOfSets const& field) {
  std::string out = "ground " + std::to_string(field.ground()) + "\nmembers";
  for (auto m : field.members()) {
    out += ' ';
    for (std::size_t i = field.ground(); i-- > 0;) out += ((m >> i) & 1) ? '1' : '0';
  }
  out += '\n';
  return out;
}

}  // namespace ua
