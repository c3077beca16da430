#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ua/casebook.hpp"
#include "ua/io.hpp"

using namespace ua;

namespace {

int parse_error_line(std::string_view text) {
  try {
    parse_algebra(text);
  } catch (ParseError const& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

}  // namespace

TEST_CASE("parse_algebra accepts the documented format") {
  auto const a = parse_algebra(
      "# comment\n"
      "algebra demo\n"
      "\n"
      "carrier 3   # trailing comment\n"
      "op f 0 0 1\n"
      "op g 1 2 0\n");
  CHECK(a.name() == "demo");
  CHECK(a.size() == 3);
  CHECK(a.op("f") == Table{0, 0, 1});
  CHECK(a.op("g") == Table{1, 2, 0});

  auto const bare = parse_algebra("carrier 2\n");
  CHECK(bare.op_count() == 0);
}

TEST_CASE("parse_algebra reports the offending line") {
  CHECK(parse_error_line("carrier 3\nop f 0 0\n") == 2);
  CHECK(parse_error_line("carrier 3\nop f 0 0 3\n") == 2);
  CHECK(parse_error_line("carrier 3\nop f 0 0 x\n") == 2);
  CHECK(parse_error_line("carrier 3\nop f 0 0 1\nop f 0 0 1\n") == 3);
  CHECK(parse_error_line("carrier 0\n") == 1);
  CHECK(parse_error_line("frobnicate\n") == 1);
  CHECK(parse_error_line("carrier 2\ncarrier 2\n") == 2);
  CHECK(parse_error_line("op f 0\n") == 0);
}

TEST_CASE("format_algebra round-trips") {
  std::mt19937_64 rng(60);
  for (int trial = 0; trial < 50; ++trial) {
    auto const a = oracle::random_algebra(rng, 1 + rng() % 6, rng() % 4);
    auto const b = parse_algebra(format_algebra(a));
    CHECK(b.size() == a.size());
    CHECK(b.ops() == a.ops());
  }
}

TEST_CASE("tuples") {
  CHECK(parse_tuple("(2,0,1,1,1)") == Tuple{2, 0, 1, 1, 1});
  CHECK(parse_tuple(" ( 3 , 4 ) ") == Tuple{3, 4});
  CHECK(format_tuple({2, 0, 1}) == "(2,0,1)");
  CHECK_THROWS_AS(parse_tuple("2,0"), ParseError);
  CHECK_THROWS_AS(parse_tuple("()"), ParseError);
  CHECK_THROWS_AS(parse_tuple("(1,,2)"), ParseError);
  CHECK_THROWS_AS(parse_tuple("(1,-2)"), ParseError);
}

TEST_CASE("subpower export round-trips") {
  auto const chain = chain_algebra();
  auto const s = generate_subpower(chain, 3, {{2, 1, 0}, {2, 2, 1}});
  auto const text = format_subpower(s);
  CHECK(text.rfind("subpower N=3 base=chain\n", 0) == 0);
  CHECK(text.find("gen (2,1,0)\n") != std::string::npos);
  CHECK(text.find("\n(0,0,0)\n") != std::string::npos);
  auto const back = parse_subpower(text, chain);
  CHECK(back == s);
  CHECK(back.generators() == s.generators());

  CHECK_THROWS_AS(parse_subpower("subpower N=3 base=other\n(0,0,0)\n", chain), ParseError);
  CHECK_THROWS_AS(parse_subpower("subpower N=3 base=chain\n(2,2,2)\n", chain), Error);
}

TEST_CASE("fields of sets") {
  auto const f = parse_field("ground 2\nmembers 00 01 10 11\n");
  CHECK(f.ground() == 2);
  CHECK(f.members().size() == 4);
  auto const g = parse_field("ground 3\nmembers 000 111\nmembers 001 110\n");
  CHECK(g.contains(0b001));
  CHECK(g.contains(0b110));
  CHECK_FALSE(g.contains(0b100));
  CHECK(parse_field(format_field(g)).members() == g.members());
  CHECK_THROWS_AS(parse_field("ground 2\nmembers 00 01 11\n"), Error);
  CHECK_THROWS_AS(parse_field("ground 2\nmembers 00 011\n"), ParseError);
  CHECK_THROWS_AS(parse_field("members 00 11\n"), ParseError);
}

TEST_CASE("read_algebra from disk") {
  auto const path = std::filesystem::temp_directory_path() / "ua_test_io.alg";
  {
    std::ofstream out(path);
    out << format_algebra(chain_algebra());
  }
  CHECK(read_algebra(path).op("f") == Table{0, 0, 1});
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_algebra(path), Error);
}
