#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ua/algebra.hpp"
#include "ua/casebook.hpp"
#include "ua/powers.hpp"

namespace ua {

// Algebra text format:
//
//   # comment
//   algebra <name>
//   carrier <n>
//   op <opname> <v0> <v1> ... <v(n-1)>
//
// Exactly one `carrier` line, at most one `algebra` line, any number of `op`
// lines. Errors are ParseError with the offending line number.
UnaryAlgebra parse_algebra(std::string_view text);
UnaryAlgebra read_algebra(std::filesystem::path const& path);
std::string format_algebra(UnaryAlgebra const& algebra);

// Tuple literal: `(2,0,1,1,1)`.
Tuple parse_tuple(std::string_view text);
std::string format_tuple(Tuple const& tuple);

// Subpower export:
//
//   subpower N=<N> base=<algebra-name>
//   gen (..)      one line per generator
//   (..)          one line per remaining element
std::string format_subpower(Subpower const& subpower);
// The base algebra is supplied by the caller; its name must match the header.
Subpower parse_subpower(std::string_view text, UnaryAlgebra const& base);

// Field of sets:
//
//   ground <m>
//   members 00 11 01 10
//
// Each member is an m-digit binary numeral; the rightmost digit is element 0.
// `members` may be repeated; closure is validated.
FieldOfSets parse_field(std::string_view text);
FieldOfSets read_field(std::filesystem::path const& path);
std::string format_field(FieldOfSets const& field);

std::string read_text_file(std::filesystem::path const& path);

}  // namespace ua
