#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "b0/intmat.hpp"

namespace b0 {

struct Factor {
  int gen;  // 1-based generator index
  int exp;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// Normal word: strictly increasing generator indices, exponents in
// [1, order - 1].  Empty word is the identity.
using Word = std::vector<Factor>;

// Power-commutator presentation on g1..gn:
//   g_i^{e_i}  = power_rhs[i-1]        (word in g_{i+1}..g_n)
//   [g_i,g_j]  = comm_rhs[{i,j}], j<i  (word in g_{i+1}..g_n; absent = trivial)
// Convention: [a,b] = a^{-1} b^{-1} a b, so g_i g_j = g_j g_i [g_i,g_j].
struct PcPresentation {
  std::string name;
  int n = 0;
  std::vector<int> orders;     // e_1..e_n, each >= 2
  std::vector<Word> power_rhs; // size n
  std::map<std::pair<int, int>, Word> comm_rhs;

  const Word* comm(int i, int j) const;  // nullptr when trivial
  Int order() const;
  int stored_comm_count() const { return static_cast<int>(comm_rhs.size()); }

  friend bool operator==(const PcPresentation&, const PcPresentation&) = default;
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line, int column, const std::string& message);
};

// Text grammar, one declaration per line ('#' starts a comment):
//   pcgroup <n>
//   name <label>                (optional)
//   orders <e1> ... <en>
//   g<i>^<e_i> = <word>         (omitted relations default to rhs 1)
//   [g<i>,g<j>] = <word>        (j < i)
// where <word> is `1` or `g<k>`/`g<k>^<x>` factors joined by `*`.
PcPresentation parse_presentation(std::string_view text);

// Structural sanity: array sizes, orders >= 2, relation keys in range,
// rhs words normal and supported on generators above the relation index.
// Throws std::invalid_argument on violation.
void check_well_formed(const PcPresentation& p);

enum class Format { Text, Json };

std::string serialize(const PcPresentation& p, Format format);

std::string word_to_string(const Word& w);

}  // namespace b0
