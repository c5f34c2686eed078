#pragma once

// Coefficient tables as written by the command-line tool: JSON (exact
// "p/q" strings, parseable back), CSV and plain text.

#include <optional>
#include <string>
#include <vector>

#include "slicefrac/bipoly.hpp"

namespace sfcli {

struct Monomial {
  int tb = 0, tw = 0;
  sf::Rational coeff;
  bool operator==(const Monomial&) const = default;
};

struct Entry {
  std::string index;  // "3", or a name such as "W_1"
  std::vector<Monomial> monomials;
  std::optional<std::vector<Monomial>> reference;  // solver values next to extracted ones
  std::optional<bool> equal;
  bool operator==(const Entry&) const = default;
};

struct Table {
  std::string what;
  int cap = 0;
  std::vector<Entry> entries;
  bool operator==(const Table&) const = default;
};

std::vector<Monomial> monomials(const sf::BiPoly& p);

std::string to_json(const Table& t);
// Throws std::runtime_error on malformed input.
Table from_json(const std::string& text);
// index,tb_exp,tw_exp,coeff; reference rows carry the index suffix ":solver".
std::string to_csv(const Table& t);
std::string to_text(const Table& t);

enum class Format { Json, Csv, Text };
std::string render(const Table& t, Format f);

}  // namespace sfcli
