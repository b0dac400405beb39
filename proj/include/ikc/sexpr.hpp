#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ikc/index.hpp"

namespace ikc {

// Reader shared by every textual grammar. Brackets are kept apart from
// parentheses so that `x[1 2]` reads as an atom followed by an index.
struct SExpr {
  enum class Kind { Atom, List, Bracket };
  Kind kind = Kind::Atom;
  std::string text;            // Atom
  std::vector<SExpr> items;    // List
  Index index;                 // Bracket
  std::size_t line = 1, col = 1;

  bool is_atom() const { return kind == Kind::Atom; }
  bool is_atom(std::string_view s) const { return kind == Kind::Atom && text == s; }
  bool is_list() const { return kind == Kind::List; }
  bool is_bracket() const { return kind == Kind::Bracket; }
  std::string where() const;
};

// Reads every top-level form. Throws SyntaxError.
std::vector<SExpr> read_sexprs(std::string_view text);
// Exactly one top-level form.
SExpr read_sexpr(std::string_view text);

bool is_identifier(std::string_view s);
unsigned parse_nat(const SExpr& e);

// Cursor over a list's children for the term/derivation grammars.
class SCursor {
 public:
  SCursor(const std::vector<SExpr>& items, std::size_t pos = 0) : items_(items), pos_(pos) {}
  bool done() const { return pos_ >= items_.size(); }
  const SExpr& peek() const;
  const SExpr& next();
  void expect_done(const char* what) const;

 private:
  const std::vector<SExpr>& items_;
  std::size_t pos_;
};

}  // namespace ikc
