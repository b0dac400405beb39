#include "ikc/sexpr.hpp"

#include <cctype>
#include <limits>

#include "ikc/errors.hpp"

namespace ikc {

std::string SExpr::where() const {
  return std::to_string(line) + ":" + std::to_string(col);
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  std::vector<SExpr> all() {
    std::vector<SExpr> out;
    skip();
    while (i_ < s_.size()) {
      out.push_back(form());
      skip();
    }
    return out;
  }

 private:
  void skip() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == ';') {
        while (i_ < s_.size() && s_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        advance();
      } else {
        break;
      }
    }
  }
  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg);
  }

  SExpr form() {
    SExpr e;
    e.line = line_;
    e.col = col_;
    char c = s_[i_];
    if (c == '(') {
      advance();
      e.kind = SExpr::Kind::List;
      for (;;) {
        skip();
        if (i_ >= s_.size()) fail("unclosed '('");
        if (s_[i_] == ')') {
          advance();
          break;
        }
        e.items.push_back(form());
      }
    } else if (c == '[') {
      advance();
      e.kind = SExpr::Kind::Bracket;
      std::vector<Index::value_type> xs;
      for (;;) {
        skip();
        if (i_ >= s_.size()) fail("unclosed '['");
        if (s_[i_] == ']') {
          advance();
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected a natural inside an index");
        unsigned long long v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
          v = v * 10 + static_cast<unsigned>(s_[i_] - '0');
          if (v > std::numeric_limits<Index::value_type>::max()) fail("index entry too large");
          advance();
        }
        xs.push_back(static_cast<Index::value_type>(v));
      }
      e.index = Index(std::move(xs));
    } else if (c == ')' || c == ']') {
      fail(std::string("unexpected '") + c + "'");
    } else {
      e.kind = SExpr::Kind::Atom;
      while (i_ < s_.size()) {
        char d = s_[i_];
        if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == '[' ||
            d == ']' || d == ';' || d == ',')
          break;
        e.text += d;
        advance();
      }
    }
    return e;
  }

  std::string_view s_;
  std::size_t i_ = 0, line_ = 1, col_ = 1;
};

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) { return Reader(text).all(); }

SExpr read_sexpr(std::string_view text) {
  auto all = read_sexprs(text);
  if (all.size() != 1)
    throw SyntaxError("expected exactly one form, found " + std::to_string(all.size()));
  return std::move(all.front());
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

unsigned parse_nat(const SExpr& e) {
  if (!e.is_atom() || e.text.empty() || e.text.size() > 9)
    throw SyntaxError(e.where() + ": expected a natural number");
  for (char c : e.text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw SyntaxError(e.where() + ": expected a natural number");
  return static_cast<unsigned>(std::stoul(e.text));
}

const SExpr& SCursor::peek() const {
  if (done()) throw SyntaxError("unexpected end of form");
  return items_[pos_];
}

const SExpr& SCursor::next() {
  const SExpr& e = peek();
  ++pos_;
  return e;
}

void SCursor::expect_done(const char* what) const {
  if (!done()) throw SyntaxError(items_[pos_].where() + ": trailing input in " + what);
}

}  // namespace ikc
