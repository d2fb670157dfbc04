#ifndef CLASSLAB_GROUPSPEC_HPP
#define CLASSLAB_GROUPSPEC_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "constructions.hpp"
#include "error.hpp"
#include "group.hpp"

namespace classlab {

/// Group expressions:
///
///   expr  := term (("x" | "×") term)*
///   term  := "wr2(" expr ")" | named
///   named := A<n> | S<n> | PSL(2,9) | PGL(2,9) | PGammaL(2,9) | M10 | U4(2)
///
/// Whitespace between tokens is ignored. Products associate to the left.
struct GroupExpr {
  enum class Kind { Named, Product, Wreath2 };

  Kind kind = Kind::Named;
  std::string name;                 ///< canonical name, Named only
  std::vector<GroupExpr> operands;  ///< two for Product, one for Wreath2

  static GroupExpr named(std::string n) { return {Kind::Named, std::move(n), {}}; }
  static GroupExpr product(GroupExpr l, GroupExpr r) {
    GroupExpr e{Kind::Product, {}, {}};
    e.operands.push_back(std::move(l));
    e.operands.push_back(std::move(r));
    return e;
  }
  static GroupExpr wreath2(GroupExpr base) {
    GroupExpr e{Kind::Wreath2, {}, {}};
    e.operands.push_back(std::move(base));
    return e;
  }

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

/// Canonical text: "A6 x A6", "wr2(PGammaL(2,9))".
inline std::string to_string(const GroupExpr& e) {
  switch (e.kind) {
  case GroupExpr::Kind::Named:
    return e.name;
  case GroupExpr::Kind::Product:
    return to_string(e.operands[0]) + " x " + to_string(e.operands[1]);
  case GroupExpr::Kind::Wreath2:
    return "wr2(" + to_string(e.operands[0]) + ")";
  }
  return {};
}

namespace detail {

inline constexpr std::string_view kTimesSign = "\xC3\x97"; // U+00D7

/// Error offsets are 1-based character positions; the end of input is
/// reported as length + 1.
class GroupSpecParser {
public:
  explicit GroupSpecParser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    GroupExpr e = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, at + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  GroupExpr expr() {
    GroupExpr left = term();
    for (;;) {
      skip_ws();
      if (!accept("x") && !accept(kTimesSign))
        return left;
      left = GroupExpr::product(std::move(left), term());
    }
  }

  GroupExpr term() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("expected a group name");
    if (accept("wr2(")) {
      GroupExpr inner = expr();
      if (!accept(")"))
        fail("expected ')'");
      return GroupExpr::wreath2(std::move(inner));
    }
    return named();
  }

  GroupExpr named() {
    static constexpr std::string_view fixed[] = {"PSL(2,9)", "PGL(2,9)", "PGammaL(2,9)", "M10",
                                                 "U4(2)"};
    skip_ws();
    const std::size_t start = pos_;
    for (auto f : fixed)
      if (accept(f))
        return GroupExpr::named(std::string(f));
    if (pos_ == text_.size())
      fail_at("expected a group name", start);
    if (text_[pos_] == 'A' || text_[pos_] == 'S') {
      char family = text_[pos_++];
      std::size_t digits = pos_;
      unsigned n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) &&
             pos_ - digits < 4)
        n = n * 10 + static_cast<unsigned>(text_[pos_++] - '0');
      if (pos_ == digits)
        fail_at("unknown group name", start);
      if (n < 3 || n > 16)
        fail_at("unknown group name " + std::string(1, family) + std::to_string(n) +
                    " (degree must be 3..16)",
                start);
      return GroupExpr::named(std::string(1, family) + std::to_string(n));
    }
    std::size_t end = start;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])))
      ++end;
    fail_at("unknown group name '" + std::string(text_.substr(start, end - start)) + "'", start);
  }
};

} // namespace detail

inline GroupExpr parse_group_spec(std::string_view text) {
  return detail::GroupSpecParser(text).parse();
}

inline PermutationGroup evaluate(const GroupExpr& e) {
  switch (e.kind) {
  case GroupExpr::Kind::Product:
    return direct_product(evaluate(e.operands[0]), evaluate(e.operands[1]));
  case GroupExpr::Kind::Wreath2:
    return wreath_by_involution(evaluate(e.operands[0])).group;
  case GroupExpr::Kind::Named:
    break;
  }
  const std::string& n = e.name;
  if (n == "PSL(2,9)")
    return pgammal_2_9().socle;
  if (n == "PGL(2,9)")
    return a6_extension(A6Extension::PGL_2_9);
  if (n == "PGammaL(2,9)")
    return pgammal_2_9().group;
  if (n == "M10")
    return a6_extension(A6Extension::M10);
  if (n == "U4(2)")
    return u4_2();
  if (n.size() >= 2 && (n[0] == 'A' || n[0] == 'S')) {
    std::size_t degree = std::stoul(n.substr(1));
    return n[0] == 'A' ? alternating(degree) : symmetric(degree);
  }
  throw std::invalid_argument("unknown group name " + n);
}

inline PermutationGroup evaluate(std::string_view text) { return evaluate(parse_group_spec(text)); }

} // namespace classlab

#endif
