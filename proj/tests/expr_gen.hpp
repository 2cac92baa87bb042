#pragma once

// Random ring-expression generator and malformed-input fixtures shared by
// the parser tests and the acceptance runner.

#include "ringlab/ringexpr.hpp"

#include <cctype>
#include <random>

namespace exprgen {

using namespace ringlab;

class Generator {
 public:
  explicit Generator(std::uint32_t seed) : rng_(seed) {}

  RingExpr ring(int depth) {
    RingExpr e;
    int kind = depth <= 1 ? pick(0, 1) : pick(0, 10);
    switch (kind) {
      case 0: e.kind = RingKind::Zmod; e.n = pick(2, 500); break;
      case 1: e.kind = RingKind::Galois; e.n = choose({2, 3, 4, 5, 7, 8, 9}); break;
      case 2: e.kind = RingKind::Matrix; e.n = pick(1, 4); e.children = {ring(depth - 1)}; break;
      case 3: e.kind = RingKind::Triangular; e.n = pick(1, 4); e.children = {ring(depth - 1)}; break;
      case 4:
        e.kind = RingKind::Product;
        for (int i = pick(1, 3); i > 0; --i) e.children.push_back(ring(depth - 1));
        break;
      case 5:
        e.kind = RingKind::Quotient;
        e.children = {ring(depth - 1)};
        for (int i = pick(1, 3); i > 0; --i) e.indices.push_back(pick(0, 99));
        break;
      case 6: e.kind = RingKind::Corner; e.n = pick(0, 999); e.children = {ring(depth - 1)}; break;
      case 7: e.kind = RingKind::Trivial; e.children = {ring(depth - 1)}; break;
      case 8: e.kind = RingKind::GroupRing; e.children = {ring(depth - 1)}; e.group = group(); break;
      case 9: e.kind = RingKind::Poly; e.n = pick(1, 5); e.children = {ring(depth - 1)}; break;
      default:
        e.kind = RingKind::Skew;
        e.n = pick(1, 5);
        e.children = {ring(depth - 1)};
        e.endo.kind = static_cast<EndoKind>(pick(0, 2));
        if (e.endo.kind == EndoKind::File) e.endo.file = path();
        break;
    }
    return e;
  }

  GroupExpr group() {
    int factors = pick(1, 3);
    if (factors == 1) return atom();
    GroupExpr g;
    g.kind = GroupKind::Product;
    for (int i = 0; i < factors; ++i) g.factors.push_back(atom());
    return g;
  }

 private:
  GroupExpr atom() {
    GroupExpr g;
    g.kind = static_cast<GroupKind>(pick(0, 4));
    switch (g.kind) {
      case GroupKind::Cyclic:
      case GroupKind::Dihedral: g.n = pick(1, 40); break;
      case GroupKind::Symmetric: g.n = pick(1, 4); break;
      case GroupKind::File: g.file = path(); break;
      default: break;
    }
    return g;
  }

  std::string path() {
    static const std::string chars = "abcdefghijklmnopqrstuvwxyz0123456789_./-";
    std::string s;
    for (int i = pick(1, 12); i > 0; --i) s += chars[pick(0, static_cast<int>(chars.size()) - 1)];
    return s;
  }

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::size_t choose(std::initializer_list<std::size_t> xs) { return *(xs.begin() + pick(0, int(xs.size()) - 1)); }

  std::mt19937 rng_;
};

// Upper-cases keywords and sprinkles whitespace between tokens, leaving file
// names untouched.
inline std::string perturb(const std::string& canonical, std::mt19937& rng) {
  std::string out;
  bool in_file = false;
  for (char c : canonical) {
    if (c == '@') in_file = true;
    if (in_file && (c == ',' || c == ')' || c == ' ')) in_file = false;
    if (!in_file && (c == '(' || c == ',' || c == ')') && rng() % 2) out += ' ';
    out += (!in_file && rng() % 2) ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
    if (!in_file && (c == '(' || c == ',') && rng() % 3 == 0) out += "\t ";
  }
  return out;
}

struct MalformedFixture {
  const char* text;
  std::size_t offset;
};

inline const MalformedFixture kMalformed[] = {
    {"", 0},
    {"   ", 3},
    {"y(2)", 0},
    {"z(", 2},
    {"z(8", 3},
    {"z(8))", 4},
    {"z(8) z(2)", 5},
    {"z(x)", 2},
    {"z(-3)", 2},
    {"z(1)", 2},
    {"z(0)", 2},
    {"gf(6)", 3},
    {"m(0,z(2))", 2},
    {"m(2 z(2))", 4},
    {"t(2,)", 4},
    {"prod()", 5},
    {"prod(z(2),)", 10},
    {"quot(z(8),4)", 10},
    {"quot(z(8),[])", 11},
    {"quot(z(8),[4,])", 13},
    {"corner(z(4))", 11},
    {"triv(z(2),z(2))", 9},
    {"group(z(2))", 10},
    {"group(z(2),c(0))", 13},
    {"group(z(2),s(5))", 13},
    {"group(z(2),c(2)x)", 16},
    {"group(z(2),p(2))", 11},
    {"skew(gf(4),bogus,2)", 11},
    {"skew(gf(4),frob,0)", 16},
    {"poly(z(2))", 9},
    {"z(99999999999)", 2},
    {"z(8)#", 4},
};

// Offset carried by the parse error, npos if the text parses.
inline std::size_t error_offset(const std::string& text) {
  try {
    parse(text);
  } catch (const SyntaxError& e) {
    return e.offset();
  } catch (const RangeError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace exprgen
