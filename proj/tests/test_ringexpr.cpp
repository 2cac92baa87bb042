#include "expr_gen.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace ringlab;
using namespace exprgen;

TEST_CASE("parse examples") {
  RingExpr z8 = parse("Z(8)");
  CHECK(z8.kind == RingKind::Zmod);
  CHECK(z8.n == 8);
  RingExpr g = parse("group(Z(2), C(2) x C(2))");
  CHECK(g.kind == RingKind::GroupRing);
  REQUIRE(g.group.has_value());
  CHECK(g.group->kind == GroupKind::Product);
  CHECK(g.group->factors.size() == 2);
  CHECK_THROWS_AS(parse("M(0, Z(2))"), RangeError);
}

TEST_CASE("canonical printing") {
  CHECK(print_canonical(parse("Z(8)")) == "z(8)");
  CHECK(print_canonical(parse("prod( Z(2) , Z(4) )")) == "prod(z(2),z(4))");
  CHECK(print_canonical(parse("GROUP(z(2),C(4))")) == "group(z(2),c(4))");
  CHECK(print_canonical(parse("quot(z(8), [4, 2])")) == "quot(z(8),[4,2])");
  CHECK(print_canonical(parse("skew(gf(4), FROB, 2)")) == "skew(gf(4),frob,2)");
  CHECK(print_canonical(parse("group(z(2),Q8)")) == "group(z(2),q8)");
}

TEST_CASE("canonical hashes") {
  CHECK(canonical_hash(parse("Z(8)")) == canonical_hash(parse("z( 8 )")));
  CHECK(canonical_hash(parse("Z(8)")) != canonical_hash(parse("Z(4)")));
  CHECK(canonical_hash(parse("prod(Z(2),Z(2))")) != canonical_hash(parse("Z(2)")));
}

TEST_CASE("round trip over 1000 generated expressions") {
  Generator gen(20240611);
  std::mt19937 noise(7);
  for (int i = 0; i < 1000; ++i) {
    RingExpr e = gen.ring(1 + i % 4);
    std::string text = print_canonical(e);
    CAPTURE(text);
    RingExpr back = parse(text);
    REQUIRE(back == e);
    REQUIRE(print_canonical(back) == text);
    REQUIRE(parse(perturb(text, noise)) == e);
  }
}

TEST_CASE("malformed inputs report offsets") {
  for (const auto& f : kMalformed) {
    CAPTURE(f.text);
    CHECK(error_offset(f.text) == f.offset);
  }
}

TEST_CASE("syntax errors name what was expected") {
  try {
    parse("prod(z(2),");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 10);
    CHECK_FALSE(e.expected().empty());
    CHECK(std::string(e.what()).find("end of input") != std::string::npos);
  }
}

TEST_CASE("overlong input is rejected") {
  std::string text(kMaxExprLength + 1, ' ');
  CHECK_THROWS_AS(parse(text), RingError);
}

TEST_CASE("compile") {
  CHECK(compile(parse("quot(Z(8), [4])"))->order() == 4);
  CHECK(compile(parse("corner(M(2,Z(2)), 1)"))->order() == 2);
  CHECK(compile(parse("triv(Z(4))"))->order() == 16);
  CHECK(compile(parse("group(z(2),c(2)xc(2))"))->order() == 16);
  CHECK(compile(parse("skew(gf(4),frob,3)"))->order() == 64);
  CHECK(compile(parse("poly(z(2),3)"))->order() == 8);
  try {
    compile(parse("corner(z(4),9)"));
    FAIL("expected BadElementRef");
  } catch (const RingError& e) {
    CHECK(e.code() == ErrorCode::BadElementRef);
  }
  CHECK_THROWS_AS(compile(parse("m(3,z(4))")), RingError);
  CHECK_THROWS_AS(compile(parse("z(64)"), CompileOptions{Limits{32}}), RingError);
}

TEST_CASE("group files") {
  GroupExpr g = parse_group("c(2)xq8");
  CHECK(build_group(g)->order == 16);
  CHECK_THROWS_AS(build_group(parse_group("@/nonexistent/group.txt")), RingError);

  auto dir = std::filesystem::temp_directory_path() / "ringlab-expr-files";
  std::filesystem::create_directories(dir);
  {
    std::ofstream g(dir / "C2.txt");
    g << "order 2\nidentity 0\n0 1\n1 0\n";
    std::ofstream frob(dir / "frob4.txt");
    frob << "order 4\n0 -> 0\n1 -> 1\n2 -> 3\n3 -> 2\n";
  }
  std::string gpath = (dir / "C2.txt").string();
  RingExpr e = parse("group(z(2), @" + gpath + " X C(2))");
  CHECK(print_canonical(e) == "group(z(2),@" + gpath + " xc(2))");
  CHECK(parse(print_canonical(e)) == e);
  CHECK(compile(e)->order() == 16);
  RingPtr via_file = compile(parse("skew(gf(4),@" + (dir / "frob4.txt").string() + ",2)"));
  CHECK(via_file->same_tables(*compile(parse("skew(gf(4),frob,2)"))));
  std::filesystem::remove_all(dir);
}
