#include <cctype>
#include <string>

#include "doctest.h"

#include "fixtures.hpp"
#include "varsemi/errors.hpp"
#include "varsemi/table_io.hpp"

using namespace varsemi;
using namespace fixtures;

namespace {
  template <typename F>
  std::pair<std::size_t, std::size_t> syntax_error_at(F&& f) {
    try {
      f();
    } catch (SyntaxError const& e) {
      return {e.line, e.column};
    }
    return {0, 0};
  }
}  // namespace

TEST_CASE("parse_table") {
  CHECK(parse_table("2\n0 0\n1 1\n") == left_zero());
  CHECK(parse_table("2\n0 1\n1 0\n") == z2());
  CHECK(parse_table("# comment\n2\n# between\n0 1\n1 0\n") == z2());
  CHECK(parse_table("2\n 0   1 \n1 0\n") == z2());
  try {
    parse_table("2\n0 2\n1 1\n");
    FAIL("expected OutOfRange");
  } catch (OutOfRange const& e) {
    CHECK(e.x == 0);
    CHECK(e.y == 1);
  }
  CHECK_THROWS_AS(parse_table("2\n1 0\n0 0\n"), NotAssociative);
  CHECK_THROWS_AS(parse_table("17\n"), OrderTooLarge);
}

TEST_CASE("parse_table syntax errors carry line and column") {
  using P = std::pair<std::size_t, std::size_t>;
  CHECK(syntax_error_at([] { parse_table("2\n0 0\n1 1"); }) == P{3, 4});
  CHECK(syntax_error_at([] { parse_table("2\n0\t0\n1 1\n"); }) == P{2, 2});
  CHECK(syntax_error_at([] { parse_table("2\n0 x\n1 1\n"); }) == P{2, 3});
  CHECK(syntax_error_at([] { parse_table("2\n0 0 0\n1 1\n"); }) == P{2, 5});
  CHECK(syntax_error_at([] { parse_table("2\n0\n1 1\n"); }) == P{2, 2});
  CHECK(syntax_error_at([] { parse_table("2\n0 0\n"); }) == P{3, 1});
  CHECK(syntax_error_at([] { parse_table("2\n0 0\n1 1\n0 0\n"); }) == P{4, 1});
  CHECK(syntax_error_at([] { parse_table("2 2\n0 0\n1 1\n"); }) == P{1, 3});
  CHECK(syntax_error_at([] { parse_table("0\n"); }) == P{1, 1});
  CHECK(syntax_error_at([] { parse_table(""); }) == P{1, 1});
  CHECK(syntax_error_at([] { parse_table("-1\n"); }) == P{1, 1});
}

TEST_CASE("serialize_table") {
  CHECK(serialize_table(left_zero()) == "2\n0 0\n1 1\n");
  CHECK(serialize_table(min3()) == "3\n0 0 0\n0 1 1\n0 1 2\n");
  for (auto const& text : {"2\n0 0\n1 1\n", "2\n0 1\n1 0\n"}) {
    CHECK(serialize_table(parse_table(text)) == text);
  }
  CHECK(serialize_table(parse_table("# c\n2\n0  0\n1 1\n")) == "2\n0 0\n1 1\n");
}

TEST_CASE("inline form and hash") {
  CHECK(inline_table(left_zero()) == "2;0 0;1 1");
  CHECK(parse_inline_table("2;0 0;1 1") == left_zero());
  CHECK_THROWS_AS(parse_inline_table("2;0 0\n;1 1"), SyntaxError);
  auto const h = table_hash(left_zero());
  CHECK(h.size() == 16);
  for (char c : h) {
    CHECK((std::isdigit(static_cast<unsigned char>(c)) || (c >= 'a' && c <= 'f')));
  }
  CHECK(h != table_hash(right_zero()));
  CHECK(h == table_hash(parse_table("2\n0 0\n1 1\n")));
}

TEST_CASE("round trip over the corpus") {
  for (auto const& s : corpus({1, 2, 3, 4})) {
    CHECK(parse_table(serialize_table(s)) == s);
    CHECK(parse_inline_table(inline_table(s)) == s);
  }
}

TEST_CASE("read_table_file") {
  CHECK(read_table_file(VARSEMI_DATA_DIR "/left_zero.sgt") == left_zero());
  CHECK(read_table_file(VARSEMI_DATA_DIR "/z2.sgt") == z2());
  CHECK_THROWS_AS(read_table_file(VARSEMI_DATA_DIR "/no_such_file.sgt"), Error);
}
