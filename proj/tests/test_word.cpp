#include "doctest.h"
#include "word.hpp"

using namespace hfree;

TEST_CASE("parse_word") {
  Word w = parse_word("121");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Letter{1, false});
  CHECK(w[1] == Letter{2, false});

  Word p = parse_word("12312313'");
  REQUIRE(p.size() == 8);
  CHECK(p[7] == Letter{3, true});
  CHECK(p.has_inverses());

  CHECK(parse_word("").empty());
}

TEST_CASE("parse_word rejects junk with offset") {
  try {
    parse_word("12x3");
    FAIL("no throw");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_word("'1"), SyntaxError);
  CHECK_THROWS_AS(parse_word("0"), SyntaxError);
  CHECK_THROWS_AS(parse_word("1''"), SyntaxError);
}

TEST_CASE("print and parse round trip") {
  for (const char* s : {"", "1", "3'", "12312313'", "232'12312", "2'1'212"}) {
    CHECK(to_string(parse_word(s)) == s);
  }
}

TEST_CASE("invert_word") {
  CHECK(to_string(invert_word(parse_word("123"))) == "3'2'1'");
  CHECK(to_string(invert_word(parse_word("2'1'212"))) == "2'1'2'12");
  CHECK(invert_word(Word{}).empty());
  Word w = parse_word("232'1231231");
  CHECK(invert_word(invert_word(w)) == w);
  CHECK(free_reduce(w * invert_word(w)).empty());
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(parse_word("11'")).empty());
  CHECK(to_string(free_reduce(parse_word("2'1212'") * parse_word("2"))) ==
        "2'121");
  CHECK(to_string(free_reduce(parse_word("3'1313'"))) == "3'1313'");
  CHECK(free_reduce(parse_word("122'1'")).empty());
  CHECK(to_string(free_reduce(parse_word("12'21"))) == "11");
}
