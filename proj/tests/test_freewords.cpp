#include <doctest.h>

#include "ggt/error.hpp"
#include "ggt/word.hpp"

using namespace ggt;

namespace {
Alphabet const ab = Alphabet::from_letters("ab");
Word w(char const* s) { return ab.parse(s); }
std::string str(Word const& x) { return ab.format(x); }
}  // namespace

TEST_SUITE("freewords") {

TEST_CASE("reduce") {
  Alphabet xs({"x1", "x2"});
  CHECK(xs.format(reduce(xs.parse("x1 x2 x2 x1 x1^-1"))) == "x1 x2 x2");
  CHECK(reduce(Alphabet::from_letters("x").parse("xX")).empty());
  CHECK(str(reduce(w("abBAab"))) == "ab");
  CHECK(reduce(w("abBA")).empty());
  CHECK(reduce(w("")).empty());
  CHECK(reduce(w("aAbBa")) == w("a"));
}

TEST_CASE("multiply and invert") {
  CHECK(str(multiply(w("ab"), w("Ba"))) == "aa");
  CHECK(multiply(w("abA"), Word{}) == w("abA"));
  CHECK(multiply(w("abA"), invert(w("abA"))).empty());
  CHECK(str(invert(w("ab"))) == "BA");
  CHECK(invert(Word{}).empty());
  CHECK(str(invert(w("abA"))) == "aBA");
  CHECK(str(power(w("ab"), -2)) == "BABA");
  CHECK(str(commutator(w("a"), w("b"))) == "abAB");
}

TEST_CASE("cyclic reduction") {
  auto r = cyclically_reduce(w("abA"));
  CHECK(str(r.core) == "b");
  CHECK(str(r.conjugator) == "a");

  r = cyclically_reduce(w("ab"));
  CHECK(str(r.core) == "ab");
  CHECK(r.conjugator.empty());

  // Both ends are stripped until they stop cancelling: A·(b·(a)·B)·a.
  r = cyclically_reduce(w("AbaBa"));
  CHECK(str(r.core) == "a");
  CHECK(str(r.conjugator) == "Ab");
  CHECK(multiply(multiply(r.conjugator, r.core), invert(r.conjugator)) == w("AbaBa"));
}

TEST_CASE("cyclic normal form identifies conjugates up to inversion") {
  CHECK(cyclic_normal_form(w("ba")) == cyclic_normal_form(w("ab")));
  CHECK(cyclic_normal_form(w("BA")) == cyclic_normal_form(w("ab")));
  CHECK(cyclic_normal_form(w("aab")) != cyclic_normal_form(w("abb")));
  CHECK(rotations(w("aab")).size() == 3);
}

TEST_CASE("word grammar") {
  CHECK(w("a^3") == w("aaa"));
  CHECK(w("(ab)^2") == w("abab"));
  CHECK(w(" a  b ") == w("ab"));
  CHECK(w("a^-2") == w("AA"));
  CHECK(w("(aB)^-1") == w("bA"));
  CHECK(w("1").empty());
  CHECK(str(Word{}) == "1");
  CHECK_THROWS_AS(w("ac"), ParseError);
  CHECK_THROWS_AS(w("(ab"), ParseError);
  CHECK_THROWS_AS(w("a^"), ParseError);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet({"A"}), Error);
}

TEST_CASE("Nielsen moves") {
  GeneratorTuple t{w("a"), w("b")};
  CHECK(nielsen_move(t, nielsen::Invert{0}) == GeneratorTuple{w("A"), w("b")});
  CHECK(nielsen_move(t, nielsen::Swap{0, 1}) == GeneratorTuple{w("b"), w("a")});
  CHECK(nielsen_move(t, nielsen::RightMultiply{0, 1}) == GeneratorTuple{w("ab"), w("b")});
  CHECK_THROWS_AS(nielsen_move(t, nielsen::Swap{0, 0}), Error);
  CHECK_THROWS_AS(nielsen_move(t, nielsen::RightMultiply{1, 1}), Error);
  CHECK_THROWS_AS(nielsen_move(t, nielsen::Invert{2}), Error);
  CHECK_THROWS_AS(nielsen_move({w("a")}, nielsen::Invert{0}), Error);
}

TEST_CASE("Nielsen inverse sequences restore the tuple") {
  GeneratorTuple t{w("ab"), w("Ba"), w("bb")};
  std::vector<NielsenMove> moves{nielsen::Invert{1}, nielsen::Swap{0, 2},
                                 nielsen::RightMultiply{2, 0}, nielsen::RightMultiply{0, 1}};
  for (auto const& m : moves) {
    auto u = nielsen_move(t, m);
    for (auto const& back : nielsen_inverse(m)) {
      u = nielsen_move(u, back);
    }
    CHECK(u == t);
  }
}

}  // TEST_SUITE
