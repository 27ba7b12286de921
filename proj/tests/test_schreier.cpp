#include <doctest.h>

#include <set>

#include "ggt/error.hpp"
#include "ggt/schreier.hpp"

using namespace ggt;

namespace {

Alphabet const xy = Alphabet::from_letters("xy");
Alphabet const ab = Alphabet::from_letters("ab");

CosetTable sch2_table() {
  // S₃ acting on {1,2,3}, stabiliser of 1
  return CosetTable::from_action(
      xy, {Permutation::parse_cycles("(23)", 3), Permutation::parse_cycles("(123)", 3)}, 0);
}

CosetTable trefoil_table() {
  return CosetTable::regular(
      ab, {Permutation::parse_cycles("(12)", 3), Permutation::parse_cycles("(123)", 3)});
}

Presentation pres(char const* text) { return Presentation::parse(text); }

}  // namespace

TEST_SUITE("schreier") {

TEST_CASE("coset table construction") {
  auto t = sch2_table();
  CHECK(t.size() == 3);
  CHECK(t.rank() == 2);
  CHECK(t.act(0, xy.parse("x")) == 0);
  CHECK(t.act(0, xy.parse("y")) == 1);
  CHECK(t.act(0, xy.parse("Y")) == 2);
  CHECK(t.act(0, xy.parse("yyy")) == 0);

  auto r = trefoil_table();
  CHECK(r.size() == 6);

  CHECK_THROWS_AS(CosetTable(xy, {{0, 0}, {0, 1}}), Error);          // not a permutation
  CHECK_THROWS_AS(CosetTable(xy, {{1, 0, 2}, {1, 0, 2}}), Error);    // 2 unreachable
  CHECK_THROWS_AS(CosetTable(xy, {{0}}), Error);                     // wrong column count
}

TEST_CASE("coset table text format") {
  auto t = CosetTable::load(GGT_TEST_DATA "/sch1.table");
  CHECK(t.size() == 5);
  CHECK(t.to_string() == "cosets 5\ngen x: 1 0 2 4 3\ngen y: 0 2 4 1 3\n");
  CHECK(CosetTable::parse(t.to_string()).to_string() == t.to_string());
  CHECK_THROWS_AS(CosetTable::parse("cosets 2\ngen x: 0\n"), ParseError);
  CHECK_THROWS_AS(CosetTable::parse("gen x: 0 1\n"), ParseError);
  auto dot = t.to_dot();
  CHECK(dot.find("0 -> 1 [label=x];") != std::string::npos);
}

TEST_CASE("Schreier transversal") {
  auto t = sch2_table();
  auto tr = transversal(t);
  REQUIRE(tr.size() == 3);
  CHECK(tr[0].empty());
  CHECK(xy.format(tr[1]) == "y");
  CHECK(xy.format(tr[2]) == "Y");
  for (std::uint32_t c = 0; c < tr.size(); ++c) {
    CHECK(t.act(0, tr[c]) == c);
  }
  CHECK_THROWS_AS(transversal_from_words(t, {xy.parse("y"), xy.parse("Y"), Word{}, xy.parse("yy")}),
                  Error);  // two words for one coset
  CHECK_THROWS_AS(transversal_from_words(trefoil_table(), {Word{}, ab.parse("b"), ab.parse("ab"),
                                                          ab.parse("a"), ab.parse("bab"),
                                                          ab.parse("bb")}),
                  Error);  // not prefix closed
}

TEST_CASE("Schreier generators and rank") {
  auto t = sch2_table();
  auto gens = schreier_generators(t, transversal(t));
  // rank of a finite-index subgroup of F₂: 1 + n(k-1) = 4
  REQUIRE(gens.size() == 4);
  std::vector<std::string> got;
  for (auto const& g : gens) {
    got.push_back(g.symbol + "=" + xy.format(g.value));
    CHECK(t.act(0, g.value) == 0);
  }
  CHECK(got == std::vector<std::string>{"a=x", "b=yxy", "c=yyy", "d=YxY"});

  auto l = CosetTable::load(GGT_TEST_DATA "/sch1.table");
  CHECK(schreier_generators(l, transversal(l)).size() == 6);

  CHECK(schreier_symbol_names(3) == std::vector<std::string>{"a", "b", "c"});
  auto many = schreier_symbol_names(27);
  CHECK(many.front() == "y0");
  CHECK(many.back() == "y26");
}

TEST_CASE("rewrite and expand") {
  auto t = sch2_table();
  auto gens = schreier_generators(t, transversal(t));
  Alphabet syms({"a", "b", "c", "d"});
  Word w = xy.parse("yxyx");
  auto r = rewrite(w, t, gens);
  CHECK(syms.format(r) == "ba");
  CHECK(expand(r, gens) == w);
  CHECK(rewrite(Word{}, t, gens).empty());
  CHECK_THROWS_AS(rewrite(xy.parse("y"), t, gens), Error);
}

TEST_CASE("sch2 subgroup presentation") {
  auto sp = subgroup_presentation(pres("gens: x y\nrel: x^2\nrel: y^3\n"), sch2_table());
  CHECK(sp.raw.relators.size() == 6);
  CHECK(same_up_to_renaming(sp.simplified, pres("gens: a c\nrel: a^2\n")));
  CHECK(sp.simplified.to_string() == "gens: a b\nrel: aa\n");
}

TEST_CASE("trefoil subgroup presentation") {
  auto tt = trefoil_table();
  auto tr = transversal_from_words(tt, {Word{}, ab.parse("b"), ab.parse("bb"), ab.parse("a"),
                                       ab.parse("ab"), ab.parse("abb")});
  auto sp = subgroup_presentation(pres("gens: a b\nrel: a^2 B^3\n"), tt, tr);
  CHECK(sp.generators.size() == 7);
  CHECK(sp.raw.relators.size() == 6);
  auto expected = pres("gens: x y z\nrel: yzYZ\nrel: xzXZ\n");
  CHECK(same_up_to_renaming(sp.simplified, expected));
  // the relator that does not hold in S₃ is rejected
  CHECK_THROWS_AS(subgroup_presentation(pres("gens: a b\nrel: ab\n"), tt, tr), Error);
}

TEST_CASE("Tietze simplification") {
  CHECK(tietze_simplify(pres("gens: a b\nrel: aB\n")).to_string() == "gens: a\n");
  auto p = tietze_simplify(pres("gens: a b c\nrel: abAB\nrel: BAba\nrel: cA\n"));
  CHECK(same_up_to_renaming(p, pres("gens: a b\nrel: abAB\n")));
  auto q = tietze_simplify(pres("gens: a\nrel: aaA\n"));
  CHECK(q.to_string() == "gens:\n");
  CHECK(tietze_simplify(pres("gens: a b\nrel: aa\nrel: bb\n")).relators.size() == 2);
}

TEST_CASE("commutator subgroup generators") {
  CHECK(ab.format(commutator_schreier_generator(0, 1, 0)) == "baBA");
  CHECK(ab.format(commutator_schreier_generator(1, -1, 0)) == "aBabAA");
  CHECK(commutator_schreier_generator(2, 0, 0).empty());
  CHECK(commutator_schreier_generator(3, -2, 1).empty());
  auto demo = commutator_transversal_demo(-2, 2, -2, 2);
  CHECK(demo.size() == 20);  // m ≠ 0
  std::set<std::string> distinct;
  for (auto const& g : demo) {
    auto sums = exponent_sums(g.value, 2);
    CHECK(sums == std::vector<long>{0, 0});
    distinct.insert(ab.format(g.value));
  }
  CHECK(distinct.size() == demo.size());
  CHECK_THROWS_AS(commutator_schreier_generator(0, 0, 2), Error);
}

}  // TEST_SUITE
