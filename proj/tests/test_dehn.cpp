#include <doctest.h>

#include "ggt/cayley.hpp"
#include "ggt/dehn.hpp"
#include "ggt/error.hpp"
#include "ggt/oracles.hpp"

using namespace ggt;

namespace {

Presentation genus2() { return Presentation::load(GGT_TEST_DATA "/genus2.pres"); }
Presentation bs32() { return Presentation::load(GGT_TEST_DATA "/bs32.pres"); }

// every reduced word of length ≤ n over rank generators
std::vector<Word> reduced_words(std::size_t rank, std::size_t n) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<Word> next;
    for (auto const& w : layer) {
      for (std::size_t g = 0; g < rank; ++g) {
        for (bool inv : {false, true}) {
          Letter l(g, inv);
          if (!w.empty() && w.back() == l.inverse()) {
            continue;
          }
          Word u = w;
          u.push_back(l);
          next.push_back(u);
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_SUITE("dehn") {

TEST_CASE("symmetrized relators") {
  Alphabet ab = Alphabet::from_letters("ab");
  auto sym = symmetrize({ab.parse("abAB")});
  // 4 rotations of abAB and 4 of its inverse baBA
  CHECK(sym.size() == 8);
  auto g2 = symmetrize(genus2().relators);
  CHECK(g2.size() == 16);
  auto sq = symmetrize({ab.parse("aaaa")});
  CHECK(sq.size() == 2);
  CHECK_THROWS_AS(symmetrize({ab.parse("aA")}), Error);
}

TEST_CASE("half relator search") {
  auto p = genus2();
  auto sym = symmetrize(p.relators);
  auto const& g = p.generators;
  CHECK_FALSE(find_half_relator(g.parse("abA"), sym).has_value());
  auto m = find_half_relator(g.parse("cabABc"), sym);
  REQUIRE(m.has_value());
  CHECK(m->position == 1);
  CHECK(g.format(m->r1) == "abABc");
  CHECK(g.format(m->r2) == "dCD");
  CHECK(g.format(multiply(m->r1, m->r2)) == g.format(sym[m->relator]));
}

TEST_CASE("Dehn reduction") {
  auto p = genus2();
  auto const& g = p.generators;
  auto t = dehn_reduce(g.parse("abABcdCD"), p);
  CHECK(t.trivial());
  CHECK(t.steps.size() == 1);
  auto u = dehn_reduce(g.parse("abABcd"), p);
  CHECK_FALSE(u.trivial());
  CHECK(g.format(u.terminal) == "dc");
  for (auto const& s : u.steps) {
    CHECK(s.after.size() < s.before.size());
  }
  CHECK(dehn_reduce(g.parse("ab"), p).terminal == g.parse("ab"));
}

TEST_CASE("no short word is trivial") {
  auto p = genus2();
  auto sym = symmetrize(p.relators);
  for (auto const& w : reduced_words(4, 3)) {
    if (!w.empty()) {
      CHECK_FALSE(dehn_reduce(w, sym).trivial());
    }
  }
}

TEST_CASE("certificate replays to the input") {
  auto p = genus2();
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Word w = random_trivial_word(p, 3, 3, seed);
    auto t = dehn_reduce(w, p);
    REQUIRE(t.trivial());
    auto c = certificate(t);
    CHECK(c.size() == t.steps.size());
    CHECK(replay(c) == reduce(w));
  }
}

TEST_CASE("random trivial words are deterministic") {
  auto p = genus2();
  CHECK(random_trivial_word(p, 4, 3, 11) == random_trivial_word(p, 4, 3, 11));
  CHECK(random_trivial_word(p, 0, 3, 1).empty());
}

TEST_CASE("area") {
  auto b = bs32();
  auto const& g = b.generators;
  CHECK(area_bruteforce(g.parse("xY^2xy^2XYX"), b, 2, 3) == std::optional<std::size_t>(1));
  CHECK(area_bruteforce(Word{}, b, 2, 3) == std::optional<std::size_t>(0));
  CHECK(area_bruteforce(g.parse("Xy^3xY^2"), b, 2, 3) == std::optional<std::size_t>(1));
  CHECK_FALSE(area_bruteforce(g.parse("x"), b, 2, 2).has_value());
  auto p = genus2();
  auto const& h = p.generators;
  Word r = h.parse("abABcdCD");
  CHECK(area_bruteforce(multiply(r, r), p, 2, 1) == std::optional<std::size_t>(2));
}

TEST_CASE("Dehn oracle") {
  DehnOracle o(genus2());
  CHECK(o.generators().size() == 8);
  CHECK(o.equal(o.presentation().generators.parse("abAB"),
                o.presentation().generators.parse("dcDC")));
  // radius two looks free: no relator is short enough to bite yet
  auto s = growth_series(o, 3).sizes;
  CHECK(s == growth_series(FreeOracle(4), 3).sizes);
  CHECK(s == std::vector<std::uint64_t>{1, 9, 65, 457});
  DehnOracle free2(Presentation::load(GGT_TEST_DATA "/free2.pres"));
  CHECK(growth_series(free2, 4).sizes == growth_series(FreeOracle(2), 4).sizes);
}

}  // TEST_SUITE
