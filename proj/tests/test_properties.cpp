#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "ggt/cayley.hpp"
#include "ggt/dehn.hpp"
#include "ggt/grigorchuk.hpp"
#include "ggt/hyperbolic.hpp"
#include "ggt/oracles.hpp"
#include "ggt/schreier.hpp"

using namespace ggt;

namespace {

constexpr int kCases = 500;

// Hand-rolled generators over a seeded engine; each property draws its own
// stream so suites stay reproducible in isolation.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng() % n); }

  // Unreduced on purpose: cancelling pairs are likely with a small alphabet.
  Word word(std::size_t rank, std::size_t max_len) {
    std::vector<Letter> w(below(max_len + 1));
    for (auto& l : w) {
      l = Letter(below(rank), below(2) == 1);
    }
    return Word(std::move(w));
  }

  std::string grig_word(std::size_t max_len) {
    std::string s(below(max_len + 1), 'a');
    for (auto& c : s) {
      c = "abcd"[below(4)];
    }
    return s;
  }

  Permutation perm(std::size_t degree) {
    std::vector<std::uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0U);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }

  h2::Complex point() { return {uniform(-4, 4), std::exp(uniform(-3, 3))}; }
};

bool is_reduced(Word const& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i].cancels(w[i - 1])) {
      return false;
    }
  }
  return true;
}

template <GroupOracle O>
void check_axioms(O const& o, std::size_t radius, std::uint64_t seed) {
  auto b = ball(o, radius, {200000, false});
  Gen g(seed);
  for (int i = 0; i < kCases; ++i) {
    auto const& x = b[g.below(b.size())].element;
    auto const& y = b[g.below(b.size())].element;
    auto const& z = b[g.below(b.size())].element;
    CHECK(o.equal(o.multiply(o.multiply(x, y), z), o.multiply(x, o.multiply(y, z))));
    CHECK(o.equal(o.multiply(x, o.identity()), x));
    CHECK(o.equal(o.multiply(o.invert(x), x), o.identity()));
    CHECK(o.equal(o.invert(o.multiply(x, y)), o.multiply(o.invert(y), o.invert(x))));
  }
}

bool submultiplicative(std::vector<std::uint64_t> const& s, std::size_t m, std::size_t n) {
  return s[m + n] <= s[m] * s[n];
}

// A random transitive pair of permutations; transitivity keeps the
// coset table connected from 0.
std::vector<Permutation> transitive_pair(Gen& g, std::size_t degree) {
  for (;;) {
    std::vector<Permutation> ps{g.perm(degree), g.perm(degree)};
    std::vector<bool> seen(degree);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto const& p : ps) {
        for (auto y : {p[x], p.inverse()[x]}) {
          if (!seen[y]) {
            seen[y] = true;
            ++count;
            stack.push_back(y);
          }
        }
      }
    }
    if (count == degree) {
      return ps;
    }
  }
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("free reduction is idempotent and a congruence") {
  Gen g(101);
  for (int i = 0; i < kCases; ++i) {
    Word u = g.word(2, 20);
    Word v = g.word(2, 20);
    Word ru = reduce(u);
    CHECK(is_reduced(ru));
    CHECK(reduce(ru) == ru);
    CHECK(reduce(concat(u, v)) == multiply(ru, reduce(v)));
    // inserting x x⁻¹ anywhere is invisible after reduction
    std::vector<Letter> padded = u.letters();
    Letter l(g.below(2), g.below(2) == 1);
    auto at = padded.begin() + static_cast<std::ptrdiff_t>(g.below(u.size() + 1));
    at = padded.insert(at, l.inverse());
    padded.insert(at, l);
    CHECK(reduce(Word(padded)) == ru);
    CHECK(multiply(ru, invert(ru)).empty());
    CHECK(reduce(invert(u)) == invert(ru));
  }
}

TEST_CASE("oracle group axioms on balls") {
  check_axioms(FreeOracle(2), 4, 1);
  check_axioms(LatticeOracle(2), 5, 2);
  check_axioms(make_heisenberg_oracle(), 3, 3);
  check_axioms(make_sl2z_pingpong_oracle(2), 4, 4);
  check_axioms(make_permutation_oracle({Permutation::parse_cycles("(12)(45)"),
                                        Permutation::parse_cycles("(2354)", 5)}),
               6, 5);
  check_axioms(grig::Oracle(), 6, 6);
  check_axioms(DehnOracle(Presentation::load(GGT_TEST_DATA "/genus2.pres")), 2, 7);
}

TEST_CASE("growth is submultiplicative") {
  Gen g(202);
  std::vector<std::vector<std::uint64_t>> fixed{
      growth_series(FreeOracle(2), 8).sizes,
      growth_series(LatticeOracle(2), 12).sizes,
      growth_series(make_heisenberg_oracle(), 6).sizes,
      growth_series(grig::Oracle(), 8).sizes,
  };
  for (int i = 0; i < kCases; ++i) {
    auto const& s = fixed[g.below(fixed.size())];
    std::size_t m = g.below(s.size());
    std::size_t n = g.below(s.size() - m);
    CHECK(submultiplicative(s, m, n));
  }
  // random finite groups: every split of the top radius
  for (int i = 0; i < kCases; ++i) {
    std::size_t degree = 3 + g.below(4);
    auto p = g.perm(degree);
    auto q = g.perm(degree);
    if (p.is_identity() || q.is_identity() || p == q || p == q.inverse()) {
      --i;
      continue;
    }
    auto o = make_permutation_oracle({p, q});
    auto s = growth_series(o, 6, 100000);
    CHECK(s.is_submultiplicative());
    CHECK(std::is_sorted(s.sizes.begin(), s.sizes.end()));
  }
}

TEST_CASE("Schreier rewriting round-trips") {
  Gen g(303);
  Alphabet const xy = Alphabet::from_letters("xy");
  for (int i = 0; i < kCases; ++i) {
    auto table = CosetTable::from_action(xy, transitive_pair(g, 2 + g.below(5)), 0);
    auto t = transversal(table);
    auto gens = schreier_generators(table, t);
    CHECK(gens.size() == table.size() + 1);  // 1 + n(k-1) with k = 2
    Word u = g.word(2, 16);
    Word w = multiply(u, invert(t[table.act(0, u)]));  // lands in H
    REQUIRE(table.act(0, w) == 0);
    auto r = rewrite(w, table, gens);
    CHECK(expand(r, gens) == reduce(w));
    // rewriting is a homomorphism into the free group on the symbols
    Word u2 = g.word(2, 16);
    Word w2 = multiply(u2, invert(t[table.act(0, u2)]));
    CHECK(rewrite(multiply(w, w2), table, gens) == multiply(r, rewrite(w2, table, gens)));
  }
}

TEST_CASE("Grigorchuk splitting is a homomorphism") {
  Gen g(404);
  int done = 0;
  while (done < kCases) {
    std::string u = grig::canonicalize(g.grig_word(24));
    std::string v = grig::canonicalize(g.grig_word(24));
    if (grig::a_count(u) % 2 || grig::a_count(v) % 2) {
      continue;
    }
    auto su = grig::split(u);
    auto sv = grig::split(v);
    auto suv = grig::split(u + v);
    grig::Oracle o(4);
    CHECK(o.equal(suv.left, su.left + sv.left));
    CHECK(o.equal(suv.right, su.right + sv.right));
    // each b, c, d letter feeds at most one letter to each side
    CHECK(grig::canonicalize(su.left).size() + grig::canonicalize(su.right).size()
          <= u.size() + 1);
    // level action is a right action
    auto k = 1 + g.below(6);
    CHECK(grig::level_action(u + v, k) == grig::level_action(u, k).then(grig::level_action(v, k)));
    ++done;
  }
}

TEST_CASE("Gromov product symmetry and the four-point condition in H2") {
  Gen g(505);
  double const slack = 3 * std::acosh(std::sqrt(2.0));
  for (int i = 0; i < kCases; ++i) {
    h2::Complex p = g.point(), x = g.point(), y = g.point(), z = g.point();
    double xy = h2::gromov_product(x, y, p);
    CHECK(xy == doctest::Approx(h2::gromov_product(y, x, p)));
    CHECK(xy >= 0.0);
    CHECK(xy <= std::min(h2::distance(p, x), h2::distance(p, y)) + 1e-9);
    double xz = h2::gromov_product(x, z, p);
    double yz = h2::gromov_product(y, z, p);
    CHECK(xy >= std::min(xz, yz) - slack);
  }
  // thin triangles on the same distribution
  for (int i = 0; i < kCases; ++i) {
    CHECK(h2::thin_triangle_check(g.point(), g.point(), g.point(), 32)
          <= h2::thin_triangle_delta() + 0.05);
  }
}

}  // TEST_SUITE
