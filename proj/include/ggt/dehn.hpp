// Symmetrized relators, Dehn's algorithm, combinatorial area by exhaustive
// search, and a group oracle for Dehn presentations.

#ifndef GGT_DEHN_HPP_
#define GGT_DEHN_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ggt/oracle.hpp"
#include "ggt/presentation.hpp"
#include "ggt/word.hpp"

namespace ggt {

// All rotations of r and r⁻¹ for every relator r, cyclically reduced and
// without repeats, in order of first appearance.
class SymmetrizedRelators {
 public:
  SymmetrizedRelators() = default;
  // Throws Error if some relator is trivial after cyclic reduction.
  explicit SymmetrizedRelators(std::vector<Word> const& relators);

  std::vector<Word> const& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  Word const& operator[](std::size_t i) const { return words_[i]; }

 private:
  std::vector<Word> words_;
};

SymmetrizedRelators symmetrize(std::vector<Word> const& relators);

// A symmetrized relator r = r₁r₂ with 2|r₁| > |r| and r₁ a subword of w.
struct HalfRelatorMatch {
  std::size_t position;  // offset of r₁ in w
  std::size_t relator;   // index into the symmetrized set
  Word r1;
  Word r2;
};

// Leftmost match; at that position the longest piece, then the first
// relator in the set.
std::optional<HalfRelatorMatch> find_half_relator(Word const& w,
                                                  SymmetrizedRelators const& sym);

struct DehnStep {
  std::size_t position;
  Word matched;      // r₁
  Word replacement;  // r₂⁻¹
  Word relator;      // r₁r₂
  Word before;
  Word after;        // reduced
};

struct DehnTrace {
  Word input;
  std::vector<DehnStep> steps;
  Word terminal;

  bool trivial() const noexcept { return terminal.empty(); }
};

// Replaces r₁ by r₂⁻¹ and freely reduces until no half relator remains.
// A trivial terminal word certifies w = 1; for a Dehn presentation the
// converse holds as well.
DehnTrace dehn_reduce(Word const& w, SymmetrizedRelators const& sym,
                      std::size_t max_steps = 1'000'000);
DehnTrace dehn_reduce(Word const& w, Presentation const& pres);

struct Conjugate {
  Word conjugator;
  Word relator;
};

// Step k rewrites a·r₁·b as a·r₂⁻¹·b, which inserts a(r₁r₂)a⁻¹ on the left.
// The returned list u₁r₁u₁⁻¹ ⋯ uₙrₙuₙ⁻¹ multiplied by the terminal word
// freely equals the input.
std::vector<Conjugate> certificate(DehnTrace const& trace);

// reduce(∏ uᵢrᵢuᵢ⁻¹ · tail)
Word replay(std::span<Conjugate const> conjugates, Word const& tail = {});

// Least n ≤ max_n such that w freely equals a product of n conjugates
// u r u⁻¹ with r symmetrized and |u| ≤ max_conj_len. nullopt means the
// bounds were exhausted, not that w is nontrivial. Throws BudgetExceeded if
// an intermediate product set grows past `budget`.
std::optional<std::size_t> area_bruteforce(Word const& w, Presentation const& pres,
                                           std::size_t max_n,
                                           std::size_t max_conj_len,
                                           std::size_t budget = 5'000'000);

// Reduced product of n random conjugates of symmetrized relators with
// conjugators of length ≤ max_conj_len. Deterministic for a given seed.
Word random_trivial_word(Presentation const& pres, std::size_t n,
                         std::size_t max_conj_len, std::uint64_t seed);

// Elements are words kept in Dehn-reduced form; equality is
// dehn_reduce(g·h⁻¹) = ε. Equality is only sound if the presentation really
// is a Dehn presentation, which the caller asserts by constructing one.
class DehnOracle {
 public:
  using element_type = Word;

  explicit DehnOracle(Presentation pres, std::string name = "fp");

  std::string name() const { return name_; }
  Presentation const& presentation() const noexcept { return pres_; }
  SymmetrizedRelators const& symmetrized() const noexcept { return sym_; }

  Word identity() const { return {}; }
  std::span<Generator<Word> const> generators() const { return gens_; }
  Word multiply(Word const& g, Word const& h) const;
  Word invert(Word const& g) const { return ggt::invert(g); }
  bool equal(Word const& g, Word const& h) const;
  // Exponent sums of the generators that every relator leaves balanced.
  std::string key(Word const& g) const;
  bool keys_are_exact() const noexcept { return false; }

 private:
  Presentation pres_;
  std::string name_;
  SymmetrizedRelators sym_;
  std::vector<std::size_t> free_columns_;
  std::vector<Generator<Word>> gens_;
};

}  // namespace ggt

#endif  // GGT_DEHN_HPP_
