// Coset tables (Schreier graphs), Schreier transversals and generators, and
// the Reidemeister–Schreier rewriting process.

#ifndef GGT_SCHREIER_HPP_
#define GGT_SCHREIER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ggt/permutation.hpp"
#include "ggt/presentation.hpp"
#include "ggt/word.hpp"

namespace ggt {

// Right action of the free group F(X) on the cosets H\G. Coset 0 is H.
class CosetTable {
 public:
  // images[x][c] = c·x for each generator x. Throws Error unless every
  // column is a permutation of the same size and every coset is reachable
  // from coset 0.
  CosetTable(Alphabet generators, std::vector<std::vector<std::uint32_t>> images);

  // Action on the orbit points of permutations, relabelled so that the
  // basepoint (0-based) becomes coset 0; the other points keep their
  // relative order. Throws Error if the action is not transitive.
  static CosetTable from_action(Alphabet generators,
                                std::vector<Permutation> const& perms,
                                std::size_t basepoint);

  // Cosets of the trivial subgroup of the permutation group generated by
  // `perms`, i.e. its right regular action. Cosets are numbered in BFS order.
  static CosetTable regular(Alphabet generators,
                            std::vector<Permutation> const& perms,
                            std::size_t max_order = 100000);

  // Text format:
  //   cosets <m>
  //   gen <letter>: c0 c1 … c(m−1)
  static CosetTable parse(std::string_view text);
  static CosetTable load(std::string const& path);

  std::size_t size() const noexcept { return size_; }
  std::size_t rank() const noexcept { return generators_.size(); }
  Alphabet const& generators() const noexcept { return generators_; }

  std::uint32_t act(std::uint32_t coset, Letter l) const {
    return (l.is_inverse() ? inverse_ : forward_)[l.gen()][coset];
  }
  std::uint32_t act(std::uint32_t coset, Word const& w) const;

  std::string to_string() const;
  std::string to_dot() const;

 private:
  Alphabet generators_;
  std::size_t size_ = 0;
  std::vector<std::vector<std::uint32_t>> forward_;
  std::vector<std::vector<std::uint32_t>> inverse_;
};

// t(c) for every coset c; t(0) = ε.
using Transversal = std::vector<Word>;

// BFS tree from coset 0, trying letters in the order x₀ < x₁ < … < x₀⁻¹ < …
// Each representative is the shortlex-least word reaching its coset.
Transversal transversal(CosetTable const& table);

// Validates a caller-chosen transversal (one word per coset, in any order)
// and returns it indexed by coset. Throws Error unless the words reach
// distinct cosets covering the table, ε is among them and the set is
// prefix-closed.
Transversal transversal_from_words(CosetTable const& table,
                                   std::vector<Word> const& words);

struct SchreierGen {
  std::uint32_t coset;  // t
  std::size_t gen;      // x
  Word value;           // t·x·(t̄x)⁻¹, reduced
  std::string symbol;
};

// Symbols a, b, c, … (or y0, y1, … beyond 26).
std::vector<std::string> schreier_symbol_names(std::size_t count);

// Every nontrivial γ(t, x), ordered by coset then generator. `names`
// overrides the default symbols when given.
std::vector<SchreierGen> schreier_generators(
    CosetTable const& table, Transversal const& t,
    std::vector<std::string> const& names = {});

// Expresses a word of H in the Schreier symbols via
//   w = γ(1,x₁)·γ(x̄₁,x₂)⋯,   γ(t, x⁻¹) = γ(t̄x⁻¹, x)⁻¹.
// The result is reduced. Throws Error if w does not fix coset 0.
Word rewrite(Word const& w, CosetTable const& table,
             std::vector<SchreierGen> const& gens);

// Replaces every symbol of a rewritten word by its γ value.
Word expand(Word const& symbols, std::vector<SchreierGen> const& gens);

struct SubgroupPresentation {
  std::vector<SchreierGen> generators;
  Presentation raw;         // relators τ(t r t⁻¹) before simplification
  Presentation simplified;  // after tietze_simplify
};

// Reidemeister–Schreier: generators = Schreier symbols, relators =
// rewrite(t r t⁻¹) for each t in the transversal and r in pres. Throws Error
// if the table's alphabet differs from pres or a relator moves some coset.
SubgroupPresentation subgroup_presentation(Presentation const& pres,
                                           CosetTable const& table,
                                           Transversal const& t);
SubgroupPresentation subgroup_presentation(Presentation const& pres,
                                           CosetTable const& table);

// Deterministic simplification by two Tietze moves:
//  - relators are cyclically reduced; empty ones and repeats (up to
//    rotation and inversion) are dropped;
//  - a generator occurring exactly once in a relator is eliminated by
//    solving that relator for it and substituting everywhere.
// The shortest eliminable relator goes first (ties: earlier relator), and
// within it the last generator in alphabet order that occurs once.
Presentation tietze_simplify(Presentation const& pres);

// γ(aⁿbᵐ, x) for the commutator subgroup of F(a,b) with transversal {aⁿbᵐ}:
// aⁿbᵐab⁻ᵐa⁻⁽ⁿ⁺¹⁾ for x = a, trivial for x = b. gen is 0 (a) or 1 (b).
Word commutator_schreier_generator(long n, long m, std::size_t gen);

struct CommutatorGen {
  long n;
  long m;
  std::size_t gen;
  Word value;
};

// The nontrivial generators above with n ∈ [n_lo, n_hi], m ∈ [m_lo, m_hi].
std::vector<CommutatorGen> commutator_transversal_demo(long n_lo, long n_hi,
                                                       long m_lo, long m_hi);

}  // namespace ggt

#endif  // GGT_SCHREIER_HPP_
