// Concrete group oracles: free groups, integer matrix groups, permutation
// groups and free abelian lattices.

#ifndef GGT_ORACLES_HPP_
#define GGT_ORACLES_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ggt/integer_matrix.hpp"
#include "ggt/oracle.hpp"
#include "ggt/permutation.hpp"
#include "ggt/word.hpp"

namespace ggt {

// F(X) with |X| = rank. Elements are reduced words.
class FreeOracle {
 public:
  using element_type = Word;

  explicit FreeOracle(std::size_t rank);

  std::string name() const { return "F" + std::to_string(rank_); }
  std::size_t rank() const noexcept { return rank_; }
  Alphabet const& alphabet() const noexcept { return alphabet_; }

  Word identity() const { return {}; }
  std::span<Generator<Word> const> generators() const { return gens_; }
  // Throws Error when a letter lies outside the alphabet.
  Word multiply(Word const& g, Word const& h) const;
  Word invert(Word const& g) const { return ggt::invert(g); }
  bool equal(Word const& g, Word const& h) const { return reduce(g) == reduce(h); }
  std::string key(Word const& g) const;
  bool keys_are_exact() const noexcept { return true; }

 private:
  std::size_t rank_;
  Alphabet alphabet_;
  std::vector<Generator<Word>> gens_;
};

// Subgroup of GL(n, ℤ) generated by unimodular integer matrices.
class MatrixOracle {
 public:
  using element_type = IntMatrix;

  // Throws Error on a dimension mismatch, a non-unimodular generator, or a
  // generator equal to the identity.
  MatrixOracle(std::string name,
               std::vector<std::pair<std::string, IntMatrix>> gens);

  std::string name() const { return name_; }
  std::size_t dim() const noexcept { return dim_; }

  IntMatrix identity() const { return IntMatrix::identity(dim_); }
  std::span<Generator<IntMatrix> const> generators() const { return gens_; }
  IntMatrix multiply(IntMatrix const& g, IntMatrix const& h) const { return g * h; }
  IntMatrix invert(IntMatrix const& g) const { return g.inverse(); }
  bool equal(IntMatrix const& g, IntMatrix const& h) const { return g == h; }
  std::string key(IntMatrix const& g) const { return g.to_string(); }
  bool keys_are_exact() const noexcept { return true; }

 private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<Generator<IntMatrix>> gens_;
};

// Discrete Heisenberg group: u = I+E₁₂, v = I+E₂₃, z = I+E₁₃.
MatrixOracle make_heisenberg_oracle(bool include_center = true);

// g = [[1,k],[0,1]], h = [[1,0],[k,1]] in SL(2, ℤ).
MatrixOracle make_sl2z_pingpong_oracle(long k);

class PermutationOracle {
 public:
  using element_type = Permutation;

  // Generators are padded to a common degree when `degree` is 0; otherwise
  // every generator must have exactly that degree.
  explicit PermutationOracle(
      std::vector<std::pair<std::string, Permutation>> gens,
      std::size_t degree = 0);

  std::string name() const { return "perm"; }
  std::size_t degree() const noexcept { return degree_; }

  Permutation identity() const { return Permutation::identity(degree_); }
  std::span<Generator<Permutation> const> generators() const { return gens_; }
  Permutation multiply(Permutation const& g, Permutation const& h) const {
    return g.then(h);
  }
  Permutation invert(Permutation const& g) const { return g.inverse(); }
  bool equal(Permutation const& g, Permutation const& h) const { return g == h; }
  std::string key(Permutation const& g) const;
  bool keys_are_exact() const noexcept { return true; }

 private:
  std::size_t degree_ = 0;
  std::vector<Generator<Permutation>> gens_;
};

using LatticeVector = std::vector<std::int64_t>;

// ℤᵏ with the standard generators ±e₁, …, ±eₖ.
class LatticeOracle {
 public:
  using element_type = LatticeVector;

  explicit LatticeOracle(std::size_t k);

  std::string name() const {
    return k_ == 1 ? std::string("Z") : "Z^" + std::to_string(k_);
  }
  std::size_t dim() const noexcept { return k_; }

  LatticeVector identity() const { return LatticeVector(k_, 0); }
  std::span<Generator<LatticeVector> const> generators() const { return gens_; }
  LatticeVector multiply(LatticeVector const& g, LatticeVector const& h) const;
  LatticeVector invert(LatticeVector const& g) const;
  bool equal(LatticeVector const& g, LatticeVector const& h) const { return g == h; }
  std::string key(LatticeVector const& g) const;
  bool keys_are_exact() const noexcept { return true; }

 private:
  std::size_t k_;
  std::vector<Generator<LatticeVector>> gens_;
};

FreeOracle make_free_oracle(std::size_t rank);
MatrixOracle make_matrix_oracle(std::vector<IntMatrix> gens);
PermutationOracle make_permutation_oracle(std::vector<Permutation> gens);
LatticeOracle make_lattice_oracle(std::size_t k);

// Evaluates a word in generator indices of `oracle`.
template <GroupOracle O>
typename O::element_type evaluate(O const& oracle,
                                  std::span<std::size_t const> gen_indices) {
  auto g = oracle.identity();
  auto gens = oracle.generators();
  for (auto i : gen_indices) {
    g = oracle.multiply(g, gens[i].element);
  }
  return g;
}

}  // namespace ggt

#endif  // GGT_ORACLES_HPP_
