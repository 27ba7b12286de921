// The first Grigorchuk group Γ = ⟨a, b, c, d⟩ acting on the binary tree.
//
// Elements are strings over "abcd". Every generator is an involution and
// {1, b, c, d} is a Klein four-group, so canonical words alternate between
// a and a letter of {b, c, d}.

#ifndef GGT_GRIGORCHUK_HPP_
#define GGT_GRIGORCHUK_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ggt/oracle.hpp"
#include "ggt/permutation.hpp"

namespace ggt::grig {

// Rewrites with a² = b² = c² = d² = 1 and bc = cb = d, cd = dc = b,
// bd = db = c in a single left-to-right stack pass. Whitespace is skipped;
// "1" denotes the identity. Throws ParseError on any other character.
std::string canonicalize(std::string_view w);

std::size_t a_count(std::string_view canonical);

struct SplitPair {
  std::string left;
  std::string right;
};

// φ on H = ⟨b, c, d, aba, aca, ada⟩:
//   b ↦ (a,c)  c ↦ (a,d)  d ↦ (1,b)  aba ↦ (c,a)  aca ↦ (d,a)  ada ↦ (b,1)
// Throws Error if w has an odd number of a's.
SplitPair split(std::string_view w);

// Word problem: w = 1 iff it lies in H and both halves of φ(w) are trivial.
bool is_trivial(std::string_view w);

// Smallest 2ᵏ with w^(2ᵏ) = 1. Throws Error past `cap`.
std::uint64_t order(std::string_view w, std::uint64_t cap = std::uint64_t{1} << 32);

// Action on the 2ᵏ leaves of level k (leaf 0 is the leftmost). Leaves are
// acted on from the right, so the action of uv is "u, then v". k ≤ 24.
ggt::Permutation level_action(std::string_view w, std::size_t k);

// Smallest depth, starting at 4 and doubling, whose level actions separate
// the given pairwise distinct elements. Throws Error beyond max_depth.
std::size_t separating_depth(std::span<std::string const> elements,
                             std::size_t max_depth = 16);

struct ContractionCheck {
  std::vector<std::string> components;  // the eight third-level sections
  std::size_t sum = 0;                  // Σ ℓ(xᵢ)
  std::size_t length = 0;               // ℓ(x)
  bool holds = false;                   // Σ ℓ(xᵢ) ≤ ¾ℓ(x) + 8

  double bound() const { return 0.75 * static_cast<double>(length) + 8.0; }
};

// L = φ⁻¹(K × K) with K = φ⁻¹(H × H).
bool in_L(std::string_view w);

// Throws Error if w ∉ L.
ContractionCheck length_contraction_check(std::string_view w);

// Random canonical element of L of canonical length ≤ max_len, by rejection
// sampling of random alternating words. Deterministic for a given seed.
std::string random_L_element(std::uint64_t seed, std::size_t max_len);

class Oracle {
 public:
  using element_type = std::string;

  // Keys are level actions at `key_depth`; collisions are settled by the
  // word problem, so any depth ≤ 24 is correct and deeper ones hash better.
  explicit Oracle(std::size_t key_depth = 8);

  std::string name() const { return "grigorchuk"; }
  std::size_t key_depth() const noexcept { return depth_; }

  std::string identity() const { return {}; }
  std::span<ggt::Generator<std::string> const> generators() const { return gens_; }
  std::string multiply(std::string const& g, std::string const& h) const {
    return canonicalize(g + h);
  }
  std::string invert(std::string const& g) const {
    return std::string(g.rbegin(), g.rend());
  }
  bool equal(std::string const& g, std::string const& h) const {
    return is_trivial(g + invert(h));
  }
  std::string key(std::string const& g) const;
  bool keys_are_exact() const noexcept { return false; }

 private:
  std::size_t depth_;
  std::vector<ggt::Generator<std::string>> gens_;
};

}  // namespace ggt::grig

#endif  // GGT_GRIGORCHUK_HPP_
