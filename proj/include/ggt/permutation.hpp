#ifndef GGT_PERMUTATION_HPP_
#define GGT_PERMUTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ggt {

// Bijection of {0, …, m−1}, stored as its image array. Points act on the
// right: x·(pq) = (x·p)·q, which matches the coset-table convention
// Hg·x = H(gx).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  // Cycle notation with 1-based points: "(12)(45)" or "(1,2)(4,5)".
  // `degree` pads with fixed points; 0 means the largest point mentioned.
  static Permutation parse_cycles(std::string_view text,
                                  std::size_t degree = 0);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t x) const { return images_[x]; }
  std::vector<std::uint32_t> const& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation padded(std::size_t degree) const;

  // Apply *this first, then q.
  Permutation then(Permutation const& q) const;

  std::string to_cycles() const;  // 1-based, "()" for the identity

  bool operator==(Permutation const&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

}  // namespace ggt

#endif  // GGT_PERMUTATION_HPP_
