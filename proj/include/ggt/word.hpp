// Words over a symmetric alphabet X ∪ X⁻¹, free reduction, and Nielsen moves.
//
// A letter is a generator index together with a sign. Words are plain value
// types; they do not carry their alphabet, which only matters for text I/O.

#ifndef GGT_WORD_HPP_
#define GGT_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ggt {

class Letter {
 public:
  constexpr Letter() = default;
  constexpr explicit Letter(std::size_t gen, bool inverse = false)
      : gen_(static_cast<std::uint32_t>(gen)), inverse_(inverse) {}

  constexpr std::size_t gen() const noexcept { return gen_; }
  constexpr bool is_inverse() const noexcept { return inverse_; }
  constexpr Letter inverse() const noexcept { return Letter(gen_, !inverse_); }

  constexpr bool cancels(Letter other) const noexcept {
    return gen_ == other.gen_ && inverse_ != other.inverse_;
  }

  // Letter order: x₀ < x₁ < … < x₀⁻¹ < x₁⁻¹ < …
  constexpr auto operator<=>(Letter const& other) const noexcept {
    if (inverse_ != other.inverse_) {
      return inverse_ ? std::strong_ordering::greater
                      : std::strong_ordering::less;
    }
    return gen_ <=> other.gen_;
  }
  constexpr bool operator==(Letter const&) const noexcept = default;

 private:
  std::uint32_t gen_ = 0;
  bool inverse_ = false;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  std::vector<Letter> const& letters() const noexcept { return letters_; }

  // True iff no adjacent pair of mutually inverse letters.
  bool is_reduced() const noexcept;
  bool is_cyclically_reduced() const noexcept;

  // Largest generator index used plus one; 0 for the empty word.
  std::size_t rank_used() const noexcept;

  Word subword(std::size_t pos, std::size_t len) const;

  void push_back(Letter l) { letters_.push_back(l); }

  bool operator==(Word const&) const = default;

 private:
  std::vector<Letter> letters_;
};

// Shortlex comparison using the letter order above.
bool shortlex_less(Word const& u, Word const& v);

// Concatenation without reduction.
Word concat(Word const& u, Word const& v);

// Unique reduced representative of the free-group element of w.
Word reduce(Word const& w);

// reduce(concat(u, v)) without materialising the concatenation.
Word multiply(Word const& u, Word const& v);

// Reversed word with every exponent flipped, reduced.
Word invert(Word const& w);

// Reduced w^n; negative n means powers of the inverse.
Word power(Word const& w, long n);

// u v u⁻¹ v⁻¹, reduced.
Word commutator(Word const& u, Word const& v);

struct CyclicReduction {
  Word core;
  Word conjugator;
};

// w = conjugator · core · conjugator⁻¹ freely, with core cyclically reduced.
// Matching ends are stripped greedily from the outside in.
CyclicReduction cyclically_reduce(Word const& w);

// All cyclic rotations of w (w itself first). Assumes w cyclically reduced.
std::vector<Word> rotations(Word const& w);

// Least element, in shortlex order, among the rotations of w and of w⁻¹.
// Two cyclically reduced words are conjugate up to inversion iff they have
// the same cyclic normal form.
Word cyclic_normal_form(Word const& w);

// Exponent sum of each generator, indexed by generator.
std::vector<long> exponent_sums(Word const& w, std::size_t rank);

// Symbols naming the generators. Inverses are written in upper case when
// every name is a single lower-case letter; otherwise words are written as
// whitespace-separated tokens with `^-1` marking inverses.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  // "abc" → {a, b, c}
  static Alphabet from_letters(std::string_view letters);
  // First n letters a, b, c, …  (n ≤ 26)
  static Alphabet standard(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  std::string const& name(std::size_t i) const { return names_.at(i); }
  std::vector<std::string> const& names() const noexcept { return names_; }
  bool single_letters() const noexcept { return single_letters_; }

  // Generator index of a name, or size() if absent.
  std::size_t index(std::string_view name) const;

  std::string letter_name(Letter l) const;

  // Parses the textual word grammar:
  //   word   := item*
  //   item   := letter ['^' int] | '(' word ')' ['^' int]
  //   letter := [a-z] | [A-Z]      upper case is the inverse
  // Whitespace is ignored; the empty string (or "1") is the identity. The
  // result is not reduced.
  Word parse(std::string_view text) const;

  // Reduced text; the identity prints as "1".
  std::string format(Word const& w) const;

  bool operator==(Alphabet const&) const = default;

 private:
  std::vector<std::string> names_;
  bool single_letters_ = true;
};

using GeneratorTuple = std::vector<Word>;

namespace nielsen {
struct Invert {
  std::size_t i;
};
struct Swap {
  std::size_t i;
  std::size_t j;
};
struct RightMultiply {
  std::size_t i;
  std::size_t j;
};
}  // namespace nielsen

using NielsenMove =
    std::variant<nielsen::Invert, nielsen::Swap, nielsen::RightMultiply>;

// Applies one elementary Nielsen transformation. Throws Error for an index
// out of range, i == j on a two-index move, or a tuple of arity < 2.
GeneratorTuple nielsen_move(GeneratorTuple t, NielsenMove const& move);

// A move sequence that undoes `move`.
std::vector<NielsenMove> nielsen_inverse(NielsenMove const& move);

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept;
};

}  // namespace ggt

#endif  // GGT_WORD_HPP_
