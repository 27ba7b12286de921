#ifndef GGT_INTEGER_MATRIX_HPP_
#define GGT_INTEGER_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ggt {

using BigInt = boost::multiprecision::cpp_int;

// Square matrix with arbitrary-precision integer entries, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  // I + E_{ij}, 0-based.
  static IntMatrix elementary(std::size_t n, std::size_t i, std::size_t j,
                              long value = 1);

  std::size_t dim() const noexcept { return n_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  BigInt const& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  BigInt determinant() const;
  BigInt trace() const;
  bool is_identity() const;

  // Exact inverse; throws Error unless det = ±1.
  IntMatrix inverse() const;

  IntMatrix operator-() const;
  friend IntMatrix operator*(IntMatrix const& x, IntMatrix const& y);
  bool operator==(IntMatrix const&) const = default;

  // Entry tuple "[a,b;c,d]". Injective, used as the hashing key.
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> a_;
};

}  // namespace ggt

#endif  // GGT_INTEGER_MATRIX_HPP_
