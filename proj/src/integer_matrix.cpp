#include "ggt/integer_matrix.hpp"

#include <utility>

#include "ggt/error.hpp"

namespace ggt {

IntMatrix::IntMatrix(std::size_t n) : n_(n), a_(n * n) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()) {
  a_.reserve(n_ * n_);
  for (auto const& row : rows) {
    if (row.size() != n_) {
      throw Error("matrix rows must all have length " + std::to_string(n_));
    }
    for (long v : row) {
      a_.emplace_back(v);
    }
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

IntMatrix IntMatrix::elementary(std::size_t n, std::size_t i, std::size_t j,
                                long value) {
  IntMatrix m = identity(n);
  m(i, j) += value;
  return m;
}

BigInt IntMatrix::determinant() const {
  if (n_ == 0) {
    return 1;
  }
  // Bareiss fraction-free elimination; every division is exact.
  std::vector<BigInt> m = a_;
  BigInt sign = 1;
  BigInt prev = 1;
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& {
    return m[i * n_ + j];
  };
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n_ && at(p, k) == 0) {
        ++p;
      }
      if (p == n_) {
        return 0;
      }
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(at(k, j), at(p, j));
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    t += (*this)(i, i);
  }
  return t;
}

bool IntMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if ((*this)(i, j) != (i == j ? 1 : 0)) {
        return false;
      }
    }
  }
  return true;
}

IntMatrix IntMatrix::inverse() const {
  BigInt det = determinant();
  if (det != 1 && det != -1) {
    throw Error("matrix " + to_string() + " has determinant "
                + det.str() + "; integer inverse needs det = ±1");
  }
  // Gauss-Jordan over the integers: with |det| = 1 the adjugate is integral,
  // and elimination over the rationals keeps all pivots invertible.
  using Rat = boost::multiprecision::cpp_rational;
  std::vector<Rat> m(n_ * 2 * n_);
  std::size_t const w = 2 * n_;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      m[i * w + j] = Rat((*this)(i, j));
    }
    m[i * w + n_ + i] = 1;
  }
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t p = col;
    while (m[p * w + col] == 0) {
      ++p;
    }
    if (p != col) {
      for (std::size_t j = 0; j < w; ++j) {
        std::swap(m[p * w + j], m[col * w + j]);
      }
    }
    Rat pivot = m[col * w + col];
    for (std::size_t j = 0; j < w; ++j) {
      m[col * w + j] /= pivot;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == col || m[i * w + col] == 0) {
        continue;
      }
      Rat f = m[i * w + col];
      for (std::size_t j = 0; j < w; ++j) {
        m[i * w + j] -= f * m[col * w + j];
      }
    }
  }
  IntMatrix inv(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      Rat const& v = m[i * w + n_ + j];
      inv(i, j) = boost::multiprecision::numerator(v);
    }
  }
  return inv;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto& v : m.a_) {
    v = -v;
  }
  return m;
}

IntMatrix operator*(IntMatrix const& x, IntMatrix const& y) {
  if (x.n_ != y.n_) {
    throw Error("matrix dimension mismatch");
  }
  std::size_t const n = x.n_;
  IntMatrix z(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      BigInt const& xik = x(i, k);
      if (xik == 0) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        z(i, j) += xik * y(k, j);
      }
    }
  }
  return z;
}

std::string IntMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      s += (*this)(i, j).str();
      if (j + 1 < n_) {
        s += ',';
      }
    }
    if (i + 1 < n_) {
      s += ';';
    }
  }
  return s + "]";
}

}  // namespace ggt
