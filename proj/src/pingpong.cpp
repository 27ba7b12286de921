#include <algorithm>
#include <array>
#include <random>

#include "ggt/error.hpp"
#include "ggt/hyperbolic.hpp"

namespace ggt {

namespace {

// g, h, G, H
std::array<IntMatrix, 4> pingpong_letters(long k) {
  return {IntMatrix{{1, k}, {0, 1}}, IntMatrix{{1, 0}, {k, 1}},
          IntMatrix{{1, -k}, {0, 1}}, IntMatrix{{1, 0}, {-k, 1}}};
}

constexpr char kLetterNames[] = {'g', 'h', 'G', 'H'};

bool plus_minus_identity(IntMatrix const& m) {
  return m(0, 1) == 0 && m(1, 0) == 0 && m(0, 0) == m(1, 1)
         && (m(0, 0) == 1 || m(0, 0) == -1);
}

struct Search {
  std::array<IntMatrix, 4> letters;
  std::size_t depth;
  std::string word;
  std::uint64_t checked = 0;
  std::optional<std::string> found;
  std::optional<IntMatrix> value;

  // Explores reduced words of exactly `depth` letters in lexicographic
  // letter order g < h < G < H.
  void run(IntMatrix const& m, int last) {
    if (found) {
      return;
    }
    if (word.size() == depth) {
      ++checked;
      if (plus_minus_identity(m)) {
        found = word;
        value = m;
      }
      return;
    }
    for (int l = 0; l < 4; ++l) {
      if (last >= 0 && (l + 2) % 4 == last) {
        continue;
      }
      word.push_back(kLetterNames[l]);
      run(m * letters[static_cast<std::size_t>(l)], l);
      word.pop_back();
      if (found) {
        return;
      }
    }
  }
};

}  // namespace

IntMatrix evaluate_pingpong_word(long k, std::string_view word) {
  auto letters = pingpong_letters(k);
  IntMatrix m = IntMatrix::identity(2);
  for (char c : word) {
    auto const* p = std::find(std::begin(kLetterNames), std::end(kLetterNames), c);
    if (p == std::end(kLetterNames)) {
      throw ParseError(std::string("invalid letter '") + c
                       + "' (expected g, h, G, H)");
    }
    m = m * letters[static_cast<std::size_t>(p - std::begin(kLetterNames))];
  }
  return m;
}

PingPongResult pingpong_certificate(long k, std::size_t max_len, std::uint64_t seed) {
  if (k <= 0) {
    throw Error("ping-pong parameter k must be positive");
  }
  PingPongResult result;
  result.k = k;
  result.max_len = max_len;

  // (i) the ping-pong table on seeded integer vectors
  std::mt19937_64 rng(seed);
  std::vector<std::pair<long, long>> in_a, in_b;
  while (in_a.size() < 64 || in_b.size() < 64) {
    long x = static_cast<long>(rng() % 201) - 100;
    long y = static_cast<long>(rng() % 201) - 100;
    if (std::abs(x) < std::abs(y) && in_a.size() < 64) {
      in_a.emplace_back(x, y);
    } else if (std::abs(x) > std::abs(y) && in_b.size() < 64) {
      in_b.emplace_back(x, y);
    }
  }
  result.table_ok = true;
  for (long n = -8; n <= 8 && result.table_ok; ++n) {
    if (n == 0) {
      continue;
    }
    BigInt const nk = BigInt(n) * k;
    for (auto [x, y] : in_a) {
      // gⁿ(x, y) = (x + nky, y) must land in B
      BigInt const nx = x + nk * y;
      result.table_ok = result.table_ok && abs(nx) > std::abs(y);
    }
    for (auto [x, y] : in_b) {
      // hⁿ(x, y) = (x, y + nkx) must land in A
      BigInt const ny = y + nk * x;
      result.table_ok = result.table_ok && std::abs(x) < abs(ny);
    }
  }

  // (ii) exhaustive search over reduced words, shortest first
  Search search{pingpong_letters(k), 0, {}, 0, std::nullopt, std::nullopt};
  for (std::size_t len = 1; len <= max_len && !search.found; ++len) {
    search.depth = len;
    search.run(IntMatrix::identity(2), -1);
  }
  result.words_checked = search.checked;
  result.witness = search.found;
  result.witness_value = search.value;
  return result;
}

}  // namespace ggt
