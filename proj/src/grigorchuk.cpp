#include "ggt/grigorchuk.hpp"

#include <cctype>
#include <numeric>
#include <random>
#include <set>

#include "ggt/error.hpp"

namespace ggt::grig {

namespace {

bool is_bcd(char c) { return c == 'b' || c == 'c' || c == 'd'; }

// Product in the Klein group {1, b, c, d} of two distinct letters.
char klein(char x, char y) { return static_cast<char>('b' + 'c' + 'd' - x - y); }

std::vector<std::uint32_t> action(std::string const& w, std::size_t k) {
  std::size_t const n = std::size_t{1} << k;
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 0U);
  if (k == 0 || w.empty()) {
    return im;
  }
  std::size_t const half = n / 2;
  if (a_count(w) % 2 == 1) {
    // w = a·(a w): swap the halves, then act by the even element a w.
    auto rest = action(canonicalize("a" + w), k);
    for (std::size_t x = 0; x < n; ++x) {
      im[x] = rest[x ^ half];
    }
    return im;
  }
  auto [l, r] = split(w);
  auto left = action(l, k - 1);
  auto right = action(r, k - 1);
  for (std::size_t x = 0; x < half; ++x) {
    im[x] = left[x];
    im[half + x] = static_cast<std::uint32_t>(half + right[x]);
  }
  return im;
}

}  // namespace

std::string canonicalize(std::string_view w) {
  std::string s;
  for (char c : w) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '1') {
      continue;
    }
    if (c != 'a' && !is_bcd(c)) {
      throw ParseError(std::string("invalid letter '") + c
                       + "' in Grigorchuk word (expected a, b, c, d)");
    }
    if (s.empty()) {
      s.push_back(c);
    } else if (c == 'a' && s.back() == 'a') {
      s.pop_back();
    } else if (is_bcd(c) && is_bcd(s.back())) {
      if (c == s.back()) {
        s.pop_back();
      } else {
        s.back() = klein(c, s.back());
      }
    } else {
      s.push_back(c);
    }
  }
  return s;
}

std::size_t a_count(std::string_view canonical) {
  std::size_t n = 0;
  for (char c : canonical) {
    n += c == 'a';
  }
  return n;
}

SplitPair split(std::string_view w) {
  std::string const s = canonicalize(w);
  if (a_count(s) % 2 == 1) {
    throw Error("'" + s + "' has an odd number of a's, so it is not in H");
  }
  std::string left, right;
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] != 'a') {
      switch (s[i]) {
        case 'b': left += 'a'; right += 'c'; break;
        case 'c': left += 'a'; right += 'd'; break;
        default: right += 'b'; break;
      }
      ++i;
    } else {
      switch (s[i + 1]) {
        case 'b': left += 'c'; right += 'a'; break;
        case 'c': left += 'd'; right += 'a'; break;
        default: left += 'b'; break;
      }
      i += 3;
    }
  }
  return {canonicalize(left), canonicalize(right)};
}

bool is_trivial(std::string_view w) {
  std::string const s = canonicalize(w);
  if (a_count(s) % 2 == 1) {
    return false;
  }
  if (s.size() <= 1) {
    return s.empty();
  }
  auto [l, r] = split(s);
  return is_trivial(l) && is_trivial(r);
}

std::uint64_t order(std::string_view w, std::uint64_t cap) {
  std::string x = canonicalize(w);
  std::uint64_t n = 1;
  while (!is_trivial(x)) {
    if (n >= cap) {
      throw Error("order of '" + canonicalize(w) + "' exceeds the cap of "
                  + std::to_string(cap));
    }
    x = canonicalize(x + x);
    n *= 2;
  }
  return n;
}

Permutation level_action(std::string_view w, std::size_t k) {
  if (k > 24) {
    throw Error("level " + std::to_string(k) + " is too deep (at most 24)");
  }
  return Permutation(action(canonicalize(w), k));
}

std::size_t separating_depth(std::span<std::string const> elements,
                             std::size_t max_depth) {
  for (std::size_t k = 4; k <= max_depth; k *= 2) {
    std::set<std::vector<std::uint32_t>> keys;
    for (auto const& e : elements) {
      keys.insert(action(canonicalize(e), k));
    }
    if (keys.size() == elements.size()) {
      return k;
    }
  }
  throw Error("no level up to " + std::to_string(max_depth)
              + " separates the given elements");
}

bool in_L(std::string_view w) {
  std::string const s = canonicalize(w);
  if (a_count(s) % 2 == 1) {
    return false;
  }
  auto [p, q] = split(s);
  for (auto const& x : {p, q}) {
    if (a_count(x) % 2 == 1) {
      return false;
    }
    auto [x1, x2] = split(x);
    if (a_count(x1) % 2 == 1 || a_count(x2) % 2 == 1) {
      return false;
    }
  }
  return true;
}

ContractionCheck length_contraction_check(std::string_view w) {
  std::string const s = canonicalize(w);
  if (!in_L(s)) {
    throw Error("'" + s + "' is not in L");
  }
  ContractionCheck check;
  check.length = s.size();
  auto [p, q] = split(s);
  for (auto const& x : {p, q}) {
    auto [x1, x2] = split(x);
    for (auto const& y : {x1, x2}) {
      auto [l, r] = split(y);
      check.components.push_back(l);
      check.components.push_back(r);
    }
  }
  for (auto const& c : check.components) {
    check.sum += c.size();
  }
  check.holds = 4 * check.sum <= 3 * check.length + 32;
  return check;
}

std::string random_L_element(std::uint64_t seed, std::size_t max_len) {
  std::mt19937_64 rng(seed);
  while (true) {
    std::size_t const len = rng() % (max_len + 1);
    std::string w;
    bool a_next = rng() % 2 == 0;
    while (w.size() < len) {
      w += a_next ? 'a' : static_cast<char>('b' + rng() % 3);
      a_next = !a_next;
    }
    if (in_L(w)) {
      return canonicalize(w);
    }
  }
}

Oracle::Oracle(std::size_t key_depth) : depth_(key_depth) {
  if (key_depth > 24) {
    throw Error("key depth must be at most 24");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    gens_.push_back({std::string(1, static_cast<char>('a' + i)),
                     std::string(1, static_cast<char>('a' + i)), i});
  }
}

std::string Oracle::key(std::string const& g) const {
  auto im = action(canonicalize(g), depth_);
  std::string k;
  if (depth_ <= 8) {
    for (auto v : im) {
      k.push_back(static_cast<char>(v));
    }
  } else {
    k.append(reinterpret_cast<char const*>(im.data()), im.size() * sizeof im[0]);
  }
  return k;
}

}  // namespace ggt::grig
