#include "ggt/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ggt/error.hpp"

namespace ggt {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || hit[v]) {
      throw Error("image array is not a bijection");
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0U);
  return Permutation(std::move(im));
}

Permutation Permutation::parse_cycles(std::string_view text,
                                      std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t max_point = 0;
  std::size_t i = 0;
  auto fail = [&](std::string const& what) {
    throw ParseError("cannot parse permutation \"" + std::string(text)
                     + "\": " + what);
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(') {
      fail("expected '('");
    }
    ++i;
    auto close = text.find(')', i);
    if (close == std::string_view::npos) {
      fail("missing ')'");
    }
    std::string_view body = text.substr(i, close - i);
    std::vector<std::uint32_t> cycle;
    bool commas = body.find(',') != std::string_view::npos;
    std::size_t j = 0;
    while (j < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[j])) || body[j] == ',') {
        ++j;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(body[j]))) {
        fail("points must be positive integers");
      }
      std::size_t value = 0;
      if (commas) {
        while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) {
          value = value * 10 + static_cast<std::size_t>(body[j] - '0');
          ++j;
        }
      } else {
        value = static_cast<std::size_t>(body[j] - '0');
        ++j;
      }
      if (value == 0) {
        fail("points are numbered from 1");
      }
      cycle.push_back(static_cast<std::uint32_t>(value - 1));
      max_point = std::max(max_point, value);
    }
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  if (degree == 0) {
    degree = max_point;
  } else if (max_point > degree) {
    fail("point exceeds degree " + std::to_string(degree));
  }
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0U);
  std::vector<bool> used(degree, false);
  for (auto const& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (used[cyc[k]]) {
        fail("point " + std::to_string(cyc[k] + 1) + " repeated");
      }
      used[cyc[k]] = true;
      im[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    inv[images_[x]] = static_cast<std::uint32_t>(x);
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::padded(std::size_t degree) const {
  if (degree < images_.size()) {
    throw Error("cannot shrink a permutation");
  }
  std::vector<std::uint32_t> im = images_;
  for (std::size_t x = im.size(); x < degree; ++x) {
    im.push_back(static_cast<std::uint32_t>(x));
  }
  return Permutation(std::move(im));
}

Permutation Permutation::then(Permutation const& q) const {
  if (q.degree() != degree()) {
    throw Error("permutation degree mismatch: " + std::to_string(degree())
                + " vs " + std::to_string(q.degree()));
  }
  std::vector<std::uint32_t> im(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    im[x] = q.images_[images_[x]];
  }
  Permutation r;
  r.images_ = std::move(im);
  return r;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  bool wide = images_.size() > 9;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) {
      continue;
    }
    out += '(';
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (wide && !first) {
        out += ',';
      }
      out += std::to_string(y + 1);
      first = false;
      y = images_[y];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace ggt
