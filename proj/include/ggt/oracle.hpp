// The group-oracle abstraction: exact arithmetic with decidable equality
// over a symmetric generating set S = S⁻¹ with 1 ∉ S.
//
// Every graph and growth algorithm in cayley.hpp is written against the
// GroupOracle concept below. An oracle supplies
//   identity(), generators(), multiply(g, h), invert(g), equal(g, h), key(g).
// key() is a hashing key: equal elements always have equal keys. When
// keys_are_exact() holds, equal keys also imply equal elements; otherwise
// algorithms use equal() to arbitrate collisions.

#ifndef GGT_ORACLE_HPP_
#define GGT_ORACLE_HPP_

#include <cctype>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ggt/error.hpp"

namespace ggt {

template <class E>
struct Generator {
  E element;
  std::string name;
  std::size_t inverse;  // index of the inverse generator in the same list
};

template <class O>
concept GroupOracle = requires(O const& o, typename O::element_type const& g) {
  typename O::element_type;
  { o.identity() } -> std::convertible_to<typename O::element_type>;
  { o.generators() }
      -> std::convertible_to<std::span<Generator<typename O::element_type> const>>;
  { o.multiply(g, g) } -> std::convertible_to<typename O::element_type>;
  { o.invert(g) } -> std::convertible_to<typename O::element_type>;
  { o.equal(g, g) } -> std::convertible_to<bool>;
  { o.key(g) } -> std::convertible_to<std::string>;
  { o.keys_are_exact() } -> std::convertible_to<bool>;
  { o.name() } -> std::convertible_to<std::string>;
};

inline std::string inverse_name(std::string const& name) {
  if (name.size() == 1 && std::islower(static_cast<unsigned char>(name[0]))) {
    return std::string(1, static_cast<char>(std::toupper(name[0])));
  }
  return name + "^-1";
}

// Builds S from named generators: the given generators in order, followed by
// the inverses of those that are not involutions. Throws Error if some
// generator is the identity.
template <class E, class Invert, class Equal, class IsIdentity>
std::vector<Generator<E>> symmetric_generators(
    std::vector<std::pair<std::string, E>> named, Invert&& invert,
    Equal&& equal, IsIdentity&& is_identity) {
  std::vector<Generator<E>> gens;
  std::vector<std::size_t> pending;
  for (auto& [n, e] : named) {
    if (is_identity(e)) {
      throw Error("generator '" + n + "' is the identity; S must not contain 1");
    }
    gens.push_back({std::move(e), n, gens.size()});
  }
  std::size_t const count = gens.size();
  for (std::size_t i = 0; i < count; ++i) {
    E inv = invert(gens[i].element);
    if (equal(inv, gens[i].element)) {
      continue;
    }
    gens[i].inverse = gens.size();
    gens.push_back({std::move(inv), inverse_name(gens[i].name), i});
  }
  return gens;
}

}  // namespace ggt

#endif  // GGT_ORACLE_HPP_
