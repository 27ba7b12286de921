#include <algorithm>
#include <optional>
#include <set>

#include "ggt/error.hpp"
#include "ggt/schreier.hpp"

namespace ggt {

namespace {

void normalise(std::vector<Word>& rels) {
  std::set<std::vector<Letter>> seen;
  std::vector<Word> kept;
  for (auto const& r : rels) {
    Word core = cyclically_reduce(reduce(r)).core;
    if (core.empty()) {
      continue;
    }
    if (seen.insert(cyclic_normal_form(core).letters()).second) {
      kept.push_back(std::move(core));
    }
  }
  rels = std::move(kept);
}

struct Elimination {
  std::size_t relator;
  std::size_t gen;
};

std::optional<Elimination> pick(std::vector<Word> const& rels, std::size_t rank) {
  std::vector<std::size_t> order(rels.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return rels[i].size() < rels[j].size();
  });
  for (auto i : order) {
    std::vector<std::size_t> count(rank, 0);
    for (auto l : rels[i]) {
      ++count[l.gen()];
    }
    for (std::size_t g = rank; g > 0; --g) {
      if (count[g - 1] == 1) {
        return Elimination{i, g - 1};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Presentation tietze_simplify(Presentation const& pres) {
  std::vector<std::string> names = pres.generators.names();
  std::vector<Word> rels = pres.relators;
  normalise(rels);
  while (auto e = pick(rels, names.size())) {
    // Rotate so the relator reads g^ε·w; then g = w⁻¹ (ε = 1) or g = w.
    Word const& r = rels[e->relator];
    std::size_t pos = 0;
    while (r[pos].gen() != e->gen) {
      ++pos;
    }
    Word rest = concat(r.subword(pos + 1, r.size() - pos - 1), r.subword(0, pos));
    Word value = r[pos].is_inverse() ? rest : invert(rest);
    auto renumber = [g = e->gen](Letter l) {
      return Letter(l.gen() > g ? l.gen() - 1 : l.gen(), l.is_inverse());
    };
    std::vector<Letter> shifted;
    for (auto l : value) {
      shifted.push_back(renumber(l));
    }
    value = Word(std::move(shifted));

    std::vector<Word> next;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (i == e->relator) {
        continue;
      }
      Word w;
      for (auto l : rels[i]) {
        if (l.gen() == e->gen) {
          w = concat(w, l.is_inverse() ? invert(value) : value);
        } else {
          w.push_back(renumber(l));
        }
      }
      next.push_back(std::move(w));
    }
    names.erase(names.begin() + static_cast<long>(e->gen));
    rels = std::move(next);
    normalise(rels);
  }
  Presentation out;
  out.generators = names.empty() ? Alphabet{} : Alphabet(std::move(names));
  out.relators = std::move(rels);
  return out;
}

}  // namespace ggt
