#include "ggt/dehn.hpp"

#include <random>
#include <set>
#include <unordered_set>

#include "ggt/error.hpp"

namespace ggt {

SymmetrizedRelators::SymmetrizedRelators(std::vector<Word> const& relators) {
  std::set<std::vector<Letter>> seen;
  for (auto const& r : relators) {
    Word core = cyclically_reduce(reduce(r)).core;
    if (core.empty()) {
      throw Error("relator is trivial after cyclic reduction");
    }
    for (auto const& base : {core, invert(core)}) {
      for (auto& rot : rotations(base)) {
        if (seen.insert(rot.letters()).second) {
          words_.push_back(std::move(rot));
        }
      }
    }
  }
}

SymmetrizedRelators symmetrize(std::vector<Word> const& relators) {
  return SymmetrizedRelators(relators);
}

std::optional<HalfRelatorMatch> find_half_relator(Word const& w,
                                                  SymmetrizedRelators const& sym) {
  for (std::size_t p = 0; p < w.size(); ++p) {
    std::size_t best_len = 0;
    std::size_t best = sym.size();
    for (std::size_t i = 0; i < sym.size(); ++i) {
      Word const& r = sym[i];
      std::size_t len = 0;
      while (len < r.size() && p + len < w.size() && w[p + len] == r[len]) {
        ++len;
      }
      if (2 * len > r.size() && len > best_len) {
        best_len = len;
        best = i;
      }
    }
    if (best < sym.size()) {
      Word const& r = sym[best];
      return HalfRelatorMatch{p, best, r.subword(0, best_len),
                              r.subword(best_len, r.size() - best_len)};
    }
  }
  return std::nullopt;
}

DehnTrace dehn_reduce(Word const& w, SymmetrizedRelators const& sym,
                      std::size_t max_steps) {
  DehnTrace trace;
  trace.input = w;
  Word cur = reduce(w);
  while (auto m = find_half_relator(cur, sym)) {
    if (trace.steps.size() >= max_steps) {
      throw BudgetExceeded("Dehn reduction exceeded " + std::to_string(max_steps)
                           + " steps");
    }
    Word replacement = invert(m->r2);
    std::size_t const tail = m->position + m->r1.size();
    Word next = concat(concat(cur.subword(0, m->position), replacement),
                       cur.subword(tail, cur.size() - tail));
    next = reduce(next);
    trace.steps.push_back({m->position, m->r1, replacement, sym[m->relator], cur, next});
    cur = std::move(next);
  }
  trace.terminal = std::move(cur);
  return trace;
}

DehnTrace dehn_reduce(Word const& w, Presentation const& pres) {
  return dehn_reduce(w, symmetrize(pres.relators));
}

std::vector<Conjugate> certificate(DehnTrace const& trace) {
  std::vector<Conjugate> out;
  for (auto const& s : trace.steps) {
    out.push_back({s.before.subword(0, s.position), s.relator});
  }
  return out;
}

Word replay(std::span<Conjugate const> conjugates, Word const& tail) {
  Word w;
  for (auto const& c : conjugates) {
    w = multiply(w, multiply(multiply(c.conjugator, c.relator), invert(c.conjugator)));
  }
  return multiply(w, tail);
}

namespace {

// Every reduced word of length ≤ n over `rank` generators, shortlex order.
std::vector<Word> reduced_words(std::size_t rank, std::size_t n) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= n; ++len) {
    std::size_t const end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t k = 0; k < 2 * rank; ++k) {
        Letter l(k % rank, k >= rank);
        if (!out[i].empty() && out[i].back().cancels(l)) {
          continue;
        }
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace

std::optional<std::size_t> area_bruteforce(Word const& w, Presentation const& pres,
                                           std::size_t max_n, std::size_t max_conj_len,
                                           std::size_t budget) {
  Word target = reduce(w);
  if (target.empty()) {
    return 0;
  }
  if (pres.relators.empty() || max_n == 0) {
    return std::nullopt;
  }
  auto sym = symmetrize(pres.relators);
  std::unordered_set<Word, WordHash> conj_set;
  std::vector<Word> conjugates;
  for (auto const& u : reduced_words(pres.rank(), max_conj_len)) {
    Word ui = invert(u);
    for (auto const& r : sym.words()) {
      Word c = multiply(multiply(u, r), ui);
      if (conj_set.insert(c).second) {
        conjugates.push_back(std::move(c));
      }
    }
  }
  // level = products of exactly n−1 conjugates; w has area ≤ n iff
  // w·c⁻¹ lies in that level for some conjugate c.
  std::unordered_set<Word, WordHash> level{Word{}};
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto const& c : conjugates) {
      if (level.contains(multiply(target, invert(c)))) {
        return n;
      }
    }
    if (n == max_n) {
      break;
    }
    std::unordered_set<Word, WordHash> next;
    for (auto const& p : level) {
      for (auto const& c : conjugates) {
        next.insert(multiply(p, c));
        if (next.size() > budget) {
          throw BudgetExceeded("area search exceeds the budget of "
                               + std::to_string(budget) + " products");
        }
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

Word random_trivial_word(Presentation const& pres, std::size_t n,
                         std::size_t max_conj_len, std::uint64_t seed) {
  if (pres.relators.empty()) {
    throw Error("random_trivial_word needs at least one relator");
  }
  if (pres.rank() == 0) {
    throw Error("random_trivial_word needs at least one generator");
  }
  auto sym = symmetrize(pres.relators);
  std::mt19937_64 rng(seed);
  std::size_t const rank = pres.rank();
  Word w;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t const len = rng() % (max_conj_len + 1);
    Word u;
    while (u.size() < len) {
      Letter l(rng() % rank, rng() % 2 == 1);
      if (!u.empty() && u.back().cancels(l)) {
        continue;
      }
      u.push_back(l);
    }
    Word const& r = sym[rng() % sym.size()];
    w = multiply(w, multiply(multiply(u, r), invert(u)));
  }
  return w;
}

////////////////////////////////////////////////////////////////////////
// DehnOracle
////////////////////////////////////////////////////////////////////////

DehnOracle::DehnOracle(Presentation pres, std::string name)
    : pres_(std::move(pres)), name_(std::move(name)) {
  if (pres_.rank() == 0) {
    throw Error("presentation has no generators");
  }
  sym_ = symmetrize(pres_.relators);
  for (std::size_t g = 0; g < pres_.rank(); ++g) {
    bool balanced = true;
    for (auto const& r : pres_.relators) {
      balanced = balanced && exponent_sums(r, pres_.rank())[g] == 0;
    }
    if (balanced) {
      free_columns_.push_back(g);
    }
  }
  std::vector<std::pair<std::string, Word>> named;
  for (std::size_t g = 0; g < pres_.rank(); ++g) {
    named.emplace_back(pres_.generators.name(g), Word{Letter(g)});
  }
  gens_ = symmetric_generators<Word>(
      std::move(named), [](Word const& w) { return ggt::invert(w); },
      [this](Word const& x, Word const& y) { return equal(x, y); },
      [this](Word const& w) { return equal(w, Word{}); });
}

Word DehnOracle::multiply(Word const& g, Word const& h) const {
  if (g.rank_used() > pres_.rank() || h.rank_used() > pres_.rank()) {
    throw Error("word uses a generator outside the presentation");
  }
  return dehn_reduce(ggt::multiply(g, h), sym_).terminal;
}

bool DehnOracle::equal(Word const& g, Word const& h) const {
  return dehn_reduce(ggt::multiply(g, ggt::invert(h)), sym_).trivial();
}

std::string DehnOracle::key(Word const& g) const {
  auto sums = exponent_sums(g, pres_.rank());
  std::string k;
  for (auto c : free_columns_) {
    k += std::to_string(sums[c]);
    k += ',';
  }
  return k;
}

}  // namespace ggt
