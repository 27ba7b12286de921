#include "ggt/oracles.hpp"

namespace ggt {

namespace {
std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                            : "x" + std::to_string(i + 1));
  }
  return names;
}
}  // namespace

////////////////////////////////////////////////////////////////////////
// FreeOracle
////////////////////////////////////////////////////////////////////////

FreeOracle::FreeOracle(std::size_t rank) : rank_(rank) {
  if (rank == 0) {
    throw Error("free group rank must be at least 1");
  }
  alphabet_ = Alphabet(default_names(rank));
  for (std::size_t i = 0; i < rank; ++i) {
    gens_.push_back({Word{Letter(i)}, alphabet_.name(i), rank + i});
  }
  for (std::size_t i = 0; i < rank; ++i) {
    gens_.push_back({Word{Letter(i, true)}, inverse_name(alphabet_.name(i)), i});
  }
}

Word FreeOracle::multiply(Word const& g, Word const& h) const {
  if (g.rank_used() > rank_ || h.rank_used() > rank_) {
    throw Error("word uses a generator outside the alphabet of " + name());
  }
  return ggt::multiply(g, h);
}

std::string FreeOracle::key(Word const& g) const {
  Word r = reduce(g);
  std::string k;
  k.reserve(r.size());
  for (auto l : r) {
    k += static_cast<char>(l.is_inverse() ? 'A' + l.gen() % 26 : 'a' + l.gen() % 26);
    if (rank_ > 26) {
      k += std::to_string(l.gen()) + '.';
    }
  }
  return k;
}

FreeOracle make_free_oracle(std::size_t rank) { return FreeOracle(rank); }

////////////////////////////////////////////////////////////////////////
// MatrixOracle
////////////////////////////////////////////////////////////////////////

MatrixOracle::MatrixOracle(std::string name,
                           std::vector<std::pair<std::string, IntMatrix>> gens)
    : name_(std::move(name)) {
  if (gens.empty()) {
    throw Error("matrix oracle needs at least one generator");
  }
  dim_ = gens.front().second.dim();
  for (auto const& [n, m] : gens) {
    if (m.dim() != dim_) {
      throw Error("generator '" + n + "' has dimension "
                  + std::to_string(m.dim()) + ", expected "
                  + std::to_string(dim_));
    }
    BigInt det = m.determinant();
    if (det != 1 && det != -1) {
      throw Error("generator '" + n + "' is not invertible over the integers (det "
                  + det.str() + ")");
    }
  }
  gens_ = symmetric_generators<IntMatrix>(
      std::move(gens), [](IntMatrix const& m) { return m.inverse(); },
      [](IntMatrix const& x, IntMatrix const& y) { return x == y; },
      [](IntMatrix const& m) { return m.is_identity(); });
}

MatrixOracle make_heisenberg_oracle(bool include_center) {
  std::vector<std::pair<std::string, IntMatrix>> gens{
      {"u", IntMatrix::elementary(3, 0, 1)},
      {"v", IntMatrix::elementary(3, 1, 2)}};
  if (include_center) {
    gens.emplace_back("z", IntMatrix::elementary(3, 0, 2));
  }
  return MatrixOracle(include_center ? "heisenberg" : "heisenberg-uv",
                      std::move(gens));
}

MatrixOracle make_sl2z_pingpong_oracle(long k) {
  if (k <= 0) {
    throw Error("sl2z ping-pong parameter k must be positive");
  }
  return MatrixOracle("sl2z:k=" + std::to_string(k),
                      {{"g", IntMatrix{{1, k}, {0, 1}}},
                       {"h", IntMatrix{{1, 0}, {k, 1}}}});
}

MatrixOracle make_matrix_oracle(std::vector<IntMatrix> gens) {
  auto names = default_names(gens.size());
  std::vector<std::pair<std::string, IntMatrix>> named;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    named.emplace_back(names[i], std::move(gens[i]));
  }
  return MatrixOracle("matrix", std::move(named));
}

////////////////////////////////////////////////////////////////////////
// PermutationOracle
////////////////////////////////////////////////////////////////////////

PermutationOracle::PermutationOracle(
    std::vector<std::pair<std::string, Permutation>> gens, std::size_t degree) {
  if (gens.empty()) {
    throw Error("permutation oracle needs at least one generator");
  }
  if (degree == 0) {
    for (auto const& [n, p] : gens) {
      degree = std::max(degree, p.degree());
    }
    for (auto& [n, p] : gens) {
      p = p.padded(degree);
    }
  } else {
    for (auto const& [n, p] : gens) {
      if (p.degree() != degree) {
        throw Error("generator '" + n + "' has degree "
                    + std::to_string(p.degree()) + ", expected "
                    + std::to_string(degree));
      }
    }
  }
  degree_ = degree;
  gens_ = symmetric_generators<Permutation>(
      std::move(gens), [](Permutation const& p) { return p.inverse(); },
      [](Permutation const& p, Permutation const& q) { return p == q; },
      [](Permutation const& p) { return p.is_identity(); });
}

std::string PermutationOracle::key(Permutation const& g) const {
  std::string k;
  k.reserve(g.degree() * 4);
  for (auto v : g.images()) {
    k.append(reinterpret_cast<char const*>(&v), sizeof v);
  }
  return k;
}

PermutationOracle make_permutation_oracle(std::vector<Permutation> gens) {
  if (gens.empty()) {
    throw Error("permutation oracle needs at least one generator");
  }
  std::size_t const degree = gens.front().degree();
  auto names = default_names(gens.size());
  std::vector<std::pair<std::string, Permutation>> named;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    named.emplace_back(names[i], std::move(gens[i]));
  }
  return PermutationOracle(std::move(named), degree);
}

////////////////////////////////////////////////////////////////////////
// LatticeOracle
////////////////////////////////////////////////////////////////////////

LatticeOracle::LatticeOracle(std::size_t k) : k_(k) {
  if (k == 0) {
    throw Error("lattice dimension must be at least 1");
  }
  auto names = default_names(k);
  for (std::size_t i = 0; i < k; ++i) {
    LatticeVector e(k, 0);
    e[i] = 1;
    gens_.push_back({e, names[i], k + i});
  }
  for (std::size_t i = 0; i < k; ++i) {
    LatticeVector e(k, 0);
    e[i] = -1;
    gens_.push_back({e, inverse_name(names[i]), i});
  }
}

LatticeVector LatticeOracle::multiply(LatticeVector const& g,
                                      LatticeVector const& h) const {
  LatticeVector r(k_);
  for (std::size_t i = 0; i < k_; ++i) {
    r[i] = g[i] + h[i];
  }
  return r;
}

LatticeVector LatticeOracle::invert(LatticeVector const& g) const {
  LatticeVector r(k_);
  for (std::size_t i = 0; i < k_; ++i) {
    r[i] = -g[i];
  }
  return r;
}

std::string LatticeOracle::key(LatticeVector const& g) const {
  std::string k;
  for (auto v : g) {
    k += std::to_string(v);
    k += ',';
  }
  return k;
}

LatticeOracle make_lattice_oracle(std::size_t k) { return LatticeOracle(k); }

}  // namespace ggt
