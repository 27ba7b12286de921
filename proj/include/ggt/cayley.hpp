// Cayley-ball BFS and the metrics computed from finite balls: word metric,
// growth series, Følner ratios, ends profiles, Gromov products and the
// four-point δ estimate.

#ifndef GGT_CAYLEY_HPP_
#define GGT_CAYLEY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "ggt/error.hpp"
#include "ggt/oracle.hpp"

namespace ggt {

using Rational = boost::rational<std::int64_t>;

struct BallOptions {
  std::size_t budget = 5'000'000;  // maximum number of elements
  bool edges = true;
};

template <class E>
class Ball {
 public:
  struct Node {
    E element;
    std::string key;
    std::uint32_t distance;
    std::uint32_t parent;  // parent in the BFS tree; 0 for the identity
    std::uint32_t via;     // generator index of the last letter
  };
  struct Edge {
    std::uint32_t from;
    std::uint32_t gen;
    std::uint32_t to;
  };

  std::size_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  Node const& operator[](std::size_t i) const { return nodes_[i]; }
  std::vector<Node> const& nodes() const noexcept { return nodes_; }

  // (from, generator, to) for every generator step between ball elements.
  // Empty unless built with BallOptions::edges.
  std::vector<Edge> const& edges() const noexcept { return edges_; }

  // True iff the neighbours of the outer sphere were explored, so edges()
  // lists every step that stays inside the ball.
  bool complete() const noexcept { return complete_; }

  // Index range [begin, end) of the sphere of radius r.
  std::pair<std::size_t, std::size_t> sphere(std::size_t r) const {
    return {layer_start_.at(r), layer_start_.at(r + 1)};
  }
  std::vector<std::size_t> sphere_sizes() const {
    std::vector<std::size_t> s;
    for (std::size_t r = 0; r + 1 < layer_start_.size(); ++r) {
      s.push_back(layer_start_[r + 1] - layer_start_[r]);
    }
    return s;
  }

  // Geodesic witness as generator indices.
  std::vector<std::size_t> witness(std::size_t i) const {
    std::vector<std::size_t> w(nodes_[i].distance);
    for (std::size_t k = w.size(); k > 0; --k) {
      w[k - 1] = nodes_[i].via;
      i = nodes_[i].parent;
    }
    return w;
  }

  template <class Gens>
  std::string witness_text(std::size_t i, Gens const& gens) const {
    auto w = witness(i);
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (auto g : w) {
      s += gens[g].name;
    }
    return s;
  }

  // Index of the element equal to g, if it lies in the ball.
  template <GroupOracle O>
  std::optional<std::size_t> find(O const& oracle, E const& g) const {
    return find_with_key(oracle, g, oracle.key(g));
  }

  template <GroupOracle O>
  std::optional<std::size_t> find_with_key(O const& oracle, E const& g,
                                           std::string const& key) const {
    auto [lo, hi] = index_.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
      if (oracle.keys_are_exact() || oracle.equal(nodes_[it->second].element, g)) {
        return it->second;
      }
    }
    return std::nullopt;
  }

 private:
  template <GroupOracle O>
  friend class BallBuilder;

  std::size_t radius_ = 0;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> layer_start_{0};
  std::unordered_multimap<std::string, std::uint32_t> index_;
  bool complete_ = false;
};

// Grows a ball one BFS layer at a time. Elements are discovered in
// (distance, shortlex witness) order because the frontier is expanded in
// order and generators are tried in list order.
template <GroupOracle O>
class BallBuilder {
 public:
  using element_type = typename O::element_type;

  BallBuilder(O const& oracle, BallOptions options)
      : oracle_(oracle), options_(options) {
    auto id = oracle_.identity();
    auto key = oracle_.key(id);
    ball_.index_.emplace(key, 0);
    ball_.nodes_.push_back({std::move(id), std::move(key), 0, 0, 0});
    ball_.layer_start_.push_back(1);
  }

  std::size_t radius() const noexcept { return ball_.radius_; }
  Ball<element_type> const& ball() const noexcept { return ball_; }

  // Adds the sphere of radius radius()+1. Throws BudgetExceeded rather than
  // returning a truncated ball.
  void grow() {
    auto const [begin, end] = ball_.sphere(ball_.radius_);
    auto gens = oracle_.generators();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        auto g = oracle_.multiply(ball_.nodes_[i].element, gens[s].element);
        auto key = oracle_.key(g);
        auto hit = ball_.find_with_key(oracle_, g, key);
        std::uint32_t to;
        if (hit) {
          to = static_cast<std::uint32_t>(*hit);
        } else {
          if (ball_.nodes_.size() >= options_.budget) {
            throw BudgetExceeded("ball of " + oracle_.name() + " exceeds the budget of "
                                 + std::to_string(options_.budget)
                                 + " elements at radius "
                                 + std::to_string(ball_.radius_ + 1));
          }
          to = static_cast<std::uint32_t>(ball_.nodes_.size());
          ball_.index_.emplace(key, to);
          ball_.nodes_.push_back({std::move(g), std::move(key),
                                  static_cast<std::uint32_t>(ball_.radius_ + 1),
                                  static_cast<std::uint32_t>(i),
                                  static_cast<std::uint32_t>(s)});
        }
        if (options_.edges) {
          ball_.edges_.push_back({static_cast<std::uint32_t>(i),
                                  static_cast<std::uint32_t>(s), to});
        }
      }
    }
    ++ball_.radius_;
    ball_.layer_start_.push_back(ball_.nodes_.size());
  }

  // Explores the outer sphere's neighbours (when edges are requested) and
  // hands the ball over.
  Ball<element_type> finish() {
    if (options_.edges) {
      auto const [begin, end] = ball_.sphere(ball_.radius_);
      auto gens = oracle_.generators();
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t s = 0; s < gens.size(); ++s) {
          auto g = oracle_.multiply(ball_.nodes_[i].element, gens[s].element);
          if (auto hit = ball_.find(oracle_, g)) {
            ball_.edges_.push_back({static_cast<std::uint32_t>(i),
                                    static_cast<std::uint32_t>(s),
                                    static_cast<std::uint32_t>(*hit)});
          }
        }
      }
      std::sort(ball_.edges_.begin(), ball_.edges_.end(),
                [](auto const& x, auto const& y) {
                  return std::tie(x.from, x.gen) < std::tie(y.from, y.gen);
                });
      ball_.complete_ = true;
    }
    return std::move(ball_);
  }

 private:
  O const& oracle_;
  BallOptions options_;
  Ball<element_type> ball_;
};

// Exactly the elements at word-metric distance ≤ R.
template <GroupOracle O>
Ball<typename O::element_type> ball(O const& oracle, std::size_t radius,
                                    BallOptions options = {}) {
  BallBuilder<O> builder(oracle, options);
  while (builder.radius() < radius) {
    builder.grow();
  }
  return builder.finish();
}

// dist_S(1, g) if it is at most `cap`.
template <GroupOracle O>
std::optional<std::size_t> word_metric(O const& oracle,
                                       typename O::element_type const& g,
                                       std::size_t cap,
                                       std::size_t budget = 5'000'000) {
  BallBuilder<O> builder(oracle, {budget, false});
  while (true) {
    if (auto i = builder.ball().find(oracle, g)) {
      return builder.ball()[*i].distance;
    }
    if (builder.radius() >= cap) {
      return std::nullopt;
    }
    builder.grow();
  }
}

// dist_S(g, h) = |g⁻¹h|_S.
template <GroupOracle O>
std::optional<std::size_t> distance(O const& oracle,
                                    typename O::element_type const& g,
                                    typename O::element_type const& h,
                                    std::size_t cap) {
  return word_metric(oracle, oracle.multiply(oracle.invert(g), h), cap);
}

////////////////////////////////////////////////////////////////////////
// Growth
////////////////////////////////////////////////////////////////////////

struct GrowthSeries {
  std::vector<std::uint64_t> sizes;  // ρ(0), …, ρ(N)

  std::size_t max_radius() const { return sizes.empty() ? 0 : sizes.size() - 1; }
  std::vector<std::uint64_t> sphere_sizes() const;
  // ρ(r+t) ≤ ρ(r)ρ(t) for every r + t ≤ N.
  bool is_submultiplicative() const;
};

template <GroupOracle O>
GrowthSeries growth_series(O const& oracle, std::size_t n,
                           std::size_t budget = 5'000'000) {
  BallBuilder<O> builder(oracle, {budget, false});
  GrowthSeries series;
  series.sizes.push_back(1);
  while (builder.radius() < n) {
    builder.grow();
    series.sizes.push_back(builder.ball().size());
  }
  return series;
}

struct GrowthExponent {
  double root;          // ρ(N)^{1/N}
  double fekete;        // min over 1 ≤ n ≤ N of ρ(n)^{1/n}
  double sphere_ratio;  // s(N)/s(N−1); 1 once the spheres vanish
};

// Estimates of lim ρ(n)^{1/n}. Requires N ≥ 4.
GrowthExponent growth_exponent(GrowthSeries const& series);

// Least-squares slope of log ρ(n) against log n over ⌈N/2⌉ ≤ n ≤ N.
// Requires N ≥ 4.
double growth_degree(GrowthSeries const& series);

// Σ i·mᵢ for the ranks m₁, …, m_k of the lower central series quotients.
std::uint64_t bass_guivarch_degree(std::span<std::uint64_t const> ranks);

////////////////////////////////////////////////////////////////////////
// Boundaries and Følner ratios
////////////////////////////////////////////////////////////////////////

// {x ∉ A : x = ys for some y ∈ A, s ∈ S}, in discovery order.
template <GroupOracle O>
std::vector<typename O::element_type> boundary(
    O const& oracle, std::span<typename O::element_type const> set) {
  using E = typename O::element_type;
  std::unordered_multimap<std::string, std::size_t> inside;
  for (std::size_t i = 0; i < set.size(); ++i) {
    inside.emplace(oracle.key(set[i]), i);
  }
  std::unordered_multimap<std::string, std::size_t> seen;
  std::vector<E> out;
  auto contains = [&](auto const& index, auto const& elems, E const& g,
                      std::string const& key) {
    auto [lo, hi] = index.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
      if (oracle.keys_are_exact() || oracle.equal(elems[it->second], g)) {
        return true;
      }
    }
    return false;
  };
  for (auto const& y : set) {
    for (auto const& s : oracle.generators()) {
      E x = oracle.multiply(y, s.element);
      auto key = oracle.key(x);
      if (contains(inside, set, x, key) || contains(seen, out, x, key)) {
        continue;
      }
      seen.emplace(key, out.size());
      out.push_back(std::move(x));
    }
  }
  return out;
}

// |∂B(n)| / |B(n)| for n = 1, …, N. The boundary of a ball is the next
// sphere, so one BFS to radius N+1 suffices.
template <GroupOracle O>
std::vector<Rational> folner_ratios(O const& oracle, std::size_t n,
                                    std::size_t budget = 5'000'000) {
  if (n < 1) {
    throw Error("folner_ratios needs N ≥ 1");
  }
  auto series = growth_series(oracle, n + 1, budget);
  std::vector<Rational> ratios;
  for (std::size_t r = 1; r <= n; ++r) {
    auto sphere = series.sizes[r + 1] - series.sizes[r];
    ratios.emplace_back(static_cast<std::int64_t>(sphere),
                        static_cast<std::int64_t>(series.sizes[r]));
  }
  return ratios;
}

////////////////////////////////////////////////////////////////////////
// Ends
////////////////////////////////////////////////////////////////////////

struct EndsProfile {
  std::size_t radius;
  // (core radius r, number of components of Ball(R) ∖ Ball(r) that reach
  // the sphere of radius R). Ball(r) is the closed ball.
  std::vector<std::pair<std::size_t, std::size_t>> counts;
};

namespace detail {
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent_[std::max(x, y)] = std::min(x, y);
    }
  }

 private:
  std::vector<std::size_t> parent_;
};
}  // namespace detail

template <class E>
EndsProfile ends_profile(Ball<E> const& b, std::span<std::size_t const> cores) {
  if (!b.complete()) {
    throw Error("ends_profile needs a ball built with edges");
  }
  EndsProfile profile{b.radius(), {}};
  for (auto r : cores) {
    if (r >= b.radius()) {
      throw Error("core radius " + std::to_string(r)
                  + " must be smaller than the ball radius "
                  + std::to_string(b.radius()));
    }
    detail::UnionFind uf(b.size());
    for (auto const& e : b.edges()) {
      if (b[e.from].distance > r && b[e.to].distance > r) {
        uf.unite(e.from, e.to);
      }
    }
    std::unordered_set<std::size_t> roots;
    auto [lo, hi] = b.sphere(b.radius());
    for (std::size_t i = lo; i < hi; ++i) {
      roots.insert(uf.find(i));
    }
    profile.counts.emplace_back(r, roots.size());
  }
  return profile;
}

template <GroupOracle O>
EndsProfile ends_profile(O const& oracle, std::size_t radius,
                         std::span<std::size_t const> cores,
                         std::size_t budget = 5'000'000) {
  for (auto r : cores) {
    if (r >= radius) {
      throw Error("core radius " + std::to_string(r)
                  + " must be smaller than the ball radius "
                  + std::to_string(radius));
    }
  }
  return ends_profile(ball(oracle, radius, {budget, true}), cores);
}

////////////////////////////////////////////////////////////////////////
// Gromov products and δ
////////////////////////////////////////////////////////////////////////

// ½(d(p,x) + d(p,y) − d(x,y)). Throws Error if the three distances violate
// the triangle inequality.
Rational gromov_product(std::int64_t dpx, std::int64_t dpy, std::int64_t dxy);

struct DeltaEstimate {
  Rational delta;
  std::string sample;  // "exhaustive" or "sampled(seed=…,count=…)"
  std::uint64_t triples = 0;
};

struct Exhaustive {};
struct Sampled {
  std::uint64_t seed = 0;
  std::uint64_t count = 100000;
};
using DeltaMode = std::variant<Exhaustive, Sampled>;

// max over x, y, z in Ball(R), base point p = 1, of
//   min((x,z)_p, (y,z)_p) − (x,y)_p,
// clamped at 0. Pairwise distances come from a ball of radius 2R.
template <GroupOracle O>
DeltaEstimate delta_four_point(O const& oracle, std::size_t radius,
                               DeltaMode mode = Exhaustive{},
                               std::size_t budget = 5'000'000) {
  BallBuilder<O> builder(oracle, {budget, false});
  while (builder.radius() < 2 * radius) {
    builder.grow();
  }
  auto const& big = builder.ball();
  std::size_t const n = big.sphere(radius).second;

  auto dist = [&](std::size_t i, std::size_t j) -> std::int64_t {
    auto g = oracle.multiply(oracle.invert(big[i].element), big[j].element);
    auto hit = big.find(oracle, g);
    if (!hit) {
      throw Error("internal: distance exceeds 2R in delta_four_point");
    }
    return big[*hit].distance;
  };
  auto norm = [&](std::size_t i) -> std::int64_t { return big[i].distance; };

  DeltaEstimate est;
  std::int64_t best2 = 0;  // doubled
  if (std::holds_alternative<Exhaustive>(mode)) {
    // gp2[i][j] = 2(x_i, x_j)_p
    std::vector<std::int32_t> gp2(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      gp2[i * n + i] = static_cast<std::int32_t>(2 * norm(i));
      for (std::size_t j = i + 1; j < n; ++j) {
        auto v = static_cast<std::int32_t>(norm(i) + norm(j) - dist(i, j));
        gp2[i * n + j] = v;
        gp2[j * n + i] = v;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x; y < n; ++y) {
        std::int32_t const xy = gp2[x * n + y];
        std::int32_t const* rx = &gp2[x * n];
        std::int32_t const* ry = &gp2[y * n];
        for (std::size_t z = 0; z < n; ++z) {
          std::int32_t v = std::min(rx[z], ry[z]) - xy;
          if (v > best2) {
            best2 = v;
          }
        }
      }
    }
    est.sample = "exhaustive";
    est.triples = static_cast<std::uint64_t>(n) * n * n;
  } else {
    auto const& s = std::get<Sampled>(mode);
    std::mt19937_64 rng(s.seed);
    auto gp2 = [&](std::size_t i, std::size_t j) {
      return norm(i) + norm(j) - (i == j ? 0 : dist(i, j));
    };
    for (std::uint64_t t = 0; t < s.count; ++t) {
      std::size_t x = rng() % n;
      std::size_t y = rng() % n;
      std::size_t z = rng() % n;
      best2 = std::max(best2, std::min(gp2(x, z), gp2(y, z)) - gp2(x, y));
    }
    est.sample = "sampled(seed=" + std::to_string(s.seed)
                 + ",count=" + std::to_string(s.count) + ")";
    est.triples = s.count;
  }
  est.delta = Rational(best2, 2);
  return est;
}

////////////////////////////////////////////////////////////////////////
// Export
////////////////////////////////////////////////////////////////////////

// DOT digraph: node id = witness word ("1" for the identity) with a `dist`
// attribute; one edge per (element, generator). Of the pair g→gs, gs→g
// (via s⁻¹) only the step by the generator listed first is kept.
template <GroupOracle O>
std::string to_dot(O const& oracle, Ball<typename O::element_type> const& b) {
  auto gens = oracle.generators();
  auto quote = [](std::string const& s) { return "\"" + s + "\""; };
  std::vector<std::string> ids(b.size());
  std::string out = "digraph cayley {\n";
  for (std::size_t i = 0; i < b.size(); ++i) {
    ids[i] = quote(b.witness_text(i, gens));
    out += "  " + ids[i] + " [dist=" + std::to_string(b[i].distance) + "];\n";
  }
  for (auto const& e : b.edges()) {
    std::size_t const inv = gens[e.gen].inverse;
    bool keep = e.gen < inv || (e.gen == inv && e.from <= e.to);
    if (!keep) {
      continue;
    }
    out += "  " + ids[e.from] + " -> " + ids[e.to] + " [label=" + gens[e.gen].name
           + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ggt

#endif  // GGT_CAYLEY_HPP_
