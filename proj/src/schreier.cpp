#include "ggt/schreier.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "ggt/error.hpp"

namespace ggt {

namespace {

Alphabet make_alphabet(std::vector<std::string> names) {
  return names.empty() ? Alphabet{} : Alphabet(std::move(names));
}

std::vector<std::uint32_t> bfs_order(
    std::vector<std::vector<std::uint32_t>> const& forward,
    std::vector<std::vector<std::uint32_t>> const& inverse, std::size_t n,
    std::uint32_t start) {
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> order{start};
  seen[start] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (auto const* cols : {&forward, &inverse}) {
      for (auto const& col : *cols) {
        auto d = col[order[k]];
        if (!seen[d]) {
          seen[d] = true;
          order.push_back(d);
        }
      }
    }
  }
  return order;
}

}  // namespace

CosetTable::CosetTable(Alphabet generators,
                       std::vector<std::vector<std::uint32_t>> images)
    : generators_(std::move(generators)), forward_(std::move(images)) {
  if (forward_.size() != generators_.size()) {
    throw Error("coset table has " + std::to_string(forward_.size())
                + " columns for " + std::to_string(generators_.size())
                + " generators");
  }
  if (forward_.empty()) {
    throw Error("coset table needs at least one generator");
  }
  size_ = forward_.front().size();
  if (size_ == 0) {
    throw Error("coset table needs at least one coset");
  }
  for (std::size_t x = 0; x < forward_.size(); ++x) {
    auto const& col = forward_[x];
    if (col.size() != size_) {
      throw Error("column '" + generators_.name(x) + "' has "
                  + std::to_string(col.size()) + " entries, expected "
                  + std::to_string(size_));
    }
    std::vector<std::uint32_t> inv(size_, static_cast<std::uint32_t>(size_));
    for (std::size_t c = 0; c < size_; ++c) {
      if (col[c] >= size_ || inv[col[c]] != size_) {
        throw Error("column '" + generators_.name(x) + "' is not a permutation");
      }
      inv[col[c]] = static_cast<std::uint32_t>(c);
    }
    inverse_.push_back(std::move(inv));
  }
  if (bfs_order(forward_, inverse_, size_, 0).size() != size_) {
    throw Error("coset table is not connected from coset 0");
  }
}

CosetTable CosetTable::from_action(Alphabet generators,
                                   std::vector<Permutation> const& perms,
                                   std::size_t basepoint) {
  if (perms.size() != generators.size()) {
    throw Error("expected one permutation per generator");
  }
  if (perms.empty()) {
    throw Error("coset table needs at least one generator");
  }
  std::size_t const degree = perms.front().degree();
  for (auto const& p : perms) {
    if (p.degree() != degree) {
      throw Error("permutation degree mismatch: " + std::to_string(p.degree())
                  + " vs " + std::to_string(degree));
    }
  }
  if (basepoint >= degree) {
    throw Error("basepoint " + std::to_string(basepoint + 1) + " exceeds degree "
                + std::to_string(degree));
  }
  std::vector<std::vector<std::uint32_t>> fwd, inv;
  for (auto const& p : perms) {
    fwd.push_back(p.images());
    inv.push_back(p.inverse().images());
  }
  if (bfs_order(fwd, inv, degree, static_cast<std::uint32_t>(basepoint)).size()
      != degree) {
    throw Error("action is not transitive on " + std::to_string(degree)
                + " points from basepoint " + std::to_string(basepoint + 1));
  }
  // basepoint → 0, others in their original relative order
  std::vector<std::uint32_t> label(degree);
  std::uint32_t next = 1;
  for (std::size_t x = 0; x < degree; ++x) {
    label[x] = x == basepoint ? 0 : next++;
  }
  std::vector<std::vector<std::uint32_t>> images(perms.size(),
                                                 std::vector<std::uint32_t>(degree));
  for (std::size_t g = 0; g < perms.size(); ++g) {
    for (std::size_t x = 0; x < degree; ++x) {
      images[g][label[x]] = label[perms[g][x]];
    }
  }
  return CosetTable(std::move(generators), std::move(images));
}

CosetTable CosetTable::regular(Alphabet generators,
                               std::vector<Permutation> const& perms,
                               std::size_t max_order) {
  if (perms.size() != generators.size() || perms.empty()) {
    throw Error("expected one permutation per generator");
  }
  std::size_t const degree = perms.front().degree();
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::map<std::vector<std::uint32_t>, std::uint32_t> index{
      {elements[0].images(), 0}};
  std::vector<std::vector<std::uint32_t>> images(perms.size());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (std::size_t g = 0; g < perms.size(); ++g) {
      Permutation p = elements[k].then(perms[g]);
      auto [it, fresh] = index.emplace(p.images(),
                                       static_cast<std::uint32_t>(elements.size()));
      if (fresh) {
        if (elements.size() >= max_order) {
          throw BudgetExceeded("permutation group has more than "
                               + std::to_string(max_order) + " elements");
        }
        elements.push_back(std::move(p));
      }
      images[g].push_back(it->second);
    }
  }
  return CosetTable(std::move(generators), std::move(images));
}

CosetTable CosetTable::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> count;
  std::vector<std::string> names;
  std::vector<std::vector<std::uint32_t>> images;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head.front() == '#') {
      continue;
    }
    auto fail = [&](std::string const& what) {
      throw ParseError("coset table line " + std::to_string(lineno) + ": " + what);
    };
    if (head == "cosets") {
      long m = 0;
      if (count || !(ls >> m) || m <= 0) {
        fail("expected a single 'cosets <m>' with m ≥ 1");
      }
      count = static_cast<std::size_t>(m);
    } else if (head == "gen") {
      if (!count) {
        fail("'gen' before 'cosets'");
      }
      std::string name;
      if (!(ls >> name) || name.back() != ':') {
        fail("expected 'gen <letter>: images'");
      }
      name.pop_back();
      names.push_back(name);
      std::vector<std::uint32_t> col;
      for (long c; ls >> c;) {
        if (c < 0 || static_cast<std::size_t>(c) >= *count) {
          fail("coset index " + std::to_string(c) + " out of range");
        }
        col.push_back(static_cast<std::uint32_t>(c));
      }
      if (!ls.eof()) {
        fail("non-numeric coset index");
      }
      if (col.size() != *count) {
        fail("expected " + std::to_string(*count) + " images, got "
             + std::to_string(col.size()));
      }
      images.push_back(std::move(col));
    } else {
      fail("expected 'cosets' or 'gen'");
    }
  }
  if (!count || names.empty()) {
    throw ParseError("coset table needs a 'cosets' line and at least one 'gen' line");
  }
  return CosetTable(Alphabet(std::move(names)), std::move(images));
}

CosetTable CosetTable::load(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open coset table file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::uint32_t CosetTable::act(std::uint32_t coset, Word const& w) const {
  for (auto l : w) {
    coset = act(coset, l);
  }
  return coset;
}

std::string CosetTable::to_string() const {
  std::string out = "cosets " + std::to_string(size_) + '\n';
  for (std::size_t x = 0; x < rank(); ++x) {
    out += "gen " + generators_.name(x) + ':';
    for (auto c : forward_[x]) {
      out += ' ' + std::to_string(c);
    }
    out += '\n';
  }
  return out;
}

std::string CosetTable::to_dot() const {
  std::string out = "digraph schreier {\n";
  for (std::size_t c = 0; c < size_; ++c) {
    out += "  " + std::to_string(c) + ";\n";
  }
  for (std::size_t c = 0; c < size_; ++c) {
    for (std::size_t x = 0; x < rank(); ++x) {
      out += "  " + std::to_string(c) + " -> " + std::to_string(forward_[x][c])
             + " [label=" + generators_.name(x) + "];\n";
    }
  }
  out += "}\n";
  return out;
}

////////////////////////////////////////////////////////////////////////
// Transversals and Schreier generators
////////////////////////////////////////////////////////////////////////

Transversal transversal(CosetTable const& table) {
  std::vector<Letter> letters;
  for (std::size_t x = 0; x < table.rank(); ++x) {
    letters.emplace_back(x);
  }
  for (std::size_t x = 0; x < table.rank(); ++x) {
    letters.emplace_back(x, true);
  }
  Transversal t(table.size());
  std::vector<bool> seen(table.size(), false);
  std::deque<std::uint32_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    for (auto l : letters) {
      auto d = table.act(c, l);
      if (!seen[d]) {
        seen[d] = true;
        t[d] = t[c];
        t[d].push_back(l);
        queue.push_back(d);
      }
    }
  }
  return t;
}

Transversal transversal_from_words(CosetTable const& table,
                                   std::vector<Word> const& words) {
  if (words.size() != table.size()) {
    throw Error("transversal has " + std::to_string(words.size())
                + " words for " + std::to_string(table.size()) + " cosets");
  }
  Transversal t(table.size());
  std::vector<bool> hit(table.size(), false);
  std::set<std::vector<Letter>> all;
  for (auto const& w : words) {
    Word r = reduce(w);
    auto c = table.act(0, r);
    if (hit[c]) {
      throw Error("two transversal words represent coset " + std::to_string(c));
    }
    hit[c] = true;
    t[c] = r;
    all.insert(r.letters());
  }
  if (!t[0].empty()) {
    throw Error("the representative of H must be the empty word");
  }
  for (auto const& w : t) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (!all.contains(w.subword(0, k).letters())) {
        throw Error("transversal is not prefix-closed");
      }
    }
  }
  return t;
}

std::vector<std::string> schreier_symbol_names(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) {
    names.push_back(count <= 26 ? std::string(1, static_cast<char>('a' + i))
                                : "y" + std::to_string(i));
  }
  return names;
}

std::vector<SchreierGen> schreier_generators(CosetTable const& table,
                                             Transversal const& t,
                                             std::vector<std::string> const& names) {
  if (t.size() != table.size()) {
    throw Error("transversal does not match the coset table");
  }
  std::vector<SchreierGen> gens;
  for (std::uint32_t c = 0; c < table.size(); ++c) {
    for (std::size_t x = 0; x < table.rank(); ++x) {
      Word tx = t[c];
      tx.push_back(Letter(x));
      Word value = multiply(tx, invert(t[table.act(c, Letter(x))]));
      if (!value.empty()) {
        gens.push_back({c, x, std::move(value), {}});
      }
    }
  }
  auto symbols = names.empty() ? schreier_symbol_names(gens.size()) : names;
  if (symbols.size() != gens.size()) {
    throw Error("expected " + std::to_string(gens.size())
                + " Schreier symbol names, got " + std::to_string(symbols.size()));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    gens[i].symbol = symbols[i];
  }
  return gens;
}

Word rewrite(Word const& w, CosetTable const& table,
             std::vector<SchreierGen> const& gens) {
  std::map<std::pair<std::uint32_t, std::size_t>, std::size_t> symbol;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    symbol[{gens[i].coset, gens[i].gen}] = i;
  }
  Word out;
  std::uint32_t c = 0;
  for (auto l : w) {
    if (!l.is_inverse()) {
      if (auto it = symbol.find({c, l.gen()}); it != symbol.end()) {
        out.push_back(Letter(it->second));
      }
      c = table.act(c, l);
    } else {
      c = table.act(c, l);
      if (auto it = symbol.find({c, l.gen()}); it != symbol.end()) {
        out.push_back(Letter(it->second, true));
      }
    }
  }
  if (c != 0) {
    throw Error("word does not lie in the subgroup (it maps coset 0 to coset "
                + std::to_string(c) + ")");
  }
  return reduce(out);
}

Word expand(Word const& symbols, std::vector<SchreierGen> const& gens) {
  Word out;
  for (auto l : symbols) {
    auto const& v = gens.at(l.gen()).value;
    out = multiply(out, l.is_inverse() ? invert(v) : v);
  }
  return out;
}

SubgroupPresentation subgroup_presentation(Presentation const& pres,
                                           CosetTable const& table,
                                           Transversal const& t) {
  if (pres.generators.names() != table.generators().names()) {
    throw Error("coset table generators do not match the presentation");
  }
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    for (std::uint32_t c = 0; c < table.size(); ++c) {
      if (table.act(c, pres.relators[i]) != c) {
        throw Error("relator " + pres.generators.format(pres.relators[i])
                    + " moves coset " + std::to_string(c)
                    + "; the action is inconsistent with the presentation");
      }
    }
  }
  SubgroupPresentation out;
  out.generators = schreier_generators(table, t);
  std::vector<std::string> names;
  for (auto const& g : out.generators) {
    names.push_back(g.symbol);
  }
  out.raw.generators = make_alphabet(std::move(names));
  for (auto const& tw : t) {
    for (auto const& r : pres.relators) {
      out.raw.relators.push_back(
          rewrite(concat(concat(tw, r), invert(tw)), table, out.generators));
    }
  }
  out.simplified = tietze_simplify(out.raw);
  return out;
}

SubgroupPresentation subgroup_presentation(Presentation const& pres,
                                           CosetTable const& table) {
  return subgroup_presentation(pres, table, transversal(table));
}

////////////////////////////////////////////////////////////////////////
// Commutator subgroup of F(a, b)
////////////////////////////////////////////////////////////////////////

Word commutator_schreier_generator(long n, long m, std::size_t gen) {
  if (gen > 1) {
    throw Error("generator index must be 0 (a) or 1 (b)");
  }
  if (gen == 1) {
    return {};
  }
  Word a{Letter(0)};
  Word b{Letter(1)};
  Word w = multiply(power(a, n), power(b, m));
  w = multiply(w, a);
  w = multiply(w, power(b, -m));
  return multiply(w, power(a, -(n + 1)));
}

std::vector<CommutatorGen> commutator_transversal_demo(long n_lo, long n_hi,
                                                       long m_lo, long m_hi) {
  std::vector<CommutatorGen> out;
  for (long n = n_lo; n <= n_hi; ++n) {
    for (long m = m_lo; m <= m_hi; ++m) {
      for (std::size_t g = 0; g < 2; ++g) {
        Word v = commutator_schreier_generator(n, m, g);
        if (!v.empty()) {
          out.push_back({n, m, g, std::move(v)});
        }
      }
    }
  }
  return out;
}

}  // namespace ggt
