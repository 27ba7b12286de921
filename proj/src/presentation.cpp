#include "ggt/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "ggt/error.hpp"

namespace ggt {

namespace {
std::string_view trim(std::string_view s) {
  auto const ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) {
    return {};
  }
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}
}  // namespace

Presentation Presentation::parse(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::vector<std::string> pending;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') {
      continue;
    }
    if (s.rfind("gens:", 0) == 0) {
      if (have_gens) {
        throw ParseError("line " + std::to_string(lineno)
                         + ": duplicate 'gens:' line");
      }
      std::istringstream names{std::string(s.substr(5))};
      std::vector<std::string> gens;
      for (std::string n; names >> n;) {
        gens.push_back(n);
      }
      p.generators = Alphabet(std::move(gens));
      have_gens = true;
    } else if (s.rfind("rel:", 0) == 0) {
      if (!have_gens) {
        throw ParseError("line " + std::to_string(lineno)
                         + ": 'rel:' before 'gens:'");
      }
      p.relators.push_back(p.generators.parse(trim(s.substr(4))));
    } else {
      throw ParseError("line " + std::to_string(lineno)
                       + ": expected 'gens:' or 'rel:'");
    }
  }
  if (!have_gens) {
    throw ParseError("presentation has no 'gens:' line");
  }
  return p;
}

Presentation Presentation::load(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open presentation file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string Presentation::to_string() const {
  std::string out = "gens:";
  for (auto const& n : generators.names()) {
    out += ' ';
    out += n;
  }
  out += '\n';
  for (auto const& r : relators) {
    out += "rel: " + generators.format(r) + '\n';
  }
  return out;
}

namespace {

std::multiset<std::vector<Letter>> relator_classes(
    std::vector<Word> const& rels, std::vector<std::size_t> const& rename) {
  std::multiset<std::vector<Letter>> out;
  for (auto const& r : rels) {
    std::vector<Letter> letters;
    for (auto l : r) {
      letters.emplace_back(rename[l.gen()], l.is_inverse());
    }
    Word nf = cyclic_normal_form(Word(std::move(letters)));
    if (!nf.empty()) {
      out.insert(nf.letters());
    }
  }
  return out;
}

}  // namespace

bool same_up_to_renaming(Presentation const& p, Presentation const& q) {
  if (p.rank() != q.rank()) {
    return false;
  }
  if (p.rank() > 8) {
    throw Error("same_up_to_renaming supports at most 8 generators");
  }
  std::vector<std::size_t> identity(q.rank());
  std::iota(identity.begin(), identity.end(), 0);
  auto const target = relator_classes(q.relators, identity);
  std::vector<std::size_t> perm = identity;
  do {
    if (relator_classes(p.relators, perm) == target) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace ggt
