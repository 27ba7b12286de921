#include "ggt/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "ggt/error.hpp"

namespace ggt {

bool Word::is_reduced() const noexcept {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i - 1].cancels(letters_[i])) {
      return false;
    }
  }
  return true;
}

bool Word::is_cyclically_reduced() const noexcept {
  return is_reduced()
         && (letters_.size() < 2 || !letters_.front().cancels(letters_.back()));
}

std::size_t Word::rank_used() const noexcept {
  std::size_t r = 0;
  for (auto l : letters_) {
    r = std::max(r, l.gen() + 1);
  }
  return r;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
  return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(len)));
}

bool shortlex_less(Word const& u, Word const& v) {
  if (u.size() != v.size()) {
    return u.size() < v.size();
  }
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

Word concat(Word const& u, Word const& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return Word(std::move(out));
}

namespace {
void push_reducing(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back().cancels(l)) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}
}  // namespace

Word reduce(Word const& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (auto l : w) {
    push_reducing(stack, l);
  }
  return Word(std::move(stack));
}

Word multiply(Word const& u, Word const& v) {
  std::vector<Letter> stack;
  stack.reserve(u.size() + v.size());
  for (auto l : u) {
    push_reducing(stack, l);
  }
  for (auto l : v) {
    push_reducing(stack, l);
  }
  return Word(std::move(stack));
}

Word invert(Word const& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    push_reducing(out, it->inverse());
  }
  return Word(std::move(out));
}

Word power(Word const& w, long n) {
  Word base = n < 0 ? invert(w) : reduce(w);
  Word result;
  for (long i = 0; i < std::labs(n); ++i) {
    result = multiply(result, base);
  }
  return result;
}

Word commutator(Word const& u, Word const& v) {
  return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

CyclicReduction cyclically_reduce(Word const& w) {
  Word r = reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo].cancels(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return {r.subword(lo, hi - lo), r.subword(0, lo)};
}

std::vector<Word> rotations(Word const& w) {
  std::vector<Word> out;
  out.reserve(w.size());
  std::vector<Letter> letters = w.letters();
  for (std::size_t i = 0; i < std::max<std::size_t>(w.size(), 1); ++i) {
    out.emplace_back(letters);
    if (!letters.empty()) {
      std::rotate(letters.begin(), letters.begin() + 1, letters.end());
    }
  }
  return out;
}

Word cyclic_normal_form(Word const& w) {
  Word core = cyclically_reduce(w).core;
  Word best = core;
  for (auto const& candidate : {core, invert(core)}) {
    for (auto& rot : rotations(candidate)) {
      if (shortlex_less(rot, best)) {
        best = std::move(rot);
      }
    }
  }
  return best;
}

std::vector<long> exponent_sums(Word const& w, std::size_t rank) {
  std::vector<long> sums(std::max(rank, w.rank_used()), 0);
  for (auto l : w) {
    sums[l.gen()] += l.is_inverse() ? -1 : 1;
  }
  return sums;
}

std::size_t WordHash::operator()(Word const& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto l : w) {
    h ^= (l.gen() << 1) | static_cast<std::size_t>(l.is_inverse());
    h *= 0x100000001b3ULL;
  }
  return h;
}

////////////////////////////////////////////////////////////////////////
// Alphabet
////////////////////////////////////////////////////////////////////////

namespace {
bool is_identifier(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::islower(static_cast<unsigned char>(c))
           || std::isdigit(static_cast<unsigned char>(c)) || c == '_';
  });
}
}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw Error("alphabet must contain at least one generator");
  }
  std::set<std::string> seen;
  for (auto const& n : names_) {
    if (!is_identifier(n)) {
      throw Error("invalid generator name '" + n
                  + "' (expected a lower-case identifier)");
    }
    if (!seen.insert(n).second) {
      throw Error("duplicate generator name '" + n + "'");
    }
    if (n.size() != 1) {
      single_letters_ = false;
    }
  }
}

Alphabet Alphabet::from_letters(std::string_view letters) {
  std::vector<std::string> names;
  for (char c : letters) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      names.emplace_back(1, c);
    }
  }
  return Alphabet(std::move(names));
}

Alphabet Alphabet::standard(std::size_t n) {
  if (n == 0 || n > 26) {
    throw Error("standard alphabet needs 1..26 generators");
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.emplace_back(1, static_cast<char>('a' + i));
  }
  return Alphabet(std::move(names));
}

std::size_t Alphabet::index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

std::string Alphabet::letter_name(Letter l) const {
  std::string const& n = names_.at(l.gen());
  if (!l.is_inverse()) {
    return n;
  }
  if (single_letters_) {
    return std::string(1, static_cast<char>(std::toupper(n[0])));
  }
  return n + "^-1";
}

std::string Alphabet::format(Word const& w) const {
  Word r = reduce(w);
  if (r.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!single_letters_ && i > 0) {
      out += ' ';
    }
    out += letter_name(r[i]);
  }
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(Alphabet const& alphabet, std::string_view text)
      : alphabet_(alphabet), text_(text) {}

  Word parse() {
    skip_space();
    if (text_ == "1") {
      return {};
    }
    Word w = sequence();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return w;
  }

 private:
  Word sequence() {
    std::vector<Letter> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') {
        break;
      }
      Word item = atom();
      long e = exponent();
      Word p = e >= 0 ? item : reverse_inverse(item);
      for (long i = 0; i < std::labs(e); ++i) {
        out.insert(out.end(), p.begin(), p.end());
      }
    }
    return Word(std::move(out));
  }

  static Word reverse_inverse(Word const& w) {
    std::vector<Letter> out;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word(std::move(out));
  }

  Word atom() {
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = sequence();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        fail("missing ')'");
      }
      ++pos_;
      return inner;
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (alphabet_.single_letters()) {
      ++pos_;
      char lower = static_cast<char>(std::tolower(c));
      std::size_t g = alphabet_.index(std::string(1, lower));
      if (g == alphabet_.size()) {
        fail("letter '" + std::string(1, c) + "' is not in the alphabet");
      }
      return Word{Letter(g, c != lower)};
    }
    std::size_t start = pos_;
    while (pos_ < text_.size()
           && (std::isalnum(static_cast<unsigned char>(text_[pos_]))
               || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    std::size_t g = alphabet_.index(name);
    if (g == alphabet_.size()) {
      fail("symbol '" + std::string(name) + "' is not in the alphabet");
    }
    return Word{Letter(g)};
  }

  long exponent() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '^') {
      return 1;
    }
    ++pos_;
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_,
                                     text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == text_.data() + pos_) {
      fail("expected an integer after '^'");
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return negative ? -value : value;
  }

  void skip_space() {
    while (pos_ < text_.size()
           && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(std::string const& what) const {
    throw ParseError("cannot parse word \"" + std::string(text_)
                     + "\" at column " + std::to_string(pos_) + ": " + what);
  }

  Alphabet const& alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word Alphabet::parse(std::string_view text) const {
  return WordParser(*this, text).parse();
}

////////////////////////////////////////////////////////////////////////
// Nielsen moves
////////////////////////////////////////////////////////////////////////

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

GeneratorTuple nielsen_move(GeneratorTuple t, NielsenMove const& move) {
  if (t.size() < 2) {
    throw Error("Nielsen moves need a tuple of arity at least 2");
  }
  auto check = [&](std::size_t i) {
    if (i >= t.size()) {
      throw Error("Nielsen move index " + std::to_string(i)
                  + " out of range for arity " + std::to_string(t.size()));
    }
  };
  auto check_pair = [&](std::size_t i, std::size_t j) {
    check(i);
    check(j);
    if (i == j) {
      throw Error("Nielsen move needs two distinct indices");
    }
  };
  std::visit(overloaded{[&](nielsen::Invert m) {
                          check(m.i);
                          t[m.i] = invert(t[m.i]);
                        },
                        [&](nielsen::Swap m) {
                          check_pair(m.i, m.j);
                          std::swap(t[m.i], t[m.j]);
                        },
                        [&](nielsen::RightMultiply m) {
                          check_pair(m.i, m.j);
                          t[m.i] = multiply(t[m.i], t[m.j]);
                        }},
             move);
  return t;
}

std::vector<NielsenMove> nielsen_inverse(NielsenMove const& move) {
  return std::visit(
      overloaded{
          [](nielsen::Invert m) { return std::vector<NielsenMove>{m}; },
          [](nielsen::Swap m) { return std::vector<NielsenMove>{m}; },
          [](nielsen::RightMultiply m) {
            // gᵢgⱼ ↦ gᵢgⱼgⱼ⁻¹
            return std::vector<NielsenMove>{nielsen::Invert{m.j}, m,
                                            nielsen::Invert{m.j}};
          }},
      move);
}

}  // namespace ggt
