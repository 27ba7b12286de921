#ifndef GGT_PRESENTATION_HPP_
#define GGT_PRESENTATION_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ggt/word.hpp"

namespace ggt {

// ⟨S | R⟩
struct Presentation {
  Alphabet generators;
  std::vector<Word> relators;

  std::size_t rank() const noexcept { return generators.size(); }

  // Text format:
  //   gens: a b c
  //   rel: <word>
  //   rel: <word>
  // Blank lines and lines starting with '#' are ignored.
  static Presentation parse(std::string_view text);
  static Presentation load(std::string const& path);

  std::string to_string() const;
};

// True iff the two presentations agree after renaming generators, treating
// each relator as a cyclic word up to inversion and the relator list as a
// set. Brute force over bijections; intended for presentations with at most
// eight generators.
bool same_up_to_renaming(Presentation const& p, Presentation const& q);

}  // namespace ggt

#endif  // GGT_PRESENTATION_HPP_
