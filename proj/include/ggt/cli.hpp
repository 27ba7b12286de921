#ifndef GGT_CLI_HPP_
#define GGT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ggt/dehn.hpp"
#include "ggt/grigorchuk.hpp"
#include "ggt/oracles.hpp"

namespace ggt::cli {

using AnyOracle = std::variant<FreeOracle, LatticeOracle, MatrixOracle,
                               PermutationOracle, grig::Oracle, DehnOracle>;

// Z, Z^k, F<k> (e.g. F2), heisenberg, sl2z:k=<int>,
// perm:<gen>=(cycles);<gen>=(cycles)…, grigorchuk, fp:<presentation file>.
// Throws ParseError for an unknown spec.
AnyOracle parse_group_spec(std::string_view spec);

// Runs one `ggt` invocation; args excludes the program name. Returns 0 on
// success, 1 on a domain error and 2 on a usage error.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace ggt::cli

#endif  // GGT_CLI_HPP_
