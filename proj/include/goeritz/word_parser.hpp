#pragma once

#include <string_view>

#include "goeritz/goeritz.hpp"

namespace goeritz {

/// Parses whitespace-separated generator tokens: `a3` is A(3), `a3'` is
/// A'(3), `r` is Rho0, `f2` is F(2); a `^-1` suffix inverts (`^1` is also
/// accepted). Errors are MalformedWord with the byte offset of the token.
GoeritzWord parse_goeritz_word(std::string_view text, int genus);

/// Parses a target arc class: surface letters `a1`, `b2` (with `^-1`) give
/// the word, and each `r` token flips the parity. `1` alone is the identity.
ArcClass parse_target(std::string_view text, int genus);

}  // namespace goeritz
