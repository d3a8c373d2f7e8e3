#pragma once

#include "mak/lang/domain.hpp"
#include "mak/lang/ground.hpp"

#include <string_view>
#include <vector>

namespace mak::lang {

/// Parses a `.mad` text. Syntax errors raise ParseError; references to
/// undeclared agents or fluents raise DeclarationError; other semantic
/// problems (duplicate system, malformed announcement, stray variables) raise
/// ParseError at the offending statement.
[[nodiscard]] Domain parse_domain(std::string_view text);

/// A single formula over the given signature's vocabulary (no declaration
/// check is made here; see check_declared).
[[nodiscard]] Formula parse_formula(std::string_view text);

struct Query {
    Formula goal;
    std::vector<const ActionInstance*> actions;
};

/// `goal after [a1; a2; ...]` (`,` also separates actions). A bare formula is
/// read as `goal after []`. Throws ParseError for syntax errors and for
/// actions that the domain does not define.
[[nodiscard]] Query parse_query(std::string_view text, const GroundDomain& d);

} // namespace mak::lang
