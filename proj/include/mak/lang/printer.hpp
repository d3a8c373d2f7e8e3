#pragma once

#include "mak/lang/domain.hpp"

#include <string>

namespace mak::lang {

/// Canonical `.mad` text: declarations (fluents listed individually), system,
/// inits, universe statements, then laws in source order. Comments are not
/// kept. print(parse(print(d))) == print(d).
[[nodiscard]] std::string print_domain(const Domain& d);

[[nodiscard]] std::string print_law(const ActionLaw& law);

} // namespace mak::lang
