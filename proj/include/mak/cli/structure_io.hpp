#pragma once

// `.mks` structure files, one record per line:
//
//   agents a b c
//   fluents has_key(a) tail
//   state s1 has_key(a) tail      (name, then the fluents true there)
//   arc s1 a s2
//   real s1
//
// `%` starts a comment. `real` is optional for plain structures.

#include "mak/kripke.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace mak::cli {

struct StructureDocument {
    KripkeStructure structure;
    std::optional<std::size_t> real;

    [[nodiscard]] PointedStructure pointed() const;
};

/// Throws ParseError with the offending line.
[[nodiscard]] StructureDocument read_structure(std::string_view text);

[[nodiscard]] std::string write_structure(const KripkeStructure& m, std::optional<std::size_t> real = std::nullopt);
[[nodiscard]] std::string write_structure(const PointedStructure& p);

} // namespace mak::cli
