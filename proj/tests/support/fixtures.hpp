#pragma once

#include "mak/formula.hpp"
#include "mak/kripke.hpp"
#include "mak/lang/domain.hpp"
#include "mak/lang/ground.hpp"

#include <string>

namespace fixtures {

std::string corpus_path(const std::string& file);
std::string read_text(const std::string& path);

mak::lang::Domain coin_domain();
mak::lang::GroundDomain coin_ground();

/// The coin model built by hand: two states that agree on everything but
/// tail, total relations for a, b and c, real state with tail up.
mak::PointedStructure coin_model(const mak::SignaturePtr& sig);

/// (k(a,tail) | k(a,~tail)) & k(c, k(a,tail) | k(a,~tail)) & ~k(b,tail) & ~k(b,~tail)
mak::Formula coin_goal();

mak::Formula parse(const std::string& text);

/// Small version of the coin model: agents a b c, the single fluent tail,
/// states s1 (tail) and s2, total relations.
mak::KripkeStructure m2();
mak::PointedStructure m2_pointed();

} // namespace fixtures
