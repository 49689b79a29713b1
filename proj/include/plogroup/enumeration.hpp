#pragma once

#include <functional>
#include <set>
#include <vector>

#include "plogroup/plmap.hpp"
#include "plogroup/word.hpp"

namespace plogroup {

/// Visits every freely reduced word of length <= max_length over the
/// generators (inverses included), depth-first, with the exact evaluated map
/// maintained incrementally. The identity (empty word) is visited first.
void for_each_ball_word(const std::vector<PLMap>& gens, int max_length,
                        const std::function<void(const Word&, const PLMap&)>& visit);

/// Distinct orbitals of all words of length <= max_length.
std::set<OpenInterval> ball_orbitals(const std::vector<PLMap>& gens, int max_length);

}  // namespace plogroup
