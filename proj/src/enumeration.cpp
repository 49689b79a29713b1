#include "plogroup/enumeration.hpp"

namespace plogroup {

void for_each_ball_word(const std::vector<PLMap>& gens, int max_length,
                        const std::function<void(const Word&, const PLMap&)>& visit) {
  int rank = static_cast<int>(gens.size());
  if (rank == 0) throw argument_error("need at least one generator");
  std::vector<Letter> letters;
  std::vector<PLMap> stack{PLMap::identity()};
  std::vector<PLMap> inverses;
  inverses.reserve(gens.size());
  for (const auto& g : gens) inverses.push_back(invert(g));

  auto dfs = [&](auto&& self) -> void {
    visit(Word(rank, letters), stack.back());
    if (static_cast<int>(letters.size()) == max_length) return;
    for (int idx = 1; idx <= rank; ++idx) {
      for (int exp : {1, -1}) {
        if (!letters.empty() && letters.back().index == idx && letters.back().exp == -exp) {
          continue;  // freely reduced words only
        }
        letters.push_back({idx, exp});
        stack.push_back(compose(stack.back(), exp > 0 ? gens[static_cast<std::size_t>(idx - 1)]
                                                      : inverses[static_cast<std::size_t>(idx - 1)]));
        self(self);
        stack.pop_back();
        letters.pop_back();
      }
    }
  };
  dfs(dfs);
}

std::set<OpenInterval> ball_orbitals(const std::vector<PLMap>& gens, int max_length) {
  std::set<OpenInterval> out;
  for_each_ball_word(gens, max_length, [&](const Word&, const PLMap& m) {
    for (const auto& orb : orbitals(m)) out.insert(orb);
  });
  return out;
}

}  // namespace plogroup
