#include "goeritz/random.hpp"

namespace goeritz {

GoeritzWord random_goeritz_word(Rng& rng, int genus, int max_len) {
  const int len = uniform_below(rng, max_len + 1);
  GoeritzWord w(genus);
  // 4g+1 generator families: A(1..g), A'(1..g), Rho0, F(1..2g).
  const int families = 4 * genus + 1;
  for (int k = 0; k < len; ++k) {
    const int c = uniform_below(rng, families);
    const int e = uniform_below(rng, 2) ? 1 : -1;
    if (c < genus) {
      w.push_back(GoeritzGen::A(c + 1, e));
    } else if (c < 2 * genus) {
      w.push_back(GoeritzGen::APrime(c - genus + 1, e));
    } else if (c == 2 * genus) {
      w.push_back(GoeritzGen::Rho0(e));
    } else {
      w.push_back(GoeritzGen::F(c - 2 * genus, e));
    }
  }
  return w;
}

std::vector<Letter> random_surface_letters(Rng& rng, int genus, int len) {
  std::vector<Letter> out;
  for (int k = 0; k < len; ++k) {
    const Letter x = 1 + uniform_below(rng, 2 * genus);
    out.push_back(uniform_below(rng, 2) ? x : -x);
  }
  return out;
}

Schedule random_schedule(Rng& rng, int genus, int max_blocks) {
  Schedule s{genus, {}, {}};
  std::vector<CrossEvent> open;
  int remaining = uniform_below(rng, max_blocks + 1);
  while (remaining > 0 || !open.empty()) {
    const bool can_open = remaining > 0;
    if (can_open && (open.empty() || uniform_below(rng, 2))) {
      CrossEvent e{uniform_below(rng, 2), 1 + uniform_below(rng, genus), 1};
      s.events.push_back(e);
      open.push_back(e);
      --remaining;
    } else {
      // Close a random live intersection with a random end.
      const int k = uniform_below(rng, static_cast<int>(open.size()));
      s.events.push_back({uniform_below(rng, 2), open[k].disk, -1});
      open.erase(open.begin() + k);
    }
  }
  return s;
}

}  // namespace goeritz
