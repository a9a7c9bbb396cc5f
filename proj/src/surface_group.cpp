#include "goeritz/surface_group.hpp"

#include <array>
#include <cstdlib>
#include <sstream>

namespace goeritz {

std::vector<Letter> surface::relator(int genus) {
  std::vector<Letter> r;
  for (int i = 1; i <= genus; ++i) {
    r.insert(r.end(), {a(i), b(i), -a(i), -b(i)});
  }
  return r;
}

namespace {

void check_alphabet(std::span<const Letter> letters, int genus) {
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const Letter x = letters[k];
    if (x == 0 || std::abs(x) > 2 * genus) {
      throw MalformedWord("letter " + std::to_string(x) + " outside genus-" +
                          std::to_string(genus) + " surface alphabet",
                          k);
    }
  }
}

void free_reduce(std::vector<Letter>& w) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (top > 0 && w[top - 1] == -w[i]) {
      --top;
    } else {
      w[top++] = w[i];
    }
  }
  w.resize(top);
}

// Cyclic relator R and its inverse, with the position of every letter in
// each. Every letter occurs exactly once in R and once in R^-1.
struct RelatorTable {
  int genus = 0;
  int len = 0;
  std::array<std::vector<Letter>, 2> cyc;
  std::array<std::vector<int>, 2> pos;  // pos[s][x + 2g]

  explicit RelatorTable(int g) : genus(g), len(4 * g) {
    cyc[0] = surface::relator(g);
    cyc[1].assign(cyc[0].rbegin(), cyc[0].rend());
    for (auto& x : cyc[1]) x = -x;
    for (int s = 0; s < 2; ++s) {
      pos[s].assign(4 * g + 1, -1);
      for (int j = 0; j < len; ++j) pos[s][cyc[s][j] + 2 * g] = j;
    }
  }
};

const RelatorTable& table_for(int genus) {
  // Genus is small in practice; tables are built once per genus.
  static thread_local std::vector<RelatorTable> cache;
  for (const auto& t : cache)
    if (t.genus == genus) return t;
  cache.emplace_back(genus);
  return cache.back();
}

// One Dehn step: find a subword longer than half a cyclic relator and replace
// it by the inverse of the complementary piece. Returns false if none exists.
bool dehn_step(std::vector<Letter>& w, const RelatorTable& t) {
  const int half = t.len / 2;
  const int n = static_cast<int>(w.size());
  for (int i = 0; i + half < n; ++i) {
    for (int s = 0; s < 2; ++s) {
      const auto& c = t.cyc[s];
      const int start = t.pos[s][w[i] + 2 * t.genus];
      int m = 1;
      while (m < t.len && i + m < n && w[i + m] == c[(start + m) % t.len]) ++m;
      if (m <= half) continue;
      // w[i..i+m) equals c[start..start+m); replace with the inverse of the
      // remaining t.len - m letters of the cyclic relator.
      std::vector<Letter> repl;
      repl.reserve(t.len - m);
      for (int k = t.len - 1; k >= m; --k) repl.push_back(-c[(start + k) % t.len]);
      w.erase(w.begin() + i, w.begin() + i + m);
      w.insert(w.begin() + i, repl.begin(), repl.end());
      return true;
    }
  }
  return false;
}

}  // namespace

void detail::dehn_reduce(std::vector<Letter>& w, int genus) {
  const RelatorTable& t = table_for(genus);
  free_reduce(w);
  while (dehn_step(w, t)) free_reduce(w);
}

SurfaceWord::SurfaceWord(int genus) : genus_(genus) {
  if (genus < 1) throw MalformedWord("surface genus must be at least 1");
}

SurfaceWord SurfaceWord::normalize(std::span<const Letter> letters, int genus) {
  SurfaceWord w(genus);
  check_alphabet(letters, genus);
  if (genus == 1) {
    long m = 0;
    long n = 0;
    for (Letter x : letters) (surface::is_a(x) ? m : n) += x > 0 ? 1 : -1;
    w.letters_.assign(std::abs(m), m > 0 ? 1 : -1);
    w.letters_.insert(w.letters_.end(), std::abs(n), n > 0 ? 2 : -2);
    return w;
  }
  w.letters_.assign(letters.begin(), letters.end());
  detail::dehn_reduce(w.letters_, genus);
  return w;
}

std::vector<long> SurfaceWord::abelianization() const {
  std::vector<long> v(2 * genus_, 0);
  for (Letter x : letters_) v[std::abs(x) - 1] += x > 0 ? 1 : -1;
  return v;
}

SurfaceWord SurfaceWord::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(-*it);
  return normalize(inv, genus_);
}

SurfaceWord SurfaceWord::operator*(const SurfaceWord& rhs) const {
  if (genus_ != rhs.genus_) throw ModelMismatch("surface words of different genus");
  std::vector<Letter> cat = letters_;
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return normalize(cat, genus_);
}

std::string SurfaceWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << (surface::is_a(letters_[i]) ? 'a' : 'b') << surface::handle(letters_[i]);
    if (letters_[i] < 0) os << "^-1";
  }
  return os.str();
}

bool surface_equal(const SurfaceWord& u, const SurfaceWord& v) {
  if (u.genus() != v.genus()) throw ModelMismatch("surface words of different genus");
  return (u * v.inverse()).is_identity();
}

}  // namespace goeritz
