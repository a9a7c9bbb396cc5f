#include "goeritz/goeritz.hpp"

#include <sstream>

namespace goeritz {

using surface::a;
using surface::b;

HandlebodyModel::HandlebodyModel(int genus) : genus_(genus) {
  if (genus < 1) throw MalformedWord("handlebody genus must be at least 1");
  for (int i = 1; i <= genus; ++i) {
    gamma_.push_back(SurfaceWord::normalize({a(i)}, genus));
    gamma_prime_.push_back(SurfaceWord::normalize({b(i), -a(i), -b(i)}, genus));
  }
  for (int i = 1; i <= genus; ++i) {
    loop_.push_back(SurfaceWord::normalize({a(i)}, genus));
    loop_.push_back(SurfaceWord::normalize({b(i)}, genus));
  }
  // A loop meets E_i once for every b_i-letter it contains.
  for (const auto& c : loop_) {
    std::vector<Crossing> cs;
    for (Letter x : c.letters())
      if (!surface::is_a(x)) cs.push_back({surface::handle(x), x > 0 ? 1 : -1});
    crossings_.push_back(cs);
  }
}

std::string GoeritzGen::to_string() const {
  std::string s;
  switch (kind) {
    case GenKind::A: s = "a" + std::to_string(index); break;
    case GenKind::APrime: s = "a" + std::to_string(index) + "'"; break;
    case GenKind::Rho0: s = "r"; break;
    case GenKind::F: s = "f" + std::to_string(index); break;
  }
  return exp < 0 ? s + "^-1" : s;
}

namespace {

void check_gen(int genus, const GoeritzGen& g) {
  const int limit = g.kind == GenKind::F ? 2 * genus : genus;
  if (g.kind != GenKind::Rho0 && (g.index < 1 || g.index > limit)) {
    throw MalformedWord("generator " + g.to_string() + " out of range for genus " +
                        std::to_string(genus));
  }
  if (g.exp != 1 && g.exp != -1) throw MalformedWord("generator exponent must be +1 or -1");
}

SurfaceWord power(const SurfaceWord& w, int e) { return e > 0 ? w : w.inverse(); }

}  // namespace

GoeritzWord::GoeritzWord(int genus, std::vector<GoeritzGen> gens)
    : genus_(genus), gens_(std::move(gens)) {
  if (genus < 1) throw MalformedWord("handlebody genus must be at least 1");
  for (const auto& g : gens_) check_gen(genus_, g);
}

void GoeritzWord::push_back(GoeritzGen g) {
  check_gen(genus_, g);
  gens_.push_back(g);
}

GoeritzWord GoeritzWord::inverse() const {
  std::vector<GoeritzGen> inv;
  inv.reserve(gens_.size());
  for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) inv.push_back(it->inverse());
  return GoeritzWord(genus_, std::move(inv));
}

GoeritzWord GoeritzWord::reduced() const {
  std::vector<GoeritzGen> out;
  for (const auto& g : gens_) {
    if (!out.empty() && out.back() == g.inverse()) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return GoeritzWord(genus_, std::move(out));
}

GoeritzWord GoeritzWord::operator*(const GoeritzWord& rhs) const {
  if (genus_ != rhs.genus_) throw ModelMismatch("Goeritz words of different genus");
  std::vector<GoeritzGen> cat = gens_;
  cat.insert(cat.end(), rhs.gens_.begin(), rhs.gens_.end());
  return GoeritzWord(genus_, std::move(cat));
}

std::string GoeritzWord::to_string() const {
  std::string s;
  for (const auto& g : gens_) {
    if (!s.empty()) s += ' ';
    s += g.to_string();
  }
  return s;
}

std::string ArcClass::to_string() const {
  return "(" + w.to_string() + ", " + std::to_string(parity) + ")";
}

bool arc_equal(const ArcClass& x, const ArcClass& y) {
  return x.parity == y.parity && surface_equal(x.w, y.w);
}

ArcClass g_act(const HandlebodyModel& model, const GoeritzGen& gen, const ArcClass& arc) {
  if (arc.w.genus() != model.genus()) throw ModelMismatch("arc class and model differ in genus");
  check_gen(model.genus(), gen);
  switch (gen.kind) {
    case GenKind::A:
      return {arc.w * power(model.gamma(gen.index), gen.exp), arc.parity};
    case GenKind::APrime:
      return {arc.w * power(model.gamma_prime(gen.index), gen.exp), arc.parity};
    case GenKind::Rho0:
      return {arc.w.inverse(), arc.parity ^ 1};
    case GenKind::F: {
      const SurfaceWord c = power(model.loop(gen.index), gen.exp);
      return {c.inverse() * arc.w * c, arc.parity};
    }
  }
  throw InvariantViolation("unknown generator kind");
}

ArcClass g_act_end_swapped(const HandlebodyModel& model, const GoeritzGen& gen,
                           const ArcClass& arc) {
  switch (gen.kind) {
    case GenKind::A:
      return {power(model.gamma(gen.index), -gen.exp) * arc.w, arc.parity};
    case GenKind::APrime:
      return {power(model.gamma_prime(gen.index), -gen.exp) * arc.w, arc.parity};
    default:
      return g_act(model, gen, arc);
  }
}

ArcClass g_tau(const GoeritzWord& word) {
  const HandlebodyModel model(word.genus());
  ArcClass arc = ArcClass::identity(word.genus());
  for (const auto& g : word.gens()) arc = g_act(model, g, arc);
  return arc;
}

bool g_is_freewheeling(const GoeritzWord& word) { return g_tau(word).w.is_identity(); }

bool is_realizable(const SurfaceWord& w) {
  // Killing the meridians leaves the free group on b_1..b_g.
  std::vector<Letter> proj;
  for (Letter x : w.letters()) {
    if (surface::is_a(x)) continue;
    if (!proj.empty() && proj.back() == -x) {
      proj.pop_back();
    } else {
      proj.push_back(x);
    }
  }
  return proj.empty();
}

GoeritzWord g_factor(const ArcClass& target) {
  const int g = target.w.genus();
  if (!is_realizable(target.w)) {
    throw NotRealizable("arc " + target.w.to_string() +
                        " is not null-homotopic in the handlebody");
  }
  std::vector<GoeritzGen> out;
  if (target.parity) out.push_back(GoeritzGen::Rho0());
  for (Letter x : target.w.letters()) {
    const int i = surface::handle(x);
    const int e = x > 0 ? 1 : -1;
    out.push_back(surface::is_a(x) ? GoeritzGen::A(i, e) : GoeritzGen::F(2 * i, e));
    // F(2i) A(i)^e F(2i)^-1 acts as w -> w b_i a_i^e b_i^-1 = w gamma'_i^-e.
    const std::size_t n = out.size();
    if (n >= 3 && out[n - 1] == GoeritzGen::F(2 * i, -1) && out[n - 3] == GoeritzGen::F(2 * i, 1) &&
        out[n - 2].kind == GenKind::A && out[n - 2].index == i) {
      const int ea = out[n - 2].exp;
      out.resize(n - 3);
      out.push_back(GoeritzGen::APrime(i, -ea));
    }
  }
  return GoeritzWord(g, std::move(out));
}

Decomposition g_decompose(const GoeritzWord& word) {
  const ArcClass t = g_tau(word);
  if (t.w.is_identity()) return {GoeritzWord(word.genus()), word};
  GoeritzWord anchored = g_factor(t);
  return {anchored, word * anchored.inverse()};
}

int rotor_exponent(const GoeritzWord& word) {
  int e = 0;
  for (const auto& g : word.gens())
    if (g.kind == GenKind::Rho0) e += g.exp;
  return e;
}

}  // namespace goeritz
