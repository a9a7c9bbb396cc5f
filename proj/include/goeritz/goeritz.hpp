#pragma once

#include <string>
#include <utility>
#include <vector>

#include "goeritz/surface_group.hpp"

namespace goeritz {

/// Signed crossing of a loop on the boundary surface with meridian disk E_disk.
struct Crossing {
  int disk = 0;
  int sign = 1;
  bool operator==(const Crossing&) const = default;
};

/// The standard genus-g handlebody with meridian disks E_1..E_g and the
/// parallelism disk E_0 of the trivial arc, together with the loop tables
/// that drive the arc calculus.
///
/// In the surface group a_i is the meridian (boundary of E_i) and b_i the
/// longitude crossing E_i once. Anchored loops: gamma_i = a_i and
/// gamma'_i = b_i a_i^-1 b_i^-1; the product gamma_1 gamma'_1 ... gamma_g
/// gamma'_g is the surface relator. Freewheeling loops: c_{2i-1} = a_i and
/// c_{2i} = b_i.
class HandlebodyModel {
 public:
  explicit HandlebodyModel(int genus);

  int genus() const { return genus_; }
  const SurfaceWord& gamma(int i) const { return gamma_.at(i - 1); }
  const SurfaceWord& gamma_prime(int i) const { return gamma_prime_.at(i - 1); }
  /// Boundary loop of the freewheeling generator F(j), j in 1..2g.
  const SurfaceWord& loop(int j) const { return loop_.at(j - 1); }
  /// Meridian crossings of loop(j), in order along the loop.
  const std::vector<Crossing>& crossings(int j) const { return crossings_.at(j - 1); }

  bool operator==(const HandlebodyModel& rhs) const { return genus_ == rhs.genus_; }

 private:
  int genus_;
  std::vector<SurfaceWord> gamma_;
  std::vector<SurfaceWord> gamma_prime_;
  std::vector<SurfaceWord> loop_;
  std::vector<std::vector<Crossing>> crossings_;
};

enum class GenKind { A, APrime, Rho0, F };

/// One generator letter with exponent +1 or -1. `index` is unused for Rho0.
struct GoeritzGen {
  GenKind kind = GenKind::Rho0;
  int index = 0;
  int exp = 1;

  static GoeritzGen A(int i, int e = 1) { return {GenKind::A, i, e}; }
  static GoeritzGen APrime(int i, int e = 1) { return {GenKind::APrime, i, e}; }
  static GoeritzGen Rho0(int e = 1) { return {GenKind::Rho0, 0, e}; }
  static GoeritzGen F(int j, int e = 1) { return {GenKind::F, j, e}; }

  GoeritzGen inverse() const { return {kind, index, -exp}; }
  bool operator==(const GoeritzGen&) const = default;
  /// Same token syntax as the word parser: a2, a2', r, f3, with ^-1.
  std::string to_string() const;
};

/// Formal word over the 4g+1 generators. The first letter is performed first.
class GoeritzWord {
 public:
  GoeritzWord() : GoeritzWord(1) {}
  explicit GoeritzWord(int genus, std::vector<GoeritzGen> gens = {});

  int genus() const { return genus_; }
  const std::vector<GoeritzGen>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

  void push_back(GoeritzGen g);
  GoeritzWord inverse() const;
  /// Cancels adjacent inverse pairs; the terminal arc is unchanged.
  GoeritzWord reduced() const;
  GoeritzWord operator*(const GoeritzWord& rhs) const;
  bool operator==(const GoeritzWord&) const = default;

  std::string to_string() const;

 private:
  int genus_;
  std::vector<GoeritzGen> gens_;
};

/// Terminal arc of an isotopy relative to the reference arc alpha_0: the
/// arc is oriented from the position of x0 to the position of x1 and read as
/// a surface word; parity records whether the two ends of I were exchanged.
struct ArcClass {
  SurfaceWord w;
  int parity = 0;

  static ArcClass identity(int genus) { return {SurfaceWord(genus), 0}; }
  std::string to_string() const;
};

/// Group equality of the surface words and equal parity.
bool arc_equal(const ArcClass& x, const ArcClass& y);

/// Action of a single generator on an arc class:
///   A(i)^e   w -> w gamma_i^e
///   A'(i)^e  w -> w gamma'_i^e
///   Rho0^e   w -> w^-1, parity flipped
///   F(j)^e   w -> c_j^-e w c_j^e
ArcClass g_act(const HandlebodyModel& model, const GoeritzGen& gen, const ArcClass& arc);

/// The same generator performed with the roles of the two ends exchanged,
/// i.e. Rho0^-1 o gen o Rho0 on arcs. Anchored letters then multiply on the
/// left by the inverse loop; Rho0 and F(j) act as before.
ArcClass g_act_end_swapped(const HandlebodyModel& model, const GoeritzGen& gen,
                           const ArcClass& arc);

/// Left fold of g_act from the identity arc: tau(u v) = act_v(tau(u)).
ArcClass g_tau(const GoeritzWord& word);

/// True iff the terminal arc is alpha_0 as an unoriented arc (either parity).
bool g_is_freewheeling(const GoeritzWord& word);

/// True iff the surface word bounds a disk in the handlebody together with
/// alpha_0, i.e. lies in the normal closure of the meridians a_1..a_g.
bool is_realizable(const SurfaceWord& w);

/// A word whose terminal arc is `target`: a leading Rho0 when the parity is
/// odd, then A(i)^e for each a_i^e and F(2i)^e for each b_i^e of target.w,
/// with F(2i) A(i)^-+1 F(2i)^-1 contracted to A'(i)^+-1. Throws
/// NotRealizable when target.w is not realizable.
GoeritzWord g_factor(const ArcClass& target);

struct Decomposition {
  GoeritzWord anchored_part;
  GoeritzWord residual;
};

/// Splits word = residual * anchored_part where anchored_part = g_factor of
/// the terminal arc and residual fixes alpha_0. Freewheeling input returns
/// an empty anchored part.
Decomposition g_decompose(const GoeritzWord& word);

/// Sum of the Rho0 exponents.
int rotor_exponent(const GoeritzWord& word);

}  // namespace goeritz
