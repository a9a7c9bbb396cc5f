#pragma once

#include <string>
#include <vector>

#include "goeritz/freegroup.hpp"

namespace goeritz {

/// A planar surface P with p boundary components and two marked points.
///
/// The concrete picture is a round disk with p-1 holes on a horizontal line,
/// x0 to the right of the holes and x1 to the right of x0. Holes are numbered
/// c_1, c_2, ... outward from x0; c_p is the outer boundary circle.
///
/// pi_1(P - {x0, x1}) is free of rank p+1. The model carries rank p+2 with
/// generators c_1..c_p, u0, u1 and the single relation boundary_word = 1,
/// where boundary_word = c_{p-1} ... c_1 u0 u1 c_p^-1. Every braid fixes c_p
/// and boundary_word literally, so the extra generator changes nothing.
struct PlanarModel {
  int p = 1;

  explicit PlanarModel(int boundary_components);

  int rank() const { return p + 2; }
  int c(int k) const { return k; }
  int u0() const { return p + 1; }
  int u1() const { return p + 2; }

  FWord boundary_word() const;
  /// Human-readable generator name for index 1..p+2 ("c3", "u0", ...).
  std::string name(int index) const;

  bool operator==(const PlanarModel&) const = default;
};

enum class Braid2Kind { Rotor, Anchored, Freewheel };

/// Element of the two-strand braid group B_2(P): an automorphism of the free
/// group of the model plus a bit recording whether the two points were
/// exchanged.
class Braid2Elt {
 public:
  Braid2Elt(PlanarModel model, FAut aut, int swap);

  static Braid2Elt identity(const PlanarModel& model);

  /// Rotor (half turn exchanging x0 and x1), anchored push of x1 around
  /// boundary component i, or freewheeling push of the pair around it.
  /// Throws MalformedWord unless 1 <= i <= p for the indexed kinds.
  static Braid2Elt generator(const PlanarModel& model, Braid2Kind kind, int i = 0);

  const PlanarModel& model() const { return model_; }
  const FAut& aut() const { return aut_; }
  int swap() const { return swap_; }

  Braid2Elt inverse() const;
  Braid2Elt pow(int k) const;

  std::string to_string() const;

 private:
  PlanarModel model_;
  FAut aut_;
  int swap_;
};

/// Group product: x performed after y at the level of automorphisms,
/// x.aut o y.aut; the swap bits add mod 2. Throws ModelMismatch.
Braid2Elt b2_compose(const Braid2Elt& x, const Braid2Elt& y);
inline Braid2Elt operator*(const Braid2Elt& x, const Braid2Elt& y) { return b2_compose(x, y); }

/// Equality of representations: same swap bit and same image tables.
bool b2_equal(const Braid2Elt& x, const Braid2Elt& y);

/// Image in B_2(S^2) = Z/2.
inline int b2_parity(const Braid2Elt& x) { return x.swap(); }

/// Names of the invariants an element violates (empty when valid): each
/// [c_i] fixed, {[u0],[u1]} permuted according to the swap bit,
/// boundary_word fixed.
std::vector<std::string> invariant_violations(const Braid2Elt& x);

/// Exponent sum of each c_i (i = 1..p) in the image of u0 u1.
std::vector<int> winding(const Braid2Elt& x);

}  // namespace goeritz
