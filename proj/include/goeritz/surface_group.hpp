#pragma once

#include <span>
#include <string>
#include <vector>

#include "goeritz/freegroup.hpp"

namespace goeritz {

/// Letter encoding for the closed genus-g surface group: a_i is 2i-1 and
/// b_i is 2i, negated for inverses. The defining relator is
/// [a_1,b_1][a_2,b_2]...[a_g,b_g] with [a,b] = a b a^-1 b^-1.
namespace surface {
inline constexpr Letter a(int i) { return 2 * i - 1; }
inline constexpr Letter b(int i) { return 2 * i; }
inline constexpr bool is_a(Letter x) { return (x > 0 ? x : -x) % 2 == 1; }
inline constexpr int handle(Letter x) { return ((x > 0 ? x : -x) + 1) / 2; }

std::vector<Letter> relator(int genus);
}  // namespace surface

/// Element of pi_1 of the closed orientable genus-g surface in Dehn-reduced
/// form.
///
/// For g >= 2 the letters are freely reduced and contain no subword longer
/// than half of a cyclic permutation of the relator or its inverse; the word
/// is the identity iff it is empty. For g = 1 the group is Z^2 and the word is
/// kept as a^m b^n.
class SurfaceWord {
 public:
  SurfaceWord() = default;
  explicit SurfaceWord(int genus);

  /// Throws MalformedWord on letters outside the genus-g alphabet.
  static SurfaceWord normalize(std::span<const Letter> letters, int genus);
  static SurfaceWord normalize(std::initializer_list<Letter> letters, int genus) {
    return normalize(std::span<const Letter>(letters.begin(), letters.size()), genus);
  }

  int genus() const { return genus_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  /// Image in Z^{2g}: entry 2i-2 counts a_i, entry 2i-1 counts b_i.
  std::vector<long> abelianization() const;

  SurfaceWord inverse() const;
  SurfaceWord operator*(const SurfaceWord& rhs) const;

  /// Representation equality (identical reduced letters). Use
  /// `surface_equal` for group equality.
  bool operator==(const SurfaceWord& rhs) const = default;

  std::string to_string() const;

 private:
  int genus_ = 0;
  std::vector<Letter> letters_;
};

/// Group equality: u v^-1 normalizes to the identity.
bool surface_equal(const SurfaceWord& u, const SurfaceWord& v);

namespace detail {
/// In-place Dehn reduction of a letter buffer, g >= 2. Exposed for bulk
/// enumeration where allocation per word matters.
void dehn_reduce(std::vector<Letter>& w, int genus);
}  // namespace detail

}  // namespace goeritz
