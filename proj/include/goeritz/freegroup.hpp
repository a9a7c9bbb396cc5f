#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "goeritz/errors.hpp"

namespace goeritz {

/// A letter is a signed generator index: +i is x_i, -i is x_i^-1 (i >= 1).
using Letter = int;

/// Freely reduced word in the free group of a fixed rank.
///
/// Words are kept reduced at all times, so equality is syntactic.
class FWord {
 public:
  FWord() = default;
  explicit FWord(int rank);

  /// Free reduction of an arbitrary letter sequence (single stack pass).
  /// Throws MalformedWord if a letter is 0 or exceeds the rank.
  static FWord reduce(std::span<const Letter> letters, int rank);
  static FWord reduce(std::initializer_list<Letter> letters, int rank) {
    return reduce(std::span<const Letter>(letters.begin(), letters.size()), rank);
  }
  static FWord generator(int rank, int index);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FWord inverse() const;
  FWord pow(int k) const;

  /// Signed number of occurrences of generator `index`.
  int exponent_sum(int index) const;

  FWord operator*(const FWord& rhs) const;
  bool operator==(const FWord& rhs) const = default;

  std::string to_string() const;

 private:
  int rank_ = 0;
  std::vector<Letter> letters_;
};

/// Cyclically reduced core of a word (conjugate of minimal length).
FWord cyclic_core(const FWord& w);

/// True iff u and v are conjugate in the free group.
bool conjugate(const FWord& u, const FWord& v);

/// Automorphism of a free group, stored as generator image tables together
/// with a certified inverse.
class FAut {
 public:
  /// Builds and certifies: applying `images` then `inverse_images` (and the
  /// other way round) must return every generator. Throws InvariantViolation
  /// otherwise.
  FAut(std::vector<FWord> images, std::vector<FWord> inverse_images);

  static FAut identity(int rank);

  int rank() const { return rank_; }
  /// Image of generator `index` (1-based).
  const FWord& image(int index) const { return images_.at(index - 1); }
  const FWord& inverse_image(int index) const { return inverse_images_.at(index - 1); }
  const std::vector<FWord>& images() const { return images_; }

  FWord apply(const FWord& w) const;
  FAut inverse() const;

  /// Equal image tables (the inverse tables then agree automatically).
  bool operator==(const FAut& rhs) const { return images_ == rhs.images_; }

 private:
  FAut(int rank, std::vector<FWord> images, std::vector<FWord> inverse_images, bool certify);
  static FWord substitute(const std::vector<FWord>& table, const FWord& w);

  int rank_ = 0;
  std::vector<FWord> images_;
  std::vector<FWord> inverse_images_;

  friend FAut compose(const FAut& outer, const FAut& inner);
};

/// outer o inner: images are outer applied to the images of inner.
FAut compose(const FAut& outer, const FAut& inner);

}  // namespace goeritz
