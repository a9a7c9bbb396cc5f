#include "goeritz/freegroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace goeritz {

namespace {

void check_letter(Letter x, int rank) {
  if (x == 0 || std::abs(x) > rank) {
    throw MalformedWord("letter " + std::to_string(x) + " outside free group of rank " +
                        std::to_string(rank));
  }
}

void push_reduced(std::vector<Letter>& out, Letter x) {
  if (!out.empty() && out.back() == -x) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

}  // namespace

FWord::FWord(int rank) : rank_(rank) {
  if (rank < 1) throw MalformedWord("free group rank must be positive");
}

FWord FWord::reduce(std::span<const Letter> letters, int rank) {
  FWord w(rank);
  w.letters_.reserve(letters.size());
  for (Letter x : letters) {
    check_letter(x, rank);
    push_reduced(w.letters_, x);
  }
  return w;
}

FWord FWord::generator(int rank, int index) { return reduce({index}, rank); }

FWord FWord::inverse() const {
  FWord w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

FWord FWord::pow(int k) const {
  FWord base = k < 0 ? inverse() : *this;
  FWord out(rank_);
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

int FWord::exponent_sum(int index) const {
  int s = 0;
  for (Letter x : letters_) {
    if (x == index) ++s;
    if (x == -index) --s;
  }
  return s;
}

FWord FWord::operator*(const FWord& rhs) const {
  if (rank_ != rhs.rank_) throw RankMismatch("word product across different ranks");
  FWord w = *this;
  for (Letter x : rhs.letters_) push_reduced(w.letters_, x);
  return w;
}

std::string FWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << 'x' << std::abs(letters_[i]);
    if (letters_[i] < 0) os << "^-1";
  }
  return os.str();
}

FWord cyclic_core(const FWord& w) {
  const auto& l = w.letters();
  std::size_t lo = 0;
  std::size_t hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  return FWord::reduce(std::span<const Letter>(l.data() + lo, hi - lo), w.rank());
}

bool conjugate(const FWord& u, const FWord& v) {
  if (u.rank() != v.rank()) throw RankMismatch("conjugacy test across different ranks");
  const auto a = cyclic_core(u).letters();
  const auto b = cyclic_core(v).letters();
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<Letter> doubled(a);
  doubled.insert(doubled.end(), a.begin(), a.end());
  return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) != doubled.end();
}

// ---------------------------------------------------------------------------

FAut::FAut(std::vector<FWord> images, std::vector<FWord> inverse_images)
    : FAut(-1, std::move(images),
           std::move(inverse_images), true) {}

FAut::FAut(int rank, std::vector<FWord> images, std::vector<FWord> inverse_images,
           bool certify)
    : rank_(rank), images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
  if (rank_ < 0) rank_ = static_cast<int>(images_.size());
  if (rank_ < 1 || images_.size() != static_cast<std::size_t>(rank_) ||
      inverse_images_.size() != images_.size()) {
    throw InvariantViolation("automorphism tables must list one image per generator");
  }
  for (const auto& w : images_)
    if (w.rank() != rank_) throw RankMismatch("image word has the wrong rank");
  for (const auto& w : inverse_images_)
    if (w.rank() != rank_) throw RankMismatch("inverse image word has the wrong rank");
  if (!certify) return;
  for (int i = 1; i <= rank_; ++i) {
    const FWord x = FWord::generator(rank_, i);
    if (substitute(inverse_images_, substitute(images_, x)) != x ||
        substitute(images_, substitute(inverse_images_, x)) != x) {
      throw InvariantViolation("inverse table does not invert the automorphism at x" +
                               std::to_string(i));
    }
  }
}

FAut FAut::identity(int rank) {
  std::vector<FWord> id;
  for (int i = 1; i <= rank; ++i) id.push_back(FWord::generator(rank, i));
  return FAut(rank, id, id, false);
}

FWord FAut::substitute(const std::vector<FWord>& table, const FWord& w) {
  const int rank = static_cast<int>(table.size());
  std::vector<Letter> out;
  for (Letter x : w.letters()) {
    const auto& img = table[std::abs(x) - 1].letters();
    if (x > 0) {
      for (Letter y : img) push_reduced(out, y);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(out, -*it);
    }
  }
  return FWord::reduce(out, rank);
}

FWord FAut::apply(const FWord& w) const {
  if (w.rank() != rank_) throw RankMismatch("automorphism and word have different ranks");
  return substitute(images_, w);
}

FAut FAut::inverse() const { return FAut(rank_, inverse_images_, images_, false); }

FAut compose(const FAut& outer, const FAut& inner) {
  if (outer.rank_ != inner.rank_) throw RankMismatch("composing automorphisms of different ranks");
  std::vector<FWord> images;
  std::vector<FWord> inverse_images;
  images.reserve(outer.rank_);
  inverse_images.reserve(outer.rank_);
  for (const auto& w : inner.images_) images.push_back(FAut::substitute(outer.images_, w));
  for (const auto& w : outer.inverse_images_)
    inverse_images.push_back(FAut::substitute(inner.inverse_images_, w));
  return FAut(outer.rank_, std::move(images), std::move(inverse_images), true);
}

}  // namespace goeritz
