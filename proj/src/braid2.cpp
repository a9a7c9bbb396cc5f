#include "goeritz/braid2.hpp"

#include <sstream>

namespace goeritz {

PlanarModel::PlanarModel(int boundary_components) : p(boundary_components) {
  if (p < 1) throw MalformedWord("planar model needs at least one boundary component");
}

FWord PlanarModel::boundary_word() const {
  std::vector<Letter> w;
  for (int k = p - 1; k >= 1; --k) w.push_back(c(k));
  w.push_back(u0());
  w.push_back(u1());
  w.push_back(-c(p));
  return FWord::reduce(w, rank());
}

std::string PlanarModel::name(int index) const {
  if (index == u0()) return "u0";
  if (index == u1()) return "u1";
  return "c" + std::to_string(index);
}

namespace {

struct Tables {
  std::vector<FWord> fwd;
  std::vector<FWord> inv;

  explicit Tables(const PlanarModel& m) {
    for (int k = 1; k <= m.rank(); ++k) {
      fwd.push_back(FWord::generator(m.rank(), k));
      inv.push_back(fwd.back());
    }
  }
  FAut build() { return FAut(std::move(fwd), std::move(inv)); }
};

// Product c_{k} c_{k-1} ... c_1 u0.
FWord inner_path(const PlanarModel& m, int k) {
  std::vector<Letter> w;
  for (int j = k; j >= 1; --j) w.push_back(m.c(j));
  w.push_back(m.u0());
  return FWord::reduce(w, m.rank());
}

FAut rotor(const PlanarModel& m) {
  Tables t(m);
  const int r = m.rank();
  const FWord u0 = FWord::generator(r, m.u0());
  const FWord u1 = FWord::generator(r, m.u1());
  t.fwd[m.u0() - 1] = u0 * u1 * u0.inverse();
  t.fwd[m.u1() - 1] = u0;
  t.inv[m.u0() - 1] = u1;
  t.inv[m.u1() - 1] = u1.inverse() * u0 * u1;
  return t.build();
}

// x1 pushed once around hole c_i along the loop that passes below the holes
// c_1..c_{i-1} and x0.
FAut anchored_hole(const PlanarModel& m, int i) {
  Tables t(m);
  const int r = m.rank();
  const FWord ci = FWord::generator(r, m.c(i));
  const FWord u1 = FWord::generator(r, m.u1());
  const FWord M = inner_path(m, i - 1);
  const FWord L = M * u1 * M.inverse();
  const FWord Q = ci * L;
  t.fwd[m.c(i) - 1] = Q.inverse() * ci * Q;
  t.fwd[m.u1() - 1] = M.inverse() * Q.inverse() * L * Q * M;
  t.inv[m.c(i) - 1] = Q * ci * Q.inverse();
  t.inv[m.u1() - 1] = M.inverse() * Q * L * Q.inverse() * M;
  return t.build();
}

// x1 pushed once around the outer boundary, enclosing every hole and x0.
FAut anchored_outer(const PlanarModel& m) {
  Tables t(m);
  const int r = m.rank();
  const FWord u1 = FWord::generator(r, m.u1());
  const FWord Z = inner_path(m, m.p - 1);
  const FWord X = Z * u1 * Z.inverse();
  auto block = [&](int g) {
    const FWord x = FWord::generator(r, g);
    t.fwd[g - 1] = X * x * X.inverse();
    t.inv[g - 1] = u1.inverse() * x * u1;
  };
  for (int k = 1; k < m.p; ++k) block(m.c(k));
  block(m.u0());
  t.fwd[m.u1() - 1] = X;
  t.inv[m.u1() - 1] = u1.inverse() * Z.inverse() * u1 * Z * u1;
  return t.build();
}

}  // namespace

Braid2Elt::Braid2Elt(PlanarModel model, FAut aut, int swap)
    : model_(model), aut_(std::move(aut)), swap_(swap & 1) {
  if (aut_.rank() != model_.rank()) throw RankMismatch("automorphism rank does not match planar model");
}

Braid2Elt Braid2Elt::identity(const PlanarModel& model) {
  return Braid2Elt(model, FAut::identity(model.rank()), 0);
}

Braid2Elt Braid2Elt::generator(const PlanarModel& model, Braid2Kind kind, int i) {
  if (kind == Braid2Kind::Rotor) return Braid2Elt(model, rotor(model), 1);
  if (i < 1 || i > model.p) {
    throw MalformedWord("boundary index " + std::to_string(i) + " outside 1.." + std::to_string(model.p));
  }
  if (kind == Braid2Kind::Anchored) {
    return Braid2Elt(model, i < model.p ? anchored_hole(model, i) : anchored_outer(model), 0);
  }
  // Pair pushed around c_i: move x1 around, then x0 (conjugated in by the rotor).
  const Braid2Elt a = generator(model, Braid2Kind::Anchored, i);
  const Braid2Elt rho = generator(model, Braid2Kind::Rotor);
  return a * (rho.inverse() * a * rho);
}

Braid2Elt Braid2Elt::inverse() const { return Braid2Elt(model_, aut_.inverse(), swap_); }

Braid2Elt Braid2Elt::pow(int k) const {
  Braid2Elt base = k >= 0 ? *this : inverse();
  Braid2Elt out = identity(model_);
  for (int n = k >= 0 ? k : -k; n > 0; --n) out = out * base;
  return out;
}

std::string Braid2Elt::to_string() const {
  std::ostringstream os;
  os << "swap=" << swap_;
  for (int k = 1; k <= model_.rank(); ++k) {
    os << "; " << model_.name(k) << " -> " << aut_.image(k).to_string();
  }
  return os.str();
}

Braid2Elt b2_compose(const Braid2Elt& x, const Braid2Elt& y) {
  if (!(x.model() == y.model())) throw ModelMismatch("braids over different planar models");
  return Braid2Elt(x.model(), compose(x.aut(), y.aut()), x.swap() ^ y.swap());
}

bool b2_equal(const Braid2Elt& x, const Braid2Elt& y) {
  if (!(x.model() == y.model())) throw ModelMismatch("braids over different planar models");
  return x.swap() == y.swap() && x.aut() == y.aut();
}

std::vector<std::string> invariant_violations(const Braid2Elt& x) {
  const PlanarModel& m = x.model();
  const int r = m.rank();
  std::vector<std::string> bad;
  for (int k = 1; k <= m.p; ++k) {
    if (!conjugate(x.aut().image(m.c(k)), FWord::generator(r, m.c(k)))) {
      bad.push_back("class of " + m.name(k) + " not fixed");
    }
  }
  const int to0 = x.swap() ? m.u1() : m.u0();
  const int to1 = x.swap() ? m.u0() : m.u1();
  if (!conjugate(x.aut().image(m.u0()), FWord::generator(r, to0))) bad.push_back("class of u0 misplaced");
  if (!conjugate(x.aut().image(m.u1()), FWord::generator(r, to1))) bad.push_back("class of u1 misplaced");
  if (!(x.aut().apply(m.boundary_word()) == m.boundary_word())) bad.push_back("boundary word moved");
  return bad;
}

std::vector<int> winding(const Braid2Elt& x) {
  const PlanarModel& m = x.model();
  const FWord pair = FWord::reduce({m.u0(), m.u1()}, m.rank());
  const FWord img = x.aut().apply(pair);
  std::vector<int> out;
  for (int k = 1; k <= m.p; ++k) out.push_back(img.exponent_sum(m.c(k)));
  return out;
}

}  // namespace goeritz
