#include "torcay/lattice.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace torcay {

namespace {

Int floor_mod(Int v, Int m) {
  Int r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Mat2 hermite_normal_form(const Mat2& basis) {
  if (det(basis) == 0) {
    throw std::invalid_argument("hermite_normal_form: singular basis");
  }
  // Column operations only, so the generated lattice never changes.
  Int a = basis(0, 0), c = basis(0, 1);  // top row
  Int p = basis(1, 0), q = basis(1, 1);  // bottom row
  while (c != 0) {
    const Int k = a / c;
    a -= k * c;
    p -= k * q;
    std::swap(a, c);
    std::swap(p, q);
  }
  if (a < 0) {
    a = -a;
    p = -p;
  }
  if (q < 0) q = -q;
  p = floor_mod(p, q);
  Mat2 h;
  h << a, 0, p, q;
  return h;
}

Lattice::Lattice(const Mat2& basis)
    : basis_(basis), hnf_(hermite_normal_form(basis)), index_(hnf_(0, 0) * hnf_(1, 1)) {}

Lattice Lattice::from_columns(const Vec2& c1, const Vec2& c2) {
  Mat2 b;
  b << c1(0), c2(0), c1(1), c2(1);
  return Lattice(b);
}

bool Lattice::contains(const Vec2& w) const {
  if (w(0) % hnf_(0, 0) != 0) return false;
  const Int k = w(0) / hnf_(0, 0);
  return (w(1) - k * hnf_(1, 0)) % hnf_(1, 1) == 0;
}

Vec2 Lattice::reduce(const Vec2& w) const {
  const Int x = floor_mod(w(0), hnf_(0, 0));
  const Int k = (w(0) - x) / hnf_(0, 0);
  const Int y = floor_mod(w(1) - k * hnf_(1, 0), hnf_(1, 1));
  return {x, y};
}

Int Lattice::rep_index(const Vec2& reduced) const {
  return reduced(0) * hnf_(1, 1) + reduced(1);
}

std::vector<Vec2> Lattice::coset_reps() const {
  std::vector<Vec2> reps;
  reps.reserve(static_cast<std::size_t>(index_));
  for (Int x = 0; x < hnf_(0, 0); ++x) {
    for (Int y = 0; y < hnf_(1, 1); ++y) {
      reps.emplace_back(x, y);
    }
  }
  return reps;
}

std::vector<Character> characters(const Lattice& lattice) {
  const Mat2& b = lattice.basis();
  const Int d = det(b);
  // Angle pairs trivial on N are B^-T k mod 1; distinct ones are indexed by
  // Z^2 modulo the lattice spanned by the columns of B^T.
  const Lattice transposed(Mat2(b.transpose()));
  std::vector<Character> chars;
  chars.reserve(static_cast<std::size_t>(lattice.index()));
  for (const Vec2& k : transposed.coset_reps()) {
    chars.push_back({Rational(b(1, 1) * k(0) - b(1, 0) * k(1), d),
                     Rational(-b(0, 1) * k(0) + b(0, 0) * k(1), d)});
  }
  return chars;
}

}  // namespace torcay
