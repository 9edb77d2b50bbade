#pragma once

#include "heartglue/complex.hpp"

#include <map>
#include <memory>
#include <vector>

namespace heartglue {

// Hom^n(P, Y) for a projective complex P: one coordinate block per degree k,
// holding the generator coordinates of a map P^k -> Y^{k+n}.
struct HomLayout {
  Cx p;
  Cx y;
  int n = 0;
  std::map<int, std::size_t> offset;  // degree k -> first coordinate
  std::size_t dim = 0;

  std::size_t block_dim(int k) const;
};

HomLayout hom_layout(const Cx& p, const Cx& y, int n);
// D f = d_Y f - (-1)^n f d_P, as a matrix Hom^n -> Hom^{n+1}.
Matrix hom_differential(const HomLayout& from, const HomLayout& to);
// Coordinates of a family f^k: P^k -> Y^{k+n} and back.
Matrix family_coords(const HomLayout& l, const std::map<int, RepMap>& f);
std::map<int, RepMap> family_from_coords(const HomLayout& l, const Matrix& c);

// Hom_{D^b}(X, Y[n]) computed as H^n of Hom(P_X, Y).
class DHomSpace {
 public:
  DHomSpace(const Cx& x, const Cx& y, int n);

  const Cx& source() const { return x_; }
  const Cx& target() const { return y_; }
  int degree() const { return n_; }
  std::size_t dim() const { return reps_.cols(); }
  const Resolution& resolution() const { return res_; }
  const HomLayout& layout() const { return layout_; }

  // Columns: cocycles representing the basis classes.
  const Matrix& representatives() const { return reps_; }
  Matrix representative(const Matrix& coords) const;
  // Throws ModuleError when the input is not a cocycle.
  Matrix coordinates(const Matrix& cocycle) const;
  bool is_cocycle(const Matrix& cocycle) const;
  // Cocycle as a chain map P_X[-n] -> Y given by degree components.
  std::map<int, RepMap> family(const Matrix& coords) const;

 private:
  Cx x_;
  Cx y_;
  int n_;
  Resolution res_;
  HomLayout layout_;
  Matrix d_out_;
  Matrix reps_;
  Matrix decomp_inv_;  // left inverse of [reps | independent boundaries]
};

using DHomPtr = std::shared_ptr<const DHomSpace>;

DHomPtr derived_hom(const Cx& x, const Cx& y, int n);
std::size_t ext_dim(const Rep& m, const Rep& n, int degree);
// dim Hom(x, y[n]); zero without building the space when the degrees cannot meet.
std::size_t hom_dim(const Cx& x, const Cx& y, int n);

struct DHomClass {
  DHomPtr space;
  Matrix coords;

  bool is_zero() const { return coords.is_zero(); }
};

DHomClass basis_class(const DHomPtr& space, std::size_t i);
DHomClass class_add(const DHomClass& a, const DHomClass& b);
DHomClass class_scale(const DHomClass& a, const Rat& c);
DHomClass identity_class(const Cx& x);
DHomClass class_of_chain_map(const CxMap& f, const DHomPtr& space);
DHomClass class_of_chain_map(const CxMap& f);

// b o a for a in Hom(X, Y[n]) and b in Hom(Y, Z[m]), landing in Hom(X, Z[n+m]).
DHomClass compose(const DHomClass& b, const DHomClass& a);
DHomClass compose(const DHomClass& b, const DHomClass& a, const DHomPtr& target);

// Matrix of a -> b o a (or a -> a o c) between the given spaces.
Matrix postcompose_matrix(const DHomClass& b, const DHomPtr& from, const DHomPtr& to);
Matrix precompose_matrix(const DHomClass& c, const DHomPtr& from, const DHomPtr& to);

// A chain map P_X -> Y[n] lifted to P_X -> P_Y[n] (a cocycle of Hom(P_X, P_Y)).
std::map<int, RepMap> lift_to_resolution(const DHomClass& a);
// Same lift through any quasi-isomorphism q.quasi: q.proj -> Y; q.proj need
// not be projective.
std::map<int, RepMap> lift_class(const DHomClass& a, const Resolution& q);

}  // namespace heartglue
