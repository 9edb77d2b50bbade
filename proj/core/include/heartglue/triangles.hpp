#pragma once

#include "heartglue/derived_hom.hpp"

#include <optional>

namespace heartglue {

// 0 -> M -> E -> N -> 0 given by i: M -> E and p: E -> N.
struct Ses {
  RepMap i;
  RepMap p;
};

// Throws ModuleError unless i is mono, p is epi and im i = ker p.
void check_exact(const Ses& s);
Ses split_ses(const Rep& m, const Rep& n);

// a -> b -> c -> a[1]; `w` lies in Hom(c, a[1]).
struct Triangle {
  Cx a;
  Cx b;
  Cx c;
  CxMap u;
  CxMap v;
  DHomClass w;
};

// Class of g o q^{-1} for a quasi-isomorphism q: Z -> X and g: Z -> W, where
// `space` is Hom(X, Y[s]) with Y[s] termwise equal to W.
DHomClass class_of_roof(const CxMap& q, const CxMap& g, const DHomPtr& space);

// The triangle of the cone of f: X -> Y -> C(f) -> X[1].
Triangle cone_triangle(const CxMap& f);

Triangle ses_to_triangle(const Ses& s);
// Present iff all three vertices have cohomology only in degree 0 and the
// induced sequence of H^0 is short exact.
std::optional<Ses> triangle_to_ses(const Triangle& t);

}  // namespace heartglue
