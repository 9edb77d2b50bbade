#pragma once

#include "heartglue/derived_hom.hpp"
#include "heartglue/triangles.hpp"

#include <vector>

namespace heartglue {

// Exact sequence 0 -> B -> X_1 -> ... -> X_n -> A -> 0 with maps
// xi[0]: B -> X_1, xi[k]: X_k -> X_{k+1}, xi[n]: X_n -> A.
struct YExt {
  int n = 0;
  Rep left;   // B
  Rep right;  // A
  std::vector<Rep> mid;
  std::vector<RepMap> xi;
};

YExt make_yext(std::vector<RepMap> xi);
// Throws ModuleError on the first spot where the sequence is not exact.
void validate(const YExt& x);

YExt yext_from_ses(const Ses& s);
Ses ses_of(const YExt& x);  // n = 1 only
YExt split_yext(const Rep& a, const Rep& b, int n);

YExt pushout_action(const RepMap& g, const YExt& x);   // g: B -> C
YExt pullback_action(const YExt& x, const RepMap& h);  // h: D -> A
// x in Ext^n(A, B), y in Ext^m(B, C): the spliced sequence in Ext^{n+m}(A, C).
YExt yoneda_product(const YExt& x, const YExt& y);
YExt baer_sum(const YExt& x, const YExt& y);
YExt scalar_multiple(const YExt& x, const Rat& c);

// Comparison map to Hom(A, B[n]): lift the resolution of A along the
// sequence; the last component is a cocycle P^{-n} -> B, taken with the sign
// (-1)^{n(n-1)/2} so that products go to composites.
DHomClass f_map(const YExt& x);
DHomClass f_map(const YExt& x, const DHomPtr& space);
// Sequence with f_map = c, for c in Hom(A, B[n]) with A, B modules.
YExt splice_from_class(const DHomClass& c);

struct YClass {
  YExt witness;
  DHomClass canonical;
};
YClass make_yclass(const YExt& x);
bool same_class(const YClass& a, const YClass& b);

// Whether c: A -> B[n] lies in the span of composites A -> G[1] -> B[n] over
// the given generators.
bool factors_through(const DHomClass& c, const std::vector<Cx>& gens);
// Dimension of that span.
std::size_t factor_span_dim(const DHomPtr& space, const std::vector<Cx>& gens);

}  // namespace heartglue
