#pragma once

#include "heartglue/modules.hpp"

#include <vector>

namespace heartglue {

// P = P_{tops[0]} + P_{tops[1]} + ... realized as a representation whose
// G_v-basis lists, summand by summand, the basis paths from v to the top.
// A map P -> M is determined by the images of the generators e_{tops[r]},
// i.e. by one vector of G_{tops[r]} M per summand ("coordinates").
struct ProjSum {
  AlgebraPtr alg;
  std::vector<int> tops;
  Rep rep;
  std::vector<std::vector<std::size_t>> offsets;  // offsets[v-1][r]

  std::size_t generator_row(std::size_t r) const;
  std::size_t size() const { return tops.size(); }
};

ProjSum make_proj_sum(AlgebraPtr alg, std::vector<int> tops);
ProjSum concat(const ProjSum& a, const ProjSum& b);

// The summands idx of p, with the split inclusion and projection.
struct SubSum {
  ProjSum part;
  RepMap incl;
  RepMap proj;
};
SubSum sub_sum(const ProjSum& p, const std::vector<std::size_t>& idx);

std::size_t coord_dim(const ProjSum& p, const Rep& m);
Matrix coords_of(const ProjSum& p, const RepMap& g);
RepMap map_from_coords(const ProjSum& p, const Rep& m, const Matrix& coords);

// Linear map sending the coordinates of f: P -> M to f(w), for w in G_v P.
Matrix evaluation_matrix(const ProjSum& p, const Rep& m, int v, const Matrix& w);

// Coordinates of f o g for g: Q -> P between projective sums, as a linear map
// of the coordinates of f: P -> M.
Matrix precompose_matrix(const ProjSum& q, const ProjSum& p, const Matrix& g_coords, const Rep& m);

// Coordinates of h o f for h: M -> N, as a linear map of the coordinates of f: P -> M.
Matrix postcompose_matrix(const ProjSum& p, const RepMap& h);

struct Cover {
  ProjSum proj;
  RepMap map;
};
// Minimal projective cover: one summand P_v per basis vector of a complement
// of the radical in G_v M.
Cover projective_cover(const Rep& m);

// phi: P -> M with h o phi = g, given g: P -> N and h: M -> N. Throws when
// some generator image is outside im h.
RepMap lift_through(const ProjSum& p, const RepMap& g, const RepMap& h);

}  // namespace heartglue
