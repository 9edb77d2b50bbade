#pragma once

#include "heartglue/matrix.hpp"
#include "heartglue/path_algebra.hpp"

#include <stdexcept>
#include <vector>

namespace heartglue {

class ModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A right module as a representation: one space G_v V per vertex and, for an
// arrow a: s -> t, the action matrix act[a]: G_t V -> G_s V (shape dim(s) x dim(t)).
// With this convention Hom(P_i, V) = G_i V.
struct Rep {
  AlgebraPtr alg;
  std::vector<int> dims;
  std::vector<Matrix> act;

  int dim(int v) const { return dims.at(v - 1); }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
};

// Morphism of representations; blocks[v-1]: G_v src -> G_v dst.
struct RepMap {
  Rep src;
  Rep dst;
  std::vector<Matrix> blocks;

  const Matrix& at(int v) const { return blocks.at(v - 1); }
};

// Checks shapes and relations; throws ModuleError.
Rep make_rep(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> act);
void validate(const Rep& m);

// Identical dims and action matrices.
bool same_rep(const Rep& a, const Rep& b);

// Action of a free path starting at `source`: G_target V -> G_source V.
Matrix path_action(const Rep& m, const Path& p, int source);
Matrix basis_action(const Rep& m, std::size_t basis_index);

Rep zero_rep(AlgebraPtr alg);
Rep projective(AlgebraPtr alg, int i);
Rep simple(AlgebraPtr alg, int i);

RepMap zero_map(const Rep& src, const Rep& dst);
RepMap identity_map(const Rep& m);
RepMap compose(const RepMap& g, const RepMap& f);  // g o f
RepMap add(const RepMap& f, const RepMap& g);
RepMap scale(const RepMap& f, const Rat& c);
bool is_morphism(const RepMap& f);
bool is_zero(const RepMap& f);
bool is_iso(const RepMap& f);
bool equal(const RepMap& f, const RepMap& g);

// Flattened coordinates (blocks row-major, vertices ascending) and back.
Matrix flatten(const RepMap& f);
RepMap unflatten(const Rep& src, const Rep& dst, const Matrix& v);

// Basis of Hom_A(M, N) from the intertwiner system.
std::vector<RepMap> hom_space(const Rep& m, const Rep& n);

struct KernelResult {
  Rep obj;
  RepMap incl;
};
struct CokernelResult {
  Rep obj;
  RepMap proj;
};
struct ImageResult {
  Rep obj;
  RepMap epi;
  RepMap mono;
};
struct DirectSum {
  Rep obj;
  std::vector<RepMap> inj;
  std::vector<RepMap> proj;
};

KernelResult kernel(const RepMap& f);
CokernelResult cokernel(const RepMap& f);
ImageResult image(const RepMap& f);
DirectSum direct_sum(const std::vector<Rep>& parts);
DirectSum direct_sum(const Rep& a, const Rep& b);

// Map out of a direct sum from its components, and into one.
RepMap map_from_sum(const DirectSum& s, const std::vector<RepMap>& parts);
RepMap map_into_sum(const DirectSum& s, const std::vector<RepMap>& parts);
RepMap sum_of_maps(const DirectSum& src, const DirectSum& dst, const std::vector<RepMap>& diag);

// h with h o f = 0 induces the unique map out of coker f.
RepMap factor_through_cokernel(const CokernelResult& c, const RepMap& h);
// u with image inside ker f lifts uniquely into ker f.
RepMap lift_to_kernel(const KernelResult& k, const RepMap& u);

// F^k V = sum of G_j V for j <= k, with its inclusion into V.
struct FiltrationStep {
  Rep obj;
  RepMap incl;
};
FiltrationStep filtration_step(const Rep& v, int k);

}  // namespace heartglue
