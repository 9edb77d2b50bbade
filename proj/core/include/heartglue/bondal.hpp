#pragma once

#include "heartglue/glue.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace heartglue {

class BondalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Basis element of End(E_1 + ... + E_n): the k-th basis vector of Hom(E_i, E_j).
struct EndBasis {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
};

// Diagonal blocks use the identity as their basis vector.
struct EndAlgebra {
  std::vector<Cx> objects;
  std::vector<std::vector<DHomPtr>> hom;  // hom[i][j] = Hom(E_i, E_j)
  std::vector<EndBasis> basis;
  std::vector<std::vector<std::size_t>> offset;  // (i, j) -> first global index
  std::vector<Matrix> identity;                  // id_{E_i} in hom[i][i]
  // mult[x * dim + y]: coordinates of x o y, zero unless the blocks chain.
  std::vector<std::vector<Rat>> mult;
  bool associative = false;

  std::size_t dim() const { return basis.size(); }
  std::size_t size() const { return objects.size(); }
  DHomClass element(std::size_t x) const;
  DHomClass element(std::size_t i, std::size_t j, const Matrix& coords) const;
  // Coordinates in Hom(E_i, E_j) of a global vector supported on that block.
  Matrix block_coords(std::size_t i, std::size_t j, const std::vector<Rat>& v) const;
  std::vector<Rat> to_global(std::size_t i, std::size_t j, const Matrix& coords) const;
  std::vector<Rat> product(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
};

// Throws BondalError unless the sequence is strong exceptional.
EndAlgebra end_algebra(const ExcSequence& es);

// Linear map from a path algebra to an endomorphism algebra, columns indexed by
// the path basis.
struct AlgebraIso {
  Matrix map;
  bool bijective = false;
  bool multiplicative = false;
  bool unital = false;
  std::string failure;

  bool ok() const { return bijective && multiplicative && unital; }
};
AlgebraIso check_algebra_map(const PathAlgebra& a, const EndAlgebra& ea, const Matrix& map);

struct QuiverPresentation {
  Quiver quiver;
  std::vector<Relation> relations;
  AlgebraPtr algebra;
  // Hom(E_s, E_t) coordinates of each arrow s -> t.
  std::vector<Matrix> arrow_coords;
  AlgebraIso certificate;
};
QuiverPresentation quiver_presentation(const EndAlgebra& ea);

// For objects P_1, ..., P_n over `a`: the map sending a path p: i -> j to the
// morphism P_i -> P_j with generator image p.
AlgebraIso regular_iso(const EndAlgebra& ea, const AlgebraPtr& a);
// Same vertex count and arrow count between every pair of vertices.
bool same_shape(const Quiver& a, const Quiver& b);

class BondalFunctor {
 public:
  BondalFunctor(const ExcSequence& es, Window w);

  const EndAlgebra& end() const { return ea_; }
  const QuiverPresentation& presentation() const { return pres_; }
  AlgebraPtr algebra() const { return pres_.algebra; }

  // Throws BondalError when some Hom(E_i, x[n]) with n != 0 is nonzero.
  Rep apply(const Cx& x) const;
  // f in Hom(x, y).
  RepMap apply(const DHomClass& f) const;
  // P_i -> apply(E_i) sending the generator to the identity.
  RepMap projective_certificate(std::size_t i) const;

 private:
  void check_scope(const Cx& x) const;

  EndAlgebra ea_;
  QuiverPresentation pres_;
  Window window_;
};

Rep module_functor(const ExcSequence& es, const Cx& x);

struct PairCheck {
  std::size_t index = 0;
  std::size_t hom_dim = 0;
  std::size_t image_hom_dim = 0;
  bool bijective = false;
  std::optional<std::string> error;

  bool ok() const { return !error && bijective && hom_dim == image_hom_dim; }
};
struct FaithfulFullReport {
  std::vector<PairCheck> pairs;
  bool ok() const;
};
FaithfulFullReport faithful_full_check(const BondalFunctor& phi,
                                       const std::vector<std::pair<Cx, Cx>>& sample);

}  // namespace heartglue
