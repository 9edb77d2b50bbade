#pragma once

#include "heartglue/derived_hom.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace heartglue {

class GlueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed range of shifts scanned by table-style computations.
struct Window {
  int lo = 0;
  int hi = 0;
};
// +-(vertices + seq_len + 2); every Hom between corpus objects vanishes outside.
Window default_window(const PathAlgebra& alg, std::size_t seq_len);
Window symmetric_window(int w);

// dims of Hom(objs[i], objs[j][n]) for n in the window.
struct HomTable {
  Window window;
  std::size_t size = 0;
  std::vector<std::size_t> dims;

  std::size_t at(std::size_t i, std::size_t j, int n) const;
};
HomTable hom_table(const std::vector<Cx>& objs, Window w);

// Indices are 0-based positions in the checked list.
struct Violation {
  std::size_t i = 0;
  std::size_t j = 0;
  int n = 0;
  std::size_t dim = 0;
  std::string rule;
};

struct ExcObjectReport {
  Window window;
  std::map<int, std::size_t> self_homs;  // only nonzero entries
  std::optional<Violation> violation;

  bool exceptional() const { return !violation; }
};
ExcObjectReport check_exceptional(const Cx& e, Window w);

struct ExcSequence {
  std::vector<Cx> objects;
  Window window;
  HomTable table;
  bool strong_requested = false;
  bool exceptional = false;
  bool strong = false;
  std::optional<Violation> violation;  // first failure of the requested checks

  bool ok() const { return !violation; }
};
// Checks, in this order: each object exceptional, hom(E_i, E_j[n]) = 0 for
// i > j, and when `strong` also hom(E_i, E_j[n]) = 0 for n != 0.
ExcSequence check_sequence(const std::vector<Cx>& es, bool strong, Window w);

// Intensional aisles. Glued(left, right) lives on <T1, T2> with T1 spanned by
// the generators of `left`, T2 by those of `right`, and hom(T2, T1) = 0; its
// aisle is T2^{<=0} * T1^{<=0}[1].
struct AisleSpec {
  enum class Kind { Standard, AddGenerated, Glued };
  Kind kind = Kind::Standard;
  AlgebraPtr alg;
  int cut = 0;    // Standard: H^i = 0 for i > cut
  Cx gen;         // AddGenerated: exceptional E
  int shift = 0;  // AddGenerated: aisle generated by E[shift + l], l >= 0
  std::shared_ptr<const AisleSpec> left;
  std::shared_ptr<const AisleSpec> right;
};

AisleSpec standard_aisle(AlgebraPtr alg, int cut = 0);
AisleSpec point_aisle(const Cx& e, int shift = 0);
AisleSpec glued_aisle(const AisleSpec& left, const AisleSpec& right);
// Left-nested gluing of point aisles: heart generators E_i[s_i + m - i].
AisleSpec iterated_gluing(const std::vector<Cx>& es, const std::vector<int>& shifts = {});

// A generator with the shift at which it enters the heart.
struct Leaf {
  Cx gen;
  int eff = 0;
};
std::vector<Leaf> leaves(const AisleSpec& a);

struct HeartDesc {
  std::vector<Cx> gens;
  std::string provenance;
};
HeartDesc heart_of(const AisleSpec& a);

struct CompatReport {
  bool compatible = true;
  std::optional<Violation> witness;  // i, j index the leaves of a1 and a2
};
// hom(T1^{<=0}, T2^{>=1}) = 0, reduced to generator pairs:
// hom(E_i, E_j[d]) = 0 for d <= eff_j - eff_i - 1.
CompatReport compatible(const AisleSpec& a1, const AisleSpec& a2, Window w);

struct NFoldReport {
  CompatReport direct;
  CompatReport iterated;
  bool agree() const { return direct.compatible == iterated.compatible; }
};
// hom(T_i^{<=0}[k-i-1], T_k^{>=1}) = 0 for i < k, checked directly and through
// the pairwise conditions of the left-nested gluing.
NFoldReport check_nfold(const std::vector<Cx>& es, const std::vector<int>& shifts, Window w);

struct GlueResult {
  AisleSpec aisle;
  HeartDesc heart;
  CompatReport compat;
};
// Throws GlueError when the aisles are not compatible.
GlueResult glue(const AisleSpec& a1, const AisleSpec& a2, Window w);

// Component of x in <E_k>: sum over shifts of hom(E_k, x_k[n]) (x) E_k[-n].
struct Component {
  Cx object;
  std::map<int, std::size_t> mult;  // m -> multiplicity of E_k[m], nonzero only
};
struct Decomposition {
  std::vector<Component> parts;  // in sequence order
  bool complete = false;         // x lies in <E_1, ..., E_m>
};
Decomposition decompose(const Cx& x, const std::vector<Cx>& es);
Cx sod_project(const Cx& x, const std::vector<Cx>& es, std::size_t k);

bool in_aisle(const Cx& x, const AisleSpec& a);
bool in_coaisle(const Cx& x, const AisleSpec& a);  // T^{>=1}
bool in_heart(const Cx& x, const AisleSpec& a);

// a -> x -> b -> a[1] with a in T^{<=0} and b in T^{>=1}.
struct GluedTruncation {
  Cx a;
  Cx b;
  CxMap a_to_x;
  CxMap x_to_b;
  DHomClass connecting;  // in Hom(b, a[1])
};
GluedTruncation truncate_glued(const Cx& x, const AisleSpec& a);

struct PairWitness {
  std::size_t a = 0;
  std::size_t b = 0;
  int n = 0;
};
struct HeartDim {
  std::optional<int> value;  // empty for the zero heart
  std::optional<PairWitness> witness;
};
HeartDim heart_dim(const HeartDesc& h, Window w);
struct RDim {
  int value = -1;
  std::optional<PairWitness> witness;
};
RDim rdim(const HeartDesc& h1, const HeartDesc& h2, Window w);
// Pairs with hom(G_a, G_b[n]) != 0 for some n < 0.
std::optional<PairWitness> negative_hom_witness(const HeartDesc& h, Window w);

struct DimFormulaReport {
  Window window;
  HeartDim lhs;
  HeartDim dim1;
  HeartDim dim2;
  RDim rd;
  std::optional<int> rhs;
  bool holds = false;
};
DimFormulaReport check_dim_formula(const HeartDesc& h1, const HeartDesc& h2,
                                   const HeartDesc& glued, Window w);

}  // namespace heartglue
