#pragma once

#include "heartglue/rational.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heartglue {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

// Vertices are 1..vertices.
struct Quiver {
  int vertices = 0;
  std::vector<Arrow> arrows;

  // Index of the named arrow, or -1.
  int arrow_index(std::string_view name) const;
};

Quiver opposite(const Quiver& q);

// Arrow indices in traversal order: t(path[k]) = s(path[k+1]).
using Path = std::vector<int>;

struct Term {
  Rat coef;
  Path path;
};
using Relation = std::vector<Term>;

Relation opposite(const Relation& r);

struct BasisPath {
  int source = 0;
  int target = 0;
  Path arrows;
};

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PathAlgebra;
using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

// K Q / <S> for an ordered acyclic quiver with admissible parallel relations.
// Products follow composition order: x * y = x o y, nonzero only when t(y) = s(x).
class PathAlgebra {
 public:
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int vertices() const { return quiver_.vertices; }
  std::size_t dim() const { return basis_.size(); }

  const std::vector<BasisPath>& basis() const { return basis_; }
  const BasisPath& basis(std::size_t k) const { return basis_.at(k); }

  // Basis index of the trivial path e_i.
  std::size_t idempotent(int i) const;

  // Basis indices of residues with source i and target j (this is p_j A p_i).
  const std::vector<std::size_t>& paths_between(int i, int j) const;

  // Position of basis element k inside paths_between(s(k), t(k)).
  std::size_t position_in_block(std::size_t k) const { return block_pos_.at(k); }

  // Normal form of a path of the free path algebra, starting at `source`.
  std::vector<Rat> reduce(const Path& p, int source) const;

  // Structure constants of x o y over the basis.
  const std::vector<Rat>& mult(std::size_t x, std::size_t y) const { return mult_.at(x * dim() + y); }
  std::vector<Rat> multiply(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

  std::string name_of(std::size_t k) const;
  std::string path_name(const Path& p, int source) const;

  // Every path of the free path algebra from i to j, in increasing path order.
  std::vector<Path> free_paths(int i, int j) const;

  // Basis index of a path already in normal form, or -1.
  long find_basis(const Path& p, int source) const;

 private:
  friend AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& rels);

  struct Rule {
    Path lead;
    std::vector<Term> tail;  // lead = sum of tail
  };

  Quiver quiver_;
  std::vector<Relation> relations_;
  std::vector<Rule> rules_;
  std::vector<BasisPath> basis_;
  std::map<std::pair<int, Path>, std::size_t> index_;
  std::vector<std::vector<std::vector<std::size_t>>> blocks_;
  std::vector<std::size_t> block_pos_;
  std::vector<std::vector<Rat>> mult_;
};

// Validates and builds the algebra. Throws AlgebraError with a diagnostic on
// loops, unordered arrows, non-admissible or non-parallel relations, and
// relation sets whose rewriting does not confluence-check.
AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& rels);

// Length first, then lexicographic on arrow indices.
bool path_less(const Path& a, const Path& b);

}  // namespace heartglue
