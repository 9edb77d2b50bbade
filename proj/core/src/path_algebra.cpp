#include "heartglue/path_algebra.hpp"

#include "heartglue/matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace heartglue {

int Quiver::arrow_index(std::string_view name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

Quiver opposite(const Quiver& q) {
  Quiver o = q;
  for (auto& a : o.arrows) std::swap(a.source, a.target);
  return o;
}

Relation opposite(const Relation& r) {
  Relation o = r;
  for (auto& t : o) std::reverse(t.path.begin(), t.path.end());
  return o;
}

bool path_less(const Path& a, const Path& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

bool contains_at(const Path& p, std::size_t pos, const Path& w) {
  if (pos + w.size() > p.size()) return false;
  return std::equal(w.begin(), w.end(), p.begin() + static_cast<long>(pos));
}

// Free paths from `source`, depth-first, as (target, path).
void enumerate_from(const Quiver& q, int source, int at, Path& cur, std::vector<std::pair<int, Path>>& out) {
  out.emplace_back(at, cur);
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    if (q.arrows[a].source != at) continue;
    cur.push_back(static_cast<int>(a));
    enumerate_from(q, source, q.arrows[a].target, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::size_t PathAlgebra::idempotent(int i) const {
  if (i < 1 || i > vertices()) throw std::out_of_range("idempotent: vertex " + std::to_string(i) + " out of range");
  return paths_between(i, i).front();
}

const std::vector<std::size_t>& PathAlgebra::paths_between(int i, int j) const {
  if (i < 1 || i > vertices() || j < 1 || j > vertices())
    throw std::out_of_range("paths_between: vertex out of range");
  return blocks_[i - 1][j - 1];
}

long PathAlgebra::find_basis(const Path& p, int source) const {
  auto it = index_.find({p.empty() ? source : 0, p});
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::vector<Rat> PathAlgebra::reduce(const Path& p, int source) const {
  std::map<Path, Rat> cur;
  cur[p] = 1;
  for (;;) {
    // Rewrite the largest reducible word first.
    const Rule* hit = nullptr;
    Path w;
    std::size_t hit_pos = 0;
    for (auto it = cur.rbegin(); it != cur.rend() && !hit; ++it) {
      for (const auto& rule : rules_) {
        for (std::size_t pos = 0; pos + rule.lead.size() <= it->first.size(); ++pos) {
          if (contains_at(it->first, pos, rule.lead)) {
            hit = &rule;
            hit_pos = pos;
            break;
          }
        }
        if (hit) break;
      }
      if (hit) w = it->first;
    }
    if (!hit) break;
    Rat c = cur[w];
    cur.erase(w);
    Path prefix(w.begin(), w.begin() + static_cast<long>(hit_pos));
    Path suffix(w.begin() + static_cast<long>(hit_pos + hit->lead.size()), w.end());
    for (const auto& t : hit->tail) {
      Path np = prefix;
      np.insert(np.end(), t.path.begin(), t.path.end());
      np.insert(np.end(), suffix.begin(), suffix.end());
      Rat& slot = cur[np];
      slot += c * t.coef;
      if (is_zero(slot)) cur.erase(np);
    }
  }
  std::vector<Rat> out(dim());
  for (const auto& [w, c] : cur) {
    long k = find_basis(w, source);
    if (k < 0) throw AlgebraError("reduce: normal form outside the basis");
    out[static_cast<std::size_t>(k)] += c;
  }
  return out;
}

std::vector<Rat> PathAlgebra::multiply(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  std::vector<Rat> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (is_zero(y[j])) continue;
      const auto& m = mult(i, j);
      Rat s = x[i] * y[j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (!is_zero(m[k])) out[k] += s * m[k];
    }
  }
  return out;
}

std::string PathAlgebra::path_name(const Path& p, int source) const {
  if (p.empty()) return "e" + std::to_string(source);
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) s += '*';
    s += quiver_.arrows[p[k]].name;
  }
  return s;
}

std::string PathAlgebra::name_of(std::size_t k) const { return path_name(basis_.at(k).arrows, basis_.at(k).source); }

std::vector<Path> PathAlgebra::free_paths(int i, int j) const {
  std::vector<std::pair<int, Path>> all;
  Path cur;
  enumerate_from(quiver_, i, i, cur, all);
  std::vector<Path> out;
  for (auto& [t, p] : all)
    if (t == j) out.push_back(p);
  std::sort(out.begin(), out.end(), path_less);
  return out;
}

AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& rels) {
  if (q.vertices < 1) throw AlgebraError("quiver must have at least one vertex");
  std::set<std::string> names;
  for (const auto& a : q.arrows) {
    if (a.name.empty()) throw AlgebraError("arrow with empty name");
    if (!names.insert(a.name).second) throw AlgebraError("duplicate arrow name '" + a.name + "'");
    if (a.source < 1 || a.source > q.vertices || a.target < 1 || a.target > q.vertices)
      throw AlgebraError("arrow '" + a.name + "' has an endpoint outside 1.." + std::to_string(q.vertices));
    if (a.source == a.target) throw AlgebraError("arrow '" + a.name + "' is a loop; cyclic quivers are rejected");
    if (a.source > a.target)
      throw AlgebraError("arrow '" + a.name + "' goes " + std::to_string(a.source) + "->" + std::to_string(a.target) +
                         "; ordered quivers need source < target");
  }

  auto alg = std::shared_ptr<PathAlgebra>(new PathAlgebra());
  alg->quiver_ = q;

  for (std::size_t r = 0; r < rels.size(); ++r) {
    std::map<Path, Rat> merged;
    int s = -1, t = -1;
    for (const auto& term : rels[r]) {
      const std::string where = "relation " + std::to_string(r);
      if (term.path.size() < 2) throw AlgebraError(where + ": term of length < 2 is not admissible");
      for (int a : term.path)
        if (a < 0 || a >= static_cast<int>(q.arrows.size())) throw AlgebraError(where + ": unknown arrow");
      for (std::size_t k = 0; k + 1 < term.path.size(); ++k)
        if (q.arrows[term.path[k]].target != q.arrows[term.path[k + 1]].source)
          throw AlgebraError(where + ": path is not composable");
      int ps = q.arrows[term.path.front()].source, pt = q.arrows[term.path.back()].target;
      if (s < 0) {
        s = ps;
        t = pt;
      } else if (s != ps || t != pt) {
        throw AlgebraError(where + ": paths are not parallel");
      }
      merged[term.path] += term.coef;
    }
    Relation clean;
    for (auto& [p, c] : merged)
      if (!is_zero(c)) clean.push_back({c, p});
    if (clean.empty()) throw AlgebraError("relation " + std::to_string(r) + " has no nonzero term");
    alg->relations_.push_back(clean);
    // clean is sorted by std::less on paths; the leading term uses path_less.
    auto lead_it = std::max_element(clean.begin(), clean.end(),
                                    [](const Term& a, const Term& b) { return path_less(a.path, b.path); });
    PathAlgebra::Rule rule;
    rule.lead = lead_it->path;
    for (const auto& term : clean)
      if (term.path != rule.lead) rule.tail.push_back({-term.coef / lead_it->coef, term.path});
    alg->rules_.push_back(rule);
  }

  std::vector<std::pair<int, Path>> free;
  for (int v = 1; v <= q.vertices; ++v) {
    std::vector<std::pair<int, Path>> from;
    Path cur;
    enumerate_from(q, v, v, cur, from);
    for (auto& [t, p] : from) {
      (void)t;
      free.emplace_back(v, p);
    }
  }

  auto irreducible = [&](const Path& p) {
    for (const auto& rule : alg->rules_)
      for (std::size_t pos = 0; pos + rule.lead.size() <= p.size(); ++pos)
        if (contains_at(p, pos, rule.lead)) return false;
    return true;
  };

  std::vector<BasisPath> basis;
  for (auto& [s, p] : free) {
    if (!irreducible(p)) continue;
    int t = p.empty() ? s : q.arrows[p.back()].target;
    basis.push_back({s, t, p});
  }
  std::sort(basis.begin(), basis.end(), [](const BasisPath& a, const BasisPath& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows.empty()) return a.source < b.source;
    return a.arrows < b.arrows;
  });
  alg->basis_ = basis;
  for (std::size_t k = 0; k < basis.size(); ++k)
    alg->index_[{basis[k].arrows.empty() ? basis[k].source : 0, basis[k].arrows}] = k;
  alg->blocks_.assign(q.vertices, std::vector<std::vector<std::size_t>>(q.vertices));
  alg->block_pos_.assign(basis.size(), 0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto& blk = alg->blocks_[basis[k].source - 1][basis[k].target - 1];
    alg->block_pos_[k] = blk.size();
    blk.push_back(k);
  }

  // Confluence: irreducible paths must be as many as dim of the quotient,
  // computed from the two-sided ideal spanned by u * r * v.
  for (int s = 1; s <= q.vertices; ++s) {
    for (int t = 1; t <= q.vertices; ++t) {
      std::vector<Path> paths = alg->free_paths(s, t);
      if (paths.empty()) continue;
      std::map<Path, std::size_t> pos;
      for (std::size_t k = 0; k < paths.size(); ++k) pos[paths[k]] = k;
      std::vector<Matrix> gens;
      for (const auto& rel : alg->relations_) {
        int rs = q.arrows[rel.front().path.front()].source;
        int rt = q.arrows[rel.front().path.back()].target;
        for (const auto& u : alg->free_paths(s, rs))
          for (const auto& v : alg->free_paths(rt, t)) {
            Matrix g(paths.size(), 1);
            for (const auto& term : rel) {
              Path w = u;
              w.insert(w.end(), term.path.begin(), term.path.end());
              w.insert(w.end(), v.begin(), v.end());
              g(pos.at(w), 0) += term.coef;
            }
            gens.push_back(g);
          }
      }
      std::size_t ideal_dim = gens.empty() ? 0 : rank(hstack(gens, paths.size()));
      std::size_t irr = alg->paths_between(s, t).size();
      if (irr + ideal_dim != paths.size())
        throw AlgebraError("relations do not confluence-check on paths " + std::to_string(s) + "->" +
                           std::to_string(t) + ": " + std::to_string(irr) + " irreducible paths but quotient has dim " +
                           std::to_string(paths.size() - ideal_dim));
    }
  }

  const std::size_t n = basis.size();
  alg->mult_.assign(n * n, std::vector<Rat>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (basis[y].target != basis[x].source) continue;
      Path w = basis[y].arrows;
      w.insert(w.end(), basis[x].arrows.begin(), basis[x].arrows.end());
      alg->mult_[x * n + y] = alg->reduce(w, basis[y].source);
    }
  return alg;
}

}  // namespace heartglue
