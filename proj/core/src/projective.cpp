#include "heartglue/projective.hpp"

namespace heartglue {

namespace {

std::size_t udim(const Rep& m, int v) { return static_cast<std::size_t>(m.dim(v)); }

std::vector<std::size_t> coord_offsets(const ProjSum& p, const Rep& m) {
  std::vector<std::size_t> off(p.tops.size() + 1, 0);
  for (std::size_t r = 0; r < p.tops.size(); ++r) off[r + 1] = off[r] + udim(m, p.tops[r]);
  return off;
}

}  // namespace

std::size_t ProjSum::generator_row(std::size_t r) const { return offsets[tops[r] - 1][r]; }

ProjSum make_proj_sum(AlgebraPtr alg, std::vector<int> tops) {
  ProjSum p{alg, std::move(tops), zero_rep(alg), {}};
  const int n = alg->vertices();
  p.offsets.assign(n, std::vector<std::size_t>(p.tops.size(), 0));
  if (p.tops.empty()) return p;
  std::vector<Rep> parts;
  for (int t : p.tops) {
    if (t < 1 || t > n) throw ModuleError("projective summand out of range");
    parts.push_back(projective(alg, t));
  }
  p.rep = direct_sum(parts).obj;
  for (int v = 1; v <= n; ++v) {
    std::size_t acc = 0;
    for (std::size_t r = 0; r < p.tops.size(); ++r) {
      p.offsets[v - 1][r] = acc;
      acc += alg->paths_between(v, p.tops[r]).size();
    }
  }
  return p;
}

ProjSum concat(const ProjSum& a, const ProjSum& b) {
  std::vector<int> t = a.tops;
  t.insert(t.end(), b.tops.begin(), b.tops.end());
  return make_proj_sum(a.alg, t);
}

std::size_t coord_dim(const ProjSum& p, const Rep& m) { return coord_offsets(p, m).back(); }

SubSum sub_sum(const ProjSum& p, const std::vector<std::size_t>& idx) {
  std::vector<int> tops;
  for (std::size_t r : idx) tops.push_back(p.tops.at(r));
  ProjSum part = make_proj_sum(p.alg, tops);
  auto in_off = coord_offsets(part, p.rep);
  Matrix ci(in_off.back(), 1);
  for (std::size_t t = 0; t < idx.size(); ++t) ci(in_off[t] + p.generator_row(idx[t]), 0) = 1;
  auto out_off = coord_offsets(p, part.rep);
  Matrix cp(out_off.back(), 1);
  for (std::size_t t = 0; t < idx.size(); ++t) cp(out_off[idx[t]] + part.generator_row(t), 0) = 1;
  return SubSum{part, map_from_coords(part, p.rep, ci), map_from_coords(p, part.rep, cp)};
}

Matrix coords_of(const ProjSum& p, const RepMap& g) {
  auto off = coord_offsets(p, g.dst);
  Matrix c(off.back(), 1);
  for (std::size_t r = 0; r < p.tops.size(); ++r)
    c.set_block(off[r], 0, g.at(p.tops[r]).col(p.generator_row(r)));
  return c;
}

Matrix evaluation_matrix(const ProjSum& p, const Rep& m, int v, const Matrix& w) {
  auto off = coord_offsets(p, m);
  Matrix e(udim(m, v), off.back());
  for (std::size_t s = 0; s < p.tops.size(); ++s) {
    const auto& paths = p.alg->paths_between(v, p.tops[s]);
    for (std::size_t k = 0; k < paths.size(); ++k) {
      const Rat& c = w(p.offsets[v - 1][s] + k, 0);
      if (is_zero(c)) continue;
      e.add_block(0, off[s], basis_action(m, paths[k]), c);
    }
  }
  return e;
}

RepMap map_from_coords(const ProjSum& p, const Rep& m, const Matrix& coords) {
  auto off = coord_offsets(p, m);
  RepMap f = zero_map(p.rep, m);
  for (int v = 1; v <= p.alg->vertices(); ++v) {
    Matrix& b = f.blocks[v - 1];
    for (std::size_t s = 0; s < p.tops.size(); ++s) {
      const auto& paths = p.alg->paths_between(v, p.tops[s]);
      if (paths.empty()) continue;
      Matrix cs = coords.block(off[s], 0, udim(m, p.tops[s]), 1);
      for (std::size_t k = 0; k < paths.size(); ++k)
        b.set_block(0, p.offsets[v - 1][s] + k, basis_action(m, paths[k]) * cs);
    }
  }
  return f;
}

Matrix precompose_matrix(const ProjSum& q, const ProjSum& p, const Matrix& g_coords, const Rep& m) {
  auto qoff = coord_offsets(q, p.rep);
  auto moff = coord_offsets(q, m);
  Matrix out(moff.back(), coord_dim(p, m));
  for (std::size_t r = 0; r < q.tops.size(); ++r) {
    Matrix w = g_coords.block(qoff[r], 0, udim(p.rep, q.tops[r]), 1);
    out.set_block(moff[r], 0, evaluation_matrix(p, m, q.tops[r], w));
  }
  return out;
}

Matrix postcompose_matrix(const ProjSum& p, const RepMap& h) {
  auto src = coord_offsets(p, h.src);
  auto dst = coord_offsets(p, h.dst);
  Matrix out(dst.back(), src.back());
  for (std::size_t r = 0; r < p.tops.size(); ++r) out.set_block(dst[r], src[r], h.at(p.tops[r]));
  return out;
}

Cover projective_cover(const Rep& m) {
  const Quiver& q = m.alg->quiver();
  std::vector<int> tops;
  std::vector<Matrix> gens;
  for (int v = 1; v <= q.vertices; ++v) {
    std::vector<Matrix> rad;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].source == v) rad.push_back(m.act[a]);
    Matrix r = rad.empty() ? Matrix(udim(m, v), 0) : hstack(rad, udim(m, v));
    Matrix comp = complement_columns(r, udim(m, v));
    for (std::size_t c = 0; c < comp.cols(); ++c) {
      tops.push_back(v);
      gens.push_back(comp.col(c));
    }
  }
  ProjSum p = make_proj_sum(m.alg, tops);
  Matrix coords = gens.empty() ? Matrix(0, 1) : vstack(gens, 1);
  return {p, map_from_coords(p, m, coords)};
}

RepMap lift_through(const ProjSum& p, const RepMap& g, const RepMap& h) {
  auto off = coord_offsets(p, h.src);
  Matrix c(off.back(), 1);
  Matrix gc = coords_of(p, g);
  auto goff = coord_offsets(p, g.dst);
  for (std::size_t r = 0; r < p.tops.size(); ++r) {
    int v = p.tops[r];
    Solution s = solve(h.at(v), gc.block(goff[r], 0, udim(g.dst, v), 1));
    if (!s.x) throw ModuleError("lift_through: generator image not in the image");
    c.set_block(off[r], 0, *s.x);
  }
  return map_from_coords(p, h.src, c);
}

}  // namespace heartglue
