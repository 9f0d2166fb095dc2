#ifndef PEIFFER_BISIMPLICIAL_HPP
#define PEIFFER_BISIMPLICIAL_HPP

#include <string>
#include <vector>

#include "simplicial.hpp"

namespace peiffer
{

enum class Direction
{
  horizontal,
  vertical,
};

inline std::string level_name(unsigned p, unsigned q)
{ return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

/// Levels G_{p,q} for p <= max_p, q <= max_q. Horizontal operators change p,
/// vertical ones change q.
struct BisimplicialGroupTrunc
{
  unsigned max_p = 0;
  unsigned max_q = 0;
  std::vector<GroupPtr> levels;
  std::vector<std::vector<Homomorphism>> dh_maps, sh_maps, dv_maps, sv_maps;

  BisimplicialGroupTrunc() = default;

  BisimplicialGroupTrunc(unsigned P, unsigned Q)
  : max_p(P), max_q(Q), levels((P + 1) * (Q + 1)), dh_maps(levels.size()),
    sh_maps(levels.size()), dv_maps(levels.size()), sv_maps(levels.size())
  {}

  bool in_range(unsigned p, unsigned q) const
  { return p <= max_p && q <= max_q; }

  std::size_t slot(unsigned p, unsigned q) const
  {
    if (!in_range(p, q))
      throw TruncationExceeded("level " + level_name(p, q) +
                               " beyond truncation " +
                               level_name(max_p, max_q));
    return p * (max_q + 1) + q;
  }

  GroupPtr const &level(unsigned p, unsigned q) const
  { return levels[slot(p, q)]; }

  Homomorphism const &dh(unsigned p, unsigned q, unsigned i) const
  { return op(dh_maps, p, q, i, p >= 1, p, "dh"); }

  Homomorphism const &sh(unsigned p, unsigned q, unsigned i) const
  { return op(sh_maps, p, q, i, p < max_p, p, "sh"); }

  Homomorphism const &dv(unsigned p, unsigned q, unsigned j) const
  { return op(dv_maps, p, q, j, q >= 1, q, "dv"); }

  Homomorphism const &sv(unsigned p, unsigned q, unsigned j) const
  { return op(sv_maps, p, q, j, q < max_q, q, "sv"); }

  Homomorphism const &d(Direction dir, unsigned p, unsigned q, unsigned i) const
  { return dir == Direction::horizontal ? dh(p, q, i) : dv(p, q, i); }

  Homomorphism const &s(Direction dir, unsigned p, unsigned q, unsigned i) const
  { return dir == Direction::horizontal ? sh(p, q, i) : sv(p, q, i); }

private:
  Homomorphism const &op(std::vector<std::vector<Homomorphism>> const &maps,
                         unsigned p, unsigned q, unsigned i, bool exists,
                         unsigned bound, char const *name) const
  {
    auto k = slot(p, q);
    if (!exists)
      throw TruncationExceeded(std::string(name) + " out of level " +
                               level_name(p, q) + " leaves the truncation");
    if (i > bound || i >= maps[k].size())
      throw IndexOutOfRange(std::string(name) + "_" + std::to_string(i) +
                            " at level " + level_name(p, q));
    return maps[k][i];
  }
};

inline VerificationReport verify_bisimplicial(BisimplicialGroupTrunc const &g,
                                              std::string subject = "bisimplicial group")
{
  VerificationReport rep(std::move(subject));
  Check shape("operators connect adjacent levels");
  for (unsigned p = 0; p <= g.max_p; ++p)
    for (unsigned q = 0; q <= g.max_q; ++q) {
      auto at = level_name(p, q);
      for (unsigned i = 0; p >= 1 && i <= p; ++i)
        detail::check_operator_levels(shape, g.dh(p, q, i), g.level(p, q),
                                      g.level(p - 1, q), "dh at " + at);
      for (unsigned i = 0; p < g.max_p && i <= p; ++i)
        detail::check_operator_levels(shape, g.sh(p, q, i), g.level(p, q),
                                      g.level(p + 1, q), "sh at " + at);
      for (unsigned j = 0; q >= 1 && j <= q; ++j)
        detail::check_operator_levels(shape, g.dv(p, q, j), g.level(p, q),
                                      g.level(p, q - 1), "dv at " + at);
      for (unsigned j = 0; q < g.max_q && j <= q; ++j)
        detail::check_operator_levels(shape, g.sv(p, q, j), g.level(p, q),
                                      g.level(p, q + 1), "sv at " + at);
    }
  bool shaped = !shape.failed();
  rep.add(std::move(shape));
  if (!shaped)
    return rep;

  for (unsigned q = 0; q <= g.max_q; ++q)
    detail::check_simplicial_identities(
      rep, g.max_p,
      [&](unsigned n, unsigned i) -> Homomorphism const & { return g.dh(n, q, i); },
      [&](unsigned n, unsigned i) -> Homomorphism const & { return g.sh(n, q, i); },
      "horizontal ", [q](unsigned n) { return level_name(n, q); });
  for (unsigned p = 0; p <= g.max_p; ++p)
    detail::check_simplicial_identities(
      rep, g.max_q,
      [&](unsigned n, unsigned j) -> Homomorphism const & { return g.dv(p, n, j); },
      [&](unsigned n, unsigned j) -> Homomorphism const & { return g.sv(p, n, j); },
      "vertical ", [p](unsigned n) { return level_name(p, n); });

  for (unsigned p = 0; p <= g.max_p; ++p)
    for (unsigned q = 0; q <= g.max_q; ++q) {
      auto at = " from " + level_name(p, q);
      auto lbl = [](char const *a, unsigned i, char const *b, unsigned j) {
        return std::string(a) + "_" + std::to_string(i) + " " + b + "_" +
               std::to_string(j);
      };
      if (p >= 1 && q >= 1) {
        Check c("dh_i dv_j = dv_j dh_i" + at);
        for (unsigned i = 0; i <= p; ++i)
          for (unsigned j = 0; j <= q && !c.failed(); ++j)
            detail::compare_chains(c, lbl("dh", i, "dv", j),
                                   {&g.dh(p, q - 1, i), &g.dv(p, q, j)},
                                   {&g.dv(p - 1, q, j), &g.dh(p, q, i)});
        rep.add(std::move(c));
      }
      if (p >= 1 && q < g.max_q) {
        Check c("dh_i sv_j = sv_j dh_i" + at);
        for (unsigned i = 0; i <= p; ++i)
          for (unsigned j = 0; j <= q && !c.failed(); ++j)
            detail::compare_chains(c, lbl("dh", i, "sv", j),
                                   {&g.dh(p, q + 1, i), &g.sv(p, q, j)},
                                   {&g.sv(p - 1, q, j), &g.dh(p, q, i)});
        rep.add(std::move(c));
      }
      if (p < g.max_p && q >= 1) {
        Check c("sh_i dv_j = dv_j sh_i" + at);
        for (unsigned i = 0; i <= p; ++i)
          for (unsigned j = 0; j <= q && !c.failed(); ++j)
            detail::compare_chains(c, lbl("sh", i, "dv", j),
                                   {&g.sh(p, q - 1, i), &g.dv(p, q, j)},
                                   {&g.dv(p + 1, q, j), &g.sh(p, q, i)});
        rep.add(std::move(c));
      }
      if (p < g.max_p && q < g.max_q) {
        Check c("sh_i sv_j = sv_j sh_i" + at);
        for (unsigned i = 0; i <= p; ++i)
          for (unsigned j = 0; j <= q && !c.failed(); ++j)
            detail::compare_chains(c, lbl("sh", i, "sv", j),
                                   {&g.sh(p, q + 1, i), &g.sv(p, q, j)},
                                   {&g.sv(p + 1, q, j), &g.sh(p, q, i)});
        rep.add(std::move(c));
      }
    }
  return rep;
}

/// G_{p,q} = a_p x b_q with horizontal operators from a and vertical ones
/// from b.
inline BisimplicialGroupTrunc external_product(SimplicialGroupTrunc const &a,
                                               SimplicialGroupTrunc const &b,
                                               std::size_t cap = default_order_cap)
{
  BisimplicialGroupTrunc g(a.max_level, b.max_level);
  std::vector<DirectProduct> prods;
  for (unsigned p = 0; p <= g.max_p; ++p)
    for (unsigned q = 0; q <= g.max_q; ++q) {
      prods.push_back(direct_product(a.level(p), b.level(q), cap));
      g.levels[g.slot(p, q)] = prods.back().group;
    }
  auto prod = [&](unsigned p, unsigned q) -> DirectProduct const & {
    return prods[g.slot(p, q)];
  };
  for (unsigned p = 0; p <= g.max_p; ++p)
    for (unsigned q = 0; q <= g.max_q; ++q) {
      auto k = g.slot(p, q);
      auto idb = Homomorphism::identity(b.level(q));
      auto ida = Homomorphism::identity(a.level(p));
      for (unsigned i = 0; p >= 1 && i <= p; ++i)
        g.dh_maps[k].push_back(product_map(prod(p, q), prod(p - 1, q), a.d(p, i), idb));
      for (unsigned i = 0; p < g.max_p && i <= p; ++i)
        g.sh_maps[k].push_back(product_map(prod(p, q), prod(p + 1, q), a.s(p, i), idb));
      for (unsigned j = 0; q >= 1 && j <= q; ++j)
        g.dv_maps[k].push_back(product_map(prod(p, q), prod(p, q - 1), ida, b.d(q, j)));
      for (unsigned j = 0; q < g.max_q && j <= q; ++j)
        g.sv_maps[k].push_back(product_map(prod(p, q), prod(p, q + 1), ida, b.s(q, j)));
    }
  return g;
}

/// Horizontal structure from s, constant in the vertical direction.
inline BisimplicialGroupTrunc from_horizontal(SimplicialGroupTrunc const &s,
                                              unsigned Q)
{
  BisimplicialGroupTrunc g(s.max_level, Q);
  for (unsigned p = 0; p <= g.max_p; ++p)
    for (unsigned q = 0; q <= Q; ++q) {
      auto k = g.slot(p, q);
      g.levels[k] = s.level(p);
      auto id = Homomorphism::identity(s.level(p));
      for (unsigned i = 0; p >= 1 && i <= p; ++i)
        g.dh_maps[k].push_back(s.d(p, i));
      for (unsigned i = 0; p < g.max_p && i <= p; ++i)
        g.sh_maps[k].push_back(s.s(p, i));
      for (unsigned j = 0; q >= 1 && j <= q; ++j)
        g.dv_maps[k].push_back(id);
      for (unsigned j = 0; q < Q && j <= q; ++j)
        g.sv_maps[k].push_back(id);
    }
  return g;
}

/// Vertical structure from s, constant in the horizontal direction.
inline BisimplicialGroupTrunc from_vertical(SimplicialGroupTrunc const &s,
                                            unsigned P)
{
  BisimplicialGroupTrunc g(P, s.max_level);
  for (unsigned p = 0; p <= P; ++p)
    for (unsigned q = 0; q <= g.max_q; ++q) {
      auto k = g.slot(p, q);
      g.levels[k] = s.level(q);
      auto id = Homomorphism::identity(s.level(q));
      for (unsigned i = 0; p >= 1 && i <= p; ++i)
        g.dh_maps[k].push_back(id);
      for (unsigned i = 0; p < P && i <= p; ++i)
        g.sh_maps[k].push_back(id);
      for (unsigned j = 0; q >= 1 && j <= q; ++j)
        g.dv_maps[k].push_back(s.d(q, j));
      for (unsigned j = 0; q < g.max_q && j <= q; ++j)
        g.sv_maps[k].push_back(s.s(q, j));
    }
  return g;
}

inline BisimplicialGroupTrunc constant_bisimplicial(GroupPtr const &g,
                                                    unsigned P, unsigned Q)
{ return from_horizontal(constant_simplicial(g, P), Q); }

/// The horizontal simplicial group at fixed q.
inline SimplicialGroupTrunc row(BisimplicialGroupTrunc const &g, unsigned q)
{
  SimplicialGroupTrunc s;
  s.max_level = g.max_p;
  s.faces.emplace_back();
  for (unsigned p = 0; p <= g.max_p; ++p) {
    s.levels.push_back(g.level(p, q));
    if (p >= 1)
      s.faces.push_back(g.dh_maps[g.slot(p, q)]);
    if (p < g.max_p)
      s.degeneracies.push_back(g.sh_maps[g.slot(p, q)]);
  }
  return s;
}

/// The vertical simplicial group at fixed p.
inline SimplicialGroupTrunc column(BisimplicialGroupTrunc const &g, unsigned p)
{
  SimplicialGroupTrunc s;
  s.max_level = g.max_q;
  s.faces.emplace_back();
  for (unsigned q = 0; q <= g.max_q; ++q) {
    s.levels.push_back(g.level(p, q));
    if (q >= 1)
      s.faces.push_back(g.dv_maps[g.slot(p, q)]);
    if (q < g.max_q)
      s.degeneracies.push_back(g.sv_maps[g.slot(p, q)]);
  }
  return s;
}

/// Elements of G_{n,m} killed by dh_i for i in hs and dv_j for j in vs.
inline Subgroup kernel_meet(BisimplicialGroupTrunc const &g, unsigned n,
                            unsigned m, std::vector<unsigned> const &hs,
                            std::vector<unsigned> const &vs)
{
  std::vector<Homomorphism const *> maps;
  for (auto i : hs)
    maps.push_back(&g.dh(n, m, i));
  for (auto j : vs)
    maps.push_back(&g.dv(n, m, j));
  return kernel_meet(g.level(n, m), maps);
}

inline std::vector<unsigned> range(unsigned n)
{
  std::vector<unsigned> r(n);
  for (unsigned i = 0; i < n; ++i)
    r[i] = i;
  return r;
}

/// NG_{n,m}: exact kernels of dh_i (i < n) and dv_j (j < m).
inline Subgroup moore_subgroup(BisimplicialGroupTrunc const &g, unsigned n,
                               unsigned m)
{
  g.slot(n, m);
  return kernel_meet(g, n, m, range(n), range(m));
}

struct MooreBicomplexCell
{
  unsigned n = 0, m = 0;
  EmbeddedGroup cell;
  std::optional<Homomorphism> boundary_h; // to NG_{n-1,m}
  std::optional<Homomorphism> boundary_v; // to NG_{n,m-1}
};

/// Every Moore cell as a group, with restricted boundaries between them.
struct MooreBicomplex
{
  unsigned max_p = 0, max_q = 0;
  std::vector<MooreBicomplexCell> cells;

  MooreBicomplexCell const &at(unsigned n, unsigned m) const
  {
    if (n > max_p || m > max_q)
      throw TruncationExceeded("Moore cell " + level_name(n, m));
    return cells[n * (max_q + 1) + m];
  }
};

inline MooreBicomplex moore_bicomplex(BisimplicialGroupTrunc const &g)
{
  MooreBicomplex mb{g.max_p, g.max_q, {}};
  for (unsigned n = 0; n <= g.max_p; ++n)
    for (unsigned m = 0; m <= g.max_q; ++m)
      mb.cells.push_back({n, m, embed(moore_subgroup(g, n, m)), {}, {}});
  for (unsigned n = 0; n <= g.max_p; ++n)
    for (unsigned m = 0; m <= g.max_q; ++m) {
      auto &c = mb.cells[n * (g.max_q + 1) + m];
      if (n >= 1)
        c.boundary_h = restrict(g.dh(n, m, n), c.cell, mb.at(n - 1, m).cell);
      if (m >= 1)
        c.boundary_v = restrict(g.dv(n, m, m), c.cell, mb.at(n, m - 1).cell);
    }
  return mb;
}

/// A single Moore cell with boundaries into freshly embedded neighbours.
inline MooreBicomplexCell moore_bi(BisimplicialGroupTrunc const &g, unsigned n,
                                   unsigned m)
{
  MooreBicomplexCell c{n, m, embed(moore_subgroup(g, n, m)), {}, {}};
  if (n >= 1)
    c.boundary_h = restrict(g.dh(n, m, n), c.cell,
                            embed(moore_subgroup(g, n - 1, m)));
  if (m >= 1)
    c.boundary_v = restrict(g.dv(n, m, m), c.cell,
                            embed(moore_subgroup(g, n, m - 1)));
  return c;
}

/// D_{n,m}: generated by the images of every degeneracy into G_{n,m}.
inline Subgroup degenerate_subgroup(BisimplicialGroupTrunc const &g,
                                    unsigned n, unsigned m)
{
  g.slot(n, m);
  if (n == 0 && m == 0)
    throw TruncationExceeded("no degeneracies land in level (0,0)");
  std::vector<ElemId> gens;
  if (n >= 1)
    for (unsigned i = 0; i < n; ++i) {
      auto const &f = g.sh(n - 1, m, i);
      for (auto x : f.domain()->generator_ids())
        gens.push_back(f(x));
    }
  if (m >= 1)
    for (unsigned j = 0; j < m; ++j) {
      auto const &f = g.sv(n, m - 1, j);
      for (auto x : f.domain()->generator_ids())
        gens.push_back(f(x));
    }
  return Subgroup::generated(g.level(n, m), gens);
}

/// The intersection of ker d_i over i in I in the given direction at level
/// (n,m), optionally met with the full transverse kernel (K_H or K_V): all
/// faces but the last in the other direction.
inline Subgroup kernel_intersection(BisimplicialGroupTrunc const &g,
                                    unsigned n, unsigned m, Direction dir,
                                    std::vector<unsigned> const &I,
                                    bool transverse)
{
  auto bound = dir == Direction::horizontal ? n : m;
  for (auto i : I)
    if (i > bound)
      throw IndexOutOfRange("face index " + std::to_string(i) +
                            " at level " + level_name(n, m));
  std::vector<unsigned> hs, vs;
  if (dir == Direction::horizontal) {
    hs = I;
    if (transverse)
      vs = range(m);
  } else {
    vs = I;
    if (transverse)
      hs = range(n);
  }
  return kernel_meet(g, n, m, hs, vs);
}

/// Applies the degeneracy composite s_alpha in one direction; the source
/// level is alpha.target() in that direction and other in the other.
inline ElemId apply_degeneracies(BisimplicialGroupTrunc const &g,
                                 Direction dir, SurjectionTuple const &alpha,
                                 unsigned other, ElemId x)
{
  unsigned k = alpha.target();
  for (auto i : alpha.ascending()) {
    x = dir == Direction::horizontal ? g.sh(k, other, i)(x)
                                     : g.sv(other, k, i)(x);
    ++k;
  }
  return x;
}

inline Homomorphism degeneracy_composite(BisimplicialGroupTrunc const &g,
                                         Direction dir,
                                         SurjectionTuple const &alpha,
                                         unsigned other)
{
  auto src = alpha.target(), dst = alpha.source();
  auto const &dom = dir == Direction::horizontal ? g.level(src, other)
                                                 : g.level(other, src);
  auto const &cod = dir == Direction::horizontal ? g.level(dst, other)
                                                 : g.level(other, dst);
  if (alpha.is_empty())
    return Homomorphism::identity(dom);
  return Homomorphism::from_function(dom, cod, [&](ElemId x) {
    return apply_degeneracies(g, dir, alpha, other, x);
  });
}

/// |G_{n,m}| against the product of |NG_{b(sigma)}| over S(n) x S(m).
inline VerificationReport order_factorization_check(BisimplicialGroupTrunc const &g)
{
  VerificationReport rep("order factorization");
  std::vector<std::size_t> ng(g.levels.size());
  for (unsigned n = 0; n <= g.max_p; ++n)
    for (unsigned m = 0; m <= g.max_q; ++m)
      ng[g.slot(n, m)] = moore_subgroup(g, n, m).order();
  for (unsigned n = 0; n <= g.max_p; ++n)
    for (unsigned m = 0; m <= g.max_q; ++m) {
      Check c("level " + level_name(n, m));
      std::size_t prod = 1;
      std::string factors;
      for (auto const &s1 : enumerate_S(n))
        for (auto const &s2 : enumerate_S(m)) {
          auto f = ng[g.slot(s1.target(), s2.target())];
          prod *= f;
          factors += (factors.empty() ? "" : "·") + std::to_string(f);
        }
      c.instances = 1;
      c.note = std::to_string(g.level(n, m)->order()) + " = " + factors;
      if (prod != g.level(n, m)->order())
        c.fail(c.note + " does not hold (product " + std::to_string(prod) +
                 ")",
               {});
      rep.add(std::move(c));
    }
  return rep;
}

} // namespace peiffer

#endif // PEIFFER_BISIMPLICIAL_HPP
