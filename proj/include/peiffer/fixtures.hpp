#ifndef PEIFFER_FIXTURES_HPP
#define PEIFFER_FIXTURES_HPP

#include <string>
#include <vector>

#include "crossed.hpp"

namespace peiffer
{

/// S3 on {0,1,2}, generated by (0 1 2) and (0 1).
inline GroupPtr symmetric3()
{
  return closure({Permutation::from_cycles(3, {{0, 1, 2}}),
                  Permutation::from_cycles(3, {{0, 1}})},
                 3);
}

/// D4 on the square's corners, generated by r = (0 1 2 3) and s = (0 2).
inline GroupPtr dihedral4()
{
  return closure({Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                  Permutation::from_cycles(4, {{0, 2}})},
                 4);
}

inline ElemId element(GroupPtr const &g, Permutation const &p)
{
  auto e = g->find(p);
  if (e == no_elem)
    throw BadPermutation(p.to_cycle_string() + " is not in the group");
  return e;
}

inline Subgroup subgroup_of(GroupPtr const &g,
                            std::vector<Permutation> const &gens)
{
  std::vector<ElemId> ids;
  for (auto const &p : gens)
    ids.push_back(element(g, p));
  return Subgroup::generated(g, ids);
}

/// The inclusion of the rotations C3 into S3 with conjugation.
inline CrossedModuleData c3_in_s3()
{
  auto s3 = symmetric3();
  auto c3 = embed(subgroup_of(s3, {Permutation::from_cycles(3, {{0, 1, 2}})}));
  auto act = GroupAction::from_function(s3, c3.group, [&](ElemId p, ElemId x) {
    return c3.from_parent(s3->conj(p, c3.to_parent(x)));
  });
  return {c3.group, s3, c3.inclusion, std::move(act)};
}

/// In D4: <r> and <r^2, s>.
inline Subgroup d4_rotations(GroupPtr const &d4)
{ return subgroup_of(d4, {Permutation::from_cycles(4, {{0, 1, 2, 3}})}); }

inline Subgroup d4_klein(GroupPtr const &d4)
{
  return subgroup_of(d4, {Permutation::from_cycles(4, {{0, 2}, {1, 3}}),
                          Permutation::from_cycles(4, {{0, 2}})});
}

/// The crossed square of the normal pair <r>, <r^2,s> in D4.
inline CrossedSquareData d4_normal_pair_square()
{
  auto d4 = dihedral4();
  return normal_pair_square(d4_rotations(d4), d4_klein(d4));
}

namespace detail
{

/// (p+1) x (q+1) matrices over P stored entry by entry; entry (i,j) occupies
/// points [(i (q+1) + j) d, ... + d).
class MatrixCoder
{
public:
  MatrixCoder(GroupPtr P, unsigned p, unsigned q)
  : _P(std::move(P)), _rows(p + 1), _cols(q + 1)
  {}

  unsigned degree() const
  { return _P->degree() * _rows * _cols; }

  Permutation encode(std::vector<ElemId> const &entries) const
  {
    auto d = _P->degree();
    std::vector<Point> pts(degree());
    for (unsigned k = 0; k < entries.size(); ++k) {
      auto im = _P->images(entries[k]);
      for (unsigned t = 0; t < d; ++t)
        pts[k * d + t] = static_cast<Point>(k * d + im[t]);
    }
    return Permutation(std::move(pts));
  }

  std::vector<ElemId> decode(std::span<Point const> pts) const
  {
    auto d = _P->degree();
    std::vector<ElemId> entries(_rows * _cols);
    std::vector<Point> buf(d);
    for (unsigned k = 0; k < entries.size(); ++k) {
      for (unsigned t = 0; t < d; ++t)
        buf[t] = static_cast<Point>(pts[k * d + t] - k * d);
      entries[k] = _P->find(buf);
    }
    return entries;
  }

  unsigned rows() const
  { return _rows; }

  unsigned cols() const
  { return _cols; }

private:
  GroupPtr _P;
  unsigned _rows, _cols;
};

} // namespace detail

/// The bisimplicial group of matrices (a_ij), 0 <= i <= p, 0 <= j <= q, over
/// P with a_ij a_i'j^-1 in H and a_ij a_ij'^-1 in V for normal H and V.
/// Horizontal operators delete or repeat rows, vertical ones columns.
inline BisimplicialGroupTrunc double_cech_nerve(GroupPtr const &P, Subgroup const &H,
                                                Subgroup const &V, unsigned maxP,
                                                unsigned maxQ,
                                                std::size_t cap = default_order_cap)
{
  if (H.parent() != P || V.parent() != P)
    throw LevelMismatch("Cech nerve subgroups from another group");
  if (!H.is_normal() || !V.is_normal())
    throw HypothesisViolated("Cech nerve needs normal subgroups");
  auto L = intersect(H, V);
  auto hg = H.generating_set();
  auto vg = V.generating_set();
  auto lg = L.generating_set();

  BisimplicialGroupTrunc g(maxP, maxQ);
  std::vector<detail::MatrixCoder> coders;
  for (unsigned p = 0; p <= maxP; ++p)
    for (unsigned q = 0; q <= maxQ; ++q) {
      detail::MatrixCoder mc(P, p, q);
      auto cells = (p + 1) * (q + 1);
      std::vector<Permutation> gens;
      auto fill = [&](auto &&pick) {
        std::vector<ElemId> e(cells);
        for (unsigned i = 0; i <= p; ++i)
          for (unsigned j = 0; j <= q; ++j)
            e[i * (q + 1) + j] = pick(i, j);
        gens.push_back(mc.encode(e));
      };
      for (auto a : P->generator_ids())
        fill([&](unsigned, unsigned) { return a; });
      for (unsigned r = 1; r <= p; ++r)
        for (auto h : hg)
          fill([&](unsigned i, unsigned) { return i == r ? h : P->identity(); });
      for (unsigned c = 1; c <= q; ++c)
        for (auto v : vg)
          fill([&](unsigned, unsigned j) { return j == c ? v : P->identity(); });
      for (unsigned r = 1; r <= p; ++r)
        for (unsigned c = 1; c <= q; ++c)
          for (auto l : lg)
            fill([&](unsigned i, unsigned j) {
              return i == r && j == c ? l : P->identity();
            });
      g.levels[g.slot(p, q)] = closure(std::move(gens), mc.degree(), cap);
      coders.push_back(mc);
    }

  // Builds an operator from (p,q) to (p2,q2) where entry (i,j) of the target
  // is entry (ri(i), cj(j)) of the source.
  auto op = [&](unsigned p, unsigned q, unsigned p2, unsigned q2, auto &&ri,
                auto &&cj) {
    auto const &src = g.level(p, q);
    auto const &dst = g.level(p2, q2);
    auto const &cs = coders[g.slot(p, q)];
    auto const &cd = coders[g.slot(p2, q2)];
    return Homomorphism::from_function(src, dst, [&](ElemId e) {
      auto a = cs.decode(src->images(e));
      std::vector<ElemId> b((p2 + 1) * (q2 + 1));
      for (unsigned i = 0; i <= p2; ++i)
        for (unsigned j = 0; j <= q2; ++j)
          b[i * (q2 + 1) + j] = a[ri(i) * (q + 1) + cj(j)];
      auto id = dst->find(cd.encode(b));
      if (id == no_elem)
        throw HomomorphismInvalid("Cech operator leaves the level");
      return id;
    });
  };
  auto same = [](unsigned i) { return i; };
  auto del = [](unsigned k) { return [k](unsigned i) { return i < k ? i : i + 1; }; };
  auto rep = [](unsigned k) { return [k](unsigned i) { return i <= k ? i : i - 1; }; };

  for (unsigned p = 0; p <= maxP; ++p)
    for (unsigned q = 0; q <= maxQ; ++q) {
      auto k = g.slot(p, q);
      for (unsigned i = 0; p >= 1 && i <= p; ++i)
        g.dh_maps[k].push_back(op(p, q, p - 1, q, del(i), same));
      for (unsigned j = 0; q >= 1 && j <= q; ++j)
        g.dv_maps[k].push_back(op(p, q, p, q - 1, same, del(j)));
      for (unsigned i = 0; p < maxP && i <= p; ++i)
        g.sh_maps[k].push_back(op(p, q, p + 1, q, rep(i), same));
      for (unsigned j = 0; q < maxQ && j <= q; ++j)
        g.sv_maps[k].push_back(op(p, q, p, q + 1, same, rep(j)));
    }
  return g;
}

/// The D4 grid: rows congruent modulo <r^2,s>, columns modulo <r>.
inline BisimplicialGroupTrunc d4_grid(unsigned maxP = 2, unsigned maxQ = 2)
{
  auto d4 = dihedral4();
  return double_cech_nerve(d4, d4_klein(d4), d4_rotations(d4), maxP, maxQ);
}

inline BisimplicialGroupTrunc constant_s3_grid(unsigned maxP = 2, unsigned maxQ = 2)
{ return constant_bisimplicial(symmetric3(), maxP, maxQ); }

/// nerve(C3 -> S3) with itself, truncated at (2,2).
inline BisimplicialGroupTrunc external_product_grid(unsigned maxP = 2,
                                                    unsigned maxQ = 2)
{
  auto x = c3_in_s3();
  return external_product(nerve(x, maxP), nerve(x, maxQ));
}

/// The diagonal simplicial group n -> G_{n,n} with d_i = dh_i dv_i and
/// s_i = sh_i sv_i.
inline SimplicialGroupTrunc diagonal(BisimplicialGroupTrunc const &g)
{
  auto N = std::min(g.max_p, g.max_q);
  SimplicialGroupTrunc s;
  s.max_level = N;
  for (unsigned n = 0; n <= N; ++n)
    s.levels.push_back(g.level(n, n));
  s.faces.emplace_back();
  for (unsigned n = 1; n <= N; ++n) {
    s.faces.emplace_back();
    for (unsigned i = 0; i <= n; ++i)
      s.faces[n].push_back(compose(g.dh(n, n - 1, i), g.dv(n, n, i)));
  }
  for (unsigned n = 0; n < N; ++n) {
    s.degeneracies.emplace_back();
    for (unsigned j = 0; j <= n; ++j)
      s.degeneracies[n].push_back(compose(g.sh(n, n + 1, j), g.sv(n, n, j)));
  }
  return s;
}

/// The constant S3 grid at (1,1) with the vertical face d_0 out of (0,1)
/// twisted by conjugation with (0 1).
inline BisimplicialGroupTrunc broken_face_grid()
{
  auto g = constant_s3_grid(1, 1);
  auto const &G = g.level(0, 0);
  auto t = element(G, Permutation::from_cycles(3, {{0, 1}}));
  auto inner = Homomorphism::from_function(G, G, [&](ElemId x) { return G->conj(t, x); });
  auto &f = g.dv_maps[g.slot(0, 1)][0];
  f = compose(inner, f);
  return g;
}

inline CrossedSquareData with_trivial_h(CrossedSquareData sq)
{
  std::fill(sq.h.begin(), sq.h.end(), sq.L->identity());
  return sq;
}

inline TwoCrossedModuleData with_trivial_lifting(TwoCrossedModuleData x)
{
  std::fill(x.lifting.begin(), x.lifting.end(), x.L->identity());
  return x;
}

inline CrossedModuleData with_trivial_action(CrossedModuleData x)
{
  x.action = GroupAction::trivial(x.P, x.M);
  return x;
}

} // namespace peiffer

#endif // PEIFFER_FIXTURES_HPP
