#ifndef PEIFFER_SIMPLICIAL_HPP
#define PEIFFER_SIMPLICIAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "fingroup.hpp"
#include "report.hpp"
#include "surjections.hpp"

namespace peiffer
{

/// Levels 0..N with faces d_i^n : G_n -> G_{n-1} (n >= 1, 0 <= i <= n) and
/// degeneracies s_j^n : G_n -> G_{n+1} (n < N, 0 <= j <= n).
struct SimplicialGroupTrunc
{
  unsigned max_level = 0;
  std::vector<GroupPtr> levels;
  std::vector<std::vector<Homomorphism>> faces;
  std::vector<std::vector<Homomorphism>> degeneracies;

  GroupPtr const &level(unsigned n) const
  {
    if (n > max_level)
      throw TruncationExceeded("level " + std::to_string(n) +
                               " beyond truncation " +
                               std::to_string(max_level));
    return levels[n];
  }

  Homomorphism const &d(unsigned n, unsigned i) const
  {
    if (n == 0 || n > max_level)
      throw TruncationExceeded("no faces out of level " + std::to_string(n));
    if (i > n)
      throw IndexOutOfRange("face d_" + std::to_string(i) + " at level " +
                            std::to_string(n));
    return faces[n][i];
  }

  Homomorphism const &s(unsigned n, unsigned j) const
  {
    if (n >= max_level)
      throw TruncationExceeded("no degeneracies out of level " +
                               std::to_string(n));
    if (j > n)
      throw IndexOutOfRange("degeneracy s_" + std::to_string(j) +
                            " at level " + std::to_string(n));
    return degeneracies[n][j];
  }
};

/// A crossed module: boundary M -> P with P acting on M.
struct CrossedModuleData
{
  GroupPtr M;
  GroupPtr P;
  Homomorphism boundary;
  GroupAction action;
};

namespace detail
{

using FaceFn = std::function<Homomorphism const &(unsigned, unsigned)>;

// Compares two chains of maps on every element of the common domain. Each
// chain is applied right to left.
inline void compare_chains(Check &c, std::string const &label,
                           std::vector<Homomorphism const *> const &lhs,
                           std::vector<Homomorphism const *> const &rhs)
{
  auto const &dom = *lhs.back()->domain();
  auto apply = [](std::vector<Homomorphism const *> const &chain, ElemId x) {
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      x = (**it)(x);
    return x;
  };
  for (ElemId x = 0; x < dom.order(); ++x) {
    ++c.instances;
    if (apply(lhs, x) != apply(rhs, x)) {
      c.fail(label + " violated", {witness("x", dom, x)});
      return;
    }
  }
}

// The simplicial identities of one direction over levels 0..N; d(n,i) and
// s(n,j) return the stored operators.
inline void check_simplicial_identities(VerificationReport &rep, unsigned N,
                                        FaceFn const &d, FaceFn const &s,
                                        std::string const &prefix,
                                        std::function<std::string(unsigned)> const &where)
{
  for (unsigned n = 2; n <= N; ++n) {
    Check c(prefix + "d_i d_j = d_{j-1} d_i (i<j) from " + where(n));
    for (unsigned j = 1; j <= n; ++j)
      for (unsigned i = 0; i < j && !c.failed(); ++i)
        compare_chains(c,
                       "d_" + std::to_string(i) + " d_" + std::to_string(j),
                       {&d(n - 1, i), &d(n, j)},
                       {&d(n - 1, j - 1), &d(n, i)});
    rep.add(std::move(c));
  }

  for (unsigned n = 0; n < N; ++n) {
    // s_j : n -> n+1, then d_i : n+1 -> n
    Check lo(prefix + "d_i s_j = s_{j-1} d_i (i<j) from " + where(n));
    Check id(prefix + "d_j s_j = d_{j+1} s_j = id from " + where(n));
    Check hi(prefix + "d_i s_j = s_j d_{i-1} (i>j+1) from " + where(n));
    for (unsigned j = 0; j <= n; ++j)
      for (unsigned i = 0; i <= n + 1; ++i) {
        auto lbl = "d_" + std::to_string(i) + " s_" + std::to_string(j);
        if (i < j) {
          if (!lo.failed())
            compare_chains(lo, lbl, {&d(n + 1, i), &s(n, j)},
                           {&s(n - 1, j - 1), &d(n, i)});
        } else if (i == j || i == j + 1) {
          if (id.failed())
            continue;
          auto const &comp = d(n + 1, i);
          auto const &deg = s(n, j);
          auto const &dom = *deg.domain();
          for (ElemId x = 0; x < dom.order(); ++x) {
            ++id.instances;
            if (comp(deg(x)) != x) {
              id.fail(lbl + " is not the identity", {witness("x", dom, x)});
              break;
            }
          }
        } else if (!hi.failed()) {
          compare_chains(hi, lbl, {&d(n + 1, i), &s(n, j)},
                         {&s(n - 1, j), &d(n, i - 1)});
        }
      }
    if (lo.instances == 0)
      lo.vacuous("no index pairs with i<j at this level");
    if (hi.instances == 0)
      hi.vacuous("no index pairs with i>j+1 at this level");
    rep.add(std::move(lo));
    rep.add(std::move(id));
    rep.add(std::move(hi));
  }

  for (unsigned n = 0; n + 2 <= N; ++n) {
    Check c(prefix + "s_i s_j = s_{j+1} s_i (i<=j) from " + where(n));
    for (unsigned j = 0; j <= n; ++j)
      for (unsigned i = 0; i <= j && !c.failed(); ++i)
        compare_chains(c,
                       "s_" + std::to_string(i) + " s_" + std::to_string(j),
                       {&s(n + 1, i), &s(n, j)},
                       {&s(n + 1, j + 1), &s(n, i)});
    rep.add(std::move(c));
  }
}

// Checks that every operator connects the expected levels.
inline void check_operator_levels(Check &c, Homomorphism const &f,
                                  GroupPtr const &dom, GroupPtr const &cod,
                                  std::string const &name)
{
  ++c.instances;
  if (f.domain() != dom || f.codomain() != cod)
    c.fail(name + " connects the wrong levels", {});
}

} // namespace detail

inline VerificationReport verify_simplicial(SimplicialGroupTrunc const &g,
                                            std::string subject = "simplicial group")
{
  VerificationReport rep(std::move(subject));
  Check shape("operators connect adjacent levels");
  for (unsigned n = 1; n <= g.max_level; ++n)
    for (unsigned i = 0; i <= n; ++i)
      detail::check_operator_levels(shape, g.d(n, i), g.level(n),
                                    g.level(n - 1),
                                    "d_" + std::to_string(i) + " at level " +
                                      std::to_string(n));
  for (unsigned n = 0; n < g.max_level; ++n)
    for (unsigned j = 0; j <= n; ++j)
      detail::check_operator_levels(shape, g.s(n, j), g.level(n),
                                    g.level(n + 1),
                                    "s_" + std::to_string(j) + " at level " +
                                      std::to_string(n));
  bool shaped = !shape.failed();
  rep.add(std::move(shape));
  if (!shaped)
    return rep;

  detail::check_simplicial_identities(
    rep, g.max_level,
    [&](unsigned n, unsigned i) -> Homomorphism const & { return g.d(n, i); },
    [&](unsigned n, unsigned j) -> Homomorphism const & { return g.s(n, j); },
    "", [](unsigned n) { return "level " + std::to_string(n); });
  return rep;
}

/// Elements of g killed by every listed map.
inline Subgroup
kernel_meet(GroupPtr const &g, std::vector<Homomorphism const *> const &maps)
{
  std::vector<ElemId> elems;
  for (ElemId x = 0; x < g->order(); ++x) {
    bool in = true;
    for (auto f : maps)
      if ((*f)(x) != FiniteGroup::identity()) {
        in = false;
        break;
      }
    if (in)
      elems.push_back(x);
  }
  return Subgroup::from_elements(g, std::move(elems));
}

/// NG_n = ker d_0 n ... n ker d_{n-1}.
inline Subgroup moore(SimplicialGroupTrunc const &g, unsigned n)
{
  std::vector<Homomorphism const *> maps;
  for (unsigned i = 0; i < n; ++i)
    maps.push_back(&g.d(n, i));
  return kernel_meet(g.level(n), maps);
}

/// The Moore complex with each cell promoted to a group and the boundaries
/// d_n restricted to it.
struct MooreComplex
{
  std::vector<EmbeddedGroup> cells;
  std::vector<Homomorphism> boundaries; // boundaries[n] : NG_n -> NG_{n-1}, n >= 1
};

inline MooreComplex moore_complex(SimplicialGroupTrunc const &g)
{
  MooreComplex mc;
  for (unsigned n = 0; n <= g.max_level; ++n)
    mc.cells.push_back(embed(moore(g, n)));
  mc.boundaries.emplace_back();
  for (unsigned n = 1; n <= g.max_level; ++n)
    mc.boundaries.push_back(restrict(g.d(n, n), mc.cells[n], mc.cells[n - 1]));
  return mc;
}

/// |G_n| against the product of |NG_{b(sigma)}| over sigma in S(n).
inline VerificationReport order_factorization(SimplicialGroupTrunc const &g)
{
  VerificationReport rep("order factorization");
  std::vector<std::size_t> ng;
  for (unsigned n = 0; n <= g.max_level; ++n)
    ng.push_back(moore(g, n).order());
  for (unsigned n = 0; n <= g.max_level; ++n) {
    Check c("level " + std::to_string(n));
    std::size_t prod = 1;
    std::string factors;
    for (auto const &sigma : enumerate_S(n)) {
      auto f = ng[sigma.target()];
      prod *= f;
      factors += (factors.empty() ? "" : "·") + std::to_string(f);
    }
    c.instances = 1;
    c.note = std::to_string(g.level(n)->order()) + " = " + factors;
    if (prod != g.level(n)->order())
      c.fail(c.note + " does not hold (product " + std::to_string(prod) + ")",
             {});
    rep.add(std::move(c));
  }
  return rep;
}

/// Every level is g, every operator the identity.
inline SimplicialGroupTrunc constant_simplicial(GroupPtr const &g, unsigned N)
{
  SimplicialGroupTrunc s;
  s.max_level = N;
  auto id = Homomorphism::identity(g);
  for (unsigned n = 0; n <= N; ++n) {
    s.levels.push_back(g);
    s.faces.emplace_back(n == 0 ? 0 : n + 1, id);
    if (n < N)
      s.degeneracies.emplace_back(n + 1, id);
  }
  return s;
}

namespace detail
{

// Level n of the nerve is strings (p_0; m_1, ..., m_n) of composable arrows
// x_k = (m_k, p_{k-1}) in M x| P with p_k = d(m_k) p_{k-1}. It acts on the
// points of P (through p_0) and on n copies of the elements of M, copy k by
// z -> m_k . (p_{k-1} . z).
class NerveCoder
{
public:
  NerveCoder(CrossedModuleData const &x, unsigned n)
  : _x(x), _n(n), _copies(x.M->order() > 1 ? n : 0)
  {}

  unsigned degree() const
  {
    return _x.P->degree() +
           _copies * static_cast<unsigned>(_x.M->order());
  }

  Permutation encode(ElemId p0, std::vector<ElemId> const &ms) const
  {
    std::vector<Point> pts(degree());
    auto pp = _x.P->images(p0);
    std::copy(pp.begin(), pp.end(), pts.begin());
    auto base = _x.P->degree();
    auto mo = static_cast<unsigned>(_x.M->order());
    ElemId p = p0;
    for (unsigned k = 0; k < _copies; ++k) {
      for (ElemId z = 0; z < mo; ++z)
        pts[base + k * mo + z] =
          static_cast<Point>(base + k * mo + _x.M->mul(ms[k], _x.action(p, z)));
      p = _x.P->mul(_x.boundary(ms[k]), p);
    }
    return Permutation(std::move(pts));
  }

  void decode(FiniteGroup const &g, ElemId e, ElemId &p0,
              std::vector<ElemId> &ms) const
  {
    auto im = g.images(e);
    auto dp = _x.P->degree();
    p0 = _x.P->find(im.subspan(0, dp));
    ms.assign(_n, FiniteGroup::identity());
    auto mo = static_cast<unsigned>(_x.M->order());
    for (unsigned k = 0; k < _copies; ++k)
      ms[k] = im[dp + k * mo] - dp - k * mo;
  }

private:
  CrossedModuleData const &_x;
  unsigned _n;
  unsigned _copies;
};

} // namespace detail

/// The nerve of a crossed module, truncated at level N. When M is trivial
/// the result coincides with constant_simplicial(P, N).
inline SimplicialGroupTrunc nerve(CrossedModuleData const &x, unsigned N,
                                  std::size_t cap = default_order_cap)
{
  std::size_t bound = x.P->order();
  for (unsigned n = 0; n < N; ++n)
    bound *= x.M->order();
  if (bound > cap)
    throw OrderCapExceeded("nerve level " + std::to_string(N) + " has order " +
                           std::to_string(bound));

  if (x.M->order() == 1)
    return constant_simplicial(x.P, N);

  SimplicialGroupTrunc s;
  s.max_level = N;
  std::vector<detail::NerveCoder> coders;
  for (unsigned n = 0; n <= N; ++n) {
    detail::NerveCoder coder(x, n);
    std::vector<Permutation> gens;
    std::vector<ElemId> ones(n, FiniteGroup::identity());
    for (auto g : x.P->generator_ids())
      gens.push_back(coder.encode(g, ones));
    for (unsigned k = 0; k < n; ++k)
      for (auto m : x.M->generator_ids()) {
        auto ms = ones;
        ms[k] = m;
        gens.push_back(coder.encode(FiniteGroup::identity(), ms));
      }
    s.levels.push_back(closure(std::move(gens), coder.degree(), cap));
    coders.push_back(coder);
  }

  auto transport = [&](unsigned from, unsigned to, auto &&op) {
    auto const &src = s.levels[from];
    auto const &dst = s.levels[to];
    return Homomorphism::from_function(src, dst, [&](ElemId e) {
      ElemId p0;
      std::vector<ElemId> ms;
      coders[from].decode(*src, e, p0, ms);
      op(p0, ms);
      return dst->find(coders[to].encode(p0, ms));
    });
  };

  s.faces.emplace_back();
  for (unsigned n = 1; n <= N; ++n) {
    std::vector<Homomorphism> fs;
    for (unsigned i = 0; i <= n; ++i)
      fs.push_back(transport(n, n - 1, [&](ElemId &p0, std::vector<ElemId> &ms) {
        if (i == 0) {
          p0 = x.P->mul(x.boundary(ms[0]), p0);
          ms.erase(ms.begin());
        } else if (i == n) {
          ms.pop_back();
        } else {
          ms[i] = x.M->mul(ms[i], ms[i - 1]);
          ms.erase(ms.begin() + (i - 1));
        }
      }));
    s.faces.push_back(std::move(fs));
  }
  for (unsigned n = 0; n < N; ++n) {
    std::vector<Homomorphism> ss;
    for (unsigned j = 0; j <= n; ++j)
      ss.push_back(transport(n, n + 1, [&](ElemId &, std::vector<ElemId> &ms) {
        ms.insert(ms.begin() + j, FiniteGroup::identity());
      }));
    s.degeneracies.push_back(std::move(ss));
  }
  return s;
}

/// Boundary d_1 : NG_1 -> NG_0 with NG_0 acting on NG_1 by conjugation
/// through s_0.
inline CrossedModuleData moore_crossed_module(SimplicialGroupTrunc const &g)
{
  auto mc = moore_complex(g);
  auto const &m = mc.cells[1];
  auto const &p = mc.cells[0];
  auto const &lvl1 = g.level(1);
  auto const &s0 = g.s(0, 0);
  auto act = GroupAction::from_function(p.group, m.group, [&](ElemId a, ElemId x) {
    return m.from_parent(lvl1->conj(s0(p.to_parent(a)), m.to_parent(x)));
  });
  return {m.group, p.group, mc.boundaries[1], std::move(act)};
}

} // namespace peiffer

#endif // PEIFFER_SIMPLICIAL_HPP
