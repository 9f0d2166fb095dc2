#ifndef PEIFFER_PEIFFER_HPP
#define PEIFFER_PEIFFER_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bisimplicial.hpp"

namespace peiffer
{

/// F_{alpha,beta} : NG_{(n,m)-#alpha} x NG_{(n,m)-#beta} -> NG_{n,m}.
struct PeifferPairSpec
{
  unsigned n = 0, m = 0;
  PairIndex alpha;
  PairIndex beta;

  std::pair<unsigned, unsigned> alpha_level() const
  { return {alpha.first.target(), alpha.second.target()}; }

  std::pair<unsigned, unsigned> beta_level() const
  { return {beta.first.target(), beta.second.target()}; }

  std::string to_string() const
  { return "(" + alpha.to_string() + "," + beta.to_string() + ")"; }

  friend bool operator==(PeifferPairSpec const &, PeifferPairSpec const &) = default;
};

inline PeifferPairSpec make_spec(unsigned n, unsigned m,
                                 std::string const &alpha,
                                 std::string const &beta)
{
  auto a = parse_pair(n, m, alpha);
  auto b = parse_pair(n, m, beta);
  if (a == b)
    throw InvalidWord("F needs distinct indices, got " + a.to_string() +
                      " twice");
  return {n, m, std::move(a), std::move(b)};
}

/// Every ordered pair of distinct indices in S(n) x S(m).
inline std::vector<PeifferPairSpec> enumerate_pairs(unsigned n, unsigned m)
{
  std::vector<PeifferPairSpec> specs;
  auto all = enumerate_S(n, m);
  for (auto const &a : all)
    for (auto const &b : all)
      if (!(a == b))
        specs.push_back({n, m, a, b});
  return specs;
}

/// Projections, the composite p and the pairings F over one grid. Moore
/// cells are computed once at construction.
class Peiffer
{
public:
  explicit Peiffer(BisimplicialGroupTrunc const &g)
  : _g(g)
  {
    for (unsigned n = 0; n <= g.max_p; ++n)
      for (unsigned m = 0; m <= g.max_q; ++m)
        _moore.push_back(moore_subgroup(g, n, m));
  }

  BisimplicialGroupTrunc const &grid() const
  { return _g; }

  Subgroup const &moore(unsigned n, unsigned m) const
  { return _moore[_g.slot(n, m)]; }

  /// p_j(x) = x (s_j d_j x)^-1 in the given direction.
  ElemId proj_step(unsigned n, unsigned m, Direction dir, unsigned j,
                   ElemId x) const
  {
    auto const &G = *_g.level(n, m);
    auto k = dir == Direction::horizontal ? n : m;
    if (j >= k)
      throw IndexOutOfRange("p_" + std::to_string(j) + " at level " +
                            level_name(n, m));
    ElemId back;
    if (dir == Direction::horizontal)
      back = _g.sh(n - 1, m, j)(_g.dh(n, m, j)(x));
    else
      back = _g.sv(n, m - 1, j)(_g.dv(n, m, j)(x));
    return G.mul(x, G.inv(back));
  }

  /// p = (p^h_{n-1} ... p^h_0)(p^v_{m-1} ... p^v_0), rightmost first.
  ElemId proj(unsigned n, unsigned m, ElemId x) const
  {
    for (unsigned j = 0; j < m; ++j)
      x = proj_step(n, m, Direction::vertical, j, x);
    for (unsigned i = 0; i < n; ++i)
      x = proj_step(n, m, Direction::horizontal, i, x);
    return x;
  }

  /// s^h_{a1} s^v_{a2} applied to x at level (n,m) - #a.
  ElemId lift(PairIndex const &a, ElemId x) const
  {
    auto p = a.first.target();
    x = apply_degeneracies(_g, Direction::vertical, a.second, p, x);
    return apply_degeneracies(_g, Direction::horizontal, a.first,
                              a.second.source(), x);
  }

  ElemId F(PeifferPairSpec const &spec, ElemId x, ElemId y) const
  {
    auto [xn, xm] = spec.alpha_level();
    auto [yn, ym] = spec.beta_level();
    _g.slot(spec.n, spec.m);
    if (!moore(xn, xm).contains(x))
      throw DomainMembership("x is not in NG_" + level_name(xn, xm));
    if (!moore(yn, ym).contains(y))
      throw DomainMembership("y is not in NG_" + level_name(yn, ym));
    auto const &G = *_g.level(spec.n, spec.m);
    return proj(spec.n, spec.m,
                G.commutator(lift(spec.alpha, x), lift(spec.beta, y)));
  }

private:
  BisimplicialGroupTrunc const &_g;
  std::vector<Subgroup> _moore;
};

/// One row of the table of closed forms.
struct TableRow
{
  unsigned number;
  PeifferPairSpec spec;
  std::string formula;
  std::function<ElemId(BisimplicialGroupTrunc const &, ElemId, ElemId)> closed_form;
};

namespace detail
{

inline ElemId comm(BisimplicialGroupTrunc const &g, unsigned n, unsigned m,
                   ElemId a, ElemId b)
{ return g.level(n, m)->commutator(a, b); }

// [a,b][b,c] at level (n,m)
inline ElemId comm2(BisimplicialGroupTrunc const &g, unsigned n, unsigned m,
                    ElemId a, ElemId b, ElemId c)
{
  auto const &G = *g.level(n, m);
  return G.mul(G.commutator(a, b), G.commutator(b, c));
}

} // namespace detail

/// The 24 closed forms. Rows 1 and 2 use the degeneracies out of level
/// (0,0) in the direction of the pairing.
inline std::vector<TableRow> const &table_rows()
{
  using G = BisimplicialGroupTrunc;
  using detail::comm;
  using detail::comm2;
  static std::vector<TableRow> const rows = {
    {1, make_spec(0, 1, "((),())", "((),(0))"), "[x, sv0 y]",
     [](G const &g, ElemId x, ElemId y) { return comm(g, 0, 1, x, g.sv(0, 0, 0)(y)); }},
    {2, make_spec(1, 0, "((),())", "((0),())"), "[x, sh0 y]",
     [](G const &g, ElemId x, ElemId y) { return comm(g, 1, 0, x, g.sh(0, 0, 0)(y)); }},
    {3, make_spec(1, 1, "((),())", "((),(0))"), "[x, sv0 y]",
     [](G const &g, ElemId x, ElemId y) { return comm(g, 1, 1, x, g.sv(1, 0, 0)(y)); }},
    {4, make_spec(1, 1, "((),())", "((0),())"), "[x, sh0 y]",
     [](G const &g, ElemId x, ElemId y) { return comm(g, 1, 1, x, g.sh(0, 1, 0)(y)); }},
    {5, make_spec(1, 1, "((),())", "((0),(0))"), "[x, sv0 sh0 y]",
     [](G const &g, ElemId x, ElemId y) {
       return comm(g, 1, 1, x, g.sh(0, 1, 0)(g.sv(0, 0, 0)(y)));
     }},
    {6, make_spec(1, 1, "((0),())", "((),(0))"), "[sh0 x, sv0 y]",
     [](G const &g, ElemId x, ElemId y) {
       return comm(g, 1, 1, g.sh(0, 1, 0)(x), g.sv(1, 0, 0)(y));
     }},
    {7, make_spec(0, 2, "((),(0))", "((),(1))"), "[sv0 x, sv1 y][sv1 y, sv1 x]",
     [](G const &g, ElemId x, ElemId y) {
       auto const &s0 = g.sv(0, 1, 0);
       auto const &s1 = g.sv(0, 1, 1);
       return comm2(g, 0, 2, s0(x), s1(y), s1(x));
     }},
    {8, make_spec(2, 0, "((0),())", "((1),())"), "[sh0 x, sh1 y][sh1 y, sh1 x]",
     [](G const &g, ElemId x, ElemId y) {
       auto const &s0 = g.sh(1, 0, 0);
       auto const &s1 = g.sh(1, 0, 1);
       return comm2(g, 2, 0, s0(x), s1(y), s1(x));
     }},
    {9, make_spec(1, 2, "((),(0))", "((),(1))"), "[sv0 x, sv1 y][sv1 y, sv1 x]",
     [](G const &g, ElemId x, ElemId y) {
       auto const &s0 = g.sv(1, 1, 0);
       auto const &s1 = g.sv(1, 1, 1);
       return comm2(g, 1, 2, s0(x), s1(y), s1(x));
     }},
    {10, make_spec(1, 2, "((),(1))", "((0),())"), "[sv1 x, sh0 y]",
     [](G const &g, ElemId x, ElemId y) {
       return comm(g, 1, 2, g.sv(1, 1, 1)(x), g.sh(0, 2, 0)(y));
     }},
    {11, make_spec(1, 2, "((),(0))", "((0),())"), "[sv0 x, sh0 y]",
     [](G const &g, ElemId x, ElemId y) {
       return comm(g, 1, 2, g.sv(1, 1, 0)(x), g.sh(0, 2, 0)(y));
     }},
    {12, make_spec(1, 2, "((0),(1))", "((),(0))"), "[sh0 sv1 x, sv0 y]",
     [](G const &g, ElemId x, ElemId y) {
       return comm(g, 1, 2, g.sh(0, 2, 0)(g.sv(0, 1, 1)(x)), g.sv(1, 1, 0)(y));
     }},
    {13, make_spec(1, 2, "((0),(0))", "((),(1))"), "[sh0 sv0 x, sv1 y]",
     [](G const &g, ElemId x, ElemId y) {
       return comm(g, 1, 2, g.sh(0, 2, 0)(g.sv(0, 1, 0)(x)), g.sv(1, 1, 1)(y));
     }},
    {14, make_spec(2, 1, "((0),())", "((1),())"), "[sh0 x, sh1 y][sh1 y, sh1 x]",
     [](G const &g, ElemId x, ElemId y) {
       auto const &s0 = g.sh(1, 1, 0);
       auto const &s1 = g.sh(1, 1, 1);
       return comm2(g, 2, 1, s0(x), s1(y), s1(x));
     }},
    {15, make_spec(2, 1, "((1),())", "((),(0))"), "[sh1 x, sv0 y]",
     [](G const &g, ElemId x, ElemId y) {
       return comm(g, 2, 1, g.sh(1, 1, 1)(x), g.sv(2, 0, 0)(y));
     }},
    {16, make_spec(2, 1, "((0),())", "((),(0))"), "[sh0 x, sv0 y]",
     [](G const &g, ElemId x, ElemId y) {
       return comm(g, 2, 1, g.sh(1, 1, 0)(x), g.sv(2, 0, 0)(y));
     }},
    {17, make_spec(2, 1, "((1),(0))", "((0),())"), "[sh1 sv0 x, sh0 y]",
     [](G const &g, ElemId x, ElemId y) {
       return comm(g, 2, 1, g.sh(1, 1, 1)(g.sv(1, 0, 0)(x)), g.sh(1, 1, 0)(y));
     }},
    {18, make_spec(2, 1, "((0),(0))", "((1),())"), "[sh0 sv0 x, sh1 y]",
     [](G const &g, ElemId x, ElemId y) {
       return comm(g, 2, 1, g.sh(1, 1, 0)(g.sv(1, 0, 0)(x)), g.sh(1, 1, 1)(y));
     }},
    {19, make_spec(2, 2, "((0),())", "((1),())"), "[sh0 x, sh1 y][sh1 y, sh1 x]",
     [](G const &g, ElemId x, ElemId y) {
       auto const &s0 = g.sh(1, 2, 0);
       auto const &s1 = g.sh(1, 2, 1);
       return comm2(g, 2, 2, s0(x), s1(y), s1(x));
     }},
    {20, make_spec(2, 2, "((),(0))", "((),(1))"), "[sv0 x, sv1 y][sv1 y, sv1 x]",
     [](G const &g, ElemId x, ElemId y) {
       auto const &s0 = g.sv(2, 1, 0);
       auto const &s1 = g.sv(2, 1, 1);
       return comm2(g, 2, 2, s0(x), s1(y), s1(x));
     }},
    {21, make_spec(2, 2, "((1),())", "((),(0))"), "[sh1 x, sv0 y]",
     [](G const &g, ElemId x, ElemId y) {
       return comm(g, 2, 2, g.sh(1, 2, 1)(x), g.sv(2, 1, 0)(y));
     }},
    {22, make_spec(2, 2, "((0),())", "((),(0))"), "[sh0 x, sv0 y]",
     [](G const &g, ElemId x, ElemId y) {
       return comm(g, 2, 2, g.sh(1, 2, 0)(x), g.sv(2, 1, 0)(y));
     }},
    {23, make_spec(2, 2, "((0),(1))", "((),(0))"), "[sv0 sh1 x, sv0 y]",
     [](G const &g, ElemId x, ElemId y) {
       return comm(g, 2, 2, g.sv(2, 1, 0)(g.sh(1, 1, 1)(x)), g.sv(2, 1, 0)(y));
     }},
    {24, make_spec(2, 2, "((0),(0))", "((),(1))"), "[sv1 sh0 x, sv1 y]",
     [](G const &g, ElemId x, ElemId y) {
       return comm(g, 2, 2, g.sv(2, 1, 1)(g.sh(1, 1, 0)(x)), g.sv(2, 1, 1)(y));
     }},
  };
  return rows;
}

/// The table row for this pairing, if any.
inline std::optional<unsigned> table_row(PeifferPairSpec const &spec)
{
  for (auto const &r : table_rows())
    if (r.spec == spec)
      return r.number;
  return std::nullopt;
}

inline std::string cell_name(unsigned n, unsigned m)
{ return "NG" + level_name(n, m); }

/// Compares F with the closed form of one row over its whole domain.
inline Check check_row(Peiffer const &pf, TableRow const &row)
{
  auto const &g = pf.grid();
  auto const &s = row.spec;
  Check c("row " + std::to_string(row.number) + " " + s.to_string() +
          " at " + level_name(s.n, s.m));
  if (!g.in_range(s.n, s.m)) {
    c.skipped("level " + level_name(s.n, s.m) + " beyond truncation");
    return c;
  }
  auto [xn, xm] = s.alpha_level();
  auto [yn, ym] = s.beta_level();
  auto const &X = pf.moore(xn, xm);
  auto const &Y = pf.moore(yn, ym);
  if (X.is_trivial() || Y.is_trivial()) {
    c.vacuous("domain " +
              cell_name(X.is_trivial() ? xn : yn, X.is_trivial() ? xm : ym) +
              " is trivial");
    return c;
  }
  auto const &G = *g.level(s.n, s.m);
  for (auto x : X.elements())
    for (auto y : Y.elements()) {
      ++c.instances;
      auto f = pf.F(s, x, y);
      auto cf = row.closed_form(g, x, y);
      if (f != cf) {
        c.fail("F differs from " + row.formula,
               {witness("x", *g.level(xn, xm), x),
                witness("y", *g.level(yn, ym), y), witness("F(x,y)", G, f),
                witness(row.formula, G, cf)});
        return c;
      }
    }
  c.note = row.formula;
  return c;
}

inline VerificationReport table_check(BisimplicialGroupTrunc const &g)
{
  Peiffer pf(g);
  VerificationReport rep("table of closed forms");
  for (auto const &row : table_rows())
    rep.add(check_row(pf, row));
  return rep;
}

inline std::size_t non_vacuous_rows(VerificationReport const &rep)
{ return rep.count(Status::pass) + rep.count(Status::fail); }

/// N_{n,m}: normal closure of every F value landing in level (n,m).
inline Subgroup N_subgroup(Peiffer const &pf, unsigned n, unsigned m)
{
  auto const &g = pf.grid();
  auto const &G = g.level(n, m);
  std::vector<bool> seen(G->order(), false);
  std::vector<ElemId> values;
  for (auto const &spec : enumerate_pairs(n, m)) {
    auto [xn, xm] = spec.alpha_level();
    auto [yn, ym] = spec.beta_level();
    auto const &X = pf.moore(xn, xm);
    auto const &Y = pf.moore(yn, ym);
    if (X.is_trivial() || Y.is_trivial())
      continue;
    for (auto x : X.elements())
      for (auto y : Y.elements()) {
        auto f = pf.F(spec, x, y);
        if (!seen[f]) {
          seen[f] = true;
          values.push_back(f);
        }
      }
  }
  return normal_closure(G, values);
}

inline Subgroup N_subgroup(BisimplicialGroupTrunc const &g, unsigned n,
                           unsigned m)
{ return N_subgroup(Peiffer(g), n, m); }

namespace detail
{

inline std::string set_name(std::vector<unsigned> const &s)
{
  std::string r = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    r += (i ? "," : "") + std::to_string(s[i]);
  return r + "}";
}

inline std::vector<std::vector<unsigned>> subsets(unsigned k)
{
  std::vector<std::vector<unsigned>> res;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<unsigned> s;
    for (unsigned i = 0; i < k; ++i)
      if (mask & (1u << i))
        s.push_back(i);
    res.push_back(std::move(s));
  }
  return res;
}

inline Check equality_check(std::string name, Subgroup const &lhs,
                            Subgroup const &rhs)
{
  Check c(std::move(name));
  c.instances = lhs.order() + rhs.order();
  c.note = "orders " + std::to_string(lhs.order()) + " and " +
           std::to_string(rhs.order());
  auto const &G = *lhs.parent();
  for (auto x : lhs.elements())
    if (!rhs.contains(x)) {
      c.fail("element of the left side missing on the right",
             {witness("x", G, x)});
      return c;
    }
  for (auto x : rhs.elements())
    if (!lhs.contains(x)) {
      c.fail("element of the right side missing on the left",
             {witness("x", G, x)});
      return c;
    }
  return c;
}

} // namespace detail

/// The boundary of NG n D at level (n,m) in the given direction.
inline Subgroup boundary_of_degenerate_moore(Peiffer const &pf, unsigned n,
                                             unsigned m, Direction dir)
{
  auto const &g = pf.grid();
  auto nd = intersect(pf.moore(n, m), degenerate_subgroup(g, n, m));
  auto const &f = dir == Direction::horizontal ? g.dh(n, m, n) : g.dv(n, m, m);
  return image(f, nd);
}

inline VerificationReport boundary_equalities_check(BisimplicialGroupTrunc const &g)
{
  using detail::equality_check;
  using detail::set_name;
  Peiffer pf(g);
  VerificationReport rep("boundary equalities");

  // The six displayed equalities, at (n,2) vertically and (2,m) horizontally.
  for (unsigned k = 0; k <= 2; ++k) {
    if (g.in_range(k, 2)) {
      auto lhs = boundary_of_degenerate_moore(pf, k, 2, Direction::vertical);
      auto a = kernel_intersection(g, k, 1, Direction::vertical, {0}, true);
      auto b = kernel_intersection(g, k, 1, Direction::vertical, {1}, true);
      rep.add(equality_check("dv(NG n D) = [K_{0} n K_H, K_{1} n K_H] at " +
                               level_name(k, 2),
                             lhs, commutator_subgroup(a, b)));
    } else {
      Check c("dv(NG n D) = [K_{0} n K_H, K_{1} n K_H] at " + level_name(k, 2));
      c.skipped("beyond truncation");
      rep.add(std::move(c));
    }
  }
  for (unsigned k = 0; k <= 2; ++k) {
    if (g.in_range(2, k)) {
      auto lhs = boundary_of_degenerate_moore(pf, 2, k, Direction::horizontal);
      auto a = kernel_intersection(g, 1, k, Direction::horizontal, {0}, true);
      auto b = kernel_intersection(g, 1, k, Direction::horizontal, {1}, true);
      rep.add(equality_check("dh(NG n D) = [K_{0} n K_V, K_{1} n K_V] at " +
                               level_name(2, k),
                             lhs, commutator_subgroup(a, b)));
    } else {
      Check c("dh(NG n D) = [K_{0} n K_V, K_{1} n K_V] at " + level_name(2, k));
      c.skipped("beyond truncation");
      rep.add(std::move(c));
    }
  }

  // Boundaries of NG n D and N n D agree.
  for (unsigned n = 0; n <= g.max_p; ++n)
    for (unsigned m = 0; m <= g.max_q; ++m) {
      if (n < 2 && m < 2)
        continue;
      auto N = N_subgroup(pf, n, m);
      auto D = degenerate_subgroup(g, n, m);
      auto nd = intersect(N, D);
      if (n >= 2)
        rep.add(equality_check("dh(NG n D) = dh(N n D) at " + level_name(n, m),
                               boundary_of_degenerate_moore(pf, n, m, Direction::horizontal),
                               image(g.dh(n, m, n), nd)));
      if (m >= 2)
        rep.add(equality_check("dv(NG n D) = dv(N n D) at " + level_name(n, m),
                               boundary_of_degenerate_moore(pf, n, m, Direction::vertical),
                               image(g.dv(n, m, m), nd)));
    }

  // [K_I n K_H, K_J n K_H] inside dv(NG n D) for every cover I u J of the
  // vertical faces, and the horizontal analogue.
  auto inclusions = [&](unsigned n, unsigned m, Direction dir) {
    bool vert = dir == Direction::vertical;
    auto k = vert ? m : n;
    auto ln = vert ? n : n - 1;
    auto lm = vert ? m - 1 : m;
    Check c(std::string(vert ? "[K_I n K_H, K_J n K_H] in dv(NG n D)"
                             : "[K_I n K_V, K_J n K_V] in dh(NG n D)") +
            " at " + level_name(n, m));
    auto target = boundary_of_degenerate_moore(pf, n, m, dir);
    auto all = detail::subsets(k);
    for (auto const &I : all)
      for (auto const &J : all) {
        std::vector<bool> cover(k, false);
        for (auto i : I)
          cover[i] = true;
        for (auto j : J)
          cover[j] = true;
        if (std::find(cover.begin(), cover.end(), false) != cover.end())
          continue;
        ++c.instances;
        if (c.failed())
          continue;
        auto a = kernel_intersection(g, ln, lm, dir, I, true);
        auto b = kernel_intersection(g, ln, lm, dir, J, true);
        auto comm = commutator_subgroup(a, b);
        for (auto x : comm.elements())
          if (!target.contains(x)) {
            c.fail("I = " + set_name(I) + ", J = " + set_name(J),
                   {witness("commutator", *g.level(ln, lm), x)});
            break;
          }
      }
    rep.add(std::move(c));
  };
  for (unsigned n = 1; n <= g.max_p; ++n)
    for (unsigned m = 2; m <= g.max_q; ++m)
      inclusions(n, m, Direction::vertical);
  for (unsigned n = 2; n <= g.max_p; ++n)
    for (unsigned m = 1; m <= g.max_q; ++m)
      inclusions(n, m, Direction::horizontal);
  return rep;
}

} // namespace peiffer

#endif // PEIFFER_PEIFFER_HPP
