#ifndef PEIFFER_CROSSED_HPP
#define PEIFFER_CROSSED_HPP

#include <functional>
#include <string>
#include <vector>

#include "peiffer.hpp"
#include "simplicial.hpp"

namespace peiffer
{

/// L -> M, L -> N, M -> P, N -> P with P acting on L, M, N and h : M x N -> L.
struct CrossedSquareData
{
  GroupPtr L, M, N, P;
  Homomorphism lambda;       // L -> M
  Homomorphism lambda_prime; // L -> N
  Homomorphism mu;           // M -> P
  Homomorphism nu;           // N -> P
  GroupAction act_L, act_M, act_N;
  std::vector<ElemId> h; // h[x * |N| + y]

  ElemId H(ElemId x, ElemId y) const
  { return h[x * N->order() + y]; }
};

/// L -> M -> N with N acting on M and L, M acting on L, and the lifting
/// {,} : M x M -> L.
struct TwoCrossedModuleData
{
  GroupPtr L, M, N;
  Homomorphism d2; // L -> M
  Homomorphism d1; // M -> N
  GroupAction act_M, act_L;
  GroupAction m_on_L;
  std::vector<ElemId> lifting; // lifting[y * |M| + y']

  ElemId lift(ElemId y, ElemId y2) const
  { return lifting[y * M->order() + y2]; }
};

namespace detail
{

/// ^1 x = x, each generator acts by an automorphism, and ^{gp} = ^g ^p for
/// every generator g. Together these make act a homomorphism into Aut.
inline Check action_check(std::string name, GroupAction const &act)
{
  Check c(std::move(name));
  auto const &A = *act.acting();
  auto const &T = *act.target();
  for (ElemId x = 0; x < T.order() && !c.failed(); ++x) {
    ++c.instances;
    if (act(A.identity(), x) != x)
      c.fail("identity acts nontrivially", {witness("x", T, x)});
  }
  for (auto g : A.generator_ids())
    for (ElemId x = 0; x < T.order() && !c.failed(); ++x)
      for (ElemId y = 0; y < T.order(); ++y) {
        ++c.instances;
        if (act(g, T.mul(x, y)) != T.mul(act(g, x), act(g, y))) {
          c.fail("not an automorphism",
                 {witness("p", A, g), witness("x", T, x), witness("y", T, y)});
          break;
        }
      }
  for (auto g : A.generator_ids())
    for (ElemId p = 0; p < A.order() && !c.failed(); ++p)
      for (ElemId x = 0; x < T.order(); ++x) {
        ++c.instances;
        if (act(A.mul(g, p), x) != act(g, act(p, x))) {
          c.fail("^(gp)x differs from ^g(^p x)",
                 {witness("g", A, g), witness("p", A, p), witness("x", T, x)});
          break;
        }
      }
  return c;
}

/// f(^p x) = ^p f(x) for one group acting on both sides.
inline Check equivariance_check(std::string name, Homomorphism const &f,
                                GroupAction const &dom_act,
                                GroupAction const &cod_act)
{
  Check c(std::move(name));
  auto const &A = *dom_act.acting();
  auto const &D = *f.domain();
  auto const &C = *f.codomain();
  for (ElemId p = 0; p < A.order() && !c.failed(); ++p)
    for (ElemId x = 0; x < D.order(); ++x) {
      ++c.instances;
      auto lhs = f(dom_act(p, x));
      auto rhs = cod_act(p, f(x));
      if (lhs != rhs) {
        c.fail("f(^p x) differs from ^p f(x)",
               {witness("p", A, p), witness("x", D, x), witness("f(^p x)", C, lhs),
                witness("^p f(x)", C, rhs)});
        break;
      }
    }
  return c;
}

} // namespace detail

inline VerificationReport check_crossed_module(CrossedModuleData const &x,
                                               std::string subject = "crossed module")
{
  VerificationReport rep(std::move(subject));
  auto const &M = *x.M;
  auto const &P = *x.P;
  auto const &d = x.boundary;
  Check shape("boundary and action are compatible");
  if (d.domain() != x.M || d.codomain() != x.P || x.action.acting() != x.P ||
      x.action.target() != x.M)
    shape.fail("boundary or action has the wrong groups", {});
  bool shaped = !shape.failed();
  rep.add(std::move(shape));
  if (!shaped)
    return rep;

  rep.add(detail::action_check("action by automorphisms", x.action));

  Check cm1("CM1");
  for (ElemId p = 0; p < P.order() && !cm1.failed(); ++p)
    for (ElemId m = 0; m < M.order(); ++m) {
      ++cm1.instances;
      auto lhs = d(x.action(p, m));
      auto rhs = P.conj(p, d(m));
      if (lhs != rhs) {
        cm1.fail("d(^p x) differs from p d(x) p^-1",
                 {witness("p", P, p), witness("x", M, m),
                  witness("d(^p x)", P, lhs), witness("p d(x) p^-1", P, rhs)});
        break;
      }
    }
  rep.add(std::move(cm1));

  Check cm2("CM2");
  for (ElemId a = 0; a < M.order() && !cm2.failed(); ++a)
    for (ElemId b = 0; b < M.order(); ++b) {
      ++cm2.instances;
      auto lhs = x.action(d(a), b);
      auto rhs = M.conj(a, b);
      if (lhs != rhs) {
        cm2.fail("^(dx) y differs from x y x^-1",
                 {witness("x", M, a), witness("y", M, b),
                  witness("^(dx) y", M, lhs), witness("x y x^-1", M, rhs)});
        break;
      }
    }
  rep.add(std::move(cm2));
  return rep;
}

inline VerificationReport check_crossed_square(CrossedSquareData const &x,
                                               std::string subject = "crossed square")
{
  VerificationReport rep(std::move(subject));
  auto const &L = *x.L;
  auto const &M = *x.M;
  auto const &N = *x.N;
  auto const &P = *x.P;

  Check shape("maps, actions and h have the right groups");
  if (x.lambda.domain() != x.L || x.lambda.codomain() != x.M ||
      x.lambda_prime.domain() != x.L || x.lambda_prime.codomain() != x.N ||
      x.mu.domain() != x.M || x.mu.codomain() != x.P ||
      x.nu.domain() != x.N || x.nu.codomain() != x.P ||
      x.act_L.acting() != x.P || x.act_L.target() != x.L ||
      x.act_M.acting() != x.P || x.act_M.target() != x.M ||
      x.act_N.acting() != x.P || x.act_N.target() != x.N ||
      x.h.size() != M.order() * N.order())
    shape.fail("component with the wrong domain or codomain", {});
  for (auto v : x.h)
    if (v >= L.order()) {
      shape.fail("h value outside L", {});
      break;
    }
  bool shaped = !shape.failed();
  rep.add(std::move(shape));
  if (!shaped)
    return rep;

  Check square("mu lambda = nu lambda'");
  for (ElemId z = 0; z < L.order(); ++z) {
    ++square.instances;
    if (x.mu(x.lambda(z)) != x.nu(x.lambda_prime(z))) {
      square.fail("square does not commute", {witness("z", L, z)});
      break;
    }
  }
  rep.add(std::move(square));

  rep.add(detail::action_check("P acts on L by automorphisms", x.act_L));
  rep.add(detail::action_check("P acts on M by automorphisms", x.act_M));
  rep.add(detail::action_check("P acts on N by automorphisms", x.act_N));

  rep.add(detail::equivariance_check("axiom 1: lambda is P-equivariant",
                                     x.lambda, x.act_L, x.act_M));
  rep.add(detail::equivariance_check("axiom 1: lambda' is P-equivariant",
                                     x.lambda_prime, x.act_L, x.act_N));
  auto sub = [&](std::string const &label, CrossedModuleData const &cm) {
    auto r = check_crossed_module(cm);
    for (auto &c : r.checks)
      if (c.name == "CM1" || c.name == "CM2") {
        c.name = "axiom 1: " + label + " " + c.name;
        rep.add(std::move(c));
      }
  };
  sub("mu", {x.M, x.P, x.mu, x.act_M});
  sub("nu", {x.N, x.P, x.nu, x.act_N});
  sub("mu lambda", {x.L, x.P, compose(x.mu, x.lambda), x.act_L});
  sub("nu lambda'", {x.L, x.P, compose(x.nu, x.lambda_prime), x.act_L});

  // M and N act on everything through mu and nu.
  auto byN = [&](ElemId y, GroupAction const &act, ElemId e) { return act(x.nu(y), e); };
  auto byM = [&](ElemId m, GroupAction const &act, ElemId e) { return act(x.mu(m), e); };

  Check a2l("axiom 2: lambda h(x,y) = x ^(nu y) x^-1");
  Check a2r("axiom 2: lambda' h(x,y) = ^(mu x) y y^-1");
  for (ElemId m = 0; m < M.order(); ++m)
    for (ElemId y = 0; y < N.order(); ++y) {
      ++a2l.instances;
      ++a2r.instances;
      auto hv = x.H(m, y);
      auto l = M.mul(m, M.inv(byN(y, x.act_M, m)));
      if (!a2l.failed() && x.lambda(hv) != l)
        a2l.fail("lambda h(x,y) differs",
                 {witness("x", M, m), witness("y", N, y), witness("h(x,y)", L, hv),
                  witness("x ^(nu y) x^-1", M, l)});
      auto r = N.mul(byM(m, x.act_N, y), N.inv(y));
      if (!a2r.failed() && x.lambda_prime(hv) != r)
        a2r.fail("lambda' h(x,y) differs",
                 {witness("x", M, m), witness("y", N, y), witness("h(x,y)", L, hv),
                  witness("^(mu x) y y^-1", N, r)});
    }
  rep.add(std::move(a2l));
  rep.add(std::move(a2r));

  Check a3l("axiom 3: h(lambda z, y) = z ^(nu y) z^-1");
  Check a3r("axiom 3: h(x, lambda' z) = ^(mu x) z z^-1");
  for (ElemId z = 0; z < L.order(); ++z) {
    for (ElemId y = 0; y < N.order() && !a3l.failed(); ++y) {
      ++a3l.instances;
      auto lhs = x.H(x.lambda(z), y);
      auto rhs = L.mul(z, L.inv(byN(y, x.act_L, z)));
      if (lhs != rhs)
        a3l.fail("h(lambda z, y) differs",
                 {witness("z", L, z), witness("y", N, y), witness("lhs", L, lhs),
                  witness("rhs", L, rhs)});
    }
    for (ElemId m = 0; m < M.order() && !a3r.failed(); ++m) {
      ++a3r.instances;
      auto lhs = x.H(m, x.lambda_prime(z));
      auto rhs = L.mul(byM(m, x.act_L, z), L.inv(z));
      if (lhs != rhs)
        a3r.fail("h(x, lambda' z) differs",
                 {witness("x", M, m), witness("z", L, z), witness("lhs", L, lhs),
                  witness("rhs", L, rhs)});
    }
  }
  rep.add(std::move(a3l));
  rep.add(std::move(a3r));

  Check a4l("axiom 4: h(xx',y) = ^(mu x) h(x',y) h(x,y)");
  for (ElemId a = 0; a < M.order() && !a4l.failed(); ++a)
    for (ElemId b = 0; b < M.order() && !a4l.failed(); ++b)
      for (ElemId y = 0; y < N.order(); ++y) {
        ++a4l.instances;
        auto lhs = x.H(M.mul(a, b), y);
        auto rhs = L.mul(byM(a, x.act_L, x.H(b, y)), x.H(a, y));
        if (lhs != rhs) {
          a4l.fail("h(xx',y) differs",
                   {witness("x", M, a), witness("x'", M, b), witness("y", N, y),
                    witness("lhs", L, lhs), witness("rhs", L, rhs)});
          break;
        }
      }
  rep.add(std::move(a4l));

  Check a4r("axiom 4: h(x,yy') = h(x,y) ^(nu y) h(x,y')");
  for (ElemId m = 0; m < M.order() && !a4r.failed(); ++m)
    for (ElemId a = 0; a < N.order() && !a4r.failed(); ++a)
      for (ElemId b = 0; b < N.order(); ++b) {
        ++a4r.instances;
        auto lhs = x.H(m, N.mul(a, b));
        auto rhs = L.mul(x.H(m, a), byN(a, x.act_L, x.H(m, b)));
        if (lhs != rhs) {
          a4r.fail("h(x,yy') differs",
                   {witness("x", M, m), witness("y", N, a), witness("y'", N, b),
                    witness("lhs", L, lhs), witness("rhs", L, rhs)});
          break;
        }
      }
  rep.add(std::move(a4r));

  Check a5("axiom 5: h(^t x, ^t y) = ^t h(x,y)");
  for (ElemId t = 0; t < P.order() && !a5.failed(); ++t)
    for (ElemId m = 0; m < M.order() && !a5.failed(); ++m)
      for (ElemId y = 0; y < N.order(); ++y) {
        ++a5.instances;
        auto lhs = x.H(x.act_M(t, m), x.act_N(t, y));
        auto rhs = x.act_L(t, x.H(m, y));
        if (lhs != rhs) {
          a5.fail("h(^t x, ^t y) differs",
                  {witness("t", P, t), witness("x", M, m), witness("y", N, y),
                   witness("lhs", L, lhs), witness("rhs", L, rhs)});
          break;
        }
      }
  rep.add(std::move(a5));
  return rep;
}

inline VerificationReport check_two_crossed_module(TwoCrossedModuleData const &x,
                                                   std::string subject = "2-crossed module")
{
  VerificationReport rep(std::move(subject));
  auto const &L = *x.L;
  auto const &M = *x.M;
  auto const &N = *x.N;

  Check shape("maps, actions and lifting have the right groups");
  if (x.d2.domain() != x.L || x.d2.codomain() != x.M ||
      x.d1.domain() != x.M || x.d1.codomain() != x.N ||
      x.act_M.acting() != x.N || x.act_M.target() != x.M ||
      x.act_L.acting() != x.N || x.act_L.target() != x.L ||
      x.m_on_L.acting() != x.M || x.m_on_L.target() != x.L ||
      x.lifting.size() != M.order() * M.order())
    shape.fail("component with the wrong domain or codomain", {});
  for (auto v : x.lifting)
    if (v >= L.order()) {
      shape.fail("lifting value outside L", {});
      break;
    }
  bool shaped = !shape.failed();
  rep.add(std::move(shape));
  if (!shaped)
    return rep;

  Check cx("complex: d1 d2 trivial");
  for (ElemId z = 0; z < L.order(); ++z) {
    ++cx.instances;
    if (x.d1(x.d2(z)) != N.identity()) {
      cx.fail("d1 d2 z is not 1", {witness("z", L, z)});
      break;
    }
  }
  rep.add(std::move(cx));

  rep.add(detail::action_check("N acts on M by automorphisms", x.act_M));
  rep.add(detail::action_check("N acts on L by automorphisms", x.act_L));
  rep.add(detail::action_check("M acts on L by automorphisms", x.m_on_L));
  rep.add(detail::equivariance_check("d2 is N-equivariant", x.d2, x.act_L, x.act_M));
  auto conjN = GroupAction::conjugation(x.N);
  rep.add(detail::equivariance_check("d1 is N-equivariant", x.d1, x.act_M, conjN));

  auto lift = [&](ElemId a, ElemId b) { return x.lift(a, b); };
  auto byd1 = [&](ElemId y, ElemId m) { return x.act_M(x.d1(y), m); };

  Check a1("axiom 1: d2{y,y'} = y y' y^-1 (^(d1 y) y')^-1");
  for (ElemId a = 0; a < M.order() && !a1.failed(); ++a)
    for (ElemId b = 0; b < M.order(); ++b) {
      ++a1.instances;
      auto lhs = x.d2(lift(a, b));
      auto rhs = M.mul(M.conj(a, b), M.inv(byd1(a, b)));
      if (lhs != rhs) {
        a1.fail("d2{y,y'} differs",
                {witness("y", M, a), witness("y'", M, b), witness("lhs", M, lhs),
                 witness("rhs", M, rhs)});
        break;
      }
    }
  rep.add(std::move(a1));

  Check a2("axiom 2: {d2 z, d2 z'} = [z, z']");
  for (ElemId z = 0; z < L.order() && !a2.failed(); ++z)
    for (ElemId w = 0; w < L.order(); ++w) {
      ++a2.instances;
      auto lhs = lift(x.d2(z), x.d2(w));
      auto rhs = L.commutator(z, w);
      if (lhs != rhs) {
        a2.fail("{d2 z, d2 z'} differs",
                {witness("z", L, z), witness("z'", L, w), witness("lhs", L, lhs),
                 witness("rhs", L, rhs)});
        break;
      }
    }
  rep.add(std::move(a2));

  Check a3("axiom 3: {d2 z, y}{y, d2 z} = z (^(d1 y) z)^-1");
  for (ElemId z = 0; z < L.order() && !a3.failed(); ++z)
    for (ElemId y = 0; y < M.order(); ++y) {
      ++a3.instances;
      auto dz = x.d2(z);
      auto lhs = L.mul(lift(dz, y), lift(y, dz));
      auto rhs = L.mul(z, L.inv(x.act_L(x.d1(y), z)));
      if (lhs != rhs) {
        a3.fail("{d2 z, y}{y, d2 z} differs",
                {witness("z", L, z), witness("y", M, y), witness("lhs", L, lhs),
                 witness("rhs", L, rhs)});
        break;
      }
    }
  rep.add(std::move(a3));

  Check a4("axiom 4: {y, y'y''} = {y,y'}{y,y''}{d2{y,y''}^-1, ^(d1 y) y'}");
  Check a5("axiom 5: {yy', y''} = {y, y'y''y'^-1} ^(d1 y){y', y''}");
  for (ElemId a = 0; a < M.order(); ++a)
    for (ElemId b = 0; b < M.order(); ++b)
      for (ElemId c = 0; c < M.order(); ++c) {
        ++a4.instances;
        ++a5.instances;
        if (!a4.failed()) {
          auto lhs = lift(a, M.mul(b, c));
          auto rhs = L.mul(L.mul(lift(a, b), lift(a, c)),
                           lift(M.inv(x.d2(lift(a, c))), byd1(a, b)));
          if (lhs != rhs)
            a4.fail("{y, y'y''} differs",
                    {witness("y", M, a), witness("y'", M, b), witness("y''", M, c),
                     witness("lhs", L, lhs), witness("rhs", L, rhs)});
        }
        if (!a5.failed()) {
          auto lhs = lift(M.mul(a, b), c);
          auto rhs = L.mul(lift(a, M.conj(b, c)), x.act_L(x.d1(a), lift(b, c)));
          if (lhs != rhs)
            a5.fail("{yy', y''} differs",
                    {witness("y", M, a), witness("y'", M, b), witness("y''", M, c),
                     witness("lhs", L, lhs), witness("rhs", L, rhs)});
        }
      }
  rep.add(std::move(a4));
  rep.add(std::move(a5));

  Check a6("axiom 6: ^x{y,y'} = {^x y, ^x y'}");
  for (ElemId t = 0; t < N.order() && !a6.failed(); ++t)
    for (ElemId a = 0; a < M.order() && !a6.failed(); ++a)
      for (ElemId b = 0; b < M.order(); ++b) {
        ++a6.instances;
        auto lhs = x.act_L(t, lift(a, b));
        auto rhs = lift(x.act_M(t, a), x.act_M(t, b));
        if (lhs != rhs) {
          a6.fail("^x{y,y'} differs",
                  {witness("x", N, t), witness("y", M, a), witness("y'", M, b),
                   witness("lhs", L, lhs), witness("rhs", L, rhs)});
          break;
        }
      }
  rep.add(std::move(a6));
  return rep;
}

/// The square of a pair of normal subgroups M, N of P: L = M n N, inclusions,
/// conjugation actions and h(x,y) = [x,y].
inline CrossedSquareData normal_pair_square(Subgroup const &M, Subgroup const &N)
{
  if (M.parent() != N.parent())
    throw LevelMismatch("normal pair from different groups");
  if (!M.is_normal() || !N.is_normal())
    throw HypothesisViolated("normal pair needs normal subgroups");
  auto const &P = M.parent();
  auto eL = embed(intersect(M, N));
  auto eM = embed(M);
  auto eN = embed(N);
  auto conj_on = [&](EmbeddedGroup const &e) {
    return GroupAction::from_function(P, e.group, [&](ElemId t, ElemId x) {
      return e.from_parent(P->conj(t, e.to_parent(x)));
    });
  };
  CrossedSquareData sq;
  sq.L = eL.group;
  sq.M = eM.group;
  sq.N = eN.group;
  sq.P = P;
  sq.lambda = Homomorphism::from_function(sq.L, sq.M, [&](ElemId z) {
    return eM.from_parent(eL.to_parent(z));
  });
  sq.lambda_prime = Homomorphism::from_function(sq.L, sq.N, [&](ElemId z) {
    return eN.from_parent(eL.to_parent(z));
  });
  sq.mu = eM.inclusion;
  sq.nu = eN.inclusion;
  sq.act_L = conj_on(eL);
  sq.act_M = conj_on(eM);
  sq.act_N = conj_on(eN);
  sq.h.resize(sq.M->order() * sq.N->order());
  for (ElemId x = 0; x < sq.M->order(); ++x)
    for (ElemId y = 0; y < sq.N->order(); ++y)
      sq.h[x * sq.N->order() + y] =
        eL.from_parent(P->commutator(eM.to_parent(x), eN.to_parent(y)));
  return sq;
}

namespace detail
{

/// Throws HypothesisViolated unless NG_{p,q} is trivial wherever pred holds.
template<typename Pred>
void require_trivial_moore(Peiffer const &pf, Pred &&pred, std::string const &what)
{
  auto const &g = pf.grid();
  for (unsigned p = 0; p <= g.max_p; ++p)
    for (unsigned q = 0; q <= g.max_q; ++q)
      if (pred(p, q) && !pf.moore(p, q).is_trivial()) {
        auto const &cell = pf.moore(p, q);
        auto w = cell.elements()[1];
        throw HypothesisViolated(what + ": NG" + level_name(p, q) +
                                 " is nontrivial, contains " +
                                 g.level(p, q)->element(w).to_cycle_string());
      }
}

inline GroupAction conj_through(EmbeddedGroup const &acting,
                                EmbeddedGroup const &target,
                                std::function<ElemId(ElemId)> lift)
{
  auto const &T = *target.subgroup.parent();
  return GroupAction::from_function(acting.group, target.group, [&](ElemId a, ElemId x) {
    auto y = T.conj(lift(acting.to_parent(a)), target.to_parent(x));
    if (!target.subgroup.contains(y))
      throw HypothesisViolated("conjugation leaves the Moore cell");
    return target.from_parent(y);
  });
}

} // namespace detail

/// The three crossed modules of a grid whose Moore cells vanish off the axes.
struct ExtractedCrossedModules
{
  CrossedModuleData vertical;   // NG_{0,1} -> NG_{0,0}
  CrossedModuleData horizontal; // NG_{1,0} -> NG_{0,0}
  CrossedModuleData product;    // NG_{0,1} x NG_{1,0} -> NG_{0,0}
};

inline ExtractedCrossedModules extract_crossed_module(BisimplicialGroupTrunc const &g,
                                                      std::size_t cap = default_order_cap)
{
  if (g.max_p < 1 || g.max_q < 1)
    throw TruncationExceeded("crossed modules need levels (0,1) and (1,0)");
  Peiffer pf(g);
  detail::require_trivial_moore(
    pf, [](unsigned p, unsigned q) { return p >= 1 && q >= 1; },
    "crossed module extraction");
  auto P = embed(pf.moore(0, 0), cap);
  auto X = embed(pf.moore(0, 1), cap);
  auto Y = embed(pf.moore(1, 0), cap);
  auto const &sv = g.sv(0, 0, 0);
  auto const &sh = g.sh(0, 0, 0);
  auto dv = restrict(g.dv(0, 1, 1), X, P);
  auto dh = restrict(g.dh(1, 0, 1), Y, P);
  auto act_v = detail::conj_through(P, X, [&](ElemId a) { return sv(a); });
  auto act_h = detail::conj_through(P, Y, [&](ElemId a) { return sh(a); });

  auto prod = direct_product(X.group, Y.group, cap);
  auto boundary = Homomorphism::from_function(prod.group, P.group, [&](ElemId e) {
    return P.group->mul(dv(prod.proj_left(e)), dh(prod.proj_right(e)));
  });
  auto act_p = GroupAction::from_function(P.group, prod.group, [&](ElemId a, ElemId e) {
    return prod.pair(act_v(a, prod.proj_left(e)), act_h(a, prod.proj_right(e)));
  });
  return {{X.group, P.group, dv, act_v},
          {Y.group, P.group, dh, act_h},
          {prod.group, P.group, boundary, act_p}};
}

/// The pairing that realizes the h-map: ((0),()) x ((),(0)) at (1,1).
inline PeifferPairSpec h_spec()
{ return make_spec(1, 1, "((0),())", "((),(0))"); }

inline CrossedSquareData extract_crossed_square(BisimplicialGroupTrunc const &g,
                                                std::size_t cap = default_order_cap)
{
  if (g.max_p < 1 || g.max_q < 1)
    throw TruncationExceeded("crossed squares need level (1,1)");
  Peiffer pf(g);
  detail::require_trivial_moore(
    pf, [](unsigned p, unsigned q) { return p >= 2 || q >= 2; },
    "crossed square extraction");
  auto eP = embed(pf.moore(0, 0), cap);
  auto eM = embed(pf.moore(0, 1), cap);
  auto eN = embed(pf.moore(1, 0), cap);
  auto eL = embed(pf.moore(1, 1), cap);
  CrossedSquareData sq;
  sq.L = eL.group;
  sq.M = eM.group;
  sq.N = eN.group;
  sq.P = eP.group;
  sq.lambda = restrict(g.dh(1, 1, 1), eL, eM);
  sq.lambda_prime = restrict(g.dv(1, 1, 1), eL, eN);
  sq.mu = restrict(g.dv(0, 1, 1), eM, eP);
  sq.nu = restrict(g.dh(1, 0, 1), eN, eP);
  auto const &sv = g.sv(0, 0, 0);
  auto const &sh = g.sh(0, 0, 0);
  auto const &sh01 = g.sh(0, 1, 0);
  sq.act_M = detail::conj_through(eP, eM, [&](ElemId a) { return sv(a); });
  sq.act_N = detail::conj_through(eP, eN, [&](ElemId a) { return sh(a); });
  sq.act_L = detail::conj_through(eP, eL, [&](ElemId a) { return sh01(sv(a)); });
  auto spec = h_spec();
  sq.h.resize(sq.M->order() * sq.N->order());
  for (ElemId x = 0; x < sq.M->order(); ++x)
    for (ElemId y = 0; y < sq.N->order(); ++y)
      sq.h[x * sq.N->order() + y] =
        eL.from_parent(pf.F(spec, eM.to_parent(x), eN.to_parent(y)));
  return sq;
}

namespace detail
{

/// Three consecutive levels of a simplicial direction with their Moore
/// cells. Faces d1 : 1 -> 0, d2 : 2 -> 1; degeneracies s00 : 0 -> 1 and
/// s10, s11 : 1 -> 2.
struct Chain
{
  Subgroup ng0, ng1, ng2;
  Homomorphism const *d1, *d2, *s00, *s10, *s11;
};

/// NG0 acts on NG1 and NG2 by conjugation through degeneracies, NG1 acts on
/// NG2 through s_1 and {y,y'} = s_1(y y' y^-1) s_0(y) s_1(y')^-1 s_0(y)^-1.
inline TwoCrossedModuleData two_crossed_from_chain(Chain const &c, std::size_t cap)
{
  auto e0 = embed(c.ng0, cap);
  auto e1 = embed(c.ng1, cap);
  auto e2 = embed(c.ng2, cap);
  auto const &G2 = *c.ng2.parent();
  TwoCrossedModuleData x;
  x.L = e2.group;
  x.M = e1.group;
  x.N = e0.group;
  x.d2 = restrict(*c.d2, e2, e1);
  x.d1 = restrict(*c.d1, e1, e0);
  x.act_M = conj_through(e0, e1, [&](ElemId a) { return (*c.s00)(a); });
  x.act_L = conj_through(e0, e2, [&](ElemId a) { return (*c.s10)((*c.s00)(a)); });
  x.m_on_L = conj_through(e1, e2, [&](ElemId y) { return (*c.s11)(y); });
  auto const &G1 = *c.ng1.parent();
  auto m = x.M->order();
  x.lifting.resize(m * m);
  for (ElemId a = 0; a < m; ++a)
    for (ElemId b = 0; b < m; ++b) {
      auto y = e1.to_parent(a), y2 = e1.to_parent(b);
      auto s0y = (*c.s10)(y);
      auto v = G2.mul(G2.mul((*c.s11)(G1.conj(y, y2)), s0y),
                      G2.mul(G2.inv((*c.s11)(y2)), G2.inv(s0y)));
      if (!c.ng2.contains(v))
        throw HypothesisViolated("lifting leaves the Moore cell");
      x.lifting[a * m + b] = e2.from_parent(v);
    }
  return x;
}

} // namespace detail

inline TwoCrossedModuleData two_crossed_from_simplicial(SimplicialGroupTrunc const &s,
                                                        std::size_t cap = default_order_cap)
{
  if (s.max_level < 2)
    throw TruncationExceeded("2-crossed modules need level 2");
  for (unsigned n = 3; n <= s.max_level; ++n) {
    auto cell = moore(s, n);
    if (!cell.is_trivial())
      throw HypothesisViolated("NG_" + std::to_string(n) +
                               " is nontrivial, contains " +
                               s.level(n)->element(cell.elements()[1]).to_cycle_string());
  }
  detail::Chain c{moore(s, 0), moore(s, 1), moore(s, 2), &s.d(1, 1), &s.d(2, 2),
                  &s.s(0, 0), &s.s(1, 0), &s.s(1, 1)};
  return detail::two_crossed_from_chain(c, cap);
}

/// NG_{p,2} -> NG_{p,1} -> NG_{p,0} along the vertical direction.
inline TwoCrossedModuleData two_crossed_from_rows(BisimplicialGroupTrunc const &g,
                                                  unsigned p,
                                                  std::size_t cap = default_order_cap)
{
  if (g.max_q < 2 || p > g.max_p)
    throw TruncationExceeded("rows need levels " + level_name(p, 0) + " to " +
                             level_name(p, 2));
  Peiffer pf(g);
  detail::require_trivial_moore(
    pf, [&](unsigned a, unsigned q) { return a == p && q >= 3; },
    "2-crossed module from rows");
  detail::Chain c{pf.moore(p, 0), pf.moore(p, 1), pf.moore(p, 2),
                  &g.dv(p, 1, 1), &g.dv(p, 2, 2), &g.sv(p, 0, 0),
                  &g.sv(p, 1, 0), &g.sv(p, 1, 1)};
  return detail::two_crossed_from_chain(c, cap);
}

/// NG_{2,q} -> NG_{1,q} -> NG_{0,q} along the horizontal direction.
inline TwoCrossedModuleData two_crossed_from_cols(BisimplicialGroupTrunc const &g,
                                                  unsigned q,
                                                  std::size_t cap = default_order_cap)
{
  if (g.max_p < 2 || q > g.max_q)
    throw TruncationExceeded("columns need levels " + level_name(0, q) + " to " +
                             level_name(2, q));
  Peiffer pf(g);
  detail::require_trivial_moore(
    pf, [&](unsigned a, unsigned b) { return b == q && a >= 3; },
    "2-crossed module from columns");
  detail::Chain c{pf.moore(0, q), pf.moore(1, q), pf.moore(2, q),
                  &g.dh(1, q, 1), &g.dh(2, q, 2), &g.sh(0, q, 0),
                  &g.sh(1, q, 0), &g.sh(1, q, 1)};
  return detail::two_crossed_from_chain(c, cap);
}

/// {x,y} F(x,y) = 1 for the pairing ((),(0)) x ((),(1)) at (p,2), or its
/// transpose at (2,q).
inline Check lifting_inverse_check(BisimplicialGroupTrunc const &g,
                                   TwoCrossedModuleData const &x, Direction dir,
                                   unsigned k)
{
  Peiffer pf(g);
  bool rows = dir == Direction::vertical;
  auto spec = rows ? make_spec(k, 2, "((),(0))", "((),(1))")
                   : make_spec(2, k, "((0),())", "((1),())");
  auto const &G2 = *g.level(spec.n, spec.m);
  auto const &ng1 = rows ? pf.moore(k, 1) : pf.moore(1, k);
  auto const &ng2 = rows ? pf.moore(k, 2) : pf.moore(2, k);
  auto e1 = embed(ng1);
  auto e2 = embed(ng2);
  Check c("lifting = F^-1 on " +
          std::string(rows ? "row " : "column ") + std::to_string(k));
  auto m = x.M->order();
  if (m != ng1.order() || x.L->order() != ng2.order()) {
    c.fail("structure does not come from this grid", {});
    return c;
  }
  for (ElemId a = 0; a < m && !c.failed(); ++a)
    for (ElemId b = 0; b < m; ++b) {
      ++c.instances;
      auto y = x.M->images(a);
      auto y2 = x.M->images(b);
      auto py = ng1.parent()->find(y);
      auto py2 = ng1.parent()->find(y2);
      auto f = pf.F(spec, py, py2);
      auto l = ng2.parent()->find(x.L->images(x.lift(a, b)));
      if (G2.mul(l, f) != G2.identity()) {
        c.fail("{x,y} F(x,y) is not 1",
               {witness("x", *x.M, a), witness("y", *x.M, b),
                witness("{x,y}", *x.L, x.lift(a, b)), witness("F(x,y)", G2, f)});
        break;
      }
    }
  return c;
}

/// The semidirect product M x| N with (x,a)(y,b) = (x ^(nu a) y, ab), acting
/// on |M| points by m -> x ^(nu a) m and on the points of N through a.
struct SemidirectProduct
{
  GroupPtr group;
  std::size_t n_order = 0;
  std::vector<ElemId> by_pair; // by_pair[x * |N| + a]
  std::vector<ElemId> left, right;

  ElemId pair(ElemId x, ElemId a) const
  { return by_pair[x * n_order + a]; }
};

inline SemidirectProduct semidirect(GroupPtr const &M, GroupPtr const &N,
                                    GroupAction const &act,
                                    std::size_t cap = default_order_cap)
{
  if (act.acting() != N || act.target() != M)
    throw HomomorphismInvalid("semidirect product needs N acting on M");
  auto mo = M->order();
  if (mo * N->order() > cap)
    throw OrderCapExceeded("semidirect product of order " +
                           std::to_string(mo * N->order()));
  auto degree = static_cast<unsigned>(mo + N->degree());
  auto perm = [&](ElemId x, ElemId a) {
    std::vector<Point> pts(degree);
    for (ElemId m = 0; m < mo; ++m)
      pts[m] = static_cast<Point>(M->mul(x, act(a, m)));
    auto na = N->images(a);
    for (unsigned i = 0; i < na.size(); ++i)
      pts[mo + i] = static_cast<Point>(mo + na[i]);
    return Permutation(std::move(pts));
  };
  std::vector<Permutation> gens;
  for (auto g : M->generator_ids())
    gens.push_back(perm(g, N->identity()));
  for (auto g : N->generator_ids())
    gens.push_back(perm(M->identity(), g));
  SemidirectProduct sd;
  sd.group = closure(std::move(gens), degree, cap);
  sd.n_order = N->order();
  sd.by_pair.assign(mo * N->order(), no_elem);
  sd.left.resize(sd.group->order());
  sd.right.resize(sd.group->order());
  std::vector<Point> npts(N->degree());
  for (ElemId e = 0; e < sd.group->order(); ++e) {
    auto im = sd.group->images(e);
    ElemId x = im[0];
    for (unsigned i = 0; i < npts.size(); ++i)
      npts[i] = static_cast<Point>(im[mo + i] - mo);
    auto a = N->find(npts);
    sd.left[e] = x;
    sd.right[e] = a;
    sd.by_pair[x * N->order() + a] = e;
  }
  return sd;
}

/// How the mapping cone lifting reads h.
enum class ConeLifting
{
  conjugate_inverse, // {(x,a),(y,b)} = h(x, a b a^-1)^-1
  literal,           // {(x,a),(y,b)} = h(x, a b)
};

/// L -> M x| N -> P with d2 z = (lambda z^-1, lambda' z), d1 (x,a) = mu(x) nu(a).
inline TwoCrossedModuleData mapping_cone(CrossedSquareData const &sq,
                                         ConeLifting variant = ConeLifting::conjugate_inverse,
                                         std::size_t cap = default_order_cap)
{
  auto rep = check_crossed_square(sq);
  if (!rep.ok())
    throw AxiomViolation("mapping cone of a square failing " + rep.failures().front());
  auto const &M = *sq.M;
  auto const &N = *sq.N;
  auto const &L = *sq.L;
  auto const &P = *sq.P;
  auto n_on_m = GroupAction::from_function(sq.N, sq.M, [&](ElemId a, ElemId x) {
    return sq.act_M(sq.nu(a), x);
  });
  auto sd = semidirect(sq.M, sq.N, n_on_m, cap);
  TwoCrossedModuleData x;
  x.L = sq.L;
  x.M = sd.group;
  x.N = sq.P;
  x.d2 = Homomorphism::from_function(x.L, x.M, [&](ElemId z) {
    return sd.pair(M.inv(sq.lambda(z)), sq.lambda_prime(z));
  });
  x.d1 = Homomorphism::from_function(x.M, x.N, [&](ElemId e) {
    return P.mul(sq.mu(sd.left[e]), sq.nu(sd.right[e]));
  });
  x.act_M = GroupAction::from_function(x.N, x.M, [&](ElemId t, ElemId e) {
    return sd.pair(sq.act_M(t, sd.left[e]), sq.act_N(t, sd.right[e]));
  });
  x.act_L = sq.act_L;
  x.m_on_L = GroupAction::from_function(x.M, x.L, [&](ElemId e, ElemId z) {
    return sq.act_L(x.d1(e), z);
  });
  auto m = x.M->order();
  x.lifting.resize(m * m);
  for (ElemId e = 0; e < m; ++e)
    for (ElemId f = 0; f < m; ++f) {
      auto xx = sd.left[e];
      auto a = sd.right[e];
      auto b = sd.right[f];
      x.lifting[e * m + f] =
        variant == ConeLifting::literal
          ? sq.H(xx, N.mul(a, b))
          : L.inv(sq.H(xx, N.conj(a, b)));
    }
  return x;
}

namespace detail
{

inline std::vector<Homomorphism> all_isomorphisms(GroupPtr const &a,
                                                  GroupPtr const &b)
{
  std::vector<Homomorphism> res;
  for_each_isomorphism(a, b, [&](Homomorphism const &f) {
    res.push_back(f);
    return true;
  });
  return res;
}

inline bool intertwines(GroupAction const &a, GroupAction const &b,
                        Homomorphism const &on_acting,
                        Homomorphism const &on_target)
{
  for (ElemId p = 0; p < a.acting()->order(); ++p)
    for (ElemId x = 0; x < a.target()->order(); ++x)
      if (on_target(a(p, x)) != b(on_acting(p), on_target(x)))
        return false;
  return true;
}

inline bool commutes(Homomorphism const &f, Homomorphism const &g,
                     Homomorphism const &on_dom, Homomorphism const &on_cod)
{
  for (ElemId x = 0; x < f.domain()->order(); ++x)
    if (on_cod(f(x)) != g(on_dom(x)))
      return false;
  return true;
}

} // namespace detail

/// Isomorphic as crossed modules: a pair of group isomorphisms commuting
/// with boundaries and actions.
inline bool is_isomorphic(CrossedModuleData const &a, CrossedModuleData const &b)
{
  auto fMs = detail::all_isomorphisms(a.M, b.M);
  if (fMs.empty())
    return false;
  bool found = false;
  for_each_isomorphism(a.P, b.P, [&](Homomorphism const &fP) {
    for (auto const &fM : fMs)
      if (detail::commutes(a.boundary, b.boundary, fM, fP) &&
          detail::intertwines(a.action, b.action, fP, fM)) {
        found = true;
        return false;
      }
    return true;
  });
  return found;
}

inline bool is_isomorphic(CrossedSquareData const &a, CrossedSquareData const &b)
{
  auto fLs = detail::all_isomorphisms(a.L, b.L);
  auto fMs = detail::all_isomorphisms(a.M, b.M);
  auto fNs = detail::all_isomorphisms(a.N, b.N);
  if (fLs.empty() || fMs.empty() || fNs.empty())
    return false;
  bool found = false;
  for_each_isomorphism(a.P, b.P, [&](Homomorphism const &fP) {
    for (auto const &fM : fMs) {
      if (!detail::commutes(a.mu, b.mu, fM, fP) ||
          !detail::intertwines(a.act_M, b.act_M, fP, fM))
        continue;
      for (auto const &fN : fNs) {
        if (!detail::commutes(a.nu, b.nu, fN, fP) ||
            !detail::intertwines(a.act_N, b.act_N, fP, fN))
          continue;
        for (auto const &fL : fLs) {
          if (!detail::commutes(a.lambda, b.lambda, fL, fM) ||
              !detail::commutes(a.lambda_prime, b.lambda_prime, fL, fN) ||
              !detail::intertwines(a.act_L, b.act_L, fP, fL))
            continue;
          bool ok = true;
          for (ElemId x = 0; x < a.M->order() && ok; ++x)
            for (ElemId y = 0; y < a.N->order(); ++y)
              if (fL(a.H(x, y)) != b.H(fM(x), fN(y))) {
                ok = false;
                break;
              }
          if (ok) {
            found = true;
            return false;
          }
        }
      }
    }
    return true;
  });
  return found;
}

inline bool is_isomorphic(TwoCrossedModuleData const &a, TwoCrossedModuleData const &b)
{
  auto fLs = detail::all_isomorphisms(a.L, b.L);
  auto fMs = detail::all_isomorphisms(a.M, b.M);
  if (fLs.empty() || fMs.empty())
    return false;
  bool found = false;
  for_each_isomorphism(a.N, b.N, [&](Homomorphism const &fN) {
    for (auto const &fM : fMs) {
      if (!detail::commutes(a.d1, b.d1, fM, fN) ||
          !detail::intertwines(a.act_M, b.act_M, fN, fM))
        continue;
      for (auto const &fL : fLs) {
        if (!detail::commutes(a.d2, b.d2, fL, fM) ||
            !detail::intertwines(a.act_L, b.act_L, fN, fL))
          continue;
        bool ok = true;
        auto m = a.M->order();
        for (ElemId x = 0; x < m && ok; ++x)
          for (ElemId y = 0; y < m; ++y)
            if (fL(a.lift(x, y)) != b.lift(fM(x), fM(y))) {
              ok = false;
              break;
            }
        if (ok) {
          found = true;
          return false;
        }
      }
    }
    return true;
  });
  return found;
}

} // namespace peiffer

#endif // PEIFFER_CROSSED_HPP
