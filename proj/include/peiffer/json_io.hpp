#ifndef PEIFFER_JSON_IO_HPP
#define PEIFFER_JSON_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "crossed.hpp"

namespace peiffer
{

using json = nlohmann::ordered_json;

namespace detail
{

inline json const &field(json const &j, char const *key)
{
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline unsigned as_unsigned(json const &j, char const *what)
{
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<unsigned>();
}

inline Permutation perm_from_json(json const &j)
{
  if (!j.is_array())
    throw ParseError("permutation must be an array of images");
  std::vector<long long> ims;
  for (auto const &v : j) {
    if (!v.is_number_integer())
      throw ParseError("permutation images must be integers");
    ims.push_back(v.get<long long>());
  }
  return Permutation::from_images(ims);
}

inline void expect_kind(json const &j, std::string const &kind)
{
  auto const &k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind)
    throw ParseError("expected kind '" + kind + "'");
}

inline std::string level_key(unsigned p, unsigned q)
{ return std::to_string(p) + "," + std::to_string(q); }

} // namespace detail

inline json to_json(Permutation const &p)
{ return p.to_vector(); }

inline json to_json(FiniteGroup const &g)
{
  json gens = json::array();
  for (auto const &p : g.generators())
    gens.push_back(to_json(p));
  return {{"kind", "group"}, {"degree", g.degree()}, {"generators", gens}};
}

inline GroupPtr group_from_json(json const &j, std::size_t cap = default_order_cap)
{
  auto degree = detail::as_unsigned(detail::field(j, "degree"), "degree");
  if (degree == 0)
    throw ParseError("degree must be positive");
  std::vector<Permutation> gens;
  auto const &gj = detail::field(j, "generators");
  if (!gj.is_array())
    throw ParseError("generators must be an array");
  for (auto const &p : gj) {
    auto perm = detail::perm_from_json(p);
    if (perm.degree() != degree)
      throw ParseError("generator degree differs from the group degree");
    gens.push_back(std::move(perm));
  }
  return closure(std::move(gens), degree, cap);
}

/// A homomorphism is stored as the images of the domain generators.
inline json images_json(Homomorphism const &f)
{
  json ims = json::array();
  for (auto const &p : f.generator_images())
    ims.push_back(to_json(p));
  return ims;
}

inline Homomorphism hom_from_images(GroupPtr dom, GroupPtr cod, json const &j)
{
  if (!j.is_array())
    throw ParseError("homomorphism must be an array of generator images");
  std::vector<Permutation> ims;
  for (auto const &p : j)
    ims.push_back(detail::perm_from_json(p));
  return Homomorphism::from_generator_images(std::move(dom), std::move(cod), ims);
}

inline json to_json(Homomorphism const &f)
{
  return {{"kind", "hom"},
          {"domain", to_json(*f.domain())},
          {"codomain", to_json(*f.codomain())},
          {"images", images_json(f)}};
}

inline Homomorphism hom_from_json(json const &j, std::size_t cap = default_order_cap)
{
  auto dom = group_from_json(detail::field(j, "domain"), cap);
  auto cod = group_from_json(detail::field(j, "codomain"), cap);
  return hom_from_images(dom, cod, detail::field(j, "images"));
}

/// An action is stored as, for each acting generator, the images of the
/// target generators.
inline json action_json(GroupAction const &a)
{
  json res = json::array();
  for (auto const &f : a.generator_automorphisms())
    res.push_back(images_json(f));
  return res;
}

inline GroupAction action_from_json(GroupPtr acting, GroupPtr target, json const &j)
{
  if (!j.is_array() || j.size() != acting->generators().size())
    throw ParseError("action needs one automorphism per acting generator");
  std::vector<Homomorphism> autos;
  for (auto const &a : j)
    autos.push_back(hom_from_images(target, target, a));
  return GroupAction::from_generators(std::move(acting), std::move(target), autos);
}

/// A total map A x B -> C as a list of [a, b, value] image triples.
inline json table_json(FiniteGroup const &A, FiniteGroup const &B,
                       FiniteGroup const &C, std::vector<ElemId> const &t)
{
  json res = json::array();
  for (ElemId a = 0; a < A.order(); ++a)
    for (ElemId b = 0; b < B.order(); ++b)
      res.push_back({A.element(a).to_vector(), B.element(b).to_vector(),
                     C.element(t[a * B.order() + b]).to_vector()});
  return res;
}

inline std::vector<ElemId> table_from_json(FiniteGroup const &A, FiniteGroup const &B,
                                           FiniteGroup const &C, json const &j)
{
  if (!j.is_array())
    throw ParseError("table must be an array of triples");
  std::vector<ElemId> t(A.order() * B.order(), no_elem);
  auto find = [](FiniteGroup const &g, json const &p) {
    auto e = g.find(detail::perm_from_json(p));
    if (e == no_elem)
      throw ParseError("table entry outside its group");
    return e;
  };
  for (auto const &row : j) {
    if (!row.is_array() || row.size() != 3)
      throw ParseError("table rows must be [a, b, value]");
    t[find(A, row[0]) * B.order() + find(B, row[1])] = find(C, row[2]);
  }
  for (auto v : t)
    if (v == no_elem)
      throw ParseError("table is not total");
  return t;
}

inline json to_json(SimplicialGroupTrunc const &s)
{
  json levels = json::array(), faces = json::array(), degs = json::array();
  for (unsigned n = 0; n <= s.max_level; ++n) {
    levels.push_back(to_json(*s.level(n)));
    json f = json::array();
    for (unsigned i = 0; n >= 1 && i <= n; ++i)
      f.push_back(images_json(s.d(n, i)));
    faces.push_back(f);
    json d = json::array();
    for (unsigned j = 0; n < s.max_level && j <= n; ++j)
      d.push_back(images_json(s.s(n, j)));
    degs.push_back(d);
  }
  return {{"kind", "simplicial"}, {"max_level", s.max_level}, {"levels", levels},
          {"faces", faces}, {"degeneracies", degs}};
}

/// Loads the data only; identities are left to verify_simplicial.
inline SimplicialGroupTrunc simplicial_from_json(json const &j,
                                                 std::size_t cap = default_order_cap)
{
  detail::expect_kind(j, "simplicial");
  SimplicialGroupTrunc s;
  s.max_level = detail::as_unsigned(detail::field(j, "max_level"), "max_level");
  auto const &lv = detail::field(j, "levels");
  auto const &fj = detail::field(j, "faces");
  auto const &dj = detail::field(j, "degeneracies");
  if (!lv.is_array() || lv.size() != s.max_level + 1 || !fj.is_array() ||
      fj.size() != s.max_level + 1 || !dj.is_array() || dj.size() != s.max_level + 1)
    throw ParseError("levels, faces and degeneracies need max_level + 1 entries");
  for (auto const &g : lv)
    s.levels.push_back(group_from_json(g, cap));
  for (unsigned n = 0; n <= s.max_level; ++n) {
    s.faces.emplace_back();
    if (n >= 1) {
      if (!fj[n].is_array() || fj[n].size() != n + 1)
        throw ParseError("level " + std::to_string(n) + " needs n+1 faces");
      for (auto const &f : fj[n])
        s.faces[n].push_back(hom_from_images(s.levels[n], s.levels[n - 1], f));
    }
    if (n < s.max_level) {
      s.degeneracies.emplace_back();
      if (!dj[n].is_array() || dj[n].size() != n + 1)
        throw ParseError("level " + std::to_string(n) + " needs n+1 degeneracies");
      for (auto const &d : dj[n])
        s.degeneracies[n].push_back(hom_from_images(s.levels[n], s.levels[n + 1], d));
    }
  }
  return s;
}

inline json to_json(BisimplicialGroupTrunc const &g)
{
  json levels = json::object(), dh = json::object(), sh = json::object(),
       dv = json::object(), sv = json::object();
  for (unsigned p = 0; p <= g.max_p; ++p)
    for (unsigned q = 0; q <= g.max_q; ++q) {
      auto key = detail::level_key(p, q);
      levels[key] = to_json(*g.level(p, q));
      auto put = [&](json &dst, auto const &maps) {
        json a = json::array();
        for (auto const &f : maps)
          a.push_back(images_json(f));
        if (!a.empty())
          dst[key] = a;
      };
      auto k = g.slot(p, q);
      put(dh, g.dh_maps[k]);
      put(sh, g.sh_maps[k]);
      put(dv, g.dv_maps[k]);
      put(sv, g.sv_maps[k]);
    }
  return {{"kind", "bisimplicial"}, {"truncation", {g.max_p, g.max_q}},
          {"levels", levels}, {"dh", dh}, {"sh", sh}, {"dv", dv}, {"sv", sv}};
}

/// Loads the data only; identities are left to verify_bisimplicial.
inline BisimplicialGroupTrunc bisimplicial_from_json(json const &j,
                                                     std::size_t cap = default_order_cap)
{
  detail::expect_kind(j, "bisimplicial");
  auto const &t = detail::field(j, "truncation");
  if (!t.is_array() || t.size() != 2)
    throw ParseError("truncation must be [P, Q]");
  BisimplicialGroupTrunc g(detail::as_unsigned(t[0], "truncation"),
                           detail::as_unsigned(t[1], "truncation"));
  auto const &lv = detail::field(j, "levels");
  for (unsigned p = 0; p <= g.max_p; ++p)
    for (unsigned q = 0; q <= g.max_q; ++q) {
      auto key = detail::level_key(p, q);
      if (!lv.contains(key))
        throw ParseError("missing level " + key);
      g.levels[g.slot(p, q)] = group_from_json(lv.at(key), cap);
    }
  auto load = [&](char const *name, auto &maps, bool present_if, unsigned count,
                  unsigned p, unsigned q, unsigned p2, unsigned q2) {
    auto key = detail::level_key(p, q);
    auto const &all = detail::field(j, name);
    if (!present_if)
      return;
    if (!all.contains(key) || !all.at(key).is_array() || all.at(key).size() != count)
      throw ParseError(std::string(name) + " at " + key + " needs " +
                       std::to_string(count) + " maps");
    for (auto const &f : all.at(key))
      maps[g.slot(p, q)].push_back(hom_from_images(g.level(p, q), g.level(p2, q2), f));
  };
  for (unsigned p = 0; p <= g.max_p; ++p)
    for (unsigned q = 0; q <= g.max_q; ++q) {
      load("dh", g.dh_maps, p >= 1, p + 1, p, q, p - 1, q);
      load("dv", g.dv_maps, q >= 1, q + 1, p, q, p, q - 1);
      load("sh", g.sh_maps, p < g.max_p, p + 1, p, q, p + 1, q);
      load("sv", g.sv_maps, q < g.max_q, q + 1, p, q, p, q + 1);
    }
  return g;
}

/// Loads a grid and rejects it unless every bisimplicial identity holds.
inline BisimplicialGroupTrunc from_grid_spec(json const &j,
                                             std::size_t cap = default_order_cap)
{
  auto g = bisimplicial_from_json(j, cap);
  auto rep = verify_bisimplicial(g, "grid");
  if (!rep.ok())
    throw IdentityViolation("grid fails " + rep.failures().front());
  return g;
}

inline json to_json(CrossedModuleData const &x)
{
  return {{"kind", "crossed_module"}, {"M", to_json(*x.M)}, {"P", to_json(*x.P)},
          {"boundary", images_json(x.boundary)}, {"action", action_json(x.action)}};
}

inline CrossedModuleData crossed_module_from_json(json const &j,
                                                  std::size_t cap = default_order_cap)
{
  detail::expect_kind(j, "crossed_module");
  CrossedModuleData x;
  x.M = group_from_json(detail::field(j, "M"), cap);
  x.P = group_from_json(detail::field(j, "P"), cap);
  x.boundary = hom_from_images(x.M, x.P, detail::field(j, "boundary"));
  x.action = action_from_json(x.P, x.M, detail::field(j, "action"));
  return x;
}

inline json to_json(CrossedSquareData const &x)
{
  return {{"kind", "crossed_square"},
          {"L", to_json(*x.L)}, {"M", to_json(*x.M)},
          {"N", to_json(*x.N)}, {"P", to_json(*x.P)},
          {"lambda", images_json(x.lambda)},
          {"lambda_prime", images_json(x.lambda_prime)},
          {"mu", images_json(x.mu)}, {"nu", images_json(x.nu)},
          {"act_L", action_json(x.act_L)}, {"act_M", action_json(x.act_M)},
          {"act_N", action_json(x.act_N)},
          {"h", table_json(*x.M, *x.N, *x.L, x.h)}};
}

inline CrossedSquareData crossed_square_from_json(json const &j,
                                                  std::size_t cap = default_order_cap)
{
  detail::expect_kind(j, "crossed_square");
  CrossedSquareData x;
  x.L = group_from_json(detail::field(j, "L"), cap);
  x.M = group_from_json(detail::field(j, "M"), cap);
  x.N = group_from_json(detail::field(j, "N"), cap);
  x.P = group_from_json(detail::field(j, "P"), cap);
  x.lambda = hom_from_images(x.L, x.M, detail::field(j, "lambda"));
  x.lambda_prime = hom_from_images(x.L, x.N, detail::field(j, "lambda_prime"));
  x.mu = hom_from_images(x.M, x.P, detail::field(j, "mu"));
  x.nu = hom_from_images(x.N, x.P, detail::field(j, "nu"));
  x.act_L = action_from_json(x.P, x.L, detail::field(j, "act_L"));
  x.act_M = action_from_json(x.P, x.M, detail::field(j, "act_M"));
  x.act_N = action_from_json(x.P, x.N, detail::field(j, "act_N"));
  x.h = table_from_json(*x.M, *x.N, *x.L, detail::field(j, "h"));
  return x;
}

inline json to_json(TwoCrossedModuleData const &x)
{
  return {{"kind", "two_crossed_module"},
          {"L", to_json(*x.L)}, {"M", to_json(*x.M)}, {"N", to_json(*x.N)},
          {"d2", images_json(x.d2)}, {"d1", images_json(x.d1)},
          {"act_M", action_json(x.act_M)}, {"act_L", action_json(x.act_L)},
          {"m_on_L", action_json(x.m_on_L)},
          {"lifting", table_json(*x.M, *x.M, *x.L, x.lifting)}};
}

inline TwoCrossedModuleData two_crossed_from_json(json const &j,
                                                  std::size_t cap = default_order_cap)
{
  detail::expect_kind(j, "two_crossed_module");
  TwoCrossedModuleData x;
  x.L = group_from_json(detail::field(j, "L"), cap);
  x.M = group_from_json(detail::field(j, "M"), cap);
  x.N = group_from_json(detail::field(j, "N"), cap);
  x.d2 = hom_from_images(x.L, x.M, detail::field(j, "d2"));
  x.d1 = hom_from_images(x.M, x.N, detail::field(j, "d1"));
  x.act_M = action_from_json(x.N, x.M, detail::field(j, "act_M"));
  x.act_L = action_from_json(x.N, x.L, detail::field(j, "act_L"));
  x.m_on_L = action_from_json(x.M, x.L, detail::field(j, "m_on_L"));
  x.lifting = table_from_json(*x.M, *x.M, *x.L, detail::field(j, "lifting"));
  return x;
}

inline json to_json(Check const &c)
{
  json w = json::array();
  for (auto const &x : c.witnesses)
    w.push_back({{"label", x.label}, {"images", x.images}});
  json r = {{"name", c.name}, {"status", to_string(c.status)}, {"instances", c.instances}};
  if (!c.note.empty())
    r["note"] = c.note;
  if (!w.empty())
    r["witnesses"] = w;
  return r;
}

/// Wall time is left out so the output is stable across runs.
inline json to_json(VerificationReport const &rep)
{
  json checks = json::array();
  for (auto const &c : rep.checks)
    checks.push_back(to_json(c));
  return {{"subject", rep.subject},
          {"checks", checks},
          {"summary",
           {{"pass", rep.count(Status::pass)},
            {"fail", rep.count(Status::fail)},
            {"vacuous", rep.count(Status::vacuous)},
            {"skipped", rep.count(Status::skipped)}}}};
}

inline json read_json_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (json::exception const &e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void write_json_file(std::string const &path, json const &j)
{
  std::ofstream out(path);
  if (!out)
    throw ParseError("cannot write " + path);
  out << j.dump(1) << '\n';
}

} // namespace peiffer

#endif // PEIFFER_JSON_IO_HPP
