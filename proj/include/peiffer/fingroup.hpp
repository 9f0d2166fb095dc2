#ifndef PEIFFER_FINGROUP_HPP
#define PEIFFER_FINGROUP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

// Finite groups in permutation representation, fully enumerated. Every
// subgroup computation below is exhaustive over the enumerated elements.

namespace peiffer
{

using Point = std::uint16_t;
using ElemId = std::uint32_t;

inline constexpr ElemId no_elem = std::numeric_limits<ElemId>::max();
inline constexpr std::size_t default_order_cap = 65536;
inline constexpr std::size_t default_search_budget = 2000000;

/// A bijection of {0,...,degree-1}. Products compose right to left:
/// (a * b)(i) = a(b(i)).
class Permutation
{
public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images)
  : _images(std::move(images))
  { validate(); }

  template<typename Int>
  static Permutation from_images(std::vector<Int> const &images)
  {
    std::vector<Point> pts;
    pts.reserve(images.size());
    for (auto v : images) {
      if (v < 0 || static_cast<std::uint64_t>(v) >= images.size())
        throw BadPermutation("image " + std::to_string(v) + " out of range");
      pts.push_back(static_cast<Point>(v));
    }
    return Permutation(std::move(pts));
  }

  static Permutation identity(unsigned degree)
  {
    std::vector<Point> pts(degree);
    for (unsigned i = 0; i < degree; ++i)
      pts[i] = static_cast<Point>(i);
    Permutation p;
    p._images = std::move(pts);
    return p;
  }

  /// Cycles are read as i -> next entry, e.g. {{0,1,2}} maps 0->1->2->0.
  static Permutation
  from_cycles(unsigned degree,
              std::initializer_list<std::initializer_list<unsigned>> cycles)
  {
    auto p = identity(degree);
    for (auto const &cycle : cycles) {
      std::vector<unsigned> c(cycle);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= degree)
          throw BadPermutation("cycle point out of range");
        p._images[c[i]] = static_cast<Point>(c[(i + 1) % c.size()]);
      }
    }
    p.validate();
    return p;
  }

  unsigned degree() const
  { return static_cast<unsigned>(_images.size()); }

  Point operator[](unsigned i) const
  { return _images[i]; }

  std::span<Point const> images() const
  { return _images; }

  Permutation operator*(Permutation const &rhs) const
  {
    if (rhs.degree() != degree())
      throw BadPermutation("degree mismatch in product");
    Permutation res;
    res._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i)
      res._images[i] = _images[rhs._images[i]];
    return res;
  }

  Permutation inverse() const
  {
    Permutation res;
    res._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i)
      res._images[_images[i]] = static_cast<Point>(i);
    return res;
  }

  bool is_identity() const
  {
    for (std::size_t i = 0; i < _images.size(); ++i)
      if (_images[i] != i)
        return false;
    return true;
  }

  std::vector<unsigned> to_vector() const
  { return {_images.begin(), _images.end()}; }

  std::string to_cycle_string() const
  {
    std::vector<bool> seen(_images.size(), false);
    std::ostringstream os;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (seen[i] || _images[i] == i)
        continue;
      os << '(';
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        os << (first ? "" : " ") << j;
        first = false;
        j = _images[j];
      }
      os << ')';
    }
    auto s = os.str();
    return s.empty() ? "()" : s;
  }

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  void validate() const
  {
    std::vector<bool> hit(_images.size(), false);
    for (auto v : _images) {
      if (v >= _images.size() || hit[v])
        throw BadPermutation("images are not a bijection");
      hit[v] = true;
    }
  }

  std::vector<Point> _images;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<FiniteGroup const>;

namespace detail
{

inline std::uint64_t hash_points(std::span<Point const> pts)
{
  std::uint64_t h = 1469598103934665603ull;
  for (auto p : pts) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return h ^ (h >> 29);
}

} // namespace detail

/// An enumerated permutation group. Element 0 is always the identity and
/// elements are numbered in breadth-first order from it, so every element
/// other than the identity has a parent word g_k * parent.
class FiniteGroup
{
public:
  static GroupPtr closure(std::vector<Permutation> gens, unsigned degree,
                          std::size_t cap = default_order_cap)
  {
    for (auto const &g : gens)
      if (g.degree() != degree)
        throw BadPermutation("generator of degree " +
                             std::to_string(g.degree()) + ", expected " +
                             std::to_string(degree));

    std::shared_ptr<FiniteGroup> grp(new FiniteGroup(degree));
    grp->_gens = std::move(gens);
    grp->run_closure(cap);
    return grp;
  }

  static GroupPtr trivial(unsigned degree = 1)
  { return closure({}, degree); }

  unsigned degree() const
  { return _degree; }

  std::size_t order() const
  { return _order; }

  bool is_trivial() const
  { return _order == 1; }

  static constexpr ElemId identity()
  { return 0; }

  std::vector<Permutation> const &generators() const
  { return _gens; }

  std::vector<ElemId> const &generator_ids() const
  { return _gen_ids; }

  std::span<Point const> images(ElemId e) const
  { return {_store.data() + std::size_t(e) * _degree, _degree}; }

  Permutation element(ElemId e) const
  {
    auto im = images(e);
    return Permutation(std::vector<Point>(im.begin(), im.end()));
  }

  ElemId find(std::span<Point const> pts) const
  {
    if (pts.size() != _degree)
      return no_elem;
    auto mask = _slots.size() - 1;
    for (auto pos = detail::hash_points(pts) & mask;; pos = (pos + 1) & mask) {
      auto id = _slots[pos];
      if (id == no_elem)
        return no_elem;
      auto im = images(id);
      if (std::equal(im.begin(), im.end(), pts.begin()))
        return id;
    }
  }

  ElemId find(Permutation const &p) const
  { return find(p.images()); }

  bool contains(Permutation const &p) const
  { return find(p) != no_elem; }

  ElemId mul(ElemId a, ElemId b) const
  {
    if (!_table.empty())
      return _table[std::size_t(a) * _order + b];

    thread_local std::vector<Point> buf;
    buf.resize(_degree);
    auto pa = images(a), pb = images(b);
    for (unsigned i = 0; i < _degree; ++i)
      buf[i] = pa[pb[i]];
    return find(buf);
  }

  ElemId inv(ElemId a) const
  { return _inverse[a]; }

  /// g x g^-1
  ElemId conj(ElemId g, ElemId x) const
  { return mul(mul(g, x), inv(g)); }

  /// [a, b] = a b a^-1 b^-1
  ElemId commutator(ElemId a, ElemId b) const
  { return mul(mul(a, b), mul(inv(a), inv(b))); }

  /// g_k * e for the k-th stored generator.
  ElemId gen_mul(std::size_t k, ElemId e) const
  { return _left[std::size_t(e) * _gens.size() + k]; }

  /// Breadth-first parent: e = g_{word_gen(e)} * word_parent(e).
  ElemId word_parent(ElemId e) const
  { return _parent[e]; }

  std::size_t word_gen(ElemId e) const
  { return _parent_gen[e]; }

  unsigned element_order(ElemId e) const
  {
    unsigned k = 1;
    for (ElemId x = e; x != identity(); x = mul(e, x))
      ++k;
    return k;
  }

  bool is_abelian() const
  {
    for (auto a : _gen_ids)
      for (auto b : _gen_ids)
        if (mul(a, b) != mul(b, a))
          return false;
    return true;
  }

private:
  explicit FiniteGroup(unsigned degree)
  : _degree(degree)
  {}

  void insert(std::span<Point const> pts, ElemId parent, std::size_t gen)
  {
    auto id = static_cast<ElemId>(_order++);
    _store.insert(_store.end(), pts.begin(), pts.end());
    _parent.push_back(parent);
    _parent_gen.push_back(gen);

    if (2 * _order > _slots.size())
      rehash(std::max<std::size_t>(16, 4 * _order));
    else
      place(id);
  }

  void place(ElemId id)
  {
    auto mask = _slots.size() - 1;
    auto pos = detail::hash_points(images(id)) & mask;
    while (_slots[pos] != no_elem)
      pos = (pos + 1) & mask;
    _slots[pos] = id;
  }

  void rehash(std::size_t size)
  {
    std::size_t cap = 1;
    while (cap < size)
      cap <<= 1;
    _slots.assign(cap, no_elem);
    for (ElemId id = 0; id < _order; ++id)
      place(id);
  }

  void run_closure(std::size_t cap)
  {
    auto id = Permutation::identity(_degree);
    insert(id.images(), no_elem, 0);

    std::vector<Point> buf(_degree);
    for (ElemId e = 0; e < _order; ++e) {
      for (std::size_t k = 0; k < _gens.size(); ++k) {
        auto g = _gens[k].images();
        auto pe = images(e);
        for (unsigned i = 0; i < _degree; ++i)
          buf[i] = g[pe[i]];
        auto found = find(buf);
        if (found == no_elem) {
          if (_order >= cap)
            throw OrderCapExceeded("group order exceeds cap " +
                                   std::to_string(cap));
          found = static_cast<ElemId>(_order);
          insert(buf, e, k);
        }
        _left.push_back(found);
      }
    }

    for (auto const &g : _gens)
      _gen_ids.push_back(find(g));

    _inverse.resize(_order);
    for (ElemId e = 0; e < _order; ++e) {
      auto pe = images(e);
      for (unsigned i = 0; i < _degree; ++i)
        buf[pe[i]] = static_cast<Point>(i);
      _inverse[e] = find(buf);
    }

    if (_order <= 512) {
      std::vector<ElemId> table(_order * _order);
      for (ElemId a = 0; a < _order; ++a)
        for (ElemId b = 0; b < _order; ++b)
          table[std::size_t(a) * _order + b] = mul(a, b);
      _table = std::move(table);
    }
  }

  unsigned _degree;
  std::size_t _order = 0;
  std::vector<Permutation> _gens;
  std::vector<ElemId> _gen_ids;
  std::vector<Point> _store;
  std::vector<ElemId> _slots;
  std::vector<ElemId> _parent;
  std::vector<std::size_t> _parent_gen;
  std::vector<ElemId> _left;
  std::vector<ElemId> _inverse;
  std::vector<ElemId> _table;
};

inline GroupPtr closure(std::vector<Permutation> gens, unsigned degree,
                        std::size_t cap = default_order_cap)
{ return FiniteGroup::closure(std::move(gens), degree, cap); }

/// A homomorphism stored as its full element map. Construction checks
/// f(g_k x) = f(g_k) f(x) on every Cayley edge of the domain, which together
/// with f(1) = 1 is equivalent to f(ab) = f(a) f(b) for all pairs.
class Homomorphism
{
public:
  Homomorphism() = default;

  static Homomorphism from_generator_ids(GroupPtr dom, GroupPtr cod,
                                         std::vector<ElemId> gen_images)
  {
    if (gen_images.size() != dom->generators().size())
      throw HomomorphismInvalid("expected " +
                                std::to_string(dom->generators().size()) +
                                " generator images, got " +
                                std::to_string(gen_images.size()));
    for (auto im : gen_images)
      if (im == no_elem || im >= cod->order())
        throw HomomorphismInvalid("generator image outside codomain");

    std::vector<ElemId> map(dom->order(), no_elem);
    map[0] = cod->identity();
    for (ElemId e = 1; e < dom->order(); ++e)
      map[e] = cod->mul(gen_images[dom->word_gen(e)], map[dom->word_parent(e)]);

    Homomorphism f(std::move(dom), std::move(cod), std::move(map));
    f.verify_edges(gen_images);
    return f;
  }

  static Homomorphism from_generator_images(GroupPtr dom, GroupPtr cod,
                                            std::vector<Permutation> const &ims)
  {
    std::vector<ElemId> ids;
    for (auto const &p : ims) {
      auto id = cod->find(p);
      if (id == no_elem)
        throw HomomorphismInvalid("generator image " + p.to_cycle_string() +
                                  " is not in the codomain");
      ids.push_back(id);
    }
    return from_generator_ids(std::move(dom), std::move(cod), std::move(ids));
  }

  static Homomorphism from_map(GroupPtr dom, GroupPtr cod,
                               std::vector<ElemId> map)
  {
    if (map.size() != dom->order())
      throw HomomorphismInvalid("map size does not match domain order");
    for (auto im : map)
      if (im == no_elem || im >= cod->order())
        throw HomomorphismInvalid("image outside codomain");
    std::vector<ElemId> gen_images;
    for (auto g : dom->generator_ids())
      gen_images.push_back(map[g]);
    Homomorphism f(std::move(dom), std::move(cod), std::move(map));
    f.verify_edges(gen_images);
    return f;
  }

  template<typename Fn>
  static Homomorphism from_function(GroupPtr dom, GroupPtr cod, Fn &&fn)
  {
    std::vector<ElemId> map(dom->order());
    for (ElemId e = 0; e < dom->order(); ++e)
      map[e] = fn(e);
    return from_map(std::move(dom), std::move(cod), std::move(map));
  }

  static Homomorphism identity(GroupPtr g)
  {
    std::vector<ElemId> map(g->order());
    for (ElemId e = 0; e < g->order(); ++e)
      map[e] = e;
    return Homomorphism(g, g, std::move(map));
  }

  static Homomorphism trivial(GroupPtr dom, GroupPtr cod)
  {
    std::vector<ElemId> map(dom->order(), cod->identity());
    return Homomorphism(std::move(dom), std::move(cod), std::move(map));
  }

  GroupPtr const &domain() const
  { return _dom; }

  GroupPtr const &codomain() const
  { return _cod; }

  ElemId operator()(ElemId e) const
  { return _map[e]; }

  std::vector<ElemId> const &map() const
  { return _map; }

  std::vector<Permutation> generator_images() const
  {
    std::vector<Permutation> res;
    for (auto g : _dom->generator_ids())
      res.push_back(_cod->element(_map[g]));
    return res;
  }

  bool is_injective() const
  {
    std::vector<bool> hit(_cod->order(), false);
    for (auto im : _map) {
      if (hit[im])
        return false;
      hit[im] = true;
    }
    return true;
  }

  bool is_surjective() const
  {
    std::vector<bool> hit(_cod->order(), false);
    std::size_t n = 0;
    for (auto im : _map)
      if (!hit[im]) {
        hit[im] = true;
        ++n;
      }
    return n == _cod->order();
  }

  bool is_bijective() const
  { return _dom->order() == _cod->order() && is_injective(); }

  bool is_trivial() const
  {
    return std::all_of(_map.begin(), _map.end(),
                       [](ElemId e) { return e == FiniteGroup::identity(); });
  }

  /// Exhaustive f(ab) = f(a) f(b); quadratic, intended for tests.
  bool verify_all_pairs() const
  {
    for (ElemId a = 0; a < _dom->order(); ++a)
      for (ElemId b = 0; b < _dom->order(); ++b)
        if (_map[_dom->mul(a, b)] != _cod->mul(_map[a], _map[b]))
          return false;
    return true;
  }

  friend bool operator==(Homomorphism const &f, Homomorphism const &g)
  { return f._dom == g._dom && f._cod == g._cod && f._map == g._map; }

private:
  Homomorphism(GroupPtr dom, GroupPtr cod, std::vector<ElemId> map)
  : _dom(std::move(dom)), _cod(std::move(cod)), _map(std::move(map))
  {}

  void verify_edges(std::vector<ElemId> const &gen_images) const
  {
    if (_map[0] != _cod->identity())
      throw HomomorphismInvalid("identity not mapped to identity");
    for (ElemId e = 0; e < _dom->order(); ++e)
      for (std::size_t k = 0; k < gen_images.size(); ++k)
        if (_map[_dom->gen_mul(k, e)] != _cod->mul(gen_images[k], _map[e]))
          throw HomomorphismInvalid(
            "map is not multiplicative at generator " + std::to_string(k) +
            ", element " + _dom->element(e).to_cycle_string());
  }

  GroupPtr _dom;
  GroupPtr _cod;
  std::vector<ElemId> _map;
};

/// f o g
inline Homomorphism compose(Homomorphism const &f, Homomorphism const &g)
{
  if (f.domain() != g.codomain())
    throw HomomorphismInvalid("composing non-adjacent homomorphisms");
  std::vector<ElemId> map(g.domain()->order());
  for (ElemId e = 0; e < map.size(); ++e)
    map[e] = f(g(e));
  return Homomorphism::from_map(g.domain(), f.codomain(), std::move(map));
}

/// A subset of a parent group closed under products and inverses.
class Subgroup
{
public:
  Subgroup() = default;

  static Subgroup trivial(GroupPtr parent)
  { return Subgroup(std::move(parent), {FiniteGroup::identity()}); }

  static Subgroup whole(GroupPtr parent)
  {
    std::vector<ElemId> all(parent->order());
    for (ElemId e = 0; e < all.size(); ++e)
      all[e] = e;
    return Subgroup(std::move(parent), std::move(all));
  }

  static Subgroup generated(GroupPtr parent, std::span<ElemId const> gens)
  {
    std::vector<bool> in(parent->order(), false);
    std::vector<ElemId> elems{FiniteGroup::identity()};
    in[0] = true;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (auto g : gens) {
        auto y = parent->mul(g, elems[i]);
        if (!in[y]) {
          in[y] = true;
          elems.push_back(y);
        }
      }
    return Subgroup(std::move(parent), std::move(elems));
  }

  /// Throws Error unless elems is closed under products.
  static Subgroup from_elements(GroupPtr parent, std::vector<ElemId> elems)
  {
    Subgroup s(parent, std::move(elems));
    if (!s.contains(FiniteGroup::identity()))
      throw Error("subset does not contain the identity");
    for (auto a : s._elems)
      for (auto b : s._elems)
        if (!s.contains(parent->mul(a, b)))
          throw Error("subset is not closed under products");
    return s;
  }

  GroupPtr const &parent() const
  { return _parent; }

  std::vector<ElemId> const &elements() const
  { return _elems; }

  std::size_t order() const
  { return _elems.size(); }

  bool is_trivial() const
  { return _elems.size() == 1; }

  bool contains(ElemId e) const
  { return e < _member.size() && _member[e]; }

  bool subset_of(Subgroup const &other) const
  {
    return std::all_of(_elems.begin(), _elems.end(),
                       [&](ElemId e) { return other.contains(e); });
  }

  bool is_normal() const
  {
    for (auto g : _parent->generator_ids())
      for (auto x : _elems)
        if (!contains(_parent->conj(g, x)))
          return false;
    return true;
  }

  /// Greedy generating set, preferring elements of large order.
  std::vector<ElemId> generating_set() const
  {
    std::vector<std::pair<unsigned, ElemId>> by_order;
    for (auto e : _elems)
      if (e != FiniteGroup::identity())
        by_order.emplace_back(_parent->element_order(e), e);
    std::stable_sort(by_order.begin(), by_order.end(),
                     [](auto const &a, auto const &b) { return a.first > b.first; });

    std::vector<ElemId> gens;
    auto span = Subgroup::trivial(_parent);
    for (auto const &[ord, e] : by_order) {
      if (span.order() == order())
        break;
      if (!span.contains(e)) {
        gens.push_back(e);
        span = generated(_parent, gens);
      }
    }
    return gens;
  }

  friend bool operator==(Subgroup const &a, Subgroup const &b)
  { return a._parent == b._parent && a._elems == b._elems; }

private:
  Subgroup(GroupPtr parent, std::vector<ElemId> elems)
  : _parent(std::move(parent)), _elems(std::move(elems))
  {
    std::sort(_elems.begin(), _elems.end());
    _elems.erase(std::unique(_elems.begin(), _elems.end()), _elems.end());
    _member.assign(_parent->order(), false);
    for (auto e : _elems)
      _member[e] = true;
  }

  GroupPtr _parent;
  std::vector<ElemId> _elems;
  std::vector<bool> _member;
};

/// A subgroup promoted to a standalone group on the same points, with the
/// inclusion into its parent.
struct EmbeddedGroup
{
  Subgroup subgroup;
  GroupPtr group;
  Homomorphism inclusion;

  ElemId from_parent(ElemId e) const
  { return group->find(subgroup.parent()->images(e)); }

  ElemId to_parent(ElemId e) const
  { return inclusion(e); }
};

inline EmbeddedGroup embed(Subgroup const &s,
                           std::size_t cap = default_order_cap)
{
  auto const &parent = s.parent();
  std::vector<Permutation> gens;
  for (auto e : s.generating_set())
    gens.push_back(parent->element(e));
  auto grp = closure(std::move(gens), parent->degree(), cap);
  auto incl = Homomorphism::from_function(grp, parent, [&](ElemId e) {
    return parent->find(grp->images(e));
  });
  return {s, std::move(grp), std::move(incl)};
}

/// f restricted to from, corestricted to into. Throws HomomorphismInvalid
/// when f(from) is not contained in into.
inline Homomorphism restrict(Homomorphism const &f, EmbeddedGroup const &from,
                             EmbeddedGroup const &into)
{
  if (from.subgroup.parent() != f.domain() ||
      into.subgroup.parent() != f.codomain())
    throw HomomorphismInvalid("restriction to a subgroup of another group");
  return Homomorphism::from_function(from.group, into.group, [&](ElemId e) {
    auto im = f(from.to_parent(e));
    if (!into.subgroup.contains(im))
      throw HomomorphismInvalid("image leaves the target subgroup");
    return into.from_parent(im);
  });
}

inline Subgroup kernel(Homomorphism const &f)
{
  std::vector<ElemId> elems;
  for (ElemId e = 0; e < f.domain()->order(); ++e)
    if (f(e) == FiniteGroup::identity())
      elems.push_back(e);
  return Subgroup::from_elements(f.domain(), std::move(elems));
}

inline Subgroup image(Homomorphism const &f)
{
  std::vector<ElemId> gens;
  for (auto g : f.domain()->generator_ids())
    gens.push_back(f(g));
  return Subgroup::generated(f.codomain(), gens);
}

/// f(s) as a subgroup of the codomain.
inline Subgroup image(Homomorphism const &f, Subgroup const &s)
{
  std::vector<ElemId> ims;
  for (auto e : s.elements())
    ims.push_back(f(e));
  std::sort(ims.begin(), ims.end());
  ims.erase(std::unique(ims.begin(), ims.end()), ims.end());
  return Subgroup::generated(f.codomain(), ims);
}

inline Subgroup intersect(Subgroup const &a, Subgroup const &b)
{
  if (a.parent() != b.parent())
    throw Error("intersecting subgroups of different groups");
  std::vector<ElemId> elems;
  for (auto e : a.elements())
    if (b.contains(e))
      elems.push_back(e);
  return Subgroup::from_elements(a.parent(), std::move(elems));
}

/// Smallest normal subgroup of g containing the seed elements.
inline Subgroup normal_closure(GroupPtr const &g, std::span<ElemId const> seed)
{
  std::vector<ElemId> gens(seed.begin(), seed.end());
  auto h = Subgroup::generated(g, gens);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (auto t : g->generator_ids()) {
      auto c = g->conj(t, gens[i]);
      if (!h.contains(c)) {
        gens.push_back(c);
        h = Subgroup::generated(g, gens);
      }
    }
  return h;
}

inline Subgroup normal_closure(GroupPtr const &g, Subgroup const &seed)
{
  if (seed.parent() != g)
    throw Error("normal closure of a subgroup of another group");
  return normal_closure(g, seed.generating_set());
}

/// [a, b], generated by all x y x^-1 y^-1 with x in a and y in b.
inline Subgroup commutator_subgroup(Subgroup const &a, Subgroup const &b)
{
  if (a.parent() != b.parent())
    throw Error("commutator of subgroups of different groups");
  auto const &g = a.parent();
  std::vector<bool> seen(g->order(), false);
  std::vector<ElemId> comms;
  for (auto x : a.elements())
    for (auto y : b.elements()) {
      auto c = g->commutator(x, y);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return Subgroup::generated(g, comms);
}

/// Subgroup generated by the union of a and b.
inline Subgroup join(Subgroup const &a, Subgroup const &b)
{
  auto gens = a.generating_set();
  auto more = b.generating_set();
  gens.insert(gens.end(), more.begin(), more.end());
  return Subgroup::generated(a.parent(), gens);
}

/// a x b acting on disjoint point sets, with its structure maps.
struct DirectProduct
{
  GroupPtr group;
  GroupPtr left;
  GroupPtr right;
  Homomorphism inj_left, inj_right, proj_left, proj_right;

  ElemId pair(ElemId x, ElemId y) const
  {
    thread_local std::vector<Point> buf;
    auto dl = left->degree();
    buf.resize(group->degree());
    auto px = left->images(x), py = right->images(y);
    for (unsigned i = 0; i < dl; ++i)
      buf[i] = px[i];
    for (unsigned i = 0; i < right->degree(); ++i)
      buf[dl + i] = static_cast<Point>(py[i] + dl);
    return group->find(buf);
  }
};

inline Permutation concat(Permutation const &x, Permutation const &y)
{
  std::vector<Point> pts(x.images().begin(), x.images().end());
  for (auto p : y.images())
    pts.push_back(static_cast<Point>(p + x.degree()));
  return Permutation(std::move(pts));
}

inline DirectProduct direct_product(GroupPtr a, GroupPtr b,
                                    std::size_t cap = default_order_cap)
{
  if (a->order() * b->order() > cap)
    throw OrderCapExceeded("direct product order " +
                           std::to_string(a->order() * b->order()) +
                           " exceeds cap " + std::to_string(cap));
  auto ida = Permutation::identity(a->degree());
  auto idb = Permutation::identity(b->degree());
  std::vector<Permutation> gens;
  for (auto const &g : a->generators())
    gens.push_back(concat(g, idb));
  for (auto const &h : b->generators())
    gens.push_back(concat(ida, h));
  auto grp = closure(std::move(gens), a->degree() + b->degree(), cap);

  DirectProduct dp{grp, a, b, {}, {}, {}, {}};
  dp.inj_left = Homomorphism::from_function(a, grp, [&](ElemId x) {
    return dp.pair(x, FiniteGroup::identity());
  });
  dp.inj_right = Homomorphism::from_function(b, grp, [&](ElemId y) {
    return dp.pair(FiniteGroup::identity(), y);
  });

  std::vector<ElemId> pl, pr;
  for (std::size_t k = 0; k < a->generators().size(); ++k) {
    pl.push_back(a->generator_ids()[k]);
    pr.push_back(FiniteGroup::identity());
  }
  for (std::size_t k = 0; k < b->generators().size(); ++k) {
    pl.push_back(FiniteGroup::identity());
    pr.push_back(b->generator_ids()[k]);
  }
  dp.proj_left = Homomorphism::from_generator_ids(grp, a, std::move(pl));
  dp.proj_right = Homomorphism::from_generator_ids(grp, b, std::move(pr));
  return dp;
}

/// f x g between two direct products.
inline Homomorphism product_map(DirectProduct const &src,
                                DirectProduct const &dst,
                                Homomorphism const &f, Homomorphism const &g)
{
  return Homomorphism::from_function(src.group, dst.group, [&](ElemId e) {
    return dst.pair(f(src.proj_left(e)), g(src.proj_right(e)));
  });
}

/// A left action of one group on another by automorphisms, stored as the
/// full table act(p)(x). Construction does not check the action laws; the
/// crossed-structure checkers do that exhaustively.
class GroupAction
{
public:
  GroupAction() = default;

  template<typename Fn>
  static GroupAction from_function(GroupPtr acting, GroupPtr target, Fn &&fn)
  {
    GroupAction a(std::move(acting), std::move(target));
    for (ElemId p = 0; p < a._acting->order(); ++p)
      for (ElemId x = 0; x < a._target->order(); ++x)
        a._table[a.slot(p, x)] = fn(p, x);
    return a;
  }

  /// Extends per-generator automorphisms along the Cayley tree of the acting
  /// group: act(g_k p) = act(g_k) o act(p).
  static GroupAction from_generators(GroupPtr acting, GroupPtr target,
                                     std::vector<Homomorphism> const &gen_autos)
  {
    if (gen_autos.size() != acting->generators().size())
      throw HomomorphismInvalid("one automorphism per acting generator needed");
    for (auto const &f : gen_autos)
      if (f.domain() != target || f.codomain() != target || !f.is_bijective())
        throw HomomorphismInvalid("action generator is not an automorphism");

    GroupAction a(std::move(acting), std::move(target));
    auto n = a._target->order();
    for (ElemId x = 0; x < n; ++x)
      a._table[x] = x;
    for (ElemId p = 1; p < a._acting->order(); ++p) {
      auto const &f = gen_autos[a._acting->word_gen(p)];
      auto q = a._acting->word_parent(p);
      for (ElemId x = 0; x < n; ++x)
        a._table[a.slot(p, x)] = f(a._table[a.slot(q, x)]);
    }
    return a;
  }

  static GroupAction trivial(GroupPtr acting, GroupPtr target)
  {
    return from_function(std::move(acting), std::move(target),
                         [](ElemId, ElemId x) { return x; });
  }

  static GroupAction conjugation(GroupPtr g)
  {
    return from_function(g, g,
                         [&](ElemId p, ElemId x) { return g->conj(p, x); });
  }

  /// Action through a homomorphism phi: ^q x = ^{phi(q)} x.
  static GroupAction pullback(GroupAction const &act, Homomorphism const &phi)
  {
    if (phi.codomain() != act.acting())
      throw HomomorphismInvalid("pullback along a map into another group");
    return from_function(phi.domain(), act.target(), [&](ElemId q, ElemId x) {
      return act(phi(q), x);
    });
  }

  GroupPtr const &acting() const
  { return _acting; }

  GroupPtr const &target() const
  { return _target; }

  ElemId operator()(ElemId p, ElemId x) const
  { return _table[slot(p, x)]; }

  Homomorphism automorphism(ElemId p) const
  {
    return Homomorphism::from_function(_target, _target, [&](ElemId x) {
      return (*this)(p, x);
    });
  }

  std::vector<Homomorphism> generator_automorphisms() const
  {
    std::vector<Homomorphism> res;
    for (auto g : _acting->generator_ids())
      res.push_back(automorphism(g));
    return res;
  }

private:
  GroupAction(GroupPtr acting, GroupPtr target)
  : _acting(std::move(acting)), _target(std::move(target)),
    _table(_acting->order() * _target->order())
  {}

  std::size_t slot(ElemId p, ElemId x) const
  { return std::size_t(p) * _target->order() + x; }

  GroupPtr _acting;
  GroupPtr _target;
  std::vector<ElemId> _table;
};

/// Number of elements of each order.
inline std::map<unsigned, std::size_t> order_spectrum(FiniteGroup const &g)
{
  std::map<unsigned, std::size_t> spec;
  for (ElemId e = 0; e < g.order(); ++e)
    ++spec[g.element_order(e)];
  return spec;
}

namespace detail
{

class IsoSearch
{
public:
  using Visitor = std::function<bool(Homomorphism const &)>;

  IsoSearch(GroupPtr a, GroupPtr b, Visitor visit, std::size_t budget)
  : _a(std::move(a)), _b(std::move(b)), _visit(std::move(visit)),
    _budget(budget)
  {
    _gens = Subgroup::whole(_a).generating_set();
    for (auto g : _gens) {
      std::vector<ElemId> cands;
      auto ord = _a->element_order(g);
      for (ElemId y = 0; y < _b->order(); ++y)
        if (_b->element_order(y) == ord)
          cands.push_back(y);
      _cands.push_back(std::move(cands));
    }
    _images.resize(_gens.size());
  }

  /// Returns false when the visitor asked to stop.
  bool run()
  { return descend(0); }

private:
  bool descend(std::size_t depth)
  {
    if (depth == _gens.size()) {
      std::vector<ElemId> map;
      if (!extend(depth, &map))
        return true;
      return _visit(Homomorphism::from_map(_a, _b, std::move(map)));
    }
    for (auto c : _cands[depth]) {
      if (++_nodes > _budget)
        throw SearchBudgetExceeded("isomorphism search exceeded " +
                                   std::to_string(_budget) + " nodes");
      _images[depth] = c;
      if (!extend(depth + 1, nullptr))
        continue;
      if (!descend(depth + 1))
        return false;
    }
    return true;
  }

  // Propagates the partial assignment over <gens[0..depth)>; fails on an
  // inconsistent edge or a collision of images.
  bool extend(std::size_t depth, std::vector<ElemId> *out) const
  {
    std::vector<ElemId> map(_a->order(), no_elem);
    std::vector<bool> used(_b->order(), false);
    std::vector<ElemId> queue{FiniteGroup::identity()};
    map[0] = FiniteGroup::identity();
    used[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto x = queue[i];
      for (std::size_t j = 0; j < depth; ++j) {
        auto y = _a->mul(_gens[j], x);
        auto my = _b->mul(_images[j], map[x]);
        if (map[y] == no_elem) {
          if (used[my])
            return false;
          used[my] = true;
          map[y] = my;
          queue.push_back(y);
        } else if (map[y] != my) {
          return false;
        }
      }
    }
    if (out) {
      if (queue.size() != _a->order())
        return false;
      *out = std::move(map);
    }
    return true;
  }

  GroupPtr _a, _b;
  Visitor _visit;
  std::size_t _budget;
  std::size_t _nodes = 0;
  std::vector<ElemId> _gens;
  std::vector<std::vector<ElemId>> _cands;
  std::vector<ElemId> _images;
};

} // namespace detail

/// Calls visit on every isomorphism a -> b until it returns false.
inline void
for_each_isomorphism(GroupPtr const &a, GroupPtr const &b,
                     std::function<bool(Homomorphism const &)> visit,
                     std::size_t budget = default_search_budget)
{
  if (a->order() != b->order())
    return;
  if (order_spectrum(*a) != order_spectrum(*b))
    return;
  detail::IsoSearch(a, b, std::move(visit), budget).run();
}

inline std::optional<Homomorphism>
find_isomorphism(GroupPtr const &a, GroupPtr const &b,
                 std::size_t budget = default_search_budget)
{
  std::optional<Homomorphism> found;
  for_each_isomorphism(a, b, [&](Homomorphism const &f) {
    found = f;
    return false;
  }, budget);
  return found;
}

inline bool is_isomorphic(GroupPtr const &a, GroupPtr const &b,
                          std::size_t budget = default_search_budget)
{ return find_isomorphism(a, b, budget).has_value(); }

} // namespace peiffer

#endif // PEIFFER_FINGROUP_HPP
