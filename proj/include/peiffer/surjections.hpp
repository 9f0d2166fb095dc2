#ifndef PEIFFER_SURJECTIONS_HPP
#define PEIFFER_SURJECTIONS_HPP

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "error.hpp"

namespace peiffer
{

/// A monotone surjection [n] -> [n-r], written (i_r,...,i_1) with
/// i_1 < ... < i_r. It stands for alpha_{i_1} o ... o alpha_{i_r} and for
/// the degeneracy composite s_{i_r} ... s_{i_1}. Indices are kept ascending.
class SurjectionTuple
{
public:
  SurjectionTuple() = default;

  static SurjectionTuple empty(unsigned n)
  { return SurjectionTuple(n, {}); }

  /// indices in ascending order i_1 < ... < i_r.
  static SurjectionTuple from_ascending(unsigned n, std::vector<unsigned> idx)
  {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] >= n)
        throw IndexOutOfRange("surjection index " + std::to_string(idx[k]) +
                              " not below " + std::to_string(n));
      if (k && idx[k] <= idx[k - 1])
        throw InvalidWord("surjection indices must be strictly increasing");
    }
    return SurjectionTuple(n, std::move(idx));
  }

  /// Parses "()" or "(i_r,...,i_1)".
  static SurjectionTuple parse(unsigned n, std::string const &text)
  {
    std::string s;
    for (char c : text)
      if (c != ' ')
        s += c;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
      throw ParseError("bad surjection tuple '" + text + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<unsigned> idx;
    std::size_t pos = 0;
    while (pos < s.size()) {
      auto next = s.find(',', pos);
      auto tok = s.substr(pos, next == std::string::npos ? std::string::npos
                                                         : next - pos);
      if (tok.empty() ||
          tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad surjection tuple '" + text + "'");
      idx.push_back(static_cast<unsigned>(std::stoul(tok)));
      if (next == std::string::npos)
        break;
      pos = next + 1;
    }
    std::reverse(idx.begin(), idx.end());
    return from_ascending(n, std::move(idx));
  }

  unsigned source() const
  { return _n; }

  std::size_t length() const
  { return _idx.size(); }

  /// b(sigma) = n - r
  unsigned target() const
  { return _n - static_cast<unsigned>(_idx.size()); }

  bool is_empty() const
  { return _idx.empty(); }

  std::vector<unsigned> const &ascending() const
  { return _idx; }

  /// The value of the surjection at j in [n].
  unsigned operator()(unsigned j) const
  {
    // alpha_{i_r} is applied first.
    for (auto it = _idx.rbegin(); it != _idx.rend(); ++it)
      if (j > *it)
        --j;
    return j;
  }

  std::vector<unsigned> as_function() const
  {
    std::vector<unsigned> f(_n + 1);
    for (unsigned j = 0; j <= _n; ++j)
      f[j] = (*this)(j);
    return f;
  }

  std::string to_string() const
  {
    std::string s = "(";
    for (auto it = _idx.rbegin(); it != _idx.rend(); ++it) {
      if (it != _idx.rbegin())
        s += ',';
      s += std::to_string(*it);
    }
    return s + ")";
  }

  friend bool operator==(SurjectionTuple const &, SurjectionTuple const &) = default;
  friend auto operator<=>(SurjectionTuple const &, SurjectionTuple const &) = default;

private:
  SurjectionTuple(unsigned n, std::vector<unsigned> idx)
  : _n(n), _idx(std::move(idx))
  {}

  unsigned _n = 0;
  std::vector<unsigned> _idx;
};

/// All of S(n): by length, then by the displayed tuple in descending order.
inline std::vector<SurjectionTuple> enumerate_S(unsigned n)
{
  std::vector<SurjectionTuple> all;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<unsigned> idx;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1u << i))
        idx.push_back(i);
    all.push_back(SurjectionTuple::from_ascending(n, std::move(idx)));
  }
  std::sort(all.begin(), all.end(), [](auto const &a, auto const &b) {
    if (a.length() != b.length())
      return a.length() < b.length();
    auto da = a.ascending(), db = b.ascending();
    return std::lexicographical_compare(db.rbegin(), db.rend(), da.rbegin(),
                                        da.rend());
  });
  return all;
}

/// Normal form of alpha_{w_0} o alpha_{w_1} o ... o alpha_{w_k} acting on
/// [n] (the last letter is applied first), using
/// alpha_j alpha_i = alpha_{i-1} alpha_j for j < i.
inline SurjectionTuple canonicalize(std::vector<unsigned> word, unsigned n)
{
  if (word.size() > n)
    throw InvalidWord("word longer than the source level");
  for (std::size_t k = 0; k < word.size(); ++k) {
    // letter k maps [n - (len-1-k)] onto one less
    auto level = n - static_cast<unsigned>(word.size() - 1 - k);
    if (word[k] >= level)
      throw InvalidWord("alpha_" + std::to_string(word[k]) +
                        " does not act on [" + std::to_string(level) + "]");
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k)
      if (word[k] >= word[k + 1]) {
        auto a = word[k], b = word[k + 1];
        word[k] = b;
        word[k + 1] = a + 1;
        changed = true;
      }
  }
  return SurjectionTuple::from_ascending(n, std::move(word));
}

/// sigma <= tau iff sigma(i) >= tau(i) for every i in [n].
inline bool leq(SurjectionTuple const &sigma, SurjectionTuple const &tau)
{
  if (sigma.source() != tau.source())
    throw LevelMismatch("comparing surjections on [" +
                        std::to_string(sigma.source()) + "] and [" +
                        std::to_string(tau.source()) + "]");
  for (unsigned i = 0; i <= sigma.source(); ++i)
    if (sigma(i) < tau(i))
      return false;
  return true;
}

/// An element of S(k1) x S(k2).
struct PairIndex
{
  SurjectionTuple first;
  SurjectionTuple second;

  std::string to_string() const
  { return "(" + first.to_string() + "," + second.to_string() + ")"; }

  friend bool operator==(PairIndex const &, PairIndex const &) = default;
  friend auto operator<=>(PairIndex const &, PairIndex const &) = default;
};

inline bool leq(PairIndex const &a, PairIndex const &b)
{ return leq(a.first, b.first) && leq(a.second, b.second); }

inline std::vector<PairIndex> enumerate_S(unsigned k1, unsigned k2)
{
  std::vector<PairIndex> res;
  for (auto const &a : enumerate_S(k1))
    for (auto const &b : enumerate_S(k2))
      res.push_back({a, b});
  return res;
}

/// Parses "(A,B)" where A and B are tuples, e.g. "((0),(1,0))".
inline PairIndex parse_pair(unsigned k1, unsigned k2, std::string const &text)
{
  std::string s;
  for (char c : text)
    if (c != ' ')
      s += c;
  if (s.size() < 6 || s.front() != '(' || s.back() != ')')
    throw ParseError("bad pair index '" + text + "'");
  auto inner = s.substr(1, s.size() - 2);
  auto split = inner.find(")(");
  if (split == std::string::npos)
    split = inner.find("),(");
  if (split == std::string::npos)
    throw ParseError("bad pair index '" + text + "'");
  auto a = inner.substr(0, split + 1);
  auto rest = inner.substr(split + 1);
  if (!rest.empty() && rest.front() == ',')
    rest = rest.substr(1);
  return {SurjectionTuple::parse(k1, a), SurjectionTuple::parse(k2, rest)};
}

} // namespace peiffer

#endif // PEIFFER_SURJECTIONS_HPP
