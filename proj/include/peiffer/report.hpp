#ifndef PEIFFER_REPORT_HPP
#define PEIFFER_REPORT_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "fingroup.hpp"

namespace peiffer
{

enum class Status
{
  pass,
  fail,
  vacuous,
  skipped,
};

inline char const *to_string(Status s)
{
  switch (s) {
  case Status::pass:
    return "PASS";
  case Status::fail:
    return "FAIL";
  case Status::vacuous:
    return "VACUOUS";
  case Status::skipped:
    return "SKIPPED";
  }
  return "?";
}

/// A group element serialized as its permutation images.
struct Witness
{
  std::string label;
  std::vector<unsigned> images;
};

inline Witness witness(std::string label, FiniteGroup const &g, ElemId e)
{ return {std::move(label), g.element(e).to_vector()}; }

struct Check
{
  std::string name;
  Status status = Status::pass;
  std::string note;
  std::vector<Witness> witnesses;
  std::size_t instances = 0;

  explicit Check(std::string n)
  : name(std::move(n))
  {}

  /// Records the first failure only; later ones just count.
  void fail(std::string why, std::vector<Witness> w)
  {
    if (status == Status::fail)
      return;
    status = Status::fail;
    note = std::move(why);
    witnesses = std::move(w);
  }

  void vacuous(std::string why)
  {
    status = Status::vacuous;
    note = std::move(why);
  }

  void skipped(std::string why)
  {
    status = Status::skipped;
    note = std::move(why);
  }

  bool failed() const
  { return status == Status::fail; }
};

struct VerificationReport
{
  std::string subject;
  std::vector<Check> checks;
  double wall_seconds = 0;

  VerificationReport() = default;

  explicit VerificationReport(std::string s)
  : subject(std::move(s))
  {}

  Check &add(Check c)
  {
    checks.push_back(std::move(c));
    return checks.back();
  }

  void append(VerificationReport const &other, std::string const &prefix = {})
  {
    for (auto c : other.checks) {
      if (!prefix.empty())
        c.name = prefix + c.name;
      checks.push_back(std::move(c));
    }
  }

  std::size_t count(Status s) const
  {
    std::size_t n = 0;
    for (auto const &c : checks)
      n += c.status == s;
    return n;
  }

  bool ok() const
  { return count(Status::fail) == 0; }

  Check const *find(std::string const &name) const
  {
    for (auto const &c : checks)
      if (c.name == name)
        return &c;
    return nullptr;
  }

  std::vector<std::string> failures() const
  {
    std::vector<std::string> names;
    for (auto const &c : checks)
      if (c.failed())
        names.push_back(c.name);
    return names;
  }

  std::string to_text() const
  {
    std::ostringstream os;
    os << subject << '\n';
    for (auto const &c : checks) {
      os << "  [" << to_string(c.status) << "] " << c.name;
      if (c.instances)
        os << " (" << c.instances << " instances)";
      if (!c.note.empty())
        os << ": " << c.note;
      os << '\n';
      for (auto const &w : c.witnesses) {
        os << "      " << w.label << " = [";
        for (std::size_t i = 0; i < w.images.size(); ++i)
          os << (i ? "," : "") << w.images[i];
        os << "]\n";
      }
    }
    os << "  summary: " << count(Status::pass) << " pass, "
       << count(Status::fail) << " fail, " << count(Status::vacuous)
       << " vacuous, " << count(Status::skipped) << " skipped";
    if (wall_seconds > 0)
      os << ", " << wall_seconds << " s";
    os << '\n';
    return os.str();
  }
};

} // namespace peiffer

#endif // PEIFFER_REPORT_HPP
