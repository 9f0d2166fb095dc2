#ifndef PEIFFER_ERROR_HPP
#define PEIFFER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace peiffer
{

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

#define PEIFFER_DEFINE_ERROR(name)                                            \
  class name : public Error                                                   \
  {                                                                           \
  public:                                                                     \
    explicit name(std::string const &what)                                    \
    : Error(std::string(#name ": ") + what)                                   \
    {}                                                                        \
  };

PEIFFER_DEFINE_ERROR(BadPermutation)
PEIFFER_DEFINE_ERROR(OrderCapExceeded)
PEIFFER_DEFINE_ERROR(HomomorphismInvalid)
PEIFFER_DEFINE_ERROR(SearchBudgetExceeded)
PEIFFER_DEFINE_ERROR(InvalidWord)
PEIFFER_DEFINE_ERROR(LevelMismatch)
PEIFFER_DEFINE_ERROR(TruncationExceeded)
PEIFFER_DEFINE_ERROR(IndexOutOfRange)
PEIFFER_DEFINE_ERROR(DomainMembership)
PEIFFER_DEFINE_ERROR(HypothesisViolated)
PEIFFER_DEFINE_ERROR(ParseError)
PEIFFER_DEFINE_ERROR(IdentityViolation)
PEIFFER_DEFINE_ERROR(AxiomViolation)

#undef PEIFFER_DEFINE_ERROR

} // namespace peiffer

#endif // PEIFFER_ERROR_HPP
