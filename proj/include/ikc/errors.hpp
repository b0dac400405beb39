#pragma once

#include <stdexcept>
#include <string>

namespace ikc {

// Base for every diagnostic the kernel raises. kind() names the violated
// invariant so front ends can print it without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)), detail_(what) {}
  const std::string& kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string kind_;
  std::string detail_;
};

#define IKC_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

IKC_DEFINE_ERROR(SyntaxError)
IKC_DEFINE_ERROR(DegreeError)
IKC_DEFINE_ERROR(JoinabilityError)
IKC_DEFINE_ERROR(ShapeError)
IKC_DEFINE_ERROR(DomainError)
IKC_DEFINE_ERROR(RuleError)
IKC_DEFINE_ERROR(ShapeRefutation)
IKC_DEFINE_ERROR(PreconditionError)
IKC_DEFINE_ERROR(NotAReductError)
IKC_DEFINE_ERROR(NotAnExpansionError)
IKC_DEFINE_ERROR(TypeMismatchError)

#undef IKC_DEFINE_ERROR

}  // namespace ikc
