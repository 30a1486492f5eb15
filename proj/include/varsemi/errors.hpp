// Exception types thrown by the varsemi library.
//
// Every error carries the data needed to reproduce it (the offending entry,
// triple, element or position) in addition to a formatted message.

#ifndef VARSEMI_ERRORS_HPP_
#define VARSEMI_ERRORS_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace varsemi {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class OutOfRange : public Error {
   public:
    OutOfRange(std::size_t x, std::size_t y, std::size_t value);
    std::size_t x, y, value;
  };

  class NotAssociative : public Error {
   public:
    NotAssociative(std::size_t x, std::size_t y, std::size_t z);
    std::size_t x, y, z;
  };

  class BadShape : public Error {
   public:
    using Error::Error;
  };

  class OrderTooLarge : public Error {
   public:
    OrderTooLarge(std::size_t order, std::size_t bound);
    std::size_t order, bound;
  };

  class NotAMonoid : public Error {
   public:
    NotAMonoid();
  };

  class ElementOutOfRange : public Error {
   public:
    ElementOutOfRange(std::size_t element, std::size_t order);
    std::size_t element, order;
  };

  class NotIdempotent : public Error {
   public:
    explicit NotIdempotent(std::size_t element);
    std::size_t element;
  };

  // U ⊆ E(S) violated by a member of U
  class NotIdempotentMember : public Error {
   public:
    explicit NotIdempotentMember(std::size_t element);
    std::size_t element;
  };

  class EmptyU : public Error {
   public:
    EmptyU();
  };

  class CarrierMismatch : public Error {
   public:
    CarrierMismatch(std::size_t left, std::size_t right);
    std::size_t left, right;
  };

  class NotACongruence : public Error {
   public:
    NotACongruence();
  };

  class NotAHomomorphism : public Error {
   public:
    NotAHomomorphism(std::size_t x, std::size_t y);
    std::size_t x, y;
  };

  class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t line, std::size_t column, std::string const& what);
    std::size_t line, column;
  };

  class UnknownClaim : public Error {
   public:
    explicit UnknownClaim(std::string const& id);
    std::string id;
  };

}  // namespace varsemi

#endif  // VARSEMI_ERRORS_HPP_
