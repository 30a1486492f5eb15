#include "varsemi/errors.hpp"

#include <fmt/format.h>

namespace varsemi {

  OutOfRange::OutOfRange(std::size_t x_, std::size_t y_, std::size_t value_)
      : Error(fmt::format("table entry ({}, {}) = {} is out of range", x_, y_, value_)),
        x(x_),
        y(y_),
        value(value_) {}

  NotAssociative::NotAssociative(std::size_t x_, std::size_t y_, std::size_t z_)
      : Error(fmt::format("not associative at ({}, {}, {})", x_, y_, z_)),
        x(x_),
        y(y_),
        z(z_) {}

  OrderTooLarge::OrderTooLarge(std::size_t order_, std::size_t bound_)
      : Error(fmt::format("order {} exceeds the configured bound {}", order_, bound_)),
        order(order_),
        bound(bound_) {}

  NotAMonoid::NotAMonoid() : Error("the semigroup has no identity element") {}

  ElementOutOfRange::ElementOutOfRange(std::size_t element_, std::size_t order_)
      : Error(fmt::format("element {} is not < order {}", element_, order_)),
        element(element_),
        order(order_) {}

  NotIdempotent::NotIdempotent(std::size_t element_)
      : Error(fmt::format("element {} is not idempotent", element_)),
        element(element_) {}

  NotIdempotentMember::NotIdempotentMember(std::size_t element_)
      : Error(fmt::format("U contains the non-idempotent element {}", element_)),
        element(element_) {}

  EmptyU::EmptyU() : Error("U must be a non-empty set of idempotents") {}

  CarrierMismatch::CarrierMismatch(std::size_t left_, std::size_t right_)
      : Error(fmt::format("carrier orders differ: {} vs {}", left_, right_)),
        left(left_),
        right(right_) {}

  NotACongruence::NotACongruence()
      : Error("the partition is not a two-sided congruence") {}

  NotAHomomorphism::NotAHomomorphism(std::size_t x_, std::size_t y_)
      : Error(fmt::format("map does not preserve the product of ({}, {})", x_, y_)),
        x(x_),
        y(y_) {}

  SyntaxError::SyntaxError(std::size_t line_,
                           std::size_t column_,
                           std::string const& what)
      : Error(fmt::format("{}:{}: {}", line_, column_, what)),
        line(line_),
        column(column_) {}

  UnknownClaim::UnknownClaim(std::string const& id_)
      : Error(fmt::format("unknown claim id '{}'", id_)), id(id_) {}

}  // namespace varsemi
