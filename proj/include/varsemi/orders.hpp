// The natural partial order and the orders on idempotent variants.

#ifndef VARSEMI_ORDERS_HPP_
#define VARSEMI_ORDERS_HPP_

#include <optional>  // for optional
#include <vector>    // for vector

#include "core.hpp"
#include "variants.hpp"

namespace varsemi {

  //! A binary relation on a set of element ids, stored as a full matrix.
  //!
  //! Nothing about order axioms is assumed at construction; use the
  //! *_violation members to measure them.
  class OrderRelation {
   public:
    OrderRelation(std::size_t carrier_order, std::vector<element_type> elements);

    std::size_t carrier_order() const noexcept {
      return _carrier_order;
    }
    std::vector<element_type> const& elements() const noexcept {
      return _elements;
    }
    bool contains(element_type x) const noexcept {
      return x < _position.size() && _position[x] != NONE;
    }

    // Throws ElementOutOfRange if x or y is not in elements().
    bool leq(element_type x, element_type y) const;
    void set(element_type x, element_type y, bool value);

    // First witness in ascending order of elements, if the law fails.
    std::optional<element_type>               reflexivity_violation() const;
    std::optional<std::vector<element_type>>  antisymmetry_violation() const;  // {x, y}
    std::optional<std::vector<element_type>>  transitivity_violation() const;  // {x, y, z}

    bool is_partial_order() const {
      return !reflexivity_violation() && !antisymmetry_violation()
             && !transitivity_violation();
    }

    bool operator==(OrderRelation const&) const = default;

   private:
    static constexpr std::size_t NONE = static_cast<std::size_t>(-1);
    std::size_t                  index(element_type x) const;

    std::size_t               _carrier_order;
    std::vector<element_type> _elements;
    std::vector<std::size_t>  _position;
    std::vector<bool>         _matrix;
  };

  //! a <= b iff a = xb = by and xa = a for some x, y in S^1.
  OrderRelation natural_leq(FiniteSemigroup const& s);

  //! ef = fe = e; throws NotIdempotent.
  bool idempotent_leq(FiniteSemigroup const& s, element_type e, element_type f);

  //! x <=_e y iff x *e y = y *e x = x, on E(S^e) computed from the variant
  //! table.  Throws NotIdempotent if the sandwich is not idempotent.
  OrderRelation variant_idempotent_leq(VariantDescriptor const& v);

  //! The natural partial order of S^e, quantified over (S^e)^1.
  OrderRelation variant_leq(VariantDescriptor const& v);

}  // namespace varsemi

#endif  // VARSEMI_ORDERS_HPP_
