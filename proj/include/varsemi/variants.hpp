// Sandwich variants S^a with x * y = xay.

#ifndef VARSEMI_VARIANTS_HPP_
#define VARSEMI_VARIANTS_HPP_

#include "core.hpp"
#include "relations.hpp"

namespace varsemi {

  struct VariantDescriptor {
    FiniteSemigroup base;
    element_type    sandwich;
    FiniteSemigroup variant;
  };

  //! P1 = { x : ax R* x }, P2 = { x : xa L* x }, P = P1 ∩ P2, with R* and L*
  //! taken in the base semigroup.
  struct PSets {
    ElementSubset P1, P2, P;

    bool operator==(PSets const&) const = default;
  };

  // The variant table is validated by build_semigroup like any other.
  VariantDescriptor variant(FiniteSemigroup const& s, element_type a);

  // Throws NotIdempotent unless ee = e.
  VariantDescriptor idempotent_variant(FiniteSemigroup const& s, element_type e);

  StarBundle variant_star(VariantDescriptor const& v);

  PSets p_sets(FiniteSemigroup const& s, element_type a);

  // As above, reusing an already computed star(s).
  PSets p_sets(FiniteSemigroup const& s, StarBundle const& base_star, element_type a);

}  // namespace varsemi

#endif  // VARSEMI_VARIANTS_HPP_
