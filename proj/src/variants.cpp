#include "varsemi/variants.hpp"

namespace varsemi {

  VariantDescriptor variant(FiniteSemigroup const& s, element_type a) {
    s.validate_element(a);
    auto const                n = s.order();
    std::vector<element_type> table(n * n);
    for (element_type x = 0; x < n; ++x) {
      auto const xa = s.product(x, a);
      for (element_type y = 0; y < n; ++y) {
        table[x * n + y] = s.product(xa, y);
      }
    }
    return {s, a, build_semigroup(n, std::move(table), s.labels(), HARD_MAX_ORDER)};
  }

  VariantDescriptor idempotent_variant(FiniteSemigroup const& s, element_type e) {
    if (!is_idempotent(s, e)) {
      throw NotIdempotent(e);
    }
    return variant(s, e);
  }

  StarBundle variant_star(VariantDescriptor const& v) {
    return star(v.variant);
  }

  PSets p_sets(FiniteSemigroup const& s, element_type a) {
    return p_sets(s, star(s), a);
  }

  PSets p_sets(FiniteSemigroup const& s, StarBundle const& base_star, element_type a) {
    s.validate_element(a);
    PSets result{ElementSubset(s.order()), ElementSubset(s.order()), ElementSubset(s.order())};
    for (element_type x = 0; x < s.order(); ++x) {
      if (base_star.R.related(s.product(a, x), x)) {
        result.P1.insert(x);
      }
      if (base_star.L.related(s.product(x, a), x)) {
        result.P2.insert(x);
      }
    }
    result.P = result.P1 & result.P2;
    return result;
  }

}  // namespace varsemi
