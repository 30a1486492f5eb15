#include "varsemi/relations.hpp"

namespace varsemi {

  GreenBundle green(FiniteSemigroup const& s) {
    auto const n = s.order();
    // S^1 a, a S^1 and S^1 a S^1 as masks
    auto left_ideal = [&](element_type a) {
      std::uint64_t m = std::uint64_t(1) << a;
      for (element_type x = 0; x < n; ++x) {
        m |= std::uint64_t(1) << s.product(x, a);
      }
      return m;
    };
    auto right_ideal = [&](element_type a) {
      std::uint64_t m = std::uint64_t(1) << a;
      for (element_type x = 0; x < n; ++x) {
        m |= std::uint64_t(1) << s.product(a, x);
      }
      return m;
    };
    auto two_sided_ideal = [&](element_type a) {
      std::uint64_t m = left_ideal(a) | right_ideal(a);
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          m |= std::uint64_t(1) << s.product(s.product(x, a), y);
        }
      }
      return m;
    };
    GreenBundle g;
    g.L = kernel_of(n, left_ideal);
    g.R = kernel_of(n, right_ideal);
    g.J = kernel_of(n, two_sided_ideal);
    g.H = meet(g.L, g.R);
    g.D = join(g.L, g.R);
    return g;
  }

  StarBundle star(FiniteSemigroup const& s) {
    auto const  n  = s.order();
    auto const  s1 = adjoin_identity(s).monoid;
    auto const  m  = s1.order();
    // a R* b iff the maps x -> xa and x -> xb on S^1 have the same kernel
    auto const  left_kernel = [&](element_type a) {
      return kernel_of(m, [&](element_type x) { return s1.product(x, a); });
    };
    auto const right_kernel = [&](element_type a) {
      return kernel_of(m, [&](element_type x) { return s1.product(a, x); });
    };
    StarBundle b;
    b.R = kernel_of(n, left_kernel);
    b.L = kernel_of(n, right_kernel);
    b.H = meet(b.L, b.R);
    b.D = join(b.L, b.R);
    b.rl_composition_mismatch = composition_mismatch(b.R, b.L, b.D);
    b.lr_composition_mismatch = composition_mismatch(b.L, b.R, b.D);
    return b;
  }

  void validate_idempotent_subset(FiniteSemigroup const& s, ElementSubset const& U) {
    if (U.order() != s.order()) {
      throw CarrierMismatch(s.order(), U.order());
    }
    if (U.empty()) {
      throw EmptyU();
    }
    for (auto e : U.members()) {
      if (s.product(e, e) != e) {
        throw NotIdempotentMember(e);
      }
    }
  }

  TildeBundle tilde(FiniteSemigroup const& s, ElementSubset const& U) {
    validate_idempotent_subset(s, U);
    auto const n       = s.order();
    auto const members = U.members();
    TildeBundle b;
    b.U = U;
    b.L = kernel_of(n, [&](element_type a) {
      std::uint64_t m = 0;
      for (auto e : members) {
        m |= std::uint64_t(s.product(a, e) == a) << e;
      }
      return m;
    });
    b.R = kernel_of(n, [&](element_type a) {
      std::uint64_t m = 0;
      for (auto e : members) {
        m |= std::uint64_t(s.product(e, a) == a) << e;
      }
      return m;
    });
    b.H = meet(b.L, b.R);
    b.D = join(b.L, b.R);
    return b;
  }

  std::optional<std::size_t> first_class_missing(Equivalence const&   p,
                                                 ElementSubset const& subset) {
    for (std::size_t i = 0; i < p.number_of_classes(); ++i) {
      bool found = false;
      for (auto x : p.classes()[i]) {
        if (subset.contains(x)) {
          found = true;
          break;
        }
      }
      if (!found) {
        return i;
      }
    }
    return std::nullopt;
  }

  bool is_abundant(FiniteSemigroup const& s) {
    auto const b = star(s);
    auto const E = idempotents(s);
    return !first_class_missing(b.L, E) && !first_class_missing(b.R, E);
  }

  bool is_weakly_u_abundant(FiniteSemigroup const& s,
                            ElementSubset const&   U,
                            bool                   strict) {
    auto const b      = tilde(s, U);
    auto const target = strict ? U : idempotents(s);
    return !first_class_missing(b.L, target) && !first_class_missing(b.R, target);
  }

}  // namespace varsemi
