// Green's relations, their starred (cancellation) generalization, and the
// relations relative to a set U of idempotents.

#ifndef VARSEMI_RELATIONS_HPP_
#define VARSEMI_RELATIONS_HPP_

#include <optional>  // for optional
#include <utility>   // for pair

#include "core.hpp"
#include "equivalence.hpp"

namespace varsemi {

  struct GreenBundle {
    Equivalence L, R, H, D, J;
  };

  //! L*, R*, H* = L* ∧ R* and D* = L* ∨ R*.
  //!
  //! The relational composites R*∘L* and L*∘R* need not be transitive, so the
  //! first pair (row-major) on which each differs from D* is recorded.
  struct StarBundle {
    Equivalence L, R, H, D;
    std::optional<std::pair<element_type, element_type>> rl_composition_mismatch;
    std::optional<std::pair<element_type, element_type>> lr_composition_mismatch;

    bool composition_is_join() const noexcept {
      return !rl_composition_mismatch && !lr_composition_mismatch;
    }
  };

  struct TildeBundle {
    Equivalence   L, R, H, D;
    ElementSubset U;
  };

  GreenBundle green(FiniteSemigroup const& s);

  //! a R* b iff for all x, y in S^1: xa = ya <=> xb = yb; L* dually.
  StarBundle star(FiniteSemigroup const& s);

  //! a L~ b iff for all e in U: ae = a <=> be = b; R~ dually.
  //!
  //! Throws EmptyU, CarrierMismatch, or NotIdempotentMember for the least
  //! member of U that is not idempotent.
  TildeBundle tilde(FiniteSemigroup const& s, ElementSubset const& U);

  void validate_idempotent_subset(FiniteSemigroup const& s, ElementSubset const& U);

  // Index of the first class of p containing no member of subset.
  std::optional<std::size_t> first_class_missing(Equivalence const&   p,
                                                 ElementSubset const& subset);

  bool is_abundant(FiniteSemigroup const& s);

  //! Every L~ and R~ class contains an idempotent of S; with strict set, an
  //! element of U instead.
  bool is_weakly_u_abundant(FiniteSemigroup const& s,
                            ElementSubset const&   U,
                            bool                   strict = false);

}  // namespace varsemi

#endif  // VARSEMI_RELATIONS_HPP_
