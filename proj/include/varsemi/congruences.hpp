// Congruences, quotients, homomorphisms and isomorphism search.

#ifndef VARSEMI_CONGRUENCES_HPP_
#define VARSEMI_CONGRUENCES_HPP_

#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "core.hpp"
#include "equivalence.hpp"

namespace varsemi {

  inline constexpr std::size_t DEFAULT_CONGRUENCE_ORDER_BOUND = 8;

  enum class CongruenceKind { none, left, right, two_sided };

  char const* to_string(CongruenceKind kind) noexcept;

  // Validated on construction: map(xy) = map(x)map(y).
  class Hom {
   public:
    Hom(FiniteSemigroup domain, FiniteSemigroup codomain, std::vector<element_type> map);

    FiniteSemigroup const& domain() const noexcept {
      return _domain;
    }
    FiniteSemigroup const& codomain() const noexcept {
      return _codomain;
    }
    std::vector<element_type> const& map() const noexcept {
      return _map;
    }
    element_type operator()(element_type x) const {
      return _map.at(x);
    }

    // Derived on demand from map, never stored.
    Equivalence   kernel() const;
    ElementSubset image() const;

   private:
    FiniteSemigroup           _domain;
    FiniteSemigroup           _codomain;
    std::vector<element_type> _map;
  };

  // The first pair (x, y) with map(xy) != map(x)map(y), if any.
  std::optional<std::pair<element_type, element_type>>
  homomorphism_violation(FiniteSemigroup const&           domain,
                         FiniteSemigroup const&           codomain,
                         std::vector<element_type> const& map);

  CongruenceKind congruence_kind(FiniteSemigroup const& s, Equivalence const& p);

  bool is_left_congruence(FiniteSemigroup const& s, Equivalence const& p);
  bool is_right_congruence(FiniteSemigroup const& s, Equivalence const& p);

  Equivalence principal_congruence(FiniteSemigroup const& s, element_type x, element_type y);

  //! The congruence lattice, as the join-closure of the principal
  //! congruences, sorted by class-index array.  Throws OrderTooLarge above
  //! bound.
  std::vector<Equivalence>
  all_congruences(FiniteSemigroup const& s,
                  std::size_t            bound = DEFAULT_CONGRUENCE_ORDER_BOUND);

  // x λ^u y iff ux = uy
  Equivalence sandwich_lambda(FiniteSemigroup const& s, element_type u);
  // x ρ^u y iff xu = yu
  Equivalence sandwich_rho(FiniteSemigroup const& s, element_type u);

  //! S/p with classes numbered by least member; throws NotACongruence.
  std::pair<FiniteSemigroup, Hom> quotient(FiniteSemigroup const& s, Equivalence const& p);

  //! The lexicographically least isomorphism s -> t as an array, if any.
  std::optional<std::vector<element_type>> are_isomorphic(FiniteSemigroup const& s,
                                                          FiniteSemigroup const& t);

  //! x -> ux from S^u onto the subsemigroup uS of S (re-indexed by
  //! ascending id).
  Hom u_translate_hom(FiniteSemigroup const& s, element_type u);

  //! No congruence other than the identity separates the idempotents.
  bool is_fundamental(FiniteSemigroup const& s,
                      std::size_t            bound = DEFAULT_CONGRUENCE_ORDER_BOUND);

  // Restriction of p to E(S) is the identity.
  bool is_idempotent_separating(FiniteSemigroup const& s, Equivalence const& p);

}  // namespace varsemi

#endif  // VARSEMI_CONGRUENCES_HPP_
