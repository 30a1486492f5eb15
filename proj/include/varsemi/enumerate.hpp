// Exhaustive generation of associative Cayley tables of small order.

#ifndef VARSEMI_ENUMERATE_HPP_
#define VARSEMI_ENUMERATE_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <optional>    // for optional
#include <vector>      // for vector

#include "core.hpp"

namespace varsemi {

  inline constexpr std::size_t DEFAULT_MAX_ENUMERATION_ORDER = 4;
  inline constexpr std::size_t HARD_MAX_ENUMERATION_ORDER    = 5;

  enum class Dedup { none, up_to_isomorphism };

  struct CorpusSpec {
    std::vector<std::size_t>   orders;
    Dedup                      dedup     = Dedup::none;
    std::optional<std::size_t> limit     = std::nullopt;
    std::size_t                max_order = DEFAULT_MAX_ENUMERATION_ORDER;

    // Throws OrderTooLarge or BadShape.
    void validate() const;
  };

  // Return false to stop the enumeration early.
  using Consumer = std::function<bool(FiniteSemigroup const&)>;

  //! Emits every associative table on {0, ..., n - 1} once, in lexicographic
  //! (row-major) table order, and returns the number emitted.
  //!
  //! Entries are filled row-major; after each placement every associativity
  //! triple whose four lookups are all already placed and involve the new
  //! entry is checked, and the branch is cut on the first violation.
  std::size_t enumerate_semigroups(std::size_t     n,
                                   Consumer const& consumer,
                                   std::size_t     max_order = DEFAULT_MAX_ENUMERATION_ORDER);

  //! t'(πx, πy) = π(t(x, y)), i.e. relabel element x as perm[x].
  FiniteSemigroup relabel(FiniteSemigroup const& s, std::vector<element_type> const& perm);

  //! Least table, row-major, over all relabellings of s.
  FiniteSemigroup canonical_form(FiniteSemigroup const& s);

  //! Runs enumerate_semigroups over spec.orders in order, applying dedup
  //! (keep tables equal to their canonical form) and limit.
  std::size_t enumerate_corpus(CorpusSpec const& spec, Consumer const& consumer);

}  // namespace varsemi

#endif  // VARSEMI_ENUMERATE_HPP_
