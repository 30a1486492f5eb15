// Finite semigroups given by validated Cayley tables, and element-level
// primitives over them.

#ifndef VARSEMI_CORE_HPP_
#define VARSEMI_CORE_HPP_

#include <bit>       // for popcount, countr_zero
#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t, uint64_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "errors.hpp"

namespace varsemi {

  using element_type = std::uint32_t;

  // Default upper bound on the order accepted by build_semigroup.
  inline constexpr std::size_t DEFAULT_MAX_ORDER = 16;
  // Subsets are 64-bit masks, so no carrier may exceed this.
  inline constexpr std::size_t HARD_MAX_ORDER = 64;

  enum class Side { left, right };

  //! A set of element ids of a fixed carrier, stored as a bit mask.
  class ElementSubset {
   public:
    ElementSubset() = default;
    explicit ElementSubset(std::size_t order) : _order(order), _bits(0) {
      if (order > HARD_MAX_ORDER) {
        throw OrderTooLarge(order, HARD_MAX_ORDER);
      }
    }
    ElementSubset(std::size_t order, std::uint64_t bits);
    ElementSubset(std::size_t order, std::vector<element_type> const& members);

    static ElementSubset full(std::size_t order);

    std::size_t order() const noexcept {
      return _order;
    }
    std::uint64_t bits() const noexcept {
      return _bits;
    }
    bool contains(element_type x) const noexcept {
      return x < _order && ((_bits >> x) & 1U);
    }
    void insert(element_type x);
    void erase(element_type x) noexcept {
      _bits &= ~(std::uint64_t(1) << x);
    }
    std::size_t size() const noexcept {
      return std::popcount(_bits);
    }
    bool empty() const noexcept {
      return _bits == 0;
    }
    bool is_subset_of(ElementSubset const& that) const noexcept {
      return (_bits & ~that._bits) == 0;
    }
    bool intersects(ElementSubset const& that) const noexcept {
      return (_bits & that._bits) != 0;
    }
    ElementSubset operator&(ElementSubset const& that) const;
    ElementSubset operator|(ElementSubset const& that) const;

    // ascending
    std::vector<element_type> members() const;

    bool operator==(ElementSubset const&) const = default;

   private:
    std::size_t   _order = 0;
    std::uint64_t _bits  = 0;
  };

  //! An associative Cayley table on the element ids 0, ..., order - 1.
  //!
  //! Instances are immutable; they can only be produced by build_semigroup
  //! (or the constructions in this library, which go through it).
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = delete;

    std::size_t order() const noexcept {
      return _order;
    }

    element_type product(element_type x, element_type y) const noexcept {
      return _table[x * _order + y];
    }

    std::span<element_type const> row(element_type x) const noexcept {
      return {_table.data() + x * _order, _order};
    }

    // Row-major flat table.
    std::vector<element_type> const& table() const noexcept {
      return _table;
    }

    std::vector<std::vector<element_type>> rows() const;

    std::optional<element_type> identity() const noexcept {
      return _identity;
    }

    bool is_monoid() const noexcept {
      return _identity.has_value();
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::string label(element_type x) const;

    // Equality is by table; labels are presentational.
    bool operator==(FiniteSemigroup const& that) const noexcept {
      return _order == that._order && _table == that._table;
    }

    void validate_element(element_type x) const {
      if (x >= _order) {
        throw ElementOutOfRange(x, _order);
      }
    }

   private:
    friend FiniteSemigroup build_semigroup(std::size_t,
                                           std::vector<element_type>,
                                           std::vector<std::string>,
                                           std::size_t);

    FiniteSemigroup(std::size_t                 order,
                    std::vector<element_type>   table,
                    std::vector<std::string>    labels,
                    std::optional<element_type> identity)
        : _order(order),
          _table(std::move(table)),
          _labels(std::move(labels)),
          _identity(identity) {}

    std::size_t                 _order;
    std::vector<element_type>   _table;
    std::vector<std::string>    _labels;
    std::optional<element_type> _identity;
  };

  //! Validates and wraps a row-major table.
  //!
  //! Throws BadShape if the table is not order × order or order is 0,
  //! OrderTooLarge if order exceeds max_order, OutOfRange for the first
  //! entry (row-major) that is not < order, and NotAssociative for the first
  //! triple (x, y, z) in row-major scan order with (xy)z != x(yz).
  FiniteSemigroup build_semigroup(std::size_t               order,
                                  std::vector<element_type> table,
                                  std::vector<std::string>  labels = {},
                                  std::size_t max_order = DEFAULT_MAX_ORDER);

  FiniteSemigroup build_semigroup(std::vector<std::vector<element_type>> const& rows,
                                  std::vector<std::string> labels = {},
                                  std::size_t max_order = DEFAULT_MAX_ORDER);

  //! Result of adjoin_identity; embedding[x] is the id of x in the monoid.
  struct Adjoined {
    FiniteSemigroup           monoid;
    std::vector<element_type> embedding;
    bool                      added;  // whether a fresh identity was adjoined
  };

  // S^1: s itself if it has an identity, otherwise s with a new identity at
  // id s.order().
  Adjoined adjoin_identity(FiniteSemigroup const& s);

  ElementSubset idempotents(FiniteSemigroup const& s);

  bool is_idempotent(FiniteSemigroup const& s, element_type x);

  bool is_regular_element(FiniteSemigroup const& s, element_type x);

  bool is_regular(FiniteSemigroup const& s);

  // Throws NotAMonoid if s has no identity.
  bool is_invertible(FiniteSemigroup const& s, element_type a);

  // uS for Side::left, Su for Side::right.
  ElementSubset translate_set(FiniteSemigroup const& s, element_type u, Side side);

  bool is_closed(FiniteSemigroup const& s, ElementSubset const& subset);

  //! The subsemigroup on a closed subset, re-indexed densely by ascending
  //! original id; the second member maps new ids to original ids.
  std::pair<FiniteSemigroup, std::vector<element_type>>
  subsemigroup(FiniteSemigroup const& s, ElementSubset const& subset);

}  // namespace varsemi

#endif  // VARSEMI_CORE_HPP_
