// Brute-force restatements of the definitions, evaluated pair by pair on the
// raw table.  These share no code with relations/congruences/orders and back
// the witness re-checker and the double-computation claims.
//
// S^1 is always formed here by adjoining a fresh identity (id n), even when S
// already has one; the quantified conditions below give the same answers
// either way.

#ifndef VARSEMI_DIRECT_HPP_
#define VARSEMI_DIRECT_HPP_

#include <optional>  // for optional
#include <vector>    // for vector

#include "core.hpp"

namespace varsemi::direct {

  class Table {
   public:
    explicit Table(FiniteSemigroup const& s);
    Table(std::size_t n, std::vector<element_type> t);

    std::size_t order() const noexcept {
      return _n;
    }
    element_type mul(element_type x, element_type y) const noexcept {
      return _t[x * _n + y];
    }
    // Product in S^1, the adjoined identity being id order().
    element_type mul1(element_type x, element_type y) const noexcept {
      return x == _n ? y : (y == _n ? x : mul(x, y));
    }
    Table sandwich(element_type a) const;
    std::vector<element_type> const& raw() const noexcept {
      return _t;
    }

   private:
    std::size_t               _n;
    std::vector<element_type> _t;
  };

  bool is_idempotent(Table const& t, element_type x);
  bool is_regular(Table const& t, element_type x);
  bool is_associative(Table const& t);

  bool L(Table const& t, element_type a, element_type b);
  bool R(Table const& t, element_type a, element_type b);
  bool R_star(Table const& t, element_type a, element_type b);
  bool L_star(Table const& t, element_type a, element_type b);
  bool L_tilde(Table const& t, std::vector<element_type> const& U, element_type a, element_type b);
  bool R_tilde(Table const& t, std::vector<element_type> const& U, element_type a, element_type b);

  // e a = a and for all x, y in S^1, xa = ya implies xe = ye
  bool R_star_idempotent_form(Table const& t, element_type a, element_type e);

  bool natural_leq(Table const& t, element_type a, element_type b);

  // Kernel labels of x -> f(x), numbered by first occurrence.
  std::vector<std::size_t> normalize(std::vector<std::size_t> const& labels);

  bool is_congruence(Table const& t, std::vector<std::size_t> const& labels);

  // Quotient by the partition with the given labels; classes numbered by
  // least member.  The partition must be a congruence.
  Table quotient(Table const& t, std::vector<std::size_t> const& labels);

  // Sub-table on a closed subset, re-indexed by ascending id.
  Table restrict(Table const& t, std::vector<element_type> const& members);

  // Tries every permutation.
  bool isomorphic(Table const& a, Table const& b);

  // All set partitions of [0, n) as restricted growth strings.
  std::vector<std::vector<std::size_t>> set_partitions(std::size_t n);

}  // namespace varsemi::direct

#endif  // VARSEMI_DIRECT_HPP_
