#include "varsemi/orders.hpp"

namespace varsemi {

  OrderRelation::OrderRelation(std::size_t carrier_order, std::vector<element_type> elements)
      : _carrier_order(carrier_order),
        _elements(std::move(elements)),
        _position(carrier_order, NONE),
        _matrix(_elements.size() * _elements.size(), false) {
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      if (_elements[i] >= carrier_order) {
        throw ElementOutOfRange(_elements[i], carrier_order);
      }
      _position[_elements[i]] = i;
    }
  }

  std::size_t OrderRelation::index(element_type x) const {
    if (!contains(x)) {
      throw ElementOutOfRange(x, _carrier_order);
    }
    return _position[x];
  }

  bool OrderRelation::leq(element_type x, element_type y) const {
    return _matrix[index(x) * _elements.size() + index(y)];
  }

  void OrderRelation::set(element_type x, element_type y, bool value) {
    _matrix[index(x) * _elements.size() + index(y)] = value;
  }

  std::optional<element_type> OrderRelation::reflexivity_violation() const {
    for (auto x : _elements) {
      if (!leq(x, x)) {
        return x;
      }
    }
    return std::nullopt;
  }

  std::optional<std::vector<element_type>> OrderRelation::antisymmetry_violation() const {
    for (auto x : _elements) {
      for (auto y : _elements) {
        if (x != y && leq(x, y) && leq(y, x)) {
          return std::vector<element_type>{x, y};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::vector<element_type>> OrderRelation::transitivity_violation() const {
    for (auto x : _elements) {
      for (auto y : _elements) {
        if (!leq(x, y)) {
          continue;
        }
        for (auto z : _elements) {
          if (leq(y, z) && !leq(x, z)) {
            return std::vector<element_type>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  OrderRelation natural_leq(FiniteSemigroup const& s) {
    auto const                n  = s.order();
    auto const                s1 = adjoin_identity(s).monoid;
    std::vector<element_type> all(n);
    for (element_type x = 0; x < n; ++x) {
      all[x] = x;
    }
    OrderRelation result(n, all);
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        bool left = false, right = false;
        for (element_type x = 0; x < s1.order() && !left; ++x) {
          left = s1.product(x, b) == a && s1.product(x, a) == a;
        }
        for (element_type y = 0; y < s1.order() && !right; ++y) {
          right = s1.product(b, y) == a;
        }
        result.set(a, b, left && right);
      }
    }
    return result;
  }

  bool idempotent_leq(FiniteSemigroup const& s, element_type e, element_type f) {
    if (!is_idempotent(s, e)) {
      throw NotIdempotent(e);
    }
    if (!is_idempotent(s, f)) {
      throw NotIdempotent(f);
    }
    return s.product(e, f) == e && s.product(f, e) == e;
  }

  OrderRelation variant_idempotent_leq(VariantDescriptor const& v) {
    if (!is_idempotent(v.base, v.sandwich)) {
      throw NotIdempotent(v.sandwich);
    }
    auto const&   t = v.variant;
    auto const    E = idempotents(t).members();
    OrderRelation result(t.order(), E);
    for (auto x : E) {
      for (auto y : E) {
        result.set(x, y, t.product(x, y) == x && t.product(y, x) == x);
      }
    }
    return result;
  }

  OrderRelation variant_leq(VariantDescriptor const& v) {
    if (!is_idempotent(v.base, v.sandwich)) {
      throw NotIdempotent(v.sandwich);
    }
    return natural_leq(v.variant);
  }

}  // namespace varsemi
