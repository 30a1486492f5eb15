#include "varsemi/core.hpp"

#include <fmt/format.h>

namespace varsemi {

  ////////////////////////////////////////////////////////////////////////
  // ElementSubset
  ////////////////////////////////////////////////////////////////////////

  ElementSubset::ElementSubset(std::size_t order, std::uint64_t bits)
      : ElementSubset(order) {
    if (order < HARD_MAX_ORDER && (bits >> order) != 0) {
      throw ElementOutOfRange(std::countr_zero(bits >> order) + order, order);
    }
    _bits = bits;
  }

  ElementSubset::ElementSubset(std::size_t                      order,
                               std::vector<element_type> const& members)
      : ElementSubset(order) {
    for (auto x : members) {
      insert(x);
    }
  }

  ElementSubset ElementSubset::full(std::size_t order) {
    ElementSubset result(order);
    result._bits = order == HARD_MAX_ORDER ? ~std::uint64_t(0)
                                           : (std::uint64_t(1) << order) - 1;
    return result;
  }

  void ElementSubset::insert(element_type x) {
    if (x >= _order) {
      throw ElementOutOfRange(x, _order);
    }
    _bits |= std::uint64_t(1) << x;
  }

  ElementSubset ElementSubset::operator&(ElementSubset const& that) const {
    if (_order != that._order) {
      throw CarrierMismatch(_order, that._order);
    }
    return ElementSubset(_order, _bits & that._bits);
  }

  ElementSubset ElementSubset::operator|(ElementSubset const& that) const {
    if (_order != that._order) {
      throw CarrierMismatch(_order, that._order);
    }
    return ElementSubset(_order, _bits | that._bits);
  }

  std::vector<element_type> ElementSubset::members() const {
    std::vector<element_type> result;
    result.reserve(size());
    for (auto bits = _bits; bits != 0; bits &= bits - 1) {
      result.push_back(std::countr_zero(bits));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::vector<element_type>> FiniteSemigroup::rows() const {
    std::vector<std::vector<element_type>> result;
    for (element_type x = 0; x < _order; ++x) {
      auto r = row(x);
      result.emplace_back(r.begin(), r.end());
    }
    return result;
  }

  std::string FiniteSemigroup::label(element_type x) const {
    return _labels.empty() ? std::to_string(x) : _labels[x];
  }

  namespace {
    std::optional<element_type> find_identity(std::size_t                      n,
                                              std::vector<element_type> const& t) {
      for (element_type e = 0; e < n; ++e) {
        bool ok = true;
        for (element_type x = 0; x < n && ok; ++x) {
          ok = t[e * n + x] == x && t[x * n + e] == x;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  FiniteSemigroup build_semigroup(std::size_t               order,
                                  std::vector<element_type> table,
                                  std::vector<std::string>  labels,
                                  std::size_t               max_order) {
    if (order == 0) {
      throw BadShape("a semigroup must have at least one element");
    }
    if (order > max_order || order > HARD_MAX_ORDER) {
      throw OrderTooLarge(order, std::min(max_order, HARD_MAX_ORDER));
    }
    if (table.size() != order * order) {
      throw BadShape(fmt::format(
          "expected {} table entries, found {}", order * order, table.size()));
    }
    if (!labels.empty() && labels.size() != order) {
      throw BadShape(
          fmt::format("expected {} labels, found {}", order, labels.size()));
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= order) {
        throw OutOfRange(i / order, i % order, table[i]);
      }
    }
    auto const n = order;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto const xy = table[x * n + y];
        for (std::size_t z = 0; z < n; ++z) {
          if (table[xy * n + z] != table[x * n + table[y * n + z]]) {
            throw NotAssociative(x, y, z);
          }
        }
      }
    }
    auto identity = find_identity(n, table);
    return FiniteSemigroup(n, std::move(table), std::move(labels), identity);
  }

  FiniteSemigroup build_semigroup(std::vector<std::vector<element_type>> const& rows,
                                  std::vector<std::string> labels,
                                  std::size_t              max_order) {
    std::vector<element_type> flat;
    for (auto const& r : rows) {
      if (r.size() != rows.size()) {
        throw BadShape(fmt::format(
            "expected rows of length {}, found {}", rows.size(), r.size()));
      }
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return build_semigroup(rows.size(), std::move(flat), std::move(labels), max_order);
  }

  ////////////////////////////////////////////////////////////////////////
  // Element-level primitives
  ////////////////////////////////////////////////////////////////////////

  Adjoined adjoin_identity(FiniteSemigroup const& s) {
    auto const                n = s.order();
    std::vector<element_type> embedding(n);
    for (element_type x = 0; x < n; ++x) {
      embedding[x] = x;
    }
    if (s.is_monoid()) {
      return {s, std::move(embedding), false};
    }
    auto const                m = n + 1;
    std::vector<element_type> table(m * m);
    for (element_type x = 0; x < m; ++x) {
      for (element_type y = 0; y < m; ++y) {
        table[x * m + y] = x == n ? y : (y == n ? x : s.product(x, y));
      }
    }
    std::vector<std::string> labels;
    if (!s.labels().empty()) {
      labels = s.labels();
      labels.emplace_back("1");
    }
    return {build_semigroup(m, std::move(table), std::move(labels), HARD_MAX_ORDER),
            std::move(embedding),
            true};
  }

  bool is_idempotent(FiniteSemigroup const& s, element_type x) {
    s.validate_element(x);
    return s.product(x, x) == x;
  }

  ElementSubset idempotents(FiniteSemigroup const& s) {
    ElementSubset result(s.order());
    for (element_type x = 0; x < s.order(); ++x) {
      if (s.product(x, x) == x) {
        result.insert(x);
      }
    }
    return result;
  }

  bool is_regular_element(FiniteSemigroup const& s, element_type x) {
    s.validate_element(x);
    for (element_type y = 0; y < s.order(); ++y) {
      if (s.product(s.product(x, y), x) == x) {
        return true;
      }
    }
    return false;
  }

  bool is_regular(FiniteSemigroup const& s) {
    for (element_type x = 0; x < s.order(); ++x) {
      if (!is_regular_element(s, x)) {
        return false;
      }
    }
    return true;
  }

  bool is_invertible(FiniteSemigroup const& s, element_type a) {
    if (!s.is_monoid()) {
      throw NotAMonoid();
    }
    s.validate_element(a);
    auto const one = *s.identity();
    for (element_type b = 0; b < s.order(); ++b) {
      if (s.product(a, b) == one && s.product(b, a) == one) {
        return true;
      }
    }
    return false;
  }

  ElementSubset translate_set(FiniteSemigroup const& s, element_type u, Side side) {
    s.validate_element(u);
    ElementSubset result(s.order());
    for (element_type x = 0; x < s.order(); ++x) {
      result.insert(side == Side::left ? s.product(u, x) : s.product(x, u));
    }
    return result;
  }

  bool is_closed(FiniteSemigroup const& s, ElementSubset const& subset) {
    auto const members = subset.members();
    for (auto x : members) {
      for (auto y : members) {
        if (!subset.contains(s.product(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  std::pair<FiniteSemigroup, std::vector<element_type>>
  subsemigroup(FiniteSemigroup const& s, ElementSubset const& subset) {
    if (subset.order() != s.order()) {
      throw CarrierMismatch(s.order(), subset.order());
    }
    if (subset.empty()) {
      throw BadShape("a subsemigroup must be non-empty");
    }
    if (!is_closed(s, subset)) {
      throw BadShape("the subset is not closed under multiplication");
    }
    auto const                members = subset.members();
    std::vector<element_type> index(s.order(), 0);
    for (element_type i = 0; i < members.size(); ++i) {
      index[members[i]] = i;
    }
    auto const                m = members.size();
    std::vector<element_type> table(m * m);
    std::vector<std::string>  labels;
    for (element_type i = 0; i < m; ++i) {
      for (element_type j = 0; j < m; ++j) {
        table[i * m + j] = index[s.product(members[i], members[j])];
      }
      if (!s.labels().empty()) {
        labels.push_back(s.labels()[members[i]]);
      }
    }
    return {build_semigroup(m, std::move(table), std::move(labels), HARD_MAX_ORDER),
            members};
  }

}  // namespace varsemi
