#include "varsemi/enumerate.hpp"

#include <algorithm>  // for next_permutation
#include <numeric>    // for iota

#include <fmt/format.h>

#include "varsemi/errors.hpp"

namespace varsemi {

  void CorpusSpec::validate() const {
    if (max_order > HARD_MAX_ENUMERATION_ORDER) {
      throw OrderTooLarge(max_order, HARD_MAX_ENUMERATION_ORDER);
    }
    for (auto n : orders) {
      if (n == 0) {
        throw BadShape("corpus orders must be at least 1");
      }
      if (n > max_order) {
        throw OrderTooLarge(n, max_order);
      }
    }
  }

  namespace {
    class Enumerator {
     public:
      Enumerator(std::size_t n, Consumer const& consumer)
          : _n(n), _table(n * n, 0), _consumer(consumer) {}

      std::size_t run() {
        fill(0);
        return _count;
      }

     private:
      bool placed(std::size_t x, std::size_t y) const noexcept {
        return x * _n + y <= _last;
      }

      element_type at(std::size_t x, std::size_t y) const noexcept {
        return _table[x * _n + y];
      }

      // false iff all four lookups are placed and (xy)z != x(yz)
      bool triple_ok(std::size_t x, std::size_t y, std::size_t z) const noexcept {
        if (!placed(x, y) || !placed(y, z)) {
          return true;
        }
        auto const p = at(x, y), q = at(y, z);
        if (!placed(p, z) || !placed(x, q)) {
          return true;
        }
        return at(p, z) == at(x, q);
      }

      // Triples in which entry (i, j) is one of the four lookups.
      bool consistent(std::size_t i, std::size_t j) const noexcept {
        auto const n = _n;
        for (std::size_t z = 0; z < n; ++z) {
          if (!triple_ok(i, j, z)) {
            return false;
          }
        }
        for (std::size_t x = 0; x < n; ++x) {
          if (!triple_ok(x, i, j)) {
            return false;
          }
        }
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if (placed(x, y) && at(x, y) == i && !triple_ok(x, y, j)) {
              return false;
            }
            if (placed(x, y) && at(x, y) == j && !triple_ok(i, x, y)) {
              return false;
            }
          }
        }
        return true;
      }

      bool fill(std::size_t k) {
        if (k == _n * _n) {
          ++_count;
          auto s = build_semigroup(_n, _table, {}, HARD_MAX_ORDER);
          return _consumer(s);
        }
        auto const i = k / _n, j = k % _n;
        for (element_type v = 0; v < _n; ++v) {
          _table[k] = v;
          _last     = k;
          if (consistent(i, j) && !fill(k + 1)) {
            return false;
          }
        }
        _last = k - 1;  // wraps for k == 0, never read then
        return true;
      }

      std::size_t               _n;
      std::vector<element_type> _table;
      Consumer const&           _consumer;
      std::size_t               _last  = 0;
      std::size_t               _count = 0;
    };
  }  // namespace

  std::size_t enumerate_semigroups(std::size_t n, Consumer const& consumer, std::size_t max_order) {
    if (max_order > HARD_MAX_ENUMERATION_ORDER) {
      throw OrderTooLarge(max_order, HARD_MAX_ENUMERATION_ORDER);
    }
    if (n > max_order) {
      throw OrderTooLarge(n, max_order);
    }
    if (n == 0) {
      throw BadShape("order must be at least 1");
    }
    return Enumerator(n, consumer).run();
  }

  FiniteSemigroup relabel(FiniteSemigroup const& s, std::vector<element_type> const& perm) {
    auto const n = s.order();
    if (perm.size() != n) {
      throw BadShape(fmt::format("permutation has {} entries, expected {}", perm.size(), n));
    }
    std::vector<bool> hit(n, false);
    for (auto p : perm) {
      if (p >= n || hit[p]) {
        throw BadShape("relabelling is not a permutation");
      }
      hit[p] = true;
    }
    std::vector<element_type> table(n * n);
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        table[perm[x] * n + perm[y]] = perm[s.product(x, y)];
      }
    }
    return build_semigroup(n, std::move(table), {}, HARD_MAX_ORDER);
  }

  FiniteSemigroup canonical_form(FiniteSemigroup const& s) {
    auto const                n = s.order();
    std::vector<element_type> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<element_type> best = s.table();
    std::vector<element_type> candidate(n * n);
    do {
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          candidate[perm[x] * n + perm[y]] = perm[s.product(x, y)];
        }
      }
      if (candidate < best) {
        best = candidate;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return build_semigroup(n, std::move(best), {}, HARD_MAX_ORDER);
  }

  std::size_t enumerate_corpus(CorpusSpec const& spec, Consumer const& consumer) {
    spec.validate();
    std::size_t emitted = 0;
    bool        stopped = false;
    for (auto n : spec.orders) {
      if (stopped) {
        break;
      }
      enumerate_semigroups(
          n,
          [&](FiniteSemigroup const& s) {
            if (spec.limit && emitted >= *spec.limit) {
              stopped = true;
              return false;
            }
            if (spec.dedup == Dedup::up_to_isomorphism && !(canonical_form(s) == s)) {
              return true;
            }
            ++emitted;
            if (!consumer(s)) {
              stopped = true;
              return false;
            }
            return true;
          },
          spec.max_order);
    }
    return emitted;
  }

}  // namespace varsemi
