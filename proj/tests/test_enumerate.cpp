#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "fixtures.hpp"
#include "varsemi/direct.hpp"
#include "varsemi/enumerate.hpp"
#include "varsemi/errors.hpp"

using namespace varsemi;
using namespace fixtures;

namespace {
  // Every n^(n*n) table, kept if associative.
  std::vector<std::vector<element_type>> naive_filter(std::size_t n) {
    std::vector<std::vector<element_type>> out;
    std::vector<element_type>              t(n * n, 0);
    while (true) {
      if (direct::is_associative(direct::Table(n, t))) {
        out.push_back(t);
      }
      std::size_t i = n * n;
      while (i > 0 && t[i - 1] == n - 1) {
        t[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++t[i - 1];
    }
    return out;
  }

  // Row-major fill checking, after each cell, every triple whose four
  // products are already defined.
  std::size_t pruned_count(std::size_t n) {
    constexpr element_type  unset = ~element_type(0);
    std::vector<element_type> t(n * n, unset);
    auto                      consistent = [&]() {
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          auto const xy = t[x * n + y];
          if (xy == unset) {
            continue;
          }
          for (element_type z = 0; z < n; ++z) {
            auto const yz = t[y * n + z];
            if (yz == unset) {
              continue;
            }
            auto const l = t[xy * n + z];
            auto const r = t[x * n + yz];
            if (l != unset && r != unset && l != r) {
              return false;
            }
          }
        }
      }
      return true;
    };
    std::size_t count = 0;
    auto        fill  = [&](auto&& self, std::size_t cell) -> void {
      if (cell == n * n) {
        ++count;
        return;
      }
      for (element_type v = 0; v < n; ++v) {
        t[cell] = v;
        if (consistent()) {
          self(self, cell + 1);
        }
      }
      t[cell] = unset;
    };
    fill(fill, 0);
    return count;
  }

  std::vector<std::vector<element_type>> enumerated(std::size_t n) {
    std::vector<std::vector<element_type>> out;
    enumerate_semigroups(n, [&out](FiniteSemigroup const& s) {
      out.push_back(s.table());
      return true;
    });
    return out;
  }
}  // namespace

TEST_CASE("enumeration matches the naive filter for n <= 3") {
  for (std::size_t n : {1, 2, 3}) {
    CAPTURE(n);
    auto const expected = naive_filter(n);
    auto const got      = enumerated(n);
    CHECK(got == expected);  // same tables, same (lexicographic) order
  }
  CHECK(enumerated(1).size() == 1);
  CHECK(enumerated(2).size() == 8);
  CHECK(enumerated(3).size() == 113);
}

TEST_CASE("enumeration of order 4 matches an independent pruned count") {
  auto const tables = enumerated(4);
  CHECK(tables.size() == pruned_count(4));
  CHECK(tables.size() == 3492);
  CHECK(std::is_sorted(tables.begin(), tables.end()));
  CHECK(std::adjacent_find(tables.begin(), tables.end()) == tables.end());
}

TEST_CASE("enumeration stops when the consumer returns false") {
  std::size_t seen = 0;
  enumerate_semigroups(3, [&seen](FiniteSemigroup const&) { return ++seen < 10; });
  CHECK(seen == 10);
}

TEST_CASE("enumeration caps") {
  auto const any = [](FiniteSemigroup const&) { return true; };
  CHECK_THROWS_AS(enumerate_semigroups(5, any), OrderTooLarge);
  CHECK_THROWS_AS(enumerate_semigroups(6, any, 6), OrderTooLarge);
  CHECK_THROWS_AS(enumerate_semigroups(0, any), BadShape);
  CorpusSpec spec;
  spec.orders = {2, 5};
  CHECK_THROWS_AS(spec.validate(), OrderTooLarge);
  spec.max_order = 6;
  CHECK_THROWS_AS(spec.validate(), OrderTooLarge);
}

TEST_CASE("relabel") {
  CHECK(relabel(z2(), {1, 0}).rows() == std::vector<std::vector<element_type>>{{1, 0}, {0, 1}});
  CHECK(relabel(left_zero(), {1, 0}) == left_zero());
  CHECK_THROWS_AS(relabel(z2(), {0, 0}), BadShape);
  CHECK_THROWS_AS(relabel(z2(), {0}), BadShape);
}

TEST_CASE("canonical_form") {
  CHECK(canonical_form(trivial()) == trivial());
  CHECK(canonical_form(left_zero()) == left_zero());
  CHECK(canonical_form(relabel(z2(), {1, 0})) == z2());
}

TEST_CASE("canonical_form is invariant under random relabelling") {
  std::mt19937 rng(20261016);
  auto const   tables = corpus({3, 4});
  for (std::size_t i = 0; i < tables.size(); i += 13) {
    auto const&               s = tables[i];
    std::vector<element_type> perm(s.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto const c = canonical_form(s);
    CHECK(canonical_form(relabel(s, perm)) == c);
    CHECK(canonical_form(c) == c);
    CHECK(c.table() <= s.table());
  }
}

TEST_CASE("dedup keeps one table per isomorphism class") {
  for (std::size_t n : {1, 2, 3}) {
    CorpusSpec spec;
    spec.orders = {n};
    spec.dedup  = Dedup::up_to_isomorphism;
    std::vector<FiniteSemigroup> kept;
    enumerate_corpus(spec, [&kept](FiniteSemigroup const& s) {
      kept.push_back(s);
      return true;
    });
    // brute force: count orbits under relabelling
    std::vector<direct::Table> reps;
    for (auto const& s : corpus({n})) {
      direct::Table const t(s);
      if (std::none_of(reps.begin(), reps.end(), [&](auto const& r) {
            return direct::isomorphic(r, t);
          })) {
        reps.push_back(t);
      }
    }
    CHECK(kept.size() == reps.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
      for (std::size_t j = i + 1; j < kept.size(); ++j) {
        CHECK_FALSE(direct::isomorphic(direct::Table(kept[i]), direct::Table(kept[j])));
      }
    }
  }
}

TEST_CASE("enumerate_corpus limit and order") {
  CorpusSpec spec;
  spec.orders = {1, 2, 3};
  spec.limit  = 5;
  std::vector<std::size_t> orders;
  auto const               n = enumerate_corpus(spec, [&orders](FiniteSemigroup const& s) {
    orders.push_back(s.order());
    return true;
  });
  CHECK(n == 5);
  CHECK(orders == std::vector<std::size_t>{1, 2, 2, 2, 2});
  spec.limit = std::nullopt;
  CHECK(enumerate_corpus(spec, [](FiniteSemigroup const&) { return true; }) == 122);
}
