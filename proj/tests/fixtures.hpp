// Small named semigroups and corpus helpers shared by the unit tests.

#ifndef VARSEMI_TESTS_FIXTURES_HPP_
#define VARSEMI_TESTS_FIXTURES_HPP_

#include <vector>

#include "varsemi/core.hpp"
#include "varsemi/enumerate.hpp"

namespace fixtures {
  using varsemi::build_semigroup;
  using varsemi::FiniteSemigroup;

  inline FiniteSemigroup trivial() {
    return build_semigroup({{0}});
  }
  // x y = x
  inline FiniteSemigroup left_zero() {
    return build_semigroup({{0, 0}, {1, 1}});
  }
  // x y = y
  inline FiniteSemigroup right_zero() {
    return build_semigroup({{0, 1}, {0, 1}});
  }
  inline FiniteSemigroup z2() {
    return build_semigroup({{0, 1}, {1, 0}});
  }
  // {0, a}, all products 0; a is id 1
  inline FiniteSemigroup null2() {
    return build_semigroup({{0, 0}, {0, 0}});
  }
  // min on {0, 1}
  inline FiniteSemigroup min2() {
    return build_semigroup({{0, 0}, {0, 1}});
  }
  // min on {0, 1, 2}
  inline FiniteSemigroup min3() {
    return build_semigroup({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
  }
  // Z3, identity 0
  inline FiniteSemigroup z3() {
    return build_semigroup({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  }

  inline std::vector<FiniteSemigroup> corpus(std::vector<std::size_t> orders) {
    std::vector<FiniteSemigroup> out;
    varsemi::CorpusSpec          spec;
    spec.orders = std::move(orders);
    varsemi::enumerate_corpus(spec, [&out](FiniteSemigroup const& s) {
      out.push_back(s);
      return true;
    });
    return out;
  }
}  // namespace fixtures

#endif  // VARSEMI_TESTS_FIXTURES_HPP_
