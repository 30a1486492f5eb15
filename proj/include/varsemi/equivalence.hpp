// Equivalence relations on element ids, stored as normalized partitions.

#ifndef VARSEMI_EQUIVALENCE_HPP_
#define VARSEMI_EQUIVALENCE_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "core.hpp"

namespace varsemi {

  //! A partition of {0, ..., n - 1}.
  //!
  //! Classes are numbered 0, ..., k - 1 in order of their least member, so two
  //! Equivalence objects are equal exactly when they describe the same
  //! relation.
  class Equivalence {
   public:
    Equivalence() = default;

    // Any labelling of the classes is accepted; it is renumbered.
    static Equivalence from_labels(std::vector<std::size_t> const& labels);

    // Smallest equivalence containing the given pairs.
    static Equivalence
    from_pairs(std::size_t                                         n,
               std::vector<std::pair<element_type, element_type>> const& pairs);

    static Equivalence identity(std::size_t n);
    static Equivalence universal(std::size_t n);

    std::size_t order() const noexcept {
      return _class_of.size();
    }
    std::size_t number_of_classes() const noexcept {
      return _classes.size();
    }
    std::size_t class_index(element_type x) const {
      return _class_of.at(x);
    }
    std::vector<std::size_t> const& class_indices() const noexcept {
      return _class_of;
    }
    std::vector<std::vector<element_type>> const& classes() const noexcept {
      return _classes;
    }
    std::vector<element_type> const& class_of(element_type x) const {
      return _classes[class_index(x)];
    }
    bool related(element_type x, element_type y) const {
      return class_index(x) == class_index(y);
    }
    bool is_identity() const noexcept {
      return _classes.size() == _class_of.size();
    }
    bool is_universal() const noexcept {
      return _classes.size() == 1;
    }

    // Every class of *this lies inside a class of that.
    bool refines(Equivalence const& that) const;

    // "0 1|2" style, classes separated by '|'.
    std::string to_string() const;

    bool operator==(Equivalence const& that) const noexcept {
      return _class_of == that._class_of;
    }
    // Lexicographic on the normalized class-index array.
    auto operator<=>(Equivalence const& that) const noexcept {
      return _class_of <=> that._class_of;
    }

   private:
    std::vector<std::size_t>               _class_of;
    std::vector<std::vector<element_type>> _classes;
  };

  Equivalence meet(Equivalence const& p, Equivalence const& q);
  Equivalence join(Equivalence const& p, Equivalence const& q);

  //! Checks whether the relational composition p ∘ q, that is
  //! { (x, y) : x p z and z q y for some z }, equals target; returns the first
  //! (row-major) pair on which they disagree.
  std::optional<std::pair<element_type, element_type>>
  composition_mismatch(Equivalence const& p,
                       Equivalence const& q,
                       Equivalence const& target);

  //! Partition of [0, n) by the value of key(x).
  template <typename Key>
  Equivalence kernel_of(std::size_t n, Key&& key) {
    using key_type = std::decay_t<decltype(key(element_type(0)))>;
    std::vector<key_type>    seen;
    std::vector<std::size_t> labels(n);
    for (element_type x = 0; x < n; ++x) {
      auto        k = key(x);
      std::size_t i = 0;
      while (i < seen.size() && !(seen[i] == k)) {
        ++i;
      }
      if (i == seen.size()) {
        seen.push_back(std::move(k));
      }
      labels[x] = i;
    }
    return Equivalence::from_labels(labels);
  }

  //! Union-find over [0, n) with path halving and union by size.
  class DisjointSets {
   public:
    explicit DisjointSets(std::size_t n);
    std::size_t find(std::size_t x);
    // Returns false if x and y were already in the same set.
    bool        unite(std::size_t x, std::size_t y);
    Equivalence to_equivalence();

   private:
    std::vector<std::size_t> _parent;
    std::vector<std::size_t> _size;
  };

}  // namespace varsemi

#endif  // VARSEMI_EQUIVALENCE_HPP_
