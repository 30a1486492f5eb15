#include "varsemi/equivalence.hpp"

#include <numeric>  // for iota

namespace varsemi {

  Equivalence Equivalence::from_labels(std::vector<std::size_t> const& labels) {
    Equivalence              result;
    std::vector<std::size_t> renumber;  // old label -> new index, by first use
    std::size_t const        none = static_cast<std::size_t>(-1);
    result._class_of.resize(labels.size());
    for (element_type x = 0; x < labels.size(); ++x) {
      auto const old = labels[x];
      if (old >= renumber.size()) {
        renumber.resize(old + 1, none);
      }
      if (renumber[old] == none) {
        renumber[old] = result._classes.size();
        result._classes.emplace_back();
      }
      result._class_of[x] = renumber[old];
      result._classes[renumber[old]].push_back(x);
    }
    return result;
  }

  Equivalence Equivalence::from_pairs(
      std::size_t                                              n,
      std::vector<std::pair<element_type, element_type>> const& pairs) {
    DisjointSets uf(n);
    for (auto const& [x, y] : pairs) {
      if (x >= n || y >= n) {
        throw ElementOutOfRange(std::max(x, y), n);
      }
      uf.unite(x, y);
    }
    return uf.to_equivalence();
  }

  Equivalence Equivalence::identity(std::size_t n) {
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
  }

  Equivalence Equivalence::universal(std::size_t n) {
    return from_labels(std::vector<std::size_t>(n, 0));
  }

  bool Equivalence::refines(Equivalence const& that) const {
    if (order() != that.order()) {
      throw CarrierMismatch(order(), that.order());
    }
    for (auto const& c : _classes) {
      for (auto x : c) {
        if (!that.related(c.front(), x)) {
          return false;
        }
      }
    }
    return true;
  }

  std::string Equivalence::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < _classes.size(); ++i) {
      if (i != 0) {
        out += '|';
      }
      for (std::size_t j = 0; j < _classes[i].size(); ++j) {
        if (j != 0) {
          out += ' ';
        }
        out += std::to_string(_classes[i][j]);
      }
    }
    return out;
  }

  Equivalence meet(Equivalence const& p, Equivalence const& q) {
    if (p.order() != q.order()) {
      throw CarrierMismatch(p.order(), q.order());
    }
    auto const               k = q.number_of_classes();
    std::vector<std::size_t> labels(p.order());
    for (element_type x = 0; x < p.order(); ++x) {
      labels[x] = p.class_index(x) * k + q.class_index(x);
    }
    return Equivalence::from_labels(labels);
  }

  Equivalence join(Equivalence const& p, Equivalence const& q) {
    if (p.order() != q.order()) {
      throw CarrierMismatch(p.order(), q.order());
    }
    DisjointSets uf(p.order());
    for (auto const* e : {&p, &q}) {
      for (auto const& c : e->classes()) {
        for (auto x : c) {
          uf.unite(c.front(), x);
        }
      }
    }
    return uf.to_equivalence();
  }

  std::optional<std::pair<element_type, element_type>>
  composition_mismatch(Equivalence const& p,
                       Equivalence const& q,
                       Equivalence const& target) {
    if (p.order() != q.order() || p.order() != target.order()) {
      throw CarrierMismatch(p.order(),
                            p.order() != q.order() ? q.order() : target.order());
    }
    auto const n = p.order();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        bool composed = false;
        for (auto z : p.class_of(x)) {
          if (q.related(z, y)) {
            composed = true;
            break;
          }
        }
        if (composed != target.related(x, y)) {
          return std::make_pair(x, y);
        }
      }
    }
    return std::nullopt;
  }

  DisjointSets::DisjointSets(std::size_t n) : _parent(n), _size(n, 1) {
    std::iota(_parent.begin(), _parent.end(), 0);
  }

  std::size_t DisjointSets::find(std::size_t x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  bool DisjointSets::unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (_size[x] < _size[y]) {
      std::swap(x, y);
    }
    _parent[y] = x;
    _size[x] += _size[y];
    return true;
  }

  Equivalence DisjointSets::to_equivalence() {
    std::vector<std::size_t> labels(_parent.size());
    for (std::size_t x = 0; x < labels.size(); ++x) {
      labels[x] = find(x);
    }
    return Equivalence::from_labels(labels);
  }

}  // namespace varsemi
