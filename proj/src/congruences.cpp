#include "varsemi/congruences.hpp"

#include "varsemi/variants.hpp"

#include <algorithm>  // for sort, unique
#include <array>      // for array
#include <deque>      // for deque
#include <set>        // for set

namespace varsemi {

  char const* to_string(CongruenceKind kind) noexcept {
    switch (kind) {
      case CongruenceKind::none:
        return "none";
      case CongruenceKind::left:
        return "left";
      case CongruenceKind::right:
        return "right";
      case CongruenceKind::two_sided:
        return "two_sided";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Hom
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::pair<element_type, element_type>>
  homomorphism_violation(FiniteSemigroup const&           domain,
                         FiniteSemigroup const&           codomain,
                         std::vector<element_type> const& map) {
    for (element_type x = 0; x < domain.order(); ++x) {
      for (element_type y = 0; y < domain.order(); ++y) {
        if (map[domain.product(x, y)] != codomain.product(map[x], map[y])) {
          return std::make_pair(x, y);
        }
      }
    }
    return std::nullopt;
  }

  Hom::Hom(FiniteSemigroup domain, FiniteSemigroup codomain, std::vector<element_type> map)
      : _domain(std::move(domain)), _codomain(std::move(codomain)), _map(std::move(map)) {
    if (_map.size() != _domain.order()) {
      throw CarrierMismatch(_domain.order(), _map.size());
    }
    for (auto y : _map) {
      _codomain.validate_element(y);
    }
    if (auto bad = homomorphism_violation(_domain, _codomain, _map)) {
      throw NotAHomomorphism(bad->first, bad->second);
    }
  }

  Equivalence Hom::kernel() const {
    return kernel_of(_domain.order(), [this](element_type x) { return _map[x]; });
  }

  ElementSubset Hom::image() const {
    ElementSubset result(_codomain.order());
    for (auto y : _map) {
      result.insert(y);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // pairs (c.front(), x) generate p, so it is enough to check those
    bool compatible(FiniteSemigroup const& s, Equivalence const& p, Side side) {
      for (auto const& c : p.classes()) {
        for (auto x : c) {
          for (element_type z = 0; z < s.order(); ++z) {
            auto const lhs = side == Side::left ? s.product(z, c.front())
                                                : s.product(c.front(), z);
            auto const rhs = side == Side::left ? s.product(z, x) : s.product(x, z);
            if (!p.related(lhs, rhs)) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  bool is_left_congruence(FiniteSemigroup const& s, Equivalence const& p) {
    if (p.order() != s.order()) {
      throw CarrierMismatch(s.order(), p.order());
    }
    return compatible(s, p, Side::left);
  }

  bool is_right_congruence(FiniteSemigroup const& s, Equivalence const& p) {
    if (p.order() != s.order()) {
      throw CarrierMismatch(s.order(), p.order());
    }
    return compatible(s, p, Side::right);
  }

  CongruenceKind congruence_kind(FiniteSemigroup const& s, Equivalence const& p) {
    bool const left  = is_left_congruence(s, p);
    bool const right = is_right_congruence(s, p);
    if (left && right) {
      return CongruenceKind::two_sided;
    } else if (left) {
      return CongruenceKind::left;
    } else if (right) {
      return CongruenceKind::right;
    }
    return CongruenceKind::none;
  }

  Equivalence principal_congruence(FiniteSemigroup const& s, element_type x, element_type y) {
    s.validate_element(x);
    s.validate_element(y);
    DisjointSets                                   uf(s.order());
    std::deque<std::pair<element_type, element_type>> todo{{x, y}};
    while (!todo.empty()) {
      auto [a, b] = todo.front();
      todo.pop_front();
      if (!uf.unite(a, b)) {
        continue;
      }
      for (element_type z = 0; z < s.order(); ++z) {
        todo.emplace_back(s.product(z, a), s.product(z, b));
        todo.emplace_back(s.product(a, z), s.product(b, z));
      }
    }
    return uf.to_equivalence();
  }

  std::vector<Equivalence> all_congruences(FiniteSemigroup const& s, std::size_t bound) {
    if (s.order() > bound) {
      throw OrderTooLarge(s.order(), bound);
    }
    auto const               n = s.order();
    std::vector<Equivalence> principal;
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = x + 1; y < n; ++y) {
        principal.push_back(principal_congruence(s, x, y));
      }
    }
    std::sort(principal.begin(), principal.end());
    principal.erase(std::unique(principal.begin(), principal.end()), principal.end());

    std::set<Equivalence>    found{Equivalence::identity(n)};
    std::vector<Equivalence> frontier{Equivalence::identity(n)};
    while (!frontier.empty()) {
      std::vector<Equivalence> next;
      for (auto const& c : frontier) {
        for (auto const& p : principal) {
          auto j = join(c, p);
          if (found.insert(j).second) {
            next.push_back(std::move(j));
          }
        }
      }
      frontier = std::move(next);
    }
    return {found.begin(), found.end()};
  }

  Equivalence sandwich_lambda(FiniteSemigroup const& s, element_type u) {
    s.validate_element(u);
    return kernel_of(s.order(), [&](element_type x) { return s.product(u, x); });
  }

  Equivalence sandwich_rho(FiniteSemigroup const& s, element_type u) {
    s.validate_element(u);
    return kernel_of(s.order(), [&](element_type x) { return s.product(x, u); });
  }

  std::pair<FiniteSemigroup, Hom> quotient(FiniteSemigroup const& s, Equivalence const& p) {
    if (congruence_kind(s, p) != CongruenceKind::two_sided) {
      throw NotACongruence();
    }
    auto const                k = p.number_of_classes();
    std::vector<element_type> table(k * k);
    for (element_type i = 0; i < k; ++i) {
      for (element_type j = 0; j < k; ++j) {
        table[i * k + j] =
            p.class_index(s.product(p.classes()[i].front(), p.classes()[j].front()));
      }
    }
    auto                      q = build_semigroup(k, std::move(table), {}, HARD_MAX_ORDER);
    std::vector<element_type> map(s.order());
    for (element_type x = 0; x < s.order(); ++x) {
      map[x] = p.class_index(x);
    }
    Hom projection(s, q, std::move(map));
    return {std::move(q), std::move(projection)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using signature_type = std::array<std::size_t, 6>;

    // Isomorphism-invariant data about a single element.
    signature_type element_signature(FiniteSemigroup const& s, element_type x) {
      signature_type sig{};
      sig[0] = s.product(x, x) == x;
      for (element_type y = 0; y < s.order(); ++y) {
        sig[1] += s.product(x, y) == x;
        sig[2] += s.product(y, x) == x;
        sig[3] += s.product(x, y) == y;
        sig[4] += s.product(y, x) == y;
      }
      // size of the monogenic subsemigroup <x>
      std::uint64_t seen = 0;
      for (auto p = x; !((seen >> p) & 1U); p = s.product(p, x)) {
        seen |= std::uint64_t(1) << p;
      }
      sig[5] = std::popcount(seen);
      return sig;
    }

    class IsoSearch {
     public:
      IsoSearch(FiniteSemigroup const& s, FiniteSemigroup const& t)
          : _s(s), _t(t), _map(s.order(), UNSET), _used(t.order(), false) {
        for (element_type x = 0; x < s.order(); ++x) {
          _sig_s.push_back(element_signature(s, x));
          _sig_t.push_back(element_signature(t, x));
        }
      }

      std::optional<std::vector<element_type>> run() {
        auto a = _sig_s, b = _sig_t;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return std::nullopt;
        }
        if (extend(0)) {
          return _map;
        }
        return std::nullopt;
      }

     private:
      static constexpr element_type UNSET = static_cast<element_type>(-1);

      bool consistent(element_type x) const {
        for (element_type y = 0; y <= x; ++y) {
          for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
            auto const pq = _map[_s.product(p, q)];
            if (pq != UNSET && pq != _t.product(_map[p], _map[q])) {
              return false;
            }
          }
        }
        return true;
      }

      bool extend(element_type x) {
        if (x == _s.order()) {
          return !homomorphism_violation(_s, _t, _map);
        }
        for (element_type c = 0; c < _t.order(); ++c) {
          if (_used[c] || _sig_s[x] != _sig_t[c]) {
            continue;
          }
          _map[x]  = c;
          _used[c] = true;
          if (consistent(x) && extend(x + 1)) {
            return true;
          }
          _map[x]  = UNSET;
          _used[c] = false;
        }
        return false;
      }

      FiniteSemigroup const&      _s;
      FiniteSemigroup const&      _t;
      std::vector<element_type>   _map;
      std::vector<bool>           _used;
      std::vector<signature_type> _sig_s, _sig_t;
    };
  }  // namespace

  std::optional<std::vector<element_type>> are_isomorphic(FiniteSemigroup const& s,
                                                          FiniteSemigroup const& t) {
    if (s.order() != t.order()) {
      return std::nullopt;
    }
    if (idempotents(s).size() != idempotents(t).size()) {
      return std::nullopt;
    }
    return IsoSearch(s, t).run();
  }

  Hom u_translate_hom(FiniteSemigroup const& s, element_type u) {
    auto v           = variant(s, u).variant;
    auto uS          = translate_set(s, u, Side::left);
    auto [sub, ids]  = subsemigroup(s, uS);
    std::vector<element_type> index(s.order(), 0);
    for (element_type i = 0; i < ids.size(); ++i) {
      index[ids[i]] = i;
    }
    std::vector<element_type> map(s.order());
    for (element_type x = 0; x < s.order(); ++x) {
      map[x] = index[s.product(u, x)];
    }
    return Hom(std::move(v), std::move(sub), std::move(map));
  }

  bool is_idempotent_separating(FiniteSemigroup const& s, Equivalence const& p) {
    auto const E = idempotents(s).members();
    for (std::size_t i = 0; i < E.size(); ++i) {
      for (std::size_t j = i + 1; j < E.size(); ++j) {
        if (p.related(E[i], E[j])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_fundamental(FiniteSemigroup const& s, std::size_t bound) {
    for (auto const& c : all_congruences(s, bound)) {
      if (!c.is_identity() && is_idempotent_separating(s, c)) {
        return false;
      }
    }
    return true;
  }

}  // namespace varsemi
