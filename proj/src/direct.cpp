#include "varsemi/direct.hpp"

#include <algorithm>  // for next_permutation, sort
#include <numeric>    // for iota

namespace varsemi::direct {

  Table::Table(FiniteSemigroup const& s) : _n(s.order()), _t(s.table()) {}

  Table::Table(std::size_t n, std::vector<element_type> t) : _n(n), _t(std::move(t)) {}

  Table Table::sandwich(element_type a) const {
    std::vector<element_type> t(_n * _n);
    for (element_type x = 0; x < _n; ++x) {
      for (element_type y = 0; y < _n; ++y) {
        t[x * _n + y] = mul(mul(x, a), y);
      }
    }
    return Table(_n, std::move(t));
  }

  bool is_idempotent(Table const& t, element_type x) {
    return t.mul(x, x) == x;
  }

  bool is_regular(Table const& t, element_type x) {
    for (element_type y = 0; y < t.order(); ++y) {
      if (t.mul(t.mul(x, y), x) == x) {
        return true;
      }
    }
    return false;
  }

  bool is_associative(Table const& t) {
    auto const n = t.order();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        for (element_type z = 0; z < n; ++z) {
          if (t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    // a in S^1 b
    bool in_left_ideal(Table const& t, element_type a, element_type b) {
      for (element_type x = 0; x <= t.order(); ++x) {
        if (t.mul1(x, b) == a) {
          return true;
        }
      }
      return false;
    }

    bool in_right_ideal(Table const& t, element_type a, element_type b) {
      for (element_type x = 0; x <= t.order(); ++x) {
        if (t.mul1(b, x) == a) {
          return true;
        }
      }
      return false;
    }
  }  // namespace

  bool L(Table const& t, element_type a, element_type b) {
    return in_left_ideal(t, a, b) && in_left_ideal(t, b, a);
  }

  bool R(Table const& t, element_type a, element_type b) {
    return in_right_ideal(t, a, b) && in_right_ideal(t, b, a);
  }

  bool R_star(Table const& t, element_type a, element_type b) {
    for (element_type x = 0; x <= t.order(); ++x) {
      for (element_type y = 0; y <= t.order(); ++y) {
        if ((t.mul1(x, a) == t.mul1(y, a)) != (t.mul1(x, b) == t.mul1(y, b))) {
          return false;
        }
      }
    }
    return true;
  }

  bool L_star(Table const& t, element_type a, element_type b) {
    for (element_type x = 0; x <= t.order(); ++x) {
      for (element_type y = 0; y <= t.order(); ++y) {
        if ((t.mul1(a, x) == t.mul1(a, y)) != (t.mul1(b, x) == t.mul1(b, y))) {
          return false;
        }
      }
    }
    return true;
  }

  bool L_tilde(Table const& t, std::vector<element_type> const& U, element_type a, element_type b) {
    for (auto e : U) {
      if ((t.mul(a, e) == a) != (t.mul(b, e) == b)) {
        return false;
      }
    }
    return true;
  }

  bool R_tilde(Table const& t, std::vector<element_type> const& U, element_type a, element_type b) {
    for (auto e : U) {
      if ((t.mul(e, a) == a) != (t.mul(e, b) == b)) {
        return false;
      }
    }
    return true;
  }

  bool R_star_idempotent_form(Table const& t, element_type a, element_type e) {
    if (t.mul(e, a) != a) {
      return false;
    }
    for (element_type x = 0; x <= t.order(); ++x) {
      for (element_type y = 0; y <= t.order(); ++y) {
        if (t.mul1(x, a) == t.mul1(y, a) && t.mul1(x, e) != t.mul1(y, e)) {
          return false;
        }
      }
    }
    return true;
  }

  bool natural_leq(Table const& t, element_type a, element_type b) {
    bool left = false, right = false;
    for (element_type x = 0; x <= t.order(); ++x) {
      left  = left || (t.mul1(x, b) == a && t.mul1(x, a) == a);
      right = right || t.mul1(b, x) == a;
    }
    return left && right;
  }

  std::vector<std::size_t> normalize(std::vector<std::size_t> const& labels) {
    std::vector<std::size_t> seen, out;
    for (auto l : labels) {
      auto it = std::find(seen.begin(), seen.end(), l);
      out.push_back(it - seen.begin());
      if (it == seen.end()) {
        seen.push_back(l);
      }
    }
    return out;
  }

  bool is_congruence(Table const& t, std::vector<std::size_t> const& labels) {
    auto const n = t.order();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        if (labels[x] != labels[y]) {
          continue;
        }
        for (element_type z = 0; z < n; ++z) {
          if (labels[t.mul(z, x)] != labels[t.mul(z, y)]
              || labels[t.mul(x, z)] != labels[t.mul(y, z)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Table quotient(Table const& t, std::vector<std::size_t> const& labels) {
    auto const                norm = normalize(labels);
    std::size_t const         k    = *std::max_element(norm.begin(), norm.end()) + 1;
    std::vector<element_type> rep(k, 0);
    for (element_type x = t.order(); x-- > 0;) {
      rep[norm[x]] = x;
    }
    std::vector<element_type> q(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        q[i * k + j] = norm[t.mul(rep[i], rep[j])];
      }
    }
    return Table(k, std::move(q));
  }

  Table restrict(Table const& t, std::vector<element_type> const& members) {
    auto sorted = members;
    std::sort(sorted.begin(), sorted.end());
    auto const                m = sorted.size();
    std::vector<element_type> q(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        auto const p = t.mul(sorted[i], sorted[j]);
        q[i * m + j] = std::find(sorted.begin(), sorted.end(), p) - sorted.begin();
      }
    }
    return Table(m, std::move(q));
  }

  bool isomorphic(Table const& a, Table const& b) {
    if (a.order() != b.order()) {
      return false;
    }
    auto const                n = a.order();
    std::vector<element_type> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (element_type x = 0; x < n && ok; ++x) {
        for (element_type y = 0; y < n && ok; ++y) {
          ok = perm[a.mul(x, y)] == b.mul(perm[x], perm[y]);
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  std::vector<std::vector<std::size_t>> set_partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              rgs(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t blocks) -> void {
      if (i == n) {
        out.push_back(rgs);
        return;
      }
      for (std::size_t b = 0; b <= blocks; ++b) {
        rgs[i] = b;
        self(self, i + 1, b == blocks ? blocks + 1 : blocks);
      }
    };
    if (n == 0) {
      return {{}};
    }
    rgs[0] = 0;
    rec(rec, 1, 1);
    return out;
  }

}  // namespace varsemi::direct
