// Independent confirmation of FAILS results.  Only the raw table, the
// result's params and witness, and the brute-force definitions in direct.hpp
// are used here.

#include <map>  // for map

#include "varsemi/claims.hpp"
#include "varsemi/direct.hpp"
#include "varsemi/table_io.hpp"

namespace varsemi {

  using json = nlohmann::json;

  namespace {
    using direct::Table;
    using Elements = std::vector<element_type>;

    Elements idempotents_of(Table const& t) {
      Elements out;
      for (element_type x = 0; x < t.order(); ++x) {
        if (direct::is_idempotent(t, x)) {
          out.push_back(x);
        }
      }
      return out;
    }

    bool contains(Elements const& xs, element_type x) {
      return std::find(xs.begin(), xs.end(), x) != xs.end();
    }

    bool related(Table const&       t,
                 std::string const& name,
                 Elements const&    U,
                 element_type       a,
                 element_type       b) {
      if (name == "L") {
        return direct::L(t, a, b);
      } else if (name == "R") {
        return direct::R(t, a, b);
      } else if (name == "L*") {
        return direct::L_star(t, a, b);
      } else if (name == "R*") {
        return direct::R_star(t, a, b);
      } else if (name == "L~") {
        return direct::L_tilde(t, U, a, b);
      } else if (name == "R~") {
        return direct::R_tilde(t, U, a, b);
      }
      throw Error("unknown relation '" + name + "'");
    }

    // the class of x contains no member of target
    bool class_misses(Table const&       t,
                      std::string const& name,
                      Elements const&    U,
                      element_type       x,
                      Elements const&    target) {
      for (element_type y = 0; y < t.order(); ++y) {
        if (related(t, name, U, x, y) && contains(target, y)) {
          return false;
        }
      }
      return true;
    }

    bool every_class_meets(Table const&       t,
                           std::string const& name,
                           Elements const&    U,
                           Elements const&    target) {
      for (element_type x = 0; x < t.order(); ++x) {
        if (class_misses(t, name, U, x, target)) {
          return false;
        }
      }
      return true;
    }

    bool regular(Table const& t) {
      for (element_type x = 0; x < t.order(); ++x) {
        if (!direct::is_regular(t, x)) {
          return false;
        }
      }
      return true;
    }

    bool abundant(Table const& t) {
      auto const E = idempotents_of(t);
      return every_class_meets(t, "L*", {}, E) && every_class_meets(t, "R*", {}, E);
    }

    std::optional<element_type> identity_of(Table const& t) {
      for (element_type e = 0; e < t.order(); ++e) {
        bool ok = true;
        for (element_type x = 0; x < t.order() && ok; ++x) {
          ok = t.mul(e, x) == x && t.mul(x, e) == x;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }

    bool weakly_abundant(Table const& t, Elements const& U, bool strict) {
      auto const target = strict ? U : idempotents_of(t);
      return every_class_meets(t, "L~", U, target) && every_class_meets(t, "R~", U, target);
    }

    element_type el(json const& j, char const* key) {
      return j.at(key).get<element_type>();
    }

    Table lambda_quotient(Table const& t, element_type u) {
      std::vector<std::size_t> labels(t.order());
      for (element_type x = 0; x < t.order(); ++x) {
        labels[x] = t.mul(u, x);
      }
      return direct::quotient(t.sandwich(u), labels);
    }

    Table table_of(json const& j) {
      auto const s = parse_inline_table(j.get<std::string>(), HARD_MAX_ORDER);
      return Table(s);
    }

    bool same(Table const& a, Table const& b) {
      return a.order() == b.order() && a.raw() == b.raw();
    }

    // x <= y iff x*y = y*x = x on the idempotents of t
    bool order_law_fails(Table const& t, json const& w) {
      auto const E    = idempotents_of(t);
      auto const law  = w.at("law").get<std::string>();
      auto const xs   = w.at("elements").get<Elements>();
      for (auto x : xs) {
        if (!contains(E, x)) {
          return false;
        }
      }
      auto leq = [&](element_type x, element_type y) {
        return t.mul(x, y) == x && t.mul(y, x) == x;
      };
      if (law == "reflexivity" && xs.size() == 1) {
        return !leq(xs[0], xs[0]);
      } else if (law == "antisymmetry" && xs.size() == 2) {
        return xs[0] != xs[1] && leq(xs[0], xs[1]) && leq(xs[1], xs[0]);
      } else if (law == "transitivity" && xs.size() == 3) {
        return leq(xs[0], xs[1]) && leq(xs[1], xs[2]) && !leq(xs[0], xs[2]);
      }
      return false;
    }

    bool natural_law_fails(Table const& t, json const& w) {
      auto const law = w.at("law").get<std::string>();
      auto const xs  = w.at("elements").get<Elements>();
      auto       leq = [&](element_type x, element_type y) {
        return direct::natural_leq(t, x, y);
      };
      if (law == "reflexivity" && xs.size() == 1) {
        return !leq(xs[0], xs[0]);
      } else if (law == "antisymmetry" && xs.size() == 2) {
        return xs[0] != xs[1] && leq(xs[0], xs[1]) && leq(xs[1], xs[0]);
      } else if (law == "transitivity" && xs.size() == 3) {
        return leq(xs[0], xs[1]) && leq(xs[1], xs[2]) && !leq(xs[0], xs[2]);
      }
      return false;
    }

    bool pairwise_join(Table const& t, element_type x, element_type y) {
      // closure of L* ∪ R* from x
      std::vector<bool>     seen(t.order(), false);
      std::vector<element_type> stack{x};
      seen[x] = true;
      while (!stack.empty()) {
        auto z = stack.back();
        stack.pop_back();
        for (element_type w = 0; w < t.order(); ++w) {
          if (!seen[w] && (direct::L_star(t, z, w) || direct::R_star(t, z, w))) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
      return seen[y];
    }

    using Checker = bool (*)(Table const&, json const&, json const&);

    std::map<std::string, Checker, std::less<>> const& checkers() {
      static std::map<std::string, Checker, std::less<>> const m = {
          {"C-1.1",
           [](Table const& t, json const&, json const& w) {
             auto const rel = w.at("relation").get<std::string>();
             return regular(t)
                    && class_misses(t, rel, {}, el(w, "element"), idempotents_of(t));
           }},
          {"C-1.2",
           [](Table const& t, json const&, json const& w) {
             auto const check = w.at("check").get<std::string>();
             if (check == "R*-pairwise" || check == "L*-pairwise") {
               auto const rel = check.substr(0, 2);
               return related(t, rel, {}, el(w, "a"), el(w, "b"))
                      != w.at("library").get<bool>();
             }
             if (check == "R<=R*" || check == "L<=L*") {
               auto const fine = check.substr(0, 1), coarse = check.substr(3);
               return related(t, fine, {}, el(w, "a"), el(w, "b"))
                      && !related(t, coarse, {}, el(w, "a"), el(w, "b"));
             }
             auto const x = el(w, "x"), y = el(w, "y"), z = el(w, "z");
             if (check == "R*-left-compatible") {
               return direct::R_star(t, x, y) && !direct::R_star(t, t.mul(z, x), t.mul(z, y));
             }
             if (check == "L*-right-compatible") {
               return direct::L_star(t, x, y) && !direct::L_star(t, t.mul(x, z), t.mul(y, z));
             }
             return false;
           }},
          {"C-1.3",
           [](Table const& t, json const& p, json const& w) {
             auto const a = el(w, "a"), e = el(p, "e");
             return direct::is_idempotent(t, e)
                    && direct::R_star(t, a, e) != direct::R_star_idempotent_form(t, a, e);
           }},
          {"C-1.4",
           [](Table const& t, json const& p, json const& w) {
             auto const U = p.at("U").get<Elements>();
             return abundant(t)
                    && class_misses(t,
                                    w.at("relation").get<std::string>(),
                                    U,
                                    el(w, "element"),
                                    idempotents_of(t));
           }},
          {"C-2.1",
           [](Table const& t, json const& p, json const& w) {
             auto const v = t.sandwich(el(p, "a"));
             if (w.at("check") == "associativity") {
               auto const x = el(w, "x"), y = el(w, "y"), z = el(w, "z");
               return v.mul(v.mul(x, y), z) != v.mul(x, v.mul(y, z));
             }
             return v.mul(el(w, "x"), el(w, "y")) != el(w, "library");
           }},
          {"C-2.2",
           [](Table const& t, json const& p, json const& w) {
             auto const v = t.sandwich(el(p, "a"));
             auto const x = el(w, "x"), y = el(w, "y");
             bool const rl = w.at("composite") == "R*L*";
             bool composed = false;
             for (element_type z = 0; z < v.order() && !composed; ++z) {
               composed = rl ? direct::R_star(v, x, z) && direct::L_star(v, z, y)
                             : direct::L_star(v, x, z) && direct::R_star(v, z, y);
             }
             return composed != pairwise_join(v, x, y);
           }},
          {"C-2.3-literal",
           [](Table const& t, json const& p, json const& w) {
             auto const a = el(p, "a"), x = el(w, "x"), y = el(w, "y");
             auto const v = t.sandwich(a);
             if (w.at("side") == "R") {
               bool const in_p1 = direct::R_star(t, t.mul(a, y), y);
               return (in_p1 && direct::R_star(v, x, y)) != direct::R_star(t, x, y);
             }
             bool const in_p2 = direct::L_star(t, t.mul(y, a), y);
             return (in_p2 && direct::L_star(v, x, y)) != direct::L_star(t, x, y);
           }},
          {"C-2.3-restricted",
           [](Table const& t, json const& p, json const& w) {
             auto const a = el(p, "a"), x = el(w, "x"), y = el(w, "y");
             auto const v = t.sandwich(a);
             if (w.at("side") == "R") {
               return direct::R_star(t, t.mul(a, x), x) && direct::R_star(t, t.mul(a, y), y)
                      && direct::R_star(v, x, y) != direct::R_star(t, x, y);
             }
             return direct::L_star(t, t.mul(x, a), x) && direct::L_star(t, t.mul(y, a), y)
                    && direct::L_star(v, x, y) != direct::L_star(t, x, y);
           }},
          {"C-2.4",
           [](Table const& t, json const& p, json const& w) {
             auto const a   = el(p, "a");
             auto const one = identity_of(t);
             if (!one || !abundant(t)) {
               return false;
             }
             bool invertible = false;
             for (element_type b = 0; b < t.order(); ++b) {
               invertible = invertible || (t.mul(a, b) == *one && t.mul(b, a) == *one);
             }
             auto const v = t.sandwich(a);
             return invertible
                    && class_misses(v,
                                    w.at("relation").get<std::string>(),
                                    {},
                                    el(w, "element"),
                                    idempotents_of(v));
           }},
          {"C-2.5",
           [](Table const& t, json const& p, json const&) {
             auto const e = el(p, "e");
             return direct::is_idempotent(t, e) && t.mul(t.mul(e, e), e) != e;
           }},
          {"C-2.6-meet",
           [](Table const& t, json const& p, json const& w) {
             auto const U      = p.at("U").get<Elements>();
             auto const e      = el(p, "e");
             bool const strict = w.at("strict_u").get<bool>();
             auto const v      = t.sandwich(e);
             auto const Ev     = idempotents_of(v);
             Elements   Up;
             for (auto f : U) {
               if (contains(Ev, f)) {
                 Up.push_back(f);
               }
             }
             return contains(U, e) && weakly_abundant(t, U, strict)
                    && Up == w.at("U_prime").get<Elements>()
                    && class_misses(v,
                                    w.at("relation").get<std::string>(),
                                    Up,
                                    el(w, "element"),
                                    strict ? Up : Ev);
           }},
          {"C-2.6-single",
           [](Table const& t, json const& p, json const& w) {
             auto const     U      = p.at("U").get<Elements>();
             auto const     e      = el(p, "e");
             bool const     strict = w.at("strict_u").get<bool>();
             auto const     v      = t.sandwich(e);
             Elements const Up{e};
             return contains(U, e) && weakly_abundant(t, U, strict)
                    && Up == w.at("U_prime").get<Elements>()
                    && class_misses(v,
                                    w.at("relation").get<std::string>(),
                                    Up,
                                    el(w, "element"),
                                    strict ? Up : idempotents_of(v));
           }},
          {"C-3.1",
           [](Table const& t, json const&, json const& w) {
             auto const labels = w.at("partition").get<std::vector<std::size_t>>();
             if (labels.size() != t.order()) {
               return false;
             }
             if (w.at("check") == "not-a-congruence") {
               return !direct::is_congruence(t, labels);
             }
             return direct::is_congruence(t, labels)
                    && !direct::is_associative(direct::quotient(t, labels));
           }},
          {"C-3.2",
           [](Table const& t, json const& p, json const& w) {
             auto const u = el(p, "u"), x = el(w, "x"), y = el(w, "y"), q = el(w, "p");
             auto const v = t.sandwich(u);
             if (w.at("relation") == "lambda") {
               return t.mul(u, x) == t.mul(u, y) && t.mul(u, v.mul(q, x)) != t.mul(u, v.mul(q, y));
             }
             return t.mul(x, u) == t.mul(y, u) && t.mul(v.mul(x, q), u) != t.mul(v.mul(y, q), u);
           }},
          {"C-3.2-lambda-two-sided",
           [](Table const& t, json const& p, json const& w) {
             auto const u = el(p, "u"), x = el(w, "x"), y = el(w, "y"), q = el(w, "p");
             auto const v = t.sandwich(u);
             if (t.mul(u, x) != t.mul(u, y)) {
               return false;
             }
             if (w.at("side") == "left") {
               return t.mul(u, v.mul(q, x)) != t.mul(u, v.mul(q, y));
             }
             return t.mul(u, v.mul(x, q)) != t.mul(u, v.mul(y, q));
           }},
          {"C-3.4",
           [](Table const& t, json const& p, json const& w) {
             auto const u = el(p, "u");
             if (w.at("check") == "lambda-not-congruence") {
               std::vector<std::size_t> labels(t.order());
               for (element_type x = 0; x < t.order(); ++x) {
                 labels[x] = t.mul(u, x);
               }
               return !direct::is_congruence(t.sandwich(u), labels);
             }
             auto const q = lambda_quotient(t, u);
             Elements   uS;
             for (element_type x = 0; x < t.order(); ++x) {
               if (!contains(uS, t.mul(u, x))) {
                 uS.push_back(t.mul(u, x));
               }
             }
             auto const sub = direct::restrict(t, uS);
             return same(q, table_of(w.at("quotient"))) && same(sub, table_of(w.at("uS")))
                    && !direct::isomorphic(q, sub);
           }},
          {"C-3.5",
           [](Table const& t, json const& p, json const& w) {
             auto const a = el(p, "a"), b = el(p, "b");
             if (!direct::L(t, a, b)) {
               return false;
             }
             if (w.at("check") == "lambda-not-congruence") {
               auto lambda_fails = [&](element_type u) {
                 std::vector<std::size_t> labels(t.order());
                 for (element_type x = 0; x < t.order(); ++x) {
                   labels[x] = t.mul(u, x);
                 }
                 return !direct::is_congruence(t.sandwich(u), labels);
               };
               return lambda_fails(a) || lambda_fails(b);
             }
             auto const qa = lambda_quotient(t, a), qb = lambda_quotient(t, b);
             return same(qa, table_of(w.at("quotient_a")))
                    && same(qb, table_of(w.at("quotient_b"))) && !direct::isomorphic(qa, qb);
           }},
          {"C-4.1-forward",
           [](Table const& t, json const& p, json const& w) {
             auto const e = el(p, "e"), f = el(w, "f");
             return direct::is_idempotent(t, e) && direct::is_idempotent(t, f)
                    && t.mul(f, e) == f && t.mul(e, f) == f && t.mul(t.mul(f, e), f) != f;
           }},
          {"C-4.1-reverse",
           [](Table const& t, json const& p, json const& w) {
             auto const e = el(p, "e"), f = el(w, "f");
             bool const below = direct::is_idempotent(t, f) && t.mul(f, e) == f && t.mul(e, f) == f;
             return direct::is_idempotent(t, e) && t.mul(t.mul(f, e), f) == f && !below;
           }},
          {"C-4.2",
           [](Table const& t, json const& p, json const& w) {
             auto const e = el(p, "e");
             return direct::is_idempotent(t, e) && order_law_fails(t.sandwich(e), w);
           }},
          {"C-4.3",
           [](Table const& t, json const& p, json const& w) {
             auto const e = el(p, "e"), a = el(w, "a"), b = el(w, "b");
             return direct::is_idempotent(t, e) && direct::natural_leq(t.sandwich(e), a, b)
                    && !direct::natural_leq(t, a, b);
           }},
          {"C-4.4a",
           [](Table const& t, json const& p, json const& w) {
             auto const e = el(p, "e"), a = el(w, "a"), f = el(w, "f");
             auto const v = t.sandwich(e);
             return direct::is_idempotent(t, e) && direct::is_idempotent(v, f)
                    && direct::natural_leq(v, a, f) && !direct::is_idempotent(v, a);
           }},
          {"C-4.4b",
           [](Table const& t, json const& p, json const& w) {
             auto const e = el(p, "e"), a = el(w, "a"), b = el(w, "b");
             auto const v = t.sandwich(e);
             return direct::is_idempotent(t, e) && direct::natural_leq(v, a, b)
                    && direct::is_regular(v, b) && !direct::is_regular(v, a);
           }},
          {"C-FHT",
           [](Table const& t, json const& p, json const& w) {
             auto const u     = el(p, "u");
             auto const v     = t.sandwich(u);
             auto const check = w.at("check").get<std::string>();
             if (check == "phi-not-homomorphism") {
               auto const x = el(w, "x"), y = el(w, "y");
               return t.mul(u, v.mul(x, y)) != t.mul(t.mul(u, x), t.mul(u, y));
             }
             std::vector<std::size_t> labels(t.order());
             Elements                 image;
             for (element_type x = 0; x < t.order(); ++x) {
               labels[x] = t.mul(u, x);
               if (!contains(image, t.mul(u, x))) {
                 image.push_back(t.mul(u, x));
               }
             }
             if (check == "kernel-not-congruence") {
               return !direct::is_congruence(v, labels);
             }
             // [x] -> ux is injective on classes by construction of the
             // kernel, and onto the image; it preserves products iff φ does
             auto const q   = direct::quotient(v, labels);
             auto const im  = direct::restrict(t, image);
             auto       ids = image;
             std::sort(ids.begin(), ids.end());
             auto const norm = direct::normalize(labels);
             Elements   induced(q.order());
             for (element_type x = 0; x < t.order(); ++x) {
               induced[norm[x]] = std::find(ids.begin(), ids.end(), t.mul(u, x)) - ids.begin();
             }
             if (check == "induced-map-not-bijective") {
               auto sorted = induced;
               std::sort(sorted.begin(), sorted.end());
               return q.order() != im.order()
                      || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
             }
             auto const x = el(w, "x"), y = el(w, "y");
             return induced[q.mul(x, y)] != im.mul(induced[x], induced[y]);
           }},
          {"C-FUND",
           [](Table const& t, json const&, json const& w) {
             auto const E = idempotents_of(t);
             bool       brute = true;
             for (auto const& labels : direct::set_partitions(t.order())) {
               bool trivial = true;
               for (std::size_t x = 0; x < labels.size(); ++x) {
                 trivial = trivial && labels[x] == x;
               }
               if (trivial || !direct::is_congruence(t, labels)) {
                 continue;
               }
               bool separates = true;
               for (std::size_t i = 0; i < E.size(); ++i) {
                 for (std::size_t j = i + 1; j < E.size(); ++j) {
                   separates = separates && labels[E[i]] != labels[E[j]];
                 }
               }
               if (separates) {
                 brute = false;
                 break;
               }
             }
             return brute != w.at("library").get<bool>();
           }},
          {"C-INCL",
           [](Table const& t, json const& p, json const& w) {
             auto const U     = p.at("U").get<Elements>();
             auto const check = w.at("check").get<std::string>();
             auto const a = el(w, "a"), b = el(w, "b");
             auto const sep   = check.find("<=") != std::string::npos ? check.find("<=")
                                                                        : check.find('=');
             auto const width = check.compare(sep, 2, "<=") == 0 ? 2 : 1;
             auto const lhs   = check.substr(0, sep), rhs = check.substr(sep + width);
             if (width == 2) {
               return related(t, lhs, U, a, b) && !related(t, rhs, U, a, b);
             }
             return regular(t) && U == idempotents_of(t)
                    && related(t, lhs, U, a, b) != related(t, rhs, U, a, b);
           }},
          {"C-NAT",
           [](Table const& t, json const&, json const& w) {
             auto const e = el(w, "e"), f = el(w, "f");
             return direct::is_idempotent(t, e) && direct::is_idempotent(t, f)
                    && direct::natural_leq(t, e, f)
                           != (t.mul(e, f) == e && t.mul(f, e) == e);
           }},
          {"C-NAT-PO",
           [](Table const& t, json const&, json const& w) { return natural_law_fails(t, w); }},
          {"C-TILDE-CONG",
           [](Table const& t, json const& p, json const& w) {
             auto const U = p.at("U").get<Elements>();
             auto const x = el(w, "x"), y = el(w, "y"), z = el(w, "z");
             if (w.at("relation") == "L~") {
               return direct::L_tilde(t, U, x, y)
                      && !direct::L_tilde(t, U, t.mul(x, z), t.mul(y, z));
             }
             return direct::R_tilde(t, U, x, y) && !direct::R_tilde(t, U, t.mul(z, x), t.mul(z, y));
           }},
      };
      return m;
    }
  }  // namespace

  bool recheck_failure(ClaimResult const& r) {
    if (r.status != ClaimStatus::fails || !r.witness.is_object()) {
      return false;
    }
    auto const it = checkers().find(r.claim_id);
    if (it == checkers().end()) {
      return false;
    }
    try {
      auto const s = parse_inline_table(r.table, HARD_MAX_ORDER);
      if (table_hash(s) != r.hash) {
        return false;
      }
      return it->second(Table(s), r.params, r.witness);
    } catch (std::exception const&) {
      return false;
    }
  }

}  // namespace varsemi
