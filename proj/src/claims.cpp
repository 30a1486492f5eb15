#include "varsemi/claims.hpp"

#include <algorithm>   // for sort, unique
#include <functional>  // for function
#include <optional>    // for optional

#include "varsemi/direct.hpp"
#include "varsemi/orders.hpp"
#include "varsemi/relations.hpp"
#include "varsemi/table_io.hpp"
#include "varsemi/variants.hpp"

namespace varsemi {

  using json = nlohmann::json;

  char const* to_string(ClaimStatus status) noexcept {
    switch (status) {
      case ClaimStatus::holds:
        return "HOLDS";
      case ClaimStatus::fails:
        return "FAILS";
      case ClaimStatus::not_applicable:
        return "NOT_APPLICABLE";
    }
    return "?";
  }

  char const* to_string(ClaimKind kind) noexcept {
    return kind == ClaimKind::hard ? "HARD" : "OBSERVED";
  }

  ClaimStatus claim_status_from_string(std::string_view text) {
    for (auto s : {ClaimStatus::holds, ClaimStatus::fails, ClaimStatus::not_applicable}) {
      if (text == to_string(s)) {
        return s;
      }
    }
    throw Error("unknown claim status '" + std::string(text) + "'");
  }

  std::vector<ElementSubset> u_choices(FiniteSemigroup const& s) {
    auto const                 E = idempotents(s);
    std::vector<ElementSubset> out;
    if (E.size() <= 4) {
      // non-empty submasks of E, ascending
      auto const full = E.bits();
      std::vector<std::uint64_t> masks;
      for (std::uint64_t m = full; m != 0; m = (m - 1) & full) {
        masks.push_back(m);
      }
      std::sort(masks.begin(), masks.end());
      for (auto m : masks) {
        out.emplace_back(s.order(), m);
      }
    } else {
      for (auto e : E.members()) {
        out.emplace_back(s.order(), std::vector<element_type>{e});
      }
      out.push_back(E);
    }
    return out;
  }

  char const* u_policy_description() noexcept {
    return "all non-empty subsets of E(S) when |E(S)| <= 4, else singletons and E(S)";
  }

  namespace {

    json members_json(ElementSubset const& U) {
      return json(U.members());
    }

    ////////////////////////////////////////////////////////////////////////
    // Evaluation context
    ////////////////////////////////////////////////////////////////////////

    class Context {
     public:
      Context(std::string_view       id,
              FiniteSemigroup const& s,
              json const&            filter,
              ClaimOptions const&    options)
          : s(s),
            options(options),
            _id(id),
            _filter(filter),
            _table(inline_table(s)),
            _hash(table_hash(s)) {}

      FiniteSemigroup const& s;
      ClaimOptions const&    options;

      bool wants(json const& params) const {
        if (!_filter.is_object()) {
          return true;
        }
        for (auto const& [key, value] : _filter.items()) {
          if (!params.contains(key) || params.at(key) != value) {
            return false;
          }
        }
        return true;
      }

      void emit(json params, ClaimStatus status, json witness = nullptr) {
        results.push_back(
            {_id, _table, _hash, std::move(params), status, std::move(witness)});
      }

      StarBundle const& star() {
        if (!_star) {
          _star = varsemi::star(s);
        }
        return *_star;
      }

      GreenBundle const& green() {
        if (!_green) {
          _green = varsemi::green(s);
        }
        return *_green;
      }

      ElementSubset const& E() {
        if (!_E) {
          _E = idempotents(s);
        }
        return *_E;
      }

      bool regular() {
        if (!_regular) {
          _regular = is_regular(s);
        }
        return *_regular;
      }

      bool abundant() {
        if (!_abundant) {
          _abundant = !first_class_missing(star().L, E())
                      && !first_class_missing(star().R, E());
        }
        return *_abundant;
      }

      OrderRelation const& natural() {
        if (!_natural) {
          _natural = natural_leq(s);
        }
        return *_natural;
      }

      std::vector<ClaimResult> results;

     private:
      std::string                  _id;
      json const&                  _filter;
      std::string                  _table;
      std::string                  _hash;
      std::optional<StarBundle>    _star;
      std::optional<GreenBundle>   _green;
      std::optional<ElementSubset> _E;
      std::optional<bool>          _regular;
      std::optional<bool>          _abundant;
      std::optional<OrderRelation> _natural;
    };

    // First (a, b) with a p b but not a q b.
    std::optional<std::pair<element_type, element_type>>
    first_pair_not_in(Equivalence const& p, Equivalence const& q) {
      for (element_type a = 0; a < p.order(); ++a) {
        for (element_type b = 0; b < p.order(); ++b) {
          if (p.related(a, b) && !q.related(a, b)) {
            return std::make_pair(a, b);
          }
        }
      }
      return std::nullopt;
    }

    // First (a, b) on which p and q disagree.
    std::optional<std::pair<element_type, element_type>>
    first_difference(Equivalence const& p, Equivalence const& q) {
      if (auto d = first_pair_not_in(p, q)) {
        return d;
      }
      return first_pair_not_in(q, p);
    }

    // (x, y, z) with x p y but not (side == right ? xz p yz : zx p zy).
    std::optional<std::vector<element_type>>
    compatibility_violation(FiniteSemigroup const& s, Equivalence const& p, Side side) {
      auto const n = s.order();
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          if (!p.related(x, y)) {
            continue;
          }
          for (element_type z = 0; z < n; ++z) {
            bool ok = side == Side::right ? p.related(s.product(x, z), s.product(y, z))
                                          : p.related(s.product(z, x), s.product(z, y));
            if (!ok) {
              return std::vector<element_type>{x, y, z};
            }
          }
        }
      }
      return std::nullopt;
    }

    ////////////////////////////////////////////////////////////////////////
    // Claims about the relations of S
    ////////////////////////////////////////////////////////////////////////

    // Regular semigroups: L, R, L*, R* classes all contain idempotents.
    void regular_classes_have_idempotents(Context& c) {
      json params = json::object();
      if (!c.wants(params)) {
        return;
      }
      if (!c.regular()) {
        return c.emit(params, ClaimStatus::not_applicable);
      }
      std::pair<char const*, Equivalence const*> rels[] = {{"L", &c.green().L},
                                                           {"R", &c.green().R},
                                                           {"L*", &c.star().L},
                                                           {"R*", &c.star().R}};
      for (auto [name, eq] : rels) {
        if (auto i = first_class_missing(*eq, c.E())) {
          return c.emit(params,
                        ClaimStatus::fails,
                        {{"relation", name}, {"element", eq->classes()[*i].front()}});
        }
      }
      c.emit(params, ClaimStatus::holds);
    }

    // star() agrees with the pairwise cancellation test; R ⊆ R*, L ⊆ L*;
    // R* is a left and L* a right congruence.
    void starred_cancellation(Context& c) {
      json params = json::object();
      if (!c.wants(params)) {
        return;
      }
      direct::Table const raw(c.s);
      auto const&         st = c.star();
      auto const          n  = c.s.order();
      for (element_type a = 0; a < n; ++a) {
        for (element_type b = 0; b < n; ++b) {
          if (st.R.related(a, b) != direct::R_star(raw, a, b)) {
            return c.emit(params,
                          ClaimStatus::fails,
                          {{"check", "R*-pairwise"},
                           {"a", a},
                           {"b", b},
                           {"library", st.R.related(a, b)}});
          }
          if (st.L.related(a, b) != direct::L_star(raw, a, b)) {
            return c.emit(params,
                          ClaimStatus::fails,
                          {{"check", "L*-pairwise"},
                           {"a", a},
                           {"b", b},
                           {"library", st.L.related(a, b)}});
          }
        }
      }
      if (auto p = first_pair_not_in(c.green().R, st.R)) {
        return c.emit(params,
                      ClaimStatus::fails,
                      {{"check", "R<=R*"}, {"a", p->first}, {"b", p->second}});
      }
      if (auto p = first_pair_not_in(c.green().L, st.L)) {
        return c.emit(params,
                      ClaimStatus::fails,
                      {{"check", "L<=L*"}, {"a", p->first}, {"b", p->second}});
      }
      if (auto v = compatibility_violation(c.s, st.R, Side::left)) {
        return c.emit(params,
                      ClaimStatus::fails,
                      {{"check", "R*-left-compatible"},
                       {"x", (*v)[0]},
                       {"y", (*v)[1]},
                       {"z", (*v)[2]}});
      }
      if (auto v = compatibility_violation(c.s, st.L, Side::right)) {
        return c.emit(params,
                      ClaimStatus::fails,
                      {{"check", "L*-right-compatible"},
                       {"x", (*v)[0]},
                       {"y", (*v)[1]},
                       {"z", (*v)[2]}});
      }
      c.emit(params, ClaimStatus::holds);
    }

    // a R* e iff ea = a and xa = ya implies xe = ye, for idempotent e.
    void starred_idempotent_form(Context& c) {
      direct::Table const raw(c.s);
      for (auto e : c.E().members()) {
        json params = {{"e", e}};
        if (!c.wants(params)) {
          continue;
        }
        std::optional<json> witness;
        for (element_type a = 0; a < c.s.order() && !witness; ++a) {
          bool const lib = c.star().R.related(a, e);
          if (lib != direct::R_star_idempotent_form(raw, a, e)) {
            witness = json{{"a", a}, {"library", lib}};
          }
        }
        if (witness) {
          c.emit(params, ClaimStatus::fails, *witness);
        } else {
          c.emit(params, ClaimStatus::holds);
        }
      }
    }

    // Abundant implies weakly U-abundant (idempotents taken from E(S)).
    void abundant_is_weakly_abundant(Context& c) {
      for (auto const& U : u_choices(c.s)) {
        json params = {{"U", members_json(U)}};
        if (!c.wants(params)) {
          continue;
        }
        if (!c.abundant()) {
          c.emit(params, ClaimStatus::not_applicable);
          continue;
        }
        auto const tb = tilde(c.s, U);
        if (auto i = first_class_missing(tb.L, c.E())) {
          c.emit(params,
                 ClaimStatus::fails,
                 {{"relation", "L~"}, {"element", tb.L.classes()[*i].front()}});
        } else if (auto j = first_class_missing(tb.R, c.E())) {
          c.emit(params,
                 ClaimStatus::fails,
                 {{"relation", "R~"}, {"element", tb.R.classes()[*j].front()}});
        } else {
          c.emit(params, ClaimStatus::holds);
        }
      }
    }

    // L ⊆ L* ⊆ L~U and dually, with equality for regular S and U = E(S).
    void inclusion_chain(Context& c) {
      for (auto const& U : u_choices(c.s)) {
        json params = {{"U", members_json(U)}};
        if (!c.wants(params)) {
          continue;
        }
        auto const  tb = tilde(c.s, U);
        auto const& g  = c.green();
        auto const& st = c.star();
        std::tuple<char const*, Equivalence const*, Equivalence const*> steps[]
            = {{"L<=L*", &g.L, &st.L},
               {"L*<=L~", &st.L, &tb.L},
               {"R<=R*", &g.R, &st.R},
               {"R*<=R~", &st.R, &tb.R}};
        std::optional<json> witness;
        for (auto [name, finer, coarser] : steps) {
          if (auto p = first_pair_not_in(*finer, *coarser)) {
            witness = json{{"check", name}, {"a", p->first}, {"b", p->second}};
            break;
          }
        }
        if (!witness && c.regular() && U == c.E()) {
          std::tuple<char const*, Equivalence const*, Equivalence const*> eqs[]
              = {{"L=L*", &g.L, &st.L},
                 {"L*=L~", &st.L, &tb.L},
                 {"R=R*", &g.R, &st.R},
                 {"R*=R~", &st.R, &tb.R}};
          for (auto [name, p, q] : eqs) {
            if (auto d = first_difference(*p, *q)) {
              witness = json{{"check", name}, {"a", d->first}, {"b", d->second}};
              break;
            }
          }
        }
        if (witness) {
          c.emit(params, ClaimStatus::fails, *witness);
        } else {
          c.emit(params, ClaimStatus::holds);
        }
      }
    }

    // L~U is a right congruence and R~U a left congruence.
    void tilde_congruence(Context& c) {
      for (auto const& U : u_choices(c.s)) {
        json params = {{"U", members_json(U)}};
        if (!c.wants(params)) {
          continue;
        }
        auto const tb = tilde(c.s, U);
        if (auto v = compatibility_violation(c.s, tb.L, Side::right)) {
          c.emit(params,
                 ClaimStatus::fails,
                 {{"relation", "L~"}, {"x", (*v)[0]}, {"y", (*v)[1]}, {"z", (*v)[2]}});
        } else if (auto w = compatibility_violation(c.s, tb.R, Side::left)) {
          c.emit(params,
                 ClaimStatus::fails,
                 {{"relation", "R~"}, {"x", (*w)[0]}, {"y", (*w)[1]}, {"z", (*w)[2]}});
        } else {
          c.emit(params, ClaimStatus::holds);
        }
      }
    }

    // is_fundamental agrees with a scan of all set partitions.
    void fundamental(Context& c) {
      json params = json::object();
      if (!c.wants(params)) {
        return;
      }
      if (c.s.order() > c.options.congruence_bound) {
        return c.emit(params, ClaimStatus::not_applicable);
      }
      bool const          library = is_fundamental(c.s, c.options.congruence_bound);
      direct::Table const raw(c.s);
      auto const          E = c.E().members();
      std::optional<std::vector<std::size_t>> separating;
      for (auto const& labels : direct::set_partitions(c.s.order())) {
        bool trivial = true;
        for (std::size_t x = 0; x < labels.size(); ++x) {
          trivial = trivial && labels[x] == x;
        }
        if (trivial || !direct::is_congruence(raw, labels)) {
          continue;
        }
        bool separates = true;
        for (std::size_t i = 0; i < E.size(); ++i) {
          for (std::size_t j = i + 1; j < E.size(); ++j) {
            separates = separates && labels[E[i]] != labels[E[j]];
          }
        }
        if (separates) {
          separating = labels;
          break;
        }
      }
      bool const brute = !separating;
      if (library != brute) {
        c.emit(params,
               ClaimStatus::fails,
               {{"library", library},
                {"brute_force", brute},
                {"partition", separating ? json(*separating) : json(nullptr)}});
      } else {
        c.emit(params, ClaimStatus::holds);
      }
    }

    // Every congruence yields a well-defined quotient with a projection
    // homomorphism.
    void quotient_construction(Context& c) {
      json params = json::object();
      if (!c.wants(params)) {
        return;
      }
      if (c.s.order() > c.options.congruence_bound) {
        return c.emit(params, ClaimStatus::not_applicable);
      }
      for (auto const& p : all_congruences(c.s, c.options.congruence_bound)) {
        json labels(p.class_indices());
        if (congruence_kind(c.s, p) != CongruenceKind::two_sided) {
          return c.emit(params,
                        ClaimStatus::fails,
                        {{"check", "not-a-congruence"}, {"partition", labels}});
        }
        try {
          auto [q, projection] = quotient(c.s, p);
          if (q.order() != p.number_of_classes()) {
            return c.emit(params,
                          ClaimStatus::fails,
                          {{"check", "quotient-order"}, {"partition", labels}});
          }
        } catch (Error const&) {
          return c.emit(params,
                        ClaimStatus::fails,
                        {{"check", "quotient"}, {"partition", labels}});
        }
      }
      c.emit(params, ClaimStatus::holds);
    }

    // The natural order on E(S) is ef = fe = e.
    void natural_order_on_idempotents(Context& c) {
      json params = json::object();
      if (!c.wants(params)) {
        return;
      }
      auto const E = c.E().members();
      for (auto e : E) {
        for (auto f : E) {
          if (c.natural().leq(e, f) != idempotent_leq(c.s, e, f)) {
            return c.emit(params, ClaimStatus::fails, {{"e", e}, {"f", f}});
          }
        }
      }
      c.emit(params, ClaimStatus::holds);
    }

    json order_violation(OrderRelation const& ord) {
      if (auto x = ord.reflexivity_violation()) {
        return {{"law", "reflexivity"}, {"elements", {*x}}};
      }
      if (auto v = ord.antisymmetry_violation()) {
        return {{"law", "antisymmetry"}, {"elements", *v}};
      }
      if (auto v = ord.transitivity_violation()) {
        return {{"law", "transitivity"}, {"elements", *v}};
      }
      return nullptr;
    }

    void natural_order_is_partial_order(Context& c) {
      json params = json::object();
      if (!c.wants(params)) {
        return;
      }
      auto witness = order_violation(c.natural());
      if (witness.is_null()) {
        c.emit(params, ClaimStatus::holds);
      } else {
        c.emit(params, ClaimStatus::fails, witness);
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Claims about variants
    ////////////////////////////////////////////////////////////////////////

    void variant_construction(Context& c) {
      direct::Table const raw(c.s);
      for (element_type a = 0; a < c.s.order(); ++a) {
        json params = {{"a", a}};
        if (!c.wants(params)) {
          continue;
        }
        try {
          auto const v = variant(c.s, a);
          auto const n = c.s.order();
          std::optional<json> witness;
          for (element_type x = 0; x < n && !witness; ++x) {
            for (element_type y = 0; y < n && !witness; ++y) {
              if (v.variant.product(x, y) != raw.mul(raw.mul(x, a), y)) {
                witness = json{{"check", "table"},
                               {"x", x},
                               {"y", y},
                               {"library", v.variant.product(x, y)}};
              }
            }
          }
          if (witness) {
            c.emit(params, ClaimStatus::fails, *witness);
          } else {
            c.emit(params, ClaimStatus::holds);
          }
        } catch (NotAssociative const& err) {
          c.emit(params,
                 ClaimStatus::fails,
                 {{"check", "associativity"}, {"x", err.x}, {"y", err.y}, {"z", err.z}});
        }
      }
    }

    // D* of the variant, as a join, equals the composite R*∘L* (and L*∘R*).
    void variant_star_composition(Context& c) {
      for (element_type a = 0; a < c.s.order(); ++a) {
        json params = {{"a", a}};
        if (!c.wants(params)) {
          continue;
        }
        auto const vs = variant_star(variant(c.s, a));
        if (auto p = vs.rl_composition_mismatch) {
          c.emit(params,
                 ClaimStatus::fails,
                 {{"composite", "R*L*"}, {"x", p->first}, {"y", p->second}});
        } else if (auto q = vs.lr_composition_mismatch) {
          c.emit(params,
                 ClaimStatus::fails,
                 {{"composite", "L*R*"}, {"x", q->first}, {"y", q->second}});
        } else {
          c.emit(params, ClaimStatus::holds);
        }
      }
    }

    //! restricted: for x, y in P1, x R*a y iff x R* y (dually L, P2).
    //! literal: for all x, y, (y in P1 and x R*a y) iff x R* y.
    void p_set_classes(Context& c, bool restricted) {
      auto const& st = c.star();
      auto const  n  = c.s.order();
      for (element_type a = 0; a < n; ++a) {
        json params = {{"a", a}};
        if (!c.wants(params)) {
          continue;
        }
        auto const          P  = p_sets(c.s, st, a);
        auto const          vs = variant_star(variant(c.s, a));
        std::optional<json> witness;
        std::tuple<char const*, ElementSubset const*, Equivalence const*, Equivalence const*>
            sides[] = {{"R", &P.P1, &vs.R, &st.R}, {"L", &P.P2, &vs.L, &st.L}};
        for (auto [side, Pi, var_rel, base_rel] : sides) {
          for (element_type x = 0; x < n && !witness; ++x) {
            if (restricted && !Pi->contains(x)) {
              continue;
            }
            for (element_type y = 0; y < n && !witness; ++y) {
              bool const lhs = Pi->contains(y) && var_rel->related(x, y);
              bool const rhs = (!restricted || Pi->contains(y)) && base_rel->related(x, y);
              if (lhs != rhs) {
                witness = json{{"side", side}, {"x", x}, {"y", y}};
              }
            }
          }
        }
        if (witness) {
          c.emit(params, ClaimStatus::fails, *witness);
        } else {
          c.emit(params, ClaimStatus::holds);
        }
      }
    }

    // Missing-idempotent witness for the starred classes of t.
    std::optional<json> unabundant_witness(FiniteSemigroup const& t) {
      auto const st = star(t);
      auto const E  = idempotents(t);
      if (auto i = first_class_missing(st.L, E)) {
        return json{{"relation", "L*"}, {"element", st.L.classes()[*i].front()}};
      }
      if (auto i = first_class_missing(st.R, E)) {
        return json{{"relation", "R*"}, {"element", st.R.classes()[*i].front()}};
      }
      return std::nullopt;
    }

    // Abundant monoid and invertible a: S^a is abundant.
    void invertible_sandwich(Context& c) {
      for (element_type a = 0; a < c.s.order(); ++a) {
        json params = {{"a", a}};
        if (!c.wants(params)) {
          continue;
        }
        if (!c.s.is_monoid() || !c.abundant() || !is_invertible(c.s, a)) {
          c.emit(params, ClaimStatus::not_applicable);
        } else if (auto w = unabundant_witness(variant(c.s, a).variant)) {
          c.emit(params, ClaimStatus::fails, *w);
        } else {
          c.emit(params, ClaimStatus::holds);
        }
      }
    }

    // e is idempotent in S^e.
    void idempotent_variant_keeps_sandwich(Context& c) {
      for (auto e : c.E().members()) {
        json params = {{"e", e}};
        if (!c.wants(params)) {
          continue;
        }
        auto const v = idempotent_variant(c.s, e);
        if (v.variant.product(e, e) != e) {
          c.emit(params, ClaimStatus::fails, {{"check", "sandwich-idempotent"}});
        } else {
          c.emit(params, ClaimStatus::holds);
        }
      }
    }

    //! S weakly U-abundant and e in U: S^e is weakly U'-abundant, with
    //! U' = U ∩ E(S^e) (meet) or U' = {e} (single).
    void idempotent_variant_weakly_abundant(Context& c, bool meet_reading) {
      bool const strict = c.options.strict_u;
      for (auto const& U : u_choices(c.s)) {
        std::optional<bool> base_ok;
        for (auto e : U.members()) {
          json params = {{"U", members_json(U)}, {"e", e}};
          if (!c.wants(params)) {
            continue;
          }
          if (!base_ok) {
            base_ok = is_weakly_u_abundant(c.s, U, strict);
          }
          if (!*base_ok) {
            c.emit(params, ClaimStatus::not_applicable);
            continue;
          }
          auto const    t  = idempotent_variant(c.s, e).variant;
          auto const    Ev = idempotents(t);
          ElementSubset Up = meet_reading ? U & Ev
                                          : ElementSubset(t.order(), std::vector<element_type>{e});
          auto const    tb     = tilde(t, Up);
          auto const    target = strict ? Up : Ev;
          std::optional<json> witness;
          if (auto i = first_class_missing(tb.L, target)) {
            witness = json{{"relation", "L~"}, {"element", tb.L.classes()[*i].front()}};
          } else if (auto j = first_class_missing(tb.R, target)) {
            witness = json{{"relation", "R~"}, {"element", tb.R.classes()[*j].front()}};
          }
          if (witness) {
            (*witness)["U_prime"]  = members_json(Up);
            (*witness)["strict_u"] = strict;
            c.emit(params, ClaimStatus::fails, *witness);
          } else {
            c.emit(params, ClaimStatus::holds);
          }
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Claims about congruences on variants
    ////////////////////////////////////////////////////////////////////////

    // λ^u is a left and ρ^u a right congruence on S^u.
    void sandwich_relations_one_sided(Context& c) {
      for (element_type u = 0; u < c.s.order(); ++u) {
        json params = {{"u", u}};
        if (!c.wants(params)) {
          continue;
        }
        auto const t = variant(c.s, u).variant;
        if (auto v = compatibility_violation(t, sandwich_lambda(c.s, u), Side::left)) {
          c.emit(params,
                 ClaimStatus::fails,
                 {{"relation", "lambda"},
                  {"side", "left"},
                  {"x", (*v)[0]},
                  {"y", (*v)[1]},
                  {"p", (*v)[2]}});
        } else if (auto w = compatibility_violation(t, sandwich_rho(c.s, u), Side::right)) {
          c.emit(params,
                 ClaimStatus::fails,
                 {{"relation", "rho"},
                  {"side", "right"},
                  {"x", (*w)[0]},
                  {"y", (*w)[1]},
                  {"p", (*w)[2]}});
        } else {
          c.emit(params, ClaimStatus::holds);
        }
      }
    }

    void sandwich_lambda_two_sided(Context& c) {
      for (element_type u = 0; u < c.s.order(); ++u) {
        json params = {{"u", u}};
        if (!c.wants(params)) {
          continue;
        }
        auto const t   = variant(c.s, u).variant;
        auto const lam = sandwich_lambda(c.s, u);
        std::optional<json> witness;
        for (auto side : {Side::left, Side::right}) {
          if (auto v = compatibility_violation(t, lam, side)) {
            witness = json{{"relation", "lambda"},
                           {"side", side == Side::left ? "left" : "right"},
                           {"x", (*v)[0]},
                           {"y", (*v)[1]},
                           {"p", (*v)[2]}};
            break;
          }
        }
        if (witness) {
          c.emit(params, ClaimStatus::fails, *witness);
        } else {
          c.emit(params, ClaimStatus::holds);
        }
      }
    }

    // S^u / λ^u, or nullopt if λ^u is not a congruence there.
    std::optional<FiniteSemigroup> lambda_quotient(FiniteSemigroup const& s, element_type u) {
      auto const t   = variant(s, u).variant;
      auto const lam = sandwich_lambda(s, u);
      if (congruence_kind(t, lam) != CongruenceKind::two_sided) {
        return std::nullopt;
      }
      return quotient(t, lam).first;
    }

    // S^u / λ^u ≅ uS.
    void lambda_quotient_is_translate(Context& c) {
      for (element_type u = 0; u < c.s.order(); ++u) {
        json params = {{"u", u}};
        if (!c.wants(params)) {
          continue;
        }
        auto const q = lambda_quotient(c.s, u);
        if (!q) {
          c.emit(params, ClaimStatus::fails, {{"check", "lambda-not-congruence"}});
          continue;
        }
        auto const uS = subsemigroup(c.s, translate_set(c.s, u, Side::left)).first;
        if (are_isomorphic(*q, uS)) {
          c.emit(params, ClaimStatus::holds);
        } else {
          c.emit(params,
                 ClaimStatus::fails,
                 {{"check", "not-isomorphic"},
                  {"quotient", inline_table(*q)},
                  {"uS", inline_table(uS)}});
        }
      }
    }

    // For φ = u_translate_hom: [x] -> φ(x) is an isomorphism S^u/ker φ -> im φ.
    void homomorphism_theorem(Context& c) {
      for (element_type u = 0; u < c.s.order(); ++u) {
        json params = {{"u", u}};
        if (!c.wants(params)) {
          continue;
        }
        std::optional<Hom> phi;
        try {
          phi.emplace(u_translate_hom(c.s, u));
        } catch (NotAHomomorphism const& err) {
          c.emit(params,
                 ClaimStatus::fails,
                 {{"check", "phi-not-homomorphism"}, {"x", err.x}, {"y", err.y}});
          continue;
        }
        auto const K = phi->kernel();
        json       labels(K.class_indices());
        if (congruence_kind(phi->domain(), K) != CongruenceKind::two_sided) {
          c.emit(params,
                 ClaimStatus::fails,
                 {{"check", "kernel-not-congruence"}, {"kernel", labels}});
          continue;
        }
        auto const [q, projection] = quotient(phi->domain(), K);
        auto const [im, ids]       = subsemigroup(phi->codomain(), phi->image());
        std::vector<element_type> index(phi->codomain().order(), 0);
        for (element_type i = 0; i < ids.size(); ++i) {
          index[ids[i]] = i;
        }
        // induced map on classes, via least representatives
        std::vector<element_type> induced(q.order());
        std::vector<bool>         hit(im.order(), false);
        bool                      bijective = q.order() == im.order();
        for (element_type k = 0; k < q.order(); ++k) {
          induced[k] = index[(*phi)(K.classes()[k].front())];
          bijective  = bijective && !hit[induced[k]];
          hit[induced[k]] = true;
        }
        if (!bijective) {
          c.emit(params,
                 ClaimStatus::fails,
                 {{"check", "induced-map-not-bijective"}, {"kernel", labels}});
        } else if (auto bad = homomorphism_violation(q, im, induced)) {
          c.emit(params,
                 ClaimStatus::fails,
                 {{"check", "induced-map-not-homomorphism"},
                  {"kernel", labels},
                  {"x", bad->first},
                  {"y", bad->second}});
        } else {
          c.emit(params, ClaimStatus::holds);
        }
      }
    }

    // a L b implies S^a/λ^a ≅ S^b/λ^b.
    void l_related_quotients(Context& c) {
      auto const n = c.s.order();
      for (element_type a = 0; a < n; ++a) {
        for (element_type b = a + 1; b < n; ++b) {
          json params = {{"a", a}, {"b", b}};
          if (!c.wants(params)) {
            continue;
          }
          if (!c.green().L.related(a, b)) {
            c.emit(params, ClaimStatus::not_applicable);
            continue;
          }
          auto const qa = lambda_quotient(c.s, a);
          auto const qb = lambda_quotient(c.s, b);
          if (!qa || !qb) {
            c.emit(params, ClaimStatus::fails, {{"check", "lambda-not-congruence"}});
          } else if (are_isomorphic(*qa, *qb)) {
            c.emit(params, ClaimStatus::holds);
          } else {
            c.emit(params,
                   ClaimStatus::fails,
                   {{"check", "not-isomorphic"},
                    {"quotient_a", inline_table(*qa)},
                    {"quotient_b", inline_table(*qb)}});
          }
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Claims about orders on idempotent variants
    ////////////////////////////////////////////////////////////////////////

    template <typename Check>
    void for_each_idempotent_variant(Context& c, Check&& check) {
      for (auto e : c.E().members()) {
        json params = {{"e", e}};
        if (!c.wants(params)) {
          continue;
        }
        auto const          v = idempotent_variant(c.s, e);
        std::optional<json> witness = check(e, v);
        if (witness) {
          c.emit(params, ClaimStatus::fails, *witness);
        } else {
          c.emit(params, ClaimStatus::holds);
        }
      }
    }

    // {f in E(S) : f <= e} ⊆ E(S^e)
    void idempotents_below_sandwich(Context& c) {
      for_each_idempotent_variant(c, [&](element_type e, VariantDescriptor const& v) {
        auto const          Ev = idempotents(v.variant);
        std::optional<json> w;
        for (auto f : c.E().members()) {
          if (idempotent_leq(c.s, f, e) && !Ev.contains(f)) {
            w = json{{"f", f}};
            break;
          }
        }
        return w;
      });
    }

    // E(S^e) ⊆ {f in E(S) : f <= e}
    void variant_idempotents_below_sandwich(Context& c) {
      for_each_idempotent_variant(c, [&](element_type e, VariantDescriptor const& v) {
        std::optional<json> w;
        for (auto f : idempotents(v.variant).members()) {
          if (!c.E().contains(f) || !idempotent_leq(c.s, f, e)) {
            w = json{{"f", f}};
            break;
          }
        }
        return w;
      });
    }

    void variant_idempotent_order(Context& c) {
      for_each_idempotent_variant(c, [&](element_type, VariantDescriptor const& v) {
        auto                w = order_violation(variant_idempotent_leq(v));
        std::optional<json> out;
        if (!w.is_null()) {
          out = std::move(w);
        }
        return out;
      });
    }

    // a <=e b implies a <= b
    void variant_order_refines_natural(Context& c) {
      for_each_idempotent_variant(c, [&](element_type, VariantDescriptor const& v) {
        auto const          vl = variant_leq(v);
        std::optional<json> w;
        for (element_type a = 0; a < c.s.order() && !w; ++a) {
          for (element_type b = 0; b < c.s.order() && !w; ++b) {
            if (vl.leq(a, b) && !c.natural().leq(a, b)) {
              w = json{{"a", a}, {"b", b}};
            }
          }
        }
        return w;
      });
    }

    // a <=e f with f in E(S^e) implies a in E(S^e)
    void below_idempotent_is_idempotent(Context& c) {
      for_each_idempotent_variant(c, [&](element_type, VariantDescriptor const& v) {
        auto const          vl = variant_leq(v);
        auto const          Ev = idempotents(v.variant);
        std::optional<json> w;
        for (element_type a = 0; a < c.s.order() && !w; ++a) {
          for (auto f : Ev.members()) {
            if (vl.leq(a, f) && !Ev.contains(a)) {
              w = json{{"a", a}, {"f", f}};
              break;
            }
          }
        }
        return w;
      });
    }

    // a <=e b with b regular in S^e implies a regular in S^e
    void below_regular_is_regular(Context& c) {
      for_each_idempotent_variant(c, [&](element_type, VariantDescriptor const& v) {
        auto const          vl = variant_leq(v);
        std::optional<json> w;
        for (element_type a = 0; a < c.s.order() && !w; ++a) {
          for (element_type b = 0; b < c.s.order() && !w; ++b) {
            if (vl.leq(a, b) && is_regular_element(v.variant, b)
                && !is_regular_element(v.variant, a)) {
              w = json{{"a", a}, {"b", b}};
            }
          }
        }
        return w;
      });
    }

    ////////////////////////////////////////////////////////////////////////
    // Registry
    ////////////////////////////////////////////////////////////////////////

    struct Entry {
      ClaimInfo                    info;
      std::function<void(Context&)> evaluate;
    };

    std::vector<Entry> const& entries() {
      using K = ClaimKind;
      static std::vector<Entry> const table = [] {
        std::vector<Entry> e = {
            {{"C-1.1", K::hard, "regular: every L, R, L*, R* class contains an idempotent"},
             regular_classes_have_idempotents},
            {{"C-1.2", K::hard,
              "R*/L* equal the pairwise cancellation relations, contain R/L, and are "
              "left/right compatible"},
             starred_cancellation},
            {{"C-1.3", K::hard, "a R* e iff ea = a and xa = ya implies xe = ye (e idempotent)"},
             starred_idempotent_form},
            {{"C-1.4", K::hard, "abundant implies weakly U-abundant"},
             abundant_is_weakly_abundant},
            {{"C-2.1", K::hard, "x*y = xay is associative and matches the base table"},
             variant_construction},
            {{"C-2.2", K::observed, "variant D* (join) equals the composites R*L* and L*R*"},
             variant_star_composition},
            {{"C-2.3-literal", K::observed, "for all x: R*a-class of x within P1 is R*-class of x"},
             [](Context& c) { p_set_classes(c, false); }},
            {{"C-2.3-restricted", K::hard,
              "for x in P1: R*a-class and R*-class of x agree within P1 (dually L, P2)"},
             [](Context& c) { p_set_classes(c, true); }},
            {{"C-2.4", K::hard, "abundant monoid, a invertible: S^a abundant"},
             invertible_sandwich},
            {{"C-2.5", K::hard, "e is idempotent in S^e"}, idempotent_variant_keeps_sandwich},
            {{"C-2.6-meet", K::observed,
              "S weakly U-abundant, e in U: S^e weakly (U ∩ E(S^e))-abundant"},
             [](Context& c) { idempotent_variant_weakly_abundant(c, true); }},
            {{"C-2.6-single", K::observed, "S weakly U-abundant, e in U: S^e weakly {e}-abundant"},
             [](Context& c) { idempotent_variant_weakly_abundant(c, false); }},
            {{"C-3.1", K::hard, "every congruence has a well-defined quotient and projection"},
             quotient_construction},
            {{"C-3.2", K::hard, "lambda^u left and rho^u right congruence on S^u"},
             sandwich_relations_one_sided},
            {{"C-3.2-lambda-two-sided", K::hard, "lambda^u is a two-sided congruence on S^u"},
             sandwich_lambda_two_sided},
            {{"C-3.4", K::hard, "S^u / lambda^u is isomorphic to uS"},
             lambda_quotient_is_translate},
            {{"C-3.5", K::observed, "a L b implies S^a/lambda^a isomorphic to S^b/lambda^b"},
             l_related_quotients},
            {{"C-4.1-forward", K::hard, "{f in E(S) : f <= e} is contained in E(S^e)"},
             idempotents_below_sandwich},
            {{"C-4.1-reverse", K::observed, "E(S^e) is contained in {f in E(S) : f <= e}"},
             variant_idempotents_below_sandwich},
            {{"C-4.2", K::hard, "<=e is a partial order on E(S^e)"}, variant_idempotent_order},
            {{"C-4.3", K::hard, "a <=e b implies a <= b"}, variant_order_refines_natural},
            {{"C-4.4a", K::hard, "a <=e f, f in E(S^e) implies a in E(S^e)"},
             below_idempotent_is_idempotent},
            {{"C-4.4b", K::hard, "a <=e b, b regular in S^e implies a regular in S^e"},
             below_regular_is_regular},
            {{"C-FHT", K::hard, "S^u / ker(x -> ux) is isomorphic to its image via [x] -> ux"},
             homomorphism_theorem},
            {{"C-FUND", K::hard, "is_fundamental agrees with a scan of all partitions"},
             fundamental},
            {{"C-INCL", K::hard, "L <= L* <= L~U (dually R), equal when regular and U = E(S)"},
             inclusion_chain},
            {{"C-NAT", K::hard, "natural order on E(S) is ef = fe = e"},
             natural_order_on_idempotents},
            {{"C-NAT-PO", K::observed, "natural order is a partial order"},
             natural_order_is_partial_order},
            {{"C-TILDE-CONG", K::observed, "L~U right congruence and R~U left congruence"},
             tilde_congruence},
        };
        std::sort(e.begin(), e.end(), [](Entry const& x, Entry const& y) {
          return x.info.id < y.info.id;
        });
        return e;
      }();
      return table;
    }

    Entry const& entry(std::string_view id) {
      for (auto const& e : entries()) {
        if (e.info.id == id) {
          return e;
        }
      }
      throw UnknownClaim(std::string(id));
    }

  }  // namespace

  std::vector<ClaimInfo> const& claim_registry() {
    static std::vector<ClaimInfo> const infos = [] {
      std::vector<ClaimInfo> out;
      for (auto const& e : entries()) {
        out.push_back(e.info);
      }
      return out;
    }();
    return infos;
  }

  ClaimInfo const& claim_info(std::string_view id) {
    return entry(id).info;
  }

  std::vector<std::string> resolve_claims(std::string_view selection) {
    std::vector<std::string> out;
    if (selection == "all") {
      for (auto const& info : claim_registry()) {
        out.push_back(info.id);
      }
      return out;
    }
    std::size_t start = 0;
    while (start <= selection.size()) {
      auto end = selection.find(',', start);
      if (end == std::string_view::npos) {
        end = selection.size();
      }
      auto id = selection.substr(start, end - start);
      out.push_back(claim_info(id).id);
      start = end + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<ClaimResult> evaluate_claim(std::string_view       id,
                                          FiniteSemigroup const& s,
                                          json const&            params,
                                          ClaimOptions const&    options) {
    auto const& e = entry(id);
    Context     c(e.info.id, s, params, options);
    e.evaluate(c);
    return std::move(c.results);
  }

}  // namespace varsemi
