// Command-line front end: check, inspect, enumerate, variant.
//
// Exit codes: 0 success (and no HARD claim failed), 2 a HARD claim failed,
// 1 usage or input error.

#include <fstream>   // for ofstream
#include <iostream>  // for cout, cerr
#include <sstream>   // for istringstream
#include <string>    // for string
#include <vector>    // for vector

#include "CLI11.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "varsemi/congruences.hpp"
#include "varsemi/core.hpp"
#include "varsemi/enumerate.hpp"
#include "varsemi/errors.hpp"
#include "varsemi/orders.hpp"
#include "varsemi/relations.hpp"
#include "varsemi/report.hpp"
#include "varsemi/runner.hpp"
#include "varsemi/table_io.hpp"
#include "varsemi/variants.hpp"

namespace {
  using namespace varsemi;

  constexpr int EXIT_HARD_FAILURE = 2;
  constexpr int EXIT_USAGE        = 1;

  std::vector<std::string> split(std::string const& text, char sep) {
    std::vector<std::string> out;
    std::istringstream       in(text);
    std::string              item;
    while (std::getline(in, item, sep)) {
      out.push_back(item);
    }
    if (!text.empty() && text.back() == sep) {
      out.emplace_back();
    }
    return out;
  }

  std::size_t parse_count(std::string const& text, char const* what) {
    std::size_t pos = 0;
    std::size_t value;
    try {
      value = std::stoul(text, &pos);
    } catch (std::exception const&) {
      throw Error(fmt::format("invalid {} '{}'", what, text));
    }
    if (pos != text.size() || text.empty() || text[0] == '-') {
      throw Error(fmt::format("invalid {} '{}'", what, text));
    }
    return value;
  }

  std::string members(ElementSubset const& U) {
    return fmt::format("{{{}}}", fmt::join(U.members(), ","));
  }

  void print_relation(std::ostream& out, char const* name, Equivalence const& p) {
    out << fmt::format("  {:<3} {}\n", name, p.to_string());
  }

  void print_order(std::ostream& out, OrderRelation const& ord) {
    for (auto x : ord.elements()) {
      std::vector<element_type> above;
      for (auto y : ord.elements()) {
        if (x != y && ord.leq(x, y)) {
          above.push_back(y);
        }
      }
      out << fmt::format("  {} < {{{}}}\n", x, fmt::join(above, ","));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // check
  ////////////////////////////////////////////////////////////////////////

  struct CheckArgs {
    std::string orders = "2,3";
    std::string claims = "all";
    bool        strict_u = false;
    bool        dedup    = false;
    std::string out;
    std::size_t limit     = 0;
    std::size_t max_order = DEFAULT_MAX_ENUMERATION_ORDER;
    std::size_t bound     = DEFAULT_CONGRUENCE_ORDER_BOUND;
  };

  int run_check(CheckArgs const& args) {
    CorpusSpec spec;
    for (auto const& n : split(args.orders, ',')) {
      spec.orders.push_back(parse_count(n, "order"));
    }
    spec.dedup     = args.dedup ? Dedup::up_to_isomorphism : Dedup::none;
    spec.max_order = args.max_order;
    if (args.limit != 0) {
      spec.limit = args.limit;
    }
    ClaimOptions options;
    options.strict_u         = args.strict_u;
    options.congruence_bound = args.bound;
    auto const ids           = resolve_claims(args.claims);

    Summary summary;
    if (args.out.empty()) {
      summary = run_corpus(spec, ids, options, std::cout);
    } else {
      std::ofstream file(args.out, std::ios::binary);
      if (!file) {
        throw Error("cannot open '" + args.out + "' for writing");
      }
      summary = run_corpus(spec, ids, options, file);
      if (!file.flush()) {
        throw Error("error writing '" + args.out + "'");
      }
    }
    std::size_t results = 0, fails = 0;
    for (auto const& [id, t] : summary.claims) {
      results += t.total();
      fails += t.fails;
    }
    std::cerr << fmt::format("{} tables, {} results, {} FAILS, {} HARD failures\n",
                             summary.corpus.tables,
                             results,
                             fails,
                             summary.hard_failures);
    return summary.hard_failures == 0 ? 0 : EXIT_HARD_FAILURE;
  }

  ////////////////////////////////////////////////////////////////////////
  // inspect
  ////////////////////////////////////////////////////////////////////////

  ElementSubset parse_u(FiniteSemigroup const& s, std::string const& text) {
    std::vector<element_type> xs;
    for (auto const& x : split(text, '+')) {
      auto const v = parse_count(x, "element of U");
      s.validate_element(v);
      xs.push_back(static_cast<element_type>(v));
    }
    ElementSubset U(s.order(), xs);
    validate_idempotent_subset(s, U);
    return U;
  }

  int run_inspect(std::string const& path, std::string const& show) {
    auto const s   = read_table_file(path, HARD_MAX_ORDER);
    auto&      out = std::cout;
    out << fmt::format("order {}  hash {}  table {}\n", s.order(), table_hash(s), inline_table(s));
    auto const E = idempotents(s);
    out << fmt::format("idempotents {}  regular {}  monoid {}  abundant {}\n",
                       members(E),
                       is_regular(s),
                       s.is_monoid(),
                       is_abundant(s));
    for (auto const& item : split(show, ',')) {
      auto const colon = item.find(':');
      auto const name  = item.substr(0, colon);
      if (name == "green") {
        auto const g = green(s);
        out << "green\n";
        print_relation(out, "L", g.L);
        print_relation(out, "R", g.R);
        print_relation(out, "H", g.H);
        print_relation(out, "D", g.D);
        print_relation(out, "J", g.J);
      } else if (name == "star") {
        auto const st = star(s);
        out << "star\n";
        print_relation(out, "L*", st.L);
        print_relation(out, "R*", st.R);
        print_relation(out, "H*", st.H);
        print_relation(out, "D*", st.D);
        out << fmt::format("  R*L* = D* {}  L*R* = D* {}\n",
                           !st.rl_composition_mismatch,
                           !st.lr_composition_mismatch);
      } else if (name == "tilde") {
        if (E.empty()) {
          throw EmptyU();
        }
        auto const U  = colon == std::string::npos ? E : parse_u(s, item.substr(colon + 1));
        auto const tb = tilde(s, U);
        out << fmt::format("tilde U = {}\n", members(U));
        print_relation(out, "L~", tb.L);
        print_relation(out, "R~", tb.R);
        print_relation(out, "H~", tb.H);
        print_relation(out, "D~", tb.D);
        out << fmt::format("  weakly U-abundant {}  (idempotent in U: {})\n",
                           is_weakly_u_abundant(s, U, false),
                           is_weakly_u_abundant(s, U, true));
      } else if (name == "congruences") {
        if (s.order() > DEFAULT_CONGRUENCE_ORDER_BOUND) {
          throw OrderTooLarge(s.order(), DEFAULT_CONGRUENCE_ORDER_BOUND);
        }
        auto const all = all_congruences(s);
        out << fmt::format("congruences ({})\n", all.size());
        for (auto const& p : all) {
          out << "  " << p.to_string() << '\n';
        }
        out << fmt::format("  fundamental {}\n", is_fundamental(s));
      } else if (name == "orders") {
        out << "natural order\n";
        print_order(out, natural_leq(s));
      } else {
        throw Error("unknown --show item '" + item + "'");
      }
    }
    return 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // enumerate
  ////////////////////////////////////////////////////////////////////////

  int run_enumerate(std::size_t order, bool count_only, bool dedup, std::size_t max_order) {
    CorpusSpec spec;
    spec.orders    = {order};
    spec.dedup     = dedup ? Dedup::up_to_isomorphism : Dedup::none;
    spec.max_order = max_order;
    auto const count = enumerate_corpus(spec, [&](FiniteSemigroup const& s) {
      if (!count_only) {
        std::cout << inline_table(s) << '\n';
      }
      return true;
    });
    if (count_only) {
      std::cout << count << '\n';
    }
    return 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // variant
  ////////////////////////////////////////////////////////////////////////

  int run_variant(std::string const& path, std::size_t at, bool idempotent_only) {
    auto const s = read_table_file(path, HARD_MAX_ORDER);
    s.validate_element(at);
    auto const a = static_cast<element_type>(at);
    auto const v = idempotent_only ? idempotent_variant(s, a) : variant(s, a);
    std::cout << fmt::format("# variant of {} at {}\n", inline_table(s), a);
    std::cout << fmt::format("# idempotents {}\n", members(idempotents(v.variant)));
    std::cout << serialize_table(v.variant);
    return 0;
  }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroups, their variants, and claim checking"};
  app.set_version_flag("--version", varsemi::version());
  app.require_subcommand(1);

  CheckArgs check;
  auto*     cmd_check = app.add_subcommand("check", "evaluate claims over enumerated semigroups");
  cmd_check->add_option("--orders", check.orders, "comma-separated orders")
      ->capture_default_str();
  cmd_check->add_option("--claims", check.claims, "'all' or comma-separated claim ids")
      ->capture_default_str();
  cmd_check->add_flag("--strict-u", check.strict_u, "tilde classes need an idempotent in U");
  cmd_check->add_flag("--dedup", check.dedup, "one table per isomorphism class");
  cmd_check->add_option("--out", check.out, "report file (default stdout)");
  cmd_check->add_option("--limit", check.limit, "stop after this many tables (0 = no limit)");
  cmd_check->add_option("--max-order", check.max_order, "enumeration cap")->capture_default_str();
  cmd_check->add_option("--congruence-bound", check.bound, "largest order for congruence scans")
      ->capture_default_str();

  std::string inspect_path, show = "green,star,tilde,congruences,orders";
  auto*       cmd_inspect = app.add_subcommand("inspect", "print relations of a .sgt table");
  cmd_inspect->add_option("file", inspect_path, ".sgt file")->required();
  cmd_inspect->add_option("--show", show, "green,star,tilde[:U],congruences,orders; U as 0+2")
      ->capture_default_str();

  std::size_t enum_order = 0, enum_max = DEFAULT_MAX_ENUMERATION_ORDER;
  bool        count_only = false, enum_dedup = false;
  auto*       cmd_enum = app.add_subcommand("enumerate", "list semigroups of a given order");
  cmd_enum->add_option("--order", enum_order, "order")->required();
  cmd_enum->add_flag("--count-only", count_only, "print only the count");
  cmd_enum->add_flag("--dedup", enum_dedup, "one table per isomorphism class");
  cmd_enum->add_option("--max-order", enum_max, "enumeration cap")->capture_default_str();

  std::string variant_path;
  std::size_t variant_at      = 0;
  bool        idempotent_only = false;
  auto*       cmd_variant = app.add_subcommand("variant", "print the variant x*y = x a y");
  cmd_variant->add_option("file", variant_path, ".sgt file")->required();
  cmd_variant->add_option("--at", variant_at, "sandwich element a")->required();
  cmd_variant->add_flag("--idempotent-only", idempotent_only, "require a to be idempotent");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e);
    return code == 0 ? 0 : EXIT_USAGE;
  }

  try {
    if (*cmd_check) {
      return run_check(check);
    } else if (*cmd_inspect) {
      return run_inspect(inspect_path, show);
    } else if (*cmd_enum) {
      return run_enumerate(enum_order, count_only, enum_dedup, enum_max);
    } else {
      return run_variant(variant_path, variant_at, idempotent_only);
    }
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_USAGE;
  }
}
