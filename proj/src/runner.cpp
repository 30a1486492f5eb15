#include "varsemi/runner.hpp"

#include <ostream>  // for ostream

#include "varsemi/table_io.hpp"

namespace varsemi {

  Summary run_corpus(CorpusSpec const&               spec,
                     std::vector<std::string> const& claim_ids,
                     ClaimOptions const&             options,
                     ResultSink const&               sink) {
    spec.validate();
    for (auto const& id : claim_ids) {
      claim_info(id);  // throws UnknownClaim before any work is done
    }

    // The corpus is small (3492 tables at order 4) so it is materialised
    // once rather than re-enumerated per claim.
    std::vector<FiniteSemigroup> corpus;
    enumerate_corpus(spec, [&corpus](FiniteSemigroup const& s) {
      corpus.push_back(s);
      return true;
    });

    Summary summary;
    summary.version                 = version();
    summary.corpus.orders           = spec.orders;
    summary.corpus.dedup            = spec.dedup == Dedup::up_to_isomorphism;
    summary.corpus.limit            = spec.limit;
    summary.corpus.max_order        = spec.max_order;
    summary.corpus.tables           = corpus.size();
    summary.config.strict_u         = options.strict_u;
    summary.config.u_policy         = u_policy_description();
    summary.config.congruence_bound = options.congruence_bound;

    for (auto const& id : claim_ids) {
      auto const& info  = claim_info(id);
      auto&       tally = summary.claims[info.id];
      tally.kind        = info.kind;
      bool recorded     = false;
      for (auto const& s : corpus) {
        for (auto const& r : evaluate_claim(info.id, s, nlohmann::json::object(), options)) {
          tally.add(r.status);
          if (r.status == ClaimStatus::fails) {
            if (info.kind == ClaimKind::hard) {
              ++summary.hard_failures;
            }
            if (!recorded) {
              summary.counterexamples.push_back({r.claim_id, info.kind, r.table, r.hash, r.params});
              recorded = true;
            }
          }
          sink(r);
        }
      }
    }
    summary.timestamp = utc_timestamp();
    return summary;
  }

  Report run_corpus(CorpusSpec const&               spec,
                    std::vector<std::string> const& claim_ids,
                    ClaimOptions const&             options) {
    Report report;
    report.summary = run_corpus(
        spec, claim_ids, options, [&report](ClaimResult const& r) { report.results.push_back(r); });
    return report;
  }

  Summary run_corpus(CorpusSpec const&               spec,
                     std::vector<std::string> const& claim_ids,
                     ClaimOptions const&             options,
                     std::ostream&                   out) {
    auto summary = run_corpus(
        spec, claim_ids, options, [&out](ClaimResult const& r) { write_record(out, to_json(r)); });
    write_record(out, to_json(summary));
    return summary;
  }

}  // namespace varsemi
