// Evaluates claims over an enumerated corpus.
//
// Results are produced claim by claim (sorted ids), and within a claim table
// by table in enumeration order, with each table's instantiations in the
// order evaluate_claim generates them.  The order does not depend on timing.

#ifndef VARSEMI_RUNNER_HPP_
#define VARSEMI_RUNNER_HPP_

#include <functional>  // for function
#include <string>      // for string
#include <vector>      // for vector

#include "claims.hpp"
#include "enumerate.hpp"
#include "report.hpp"

namespace varsemi {

  using ResultSink = std::function<void(ClaimResult const&)>;

  // Streams every result to sink and returns the summary (timestamp set).
  // Throws OrderTooLarge / BadShape from the corpus spec and UnknownClaim.
  Summary run_corpus(CorpusSpec const&               spec,
                     std::vector<std::string> const& claim_ids,
                     ClaimOptions const&             options,
                     ResultSink const&               sink);

  // As above, keeping the results.
  Report run_corpus(CorpusSpec const&               spec,
                    std::vector<std::string> const& claim_ids,
                    ClaimOptions const&             options = {});

  // Streams the report as line-delimited records.
  Summary run_corpus(CorpusSpec const&               spec,
                     std::vector<std::string> const& claim_ids,
                     ClaimOptions const&             options,
                     std::ostream&                   out);

}  // namespace varsemi

#endif  // VARSEMI_RUNNER_HPP_
