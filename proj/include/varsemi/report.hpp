// Line-delimited JSON reports: one record per ClaimResult, then a single
// summary record with tallies and configuration.
//
// Every line is a JSON object with a "record" field, either "result" or
// "summary".  Keys are emitted in sorted order, so equal reports are equal
// byte for byte apart from the summary's timestamp.

#ifndef VARSEMI_REPORT_HPP_
#define VARSEMI_REPORT_HPP_

#include <cstddef>      // for size_t
#include <iosfwd>       // for istream, ostream
#include <map>          // for map
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "json.hpp"

#include "claims.hpp"
#include "enumerate.hpp"

namespace varsemi {

  char const* version() noexcept;

  struct ClaimTally {
    ClaimKind   kind           = ClaimKind::hard;
    std::size_t holds          = 0;
    std::size_t fails          = 0;
    std::size_t not_applicable = 0;

    std::size_t total() const noexcept {
      return holds + fails + not_applicable;
    }
    void add(ClaimStatus status) noexcept;

    bool operator==(ClaimTally const&) const = default;
  };

  // The first failing result of a claim, in report order.
  struct Counterexample {
    std::string    claim_id;
    ClaimKind      kind = ClaimKind::observed;
    std::string    table;
    std::string    hash;
    nlohmann::json params = nlohmann::json::object();

    bool operator==(Counterexample const&) const = default;
  };

  struct CorpusDescription {
    std::vector<std::size_t>   orders;
    bool                       dedup     = false;
    std::optional<std::size_t> limit     = std::nullopt;
    std::size_t                max_order = DEFAULT_MAX_ENUMERATION_ORDER;
    std::size_t                tables    = 0;

    bool operator==(CorpusDescription const&) const = default;
  };

  struct ReportConfig {
    bool        strict_u         = false;
    std::string u_policy;
    std::size_t congruence_bound = DEFAULT_CONGRUENCE_ORDER_BOUND;

    bool operator==(ReportConfig const&) const = default;
  };

  struct Summary {
    std::string                       tool = "varsemi";
    std::string                       version;
    CorpusDescription                 corpus;
    ReportConfig                      config;
    std::map<std::string, ClaimTally> claims;
    std::vector<Counterexample>       counterexamples;
    std::size_t                       hard_failures = 0;
    std::string                       timestamp;

    bool operator==(Summary const&) const = default;
  };

  struct Report {
    std::vector<ClaimResult> results;
    Summary                  summary;

    bool operator==(Report const&) const = default;
  };

  nlohmann::json to_json(ClaimResult const& r);
  nlohmann::json to_json(Summary const& s);

  // Throw Error if a field is missing or has the wrong type.
  ClaimResult claim_result_from_json(nlohmann::json const& j);
  Summary     summary_from_json(nlohmann::json const& j);

  void write_record(std::ostream& out, nlohmann::json const& record);
  void write_report(std::ostream& out, Report const& report);

  // Throws SyntaxError (line, 1) for a malformed line, and Error if the
  // report does not end with exactly one summary record.
  Report read_report(std::istream& in);
  Report read_report(std::string_view text);

  // The report text with the summary's timestamp removed, for comparing runs.
  std::string without_timestamp(std::string_view text);

  // Current UTC time, ISO 8601.
  std::string utc_timestamp();

}  // namespace varsemi

#endif  // VARSEMI_REPORT_HPP_
