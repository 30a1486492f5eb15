// Registry of checkable statements about finite semigroups, their
// evaluation on a single semigroup, and the independent re-checker for
// failures.
//
// A claim is evaluated once per admissible choice of its distinguished
// elements (a, b, e, u) or idempotent set U.  Every FAILS result carries a
// witness object that recheck_failure can confirm from the serialized result
// alone.

#ifndef VARSEMI_CLAIMS_HPP_
#define VARSEMI_CLAIMS_HPP_

#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "json.hpp"

#include "congruences.hpp"
#include "core.hpp"

namespace varsemi {

  enum class ClaimStatus { holds, fails, not_applicable };

  //! HARD claims have constructive proofs, so a failure means a bug or a
  //! false theorem; OBSERVED claims are expected to fail on some inputs.
  enum class ClaimKind { hard, observed };

  char const* to_string(ClaimStatus status) noexcept;
  char const* to_string(ClaimKind kind) noexcept;
  ClaimStatus claim_status_from_string(std::string_view text);

  struct ClaimResult {
    std::string    claim_id;
    std::string    table;  // inline .sgt
    std::string    hash;   // table_hash of the same table
    nlohmann::json params  = nlohmann::json::object();
    ClaimStatus    status  = ClaimStatus::not_applicable;
    nlohmann::json witness = nullptr;

    bool operator==(ClaimResult const&) const = default;
  };

  struct ClaimOptions {
    // Weak U-abundance asks for an idempotent in U rather than in E(S).
    bool        strict_u         = false;
    std::size_t congruence_bound = DEFAULT_CONGRUENCE_ORDER_BOUND;
  };

  struct ClaimInfo {
    std::string id;
    ClaimKind   kind;
    std::string summary;
  };

  // Sorted by id.
  std::vector<ClaimInfo> const& claim_registry();

  // Throws UnknownClaim.
  ClaimInfo const& claim_info(std::string_view id);

  // "all", or a comma-separated list of ids; the result is sorted and unique.
  std::vector<std::string> resolve_claims(std::string_view selection);

  //! The choices of U quantified over: every non-empty subset of E(S) (by
  //! increasing bit mask) when |E(S)| <= 4, otherwise the singletons followed
  //! by E(S).
  std::vector<ElementSubset> u_choices(FiniteSemigroup const& s);

  char const* u_policy_description() noexcept;

  //! Evaluates claim id on s.  params, if it is a non-empty object, restricts
  //! evaluation to the instantiations whose parameters agree with it on every
  //! key it contains.
  std::vector<ClaimResult> evaluate_claim(std::string_view       id,
                                          FiniteSemigroup const& s,
                                          nlohmann::json const&  params = nlohmann::json::object(),
                                          ClaimOptions const&    options = {});

  //! Re-derives the failure described by r from its table, params and
  //! witness using brute-force definitions only.  Returns false if the
  //! failure is not reproduced or the witness is malformed.
  bool recheck_failure(ClaimResult const& r);

}  // namespace varsemi

#endif  // VARSEMI_CLAIMS_HPP_
