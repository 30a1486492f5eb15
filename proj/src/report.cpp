#include "varsemi/report.hpp"

#include <chrono>   // for system_clock
#include <ctime>    // for time_t
#include <istream>  // for istream, getline
#include <ostream>  // for ostream
#include <sstream>  // for istringstream

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "varsemi/errors.hpp"

#ifndef VARSEMI_VERSION
#define VARSEMI_VERSION "0.0.0"
#endif

namespace varsemi {

  using json = nlohmann::json;

  char const* version() noexcept {
    return VARSEMI_VERSION;
  }

  void ClaimTally::add(ClaimStatus status) noexcept {
    switch (status) {
      case ClaimStatus::holds:
        ++holds;
        break;
      case ClaimStatus::fails:
        ++fails;
        break;
      case ClaimStatus::not_applicable:
        ++not_applicable;
        break;
    }
  }

  namespace {
    ClaimKind kind_from_string(std::string const& text) {
      if (text == to_string(ClaimKind::hard)) {
        return ClaimKind::hard;
      } else if (text == to_string(ClaimKind::observed)) {
        return ClaimKind::observed;
      }
      throw Error("unknown claim kind '" + text + "'");
    }

    // nlohmann's own type errors become ours
    template <typename F>
    auto guarded(char const* what, F&& f) {
      try {
        return f();
      } catch (json::exception const& e) {
        throw Error(fmt::format("malformed {} record: {}", what, e.what()));
      }
    }
  }  // namespace

  json to_json(ClaimResult const& r) {
    return {{"record", "result"},
            {"claim_id", r.claim_id},
            {"table", r.table},
            {"hash", r.hash},
            {"params", r.params},
            {"status", to_string(r.status)},
            {"witness", r.witness}};
  }

  json to_json(Summary const& s) {
    json claims = json::object();
    for (auto const& [id, t] : s.claims) {
      claims[id] = {{"kind", to_string(t.kind)},
                    {"holds", t.holds},
                    {"fails", t.fails},
                    {"not_applicable", t.not_applicable}};
    }
    json counterexamples = json::array();
    for (auto const& c : s.counterexamples) {
      counterexamples.push_back({{"claim_id", c.claim_id},
                                 {"kind", to_string(c.kind)},
                                 {"table", c.table},
                                 {"hash", c.hash},
                                 {"params", c.params}});
    }
    return {{"record", "summary"},
            {"tool", s.tool},
            {"version", s.version},
            {"corpus",
             {{"orders", s.corpus.orders},
              {"dedup", s.corpus.dedup},
              {"limit", s.corpus.limit ? json(*s.corpus.limit) : json(nullptr)},
              {"max_order", s.corpus.max_order},
              {"tables", s.corpus.tables}}},
            {"config",
             {{"strict_u", s.config.strict_u},
              {"u_policy", s.config.u_policy},
              {"congruence_bound", s.config.congruence_bound}}},
            {"claims", claims},
            {"counterexamples", counterexamples},
            {"hard_failures", s.hard_failures},
            {"timestamp", s.timestamp}};
  }

  ClaimResult claim_result_from_json(json const& j) {
    return guarded("result", [&] {
      if (j.at("record") != "result") {
        throw Error("expected a result record");
      }
      ClaimResult r;
      r.claim_id = j.at("claim_id").get<std::string>();
      r.table    = j.at("table").get<std::string>();
      r.hash     = j.at("hash").get<std::string>();
      r.params   = j.at("params");
      r.status   = claim_status_from_string(j.at("status").get<std::string>());
      r.witness  = j.at("witness");
      if (!r.params.is_object()) {
        throw Error("result params must be an object");
      }
      return r;
    });
  }

  Summary summary_from_json(json const& j) {
    return guarded("summary", [&] {
      if (j.at("record") != "summary") {
        throw Error("expected a summary record");
      }
      Summary s;
      s.tool                    = j.at("tool").get<std::string>();
      s.version                 = j.at("version").get<std::string>();
      auto const& corpus        = j.at("corpus");
      s.corpus.orders           = corpus.at("orders").get<std::vector<std::size_t>>();
      s.corpus.dedup            = corpus.at("dedup").get<bool>();
      if (!corpus.at("limit").is_null()) {
        s.corpus.limit = corpus.at("limit").get<std::size_t>();
      }
      s.corpus.max_order        = corpus.at("max_order").get<std::size_t>();
      s.corpus.tables           = corpus.at("tables").get<std::size_t>();
      auto const& config        = j.at("config");
      s.config.strict_u         = config.at("strict_u").get<bool>();
      s.config.u_policy         = config.at("u_policy").get<std::string>();
      s.config.congruence_bound = config.at("congruence_bound").get<std::size_t>();
      for (auto const& [id, t] : j.at("claims").items()) {
        ClaimTally tally;
        tally.kind           = kind_from_string(t.at("kind").get<std::string>());
        tally.holds          = t.at("holds").get<std::size_t>();
        tally.fails          = t.at("fails").get<std::size_t>();
        tally.not_applicable = t.at("not_applicable").get<std::size_t>();
        s.claims.emplace(id, tally);
      }
      for (auto const& c : j.at("counterexamples")) {
        s.counterexamples.push_back({c.at("claim_id").get<std::string>(),
                                     kind_from_string(c.at("kind").get<std::string>()),
                                     c.at("table").get<std::string>(),
                                     c.at("hash").get<std::string>(),
                                     c.at("params")});
      }
      s.hard_failures = j.at("hard_failures").get<std::size_t>();
      s.timestamp     = j.at("timestamp").get<std::string>();
      return s;
    });
  }

  void write_record(std::ostream& out, json const& record) {
    out << record.dump() << '\n';
  }

  void write_report(std::ostream& out, Report const& report) {
    for (auto const& r : report.results) {
      write_record(out, to_json(r));
    }
    write_record(out, to_json(report.summary));
  }

  Report read_report(std::istream& in) {
    Report      report;
    bool        have_summary = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) {
        continue;
      }
      json j;
      try {
        j = json::parse(line);
      } catch (json::parse_error const& e) {
        throw SyntaxError(line_no, e.byte == 0 ? 1 : e.byte, "invalid JSON record");
      }
      if (have_summary) {
        throw Error(fmt::format("line {}: record after the summary", line_no));
      }
      if (j.is_object() && j.value("record", "") == "summary") {
        report.summary = summary_from_json(j);
        have_summary   = true;
      } else {
        report.results.push_back(claim_result_from_json(j));
      }
    }
    if (!have_summary) {
      throw Error("report has no summary record");
    }
    return report;
  }

  Report read_report(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_report(in);
  }

  std::string without_timestamp(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        out, line;
    while (std::getline(in, line)) {
      auto j = json::parse(line, nullptr, false);
      if (!j.is_discarded() && j.is_object() && j.value("record", "") == "summary") {
        j.erase("timestamp");
        line = j.dump();
      }
      out += line;
      out += '\n';
    }
    return out;
  }

  std::string utc_timestamp() {
    auto const now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now));
  }

}  // namespace varsemi
