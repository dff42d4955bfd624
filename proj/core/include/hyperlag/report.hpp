#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hyperlag::lab {

/// Campaign-specific value attached to a record.
using FieldValue = std::variant<bool, long long, double, std::string, std::vector<long long>>;
using Fields = std::vector<std::pair<std::string, FieldValue>>;

/// One checked instance of a campaign.
struct VerificationRecord {
    std::string campaign;
    std::uint64_t index = 0;
    int r = 0;
    int n = 0;
    std::uint64_t m = 0;
    /// Colex ranks of the edges.
    std::vector<long long> signature;
    double lambda = 0.0;
    double reference = 0.0;
    int clique_order = 0;
    double tolerance = 0.0;
    /// Signed slack of the checked inequality; the record passes iff
    /// margin >= 0.
    double margin = 0.0;
    Fields extra;
    /// Excluded from the deterministic report body.
    double wall_time_seconds = 0.0;

    bool pass() const noexcept { return margin >= 0.0; }
};

struct CampaignSummary {
    std::string campaign;
    std::uint64_t instances = 0;
    std::uint64_t passes = 0;
    std::uint64_t fails = 0;
    double worst_margin = 0.0;
    std::uint64_t seed = 0;
};

struct CampaignReport {
    std::string campaign;
    /// Printed in the header record; empty for no note.
    std::string note;
    std::uint64_t seed = 0;
    std::vector<VerificationRecord> records;
    double wall_time_seconds = 0.0;

    CampaignSummary summary() const;
    bool all_passed() const;
};

/// Header line, one line per record, summary line, then a trailer line with
/// wall-clock data. Everything before the trailer is deterministic.
void write_jsonl(const CampaignReport& report, std::ostream& out);

/// Same record fields as CSV with a header row; campaign-specific fields go
/// into a trailing JSON-encoded column.
void write_csv(const CampaignReport& report, std::ostream& out);

std::string summary_line(const CampaignSummary& s);

}  // namespace hyperlag::lab
