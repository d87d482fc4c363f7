#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zetalab/claim_record.hpp"
#include "zetalab/eval_config.hpp"

namespace zetalab {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class TableId { T1, T2, T3, T4, T5, T6, T7 };

std::optional<TableId> parse_table_id(std::string_view text);
std::string_view to_string(TableId id);

/// RFC-4180 CSV for one of the seven tabulated relations, regenerated from
/// the formula evaluators. T7 adds the measured |zeta(1/2 +- ib)| columns.
std::string emit_table(TableId id, const EvalConfig& cfg = {});

struct Figure1Grid {
    double b_min = 20.0;
    double b_max = 200.0;
    std::size_t b_steps = 19;
    int gamma_min = 1;
    int gamma_max = 20;
};

/// One CSV row per (b, gamma) with q = exp((2 pi / b) exp(2 pi gamma / b)).
std::string emit_figure1(const Figure1Grid& grid);

struct ReportDocument {
    std::string tool_version;
    EvalConfig config;
    std::vector<ClaimRecord> claims;
    std::vector<std::pair<std::string, std::string>> tables;
    std::vector<std::pair<std::string, double>> timing_ms;

    /// Everything except wall-clock timing; byte-identical for identical config.
    std::string render_data() const;
    /// Data block followed by a trailing [timing] section.
    std::string render() const;
};

/// Claim ids in report order.
const std::vector<std::string>& claim_registry();

/// Evaluates every registered claim (concurrently, up to `workers` threads)
/// and attaches the T1-T7 reproductions. Evaluator failures become
/// indeterminate records with the error in `note`; the run always completes.
ReportDocument run_claims(const EvalConfig& cfg, std::size_t workers);
ReportDocument run_claims(const EvalConfig& cfg = {});

/// Single-record rendering used by the report: tab-separated key=value pairs.
std::string render_claim(const ClaimRecord& record);

/// Quotes a CSV field when it contains a comma, quote, or line break.
std::string csv_field(std::string_view text);

}  // namespace zetalab
