#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace zetalab {

/// Knobs shared by every evaluator.
///
/// `truncation_n` left empty selects N = max(20, ceil(1.3 |Im s|) + 10) per
/// evaluation point, which keeps the first omitted Euler-Maclaurin term below
/// 1e-13 for |Im s| <= 100 with the default correction order.
struct EvalConfig {
    std::optional<std::size_t> truncation_n;
    unsigned correction_k = 12;
    double quad_abs_tol = 1e-13;
    double quad_rel_tol = 1e-12;
    unsigned max_refine_iters = 200;
    std::size_t max_quad_panels = 4000;

    /// Throws DomainError if any field violates its invariant.
    void validate() const;

    std::size_t truncation_for(double im_s) const;
};

/// Parses a JSON object with any subset of the EvalConfig fields.
/// Unknown keys are rejected so typos do not silently fall back to defaults.
EvalConfig parse_eval_config(const std::string& json_text);

/// One-line, key-ordered rendering used in report headers.
std::string describe(const EvalConfig& cfg);

}  // namespace zetalab
