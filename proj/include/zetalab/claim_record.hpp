#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "zetalab/numerics_core.hpp"

namespace zetalab {

enum class Verdict { supported, refuted, indeterminate };

std::string_view to_string(Verdict v);

/// One numerically checked assertion. `inputs` keeps insertion order so the
/// rendered report is stable.
struct ClaimRecord {
    std::string claim_id;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::variant<double, Complex> computed = 0.0;
    std::string asserted;
    double residual = 0.0;
    double threshold = 0.0;
    Verdict verdict = Verdict::indeterminate;
    /// Largest disagreement between independent evaluation routes (0 if only one).
    double evaluator_agreement = 0.0;
    std::string note;

    void add_input(std::string key, double value);
    void add_input(std::string key, std::string value);

    /// supported iff residual <= threshold.
    void decide();
};

/// 12 significant digits, '.' decimal, no negative zero, "nan"/"inf" spelled out.
std::string format_number(double x);
std::string format_complex(Complex z);

}  // namespace zetalab
