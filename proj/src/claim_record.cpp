#include "zetalab/claim_record.hpp"

#include <cmath>
#include <cstdio>

namespace zetalab {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::supported: return "supported";
        case Verdict::refuted: return "refuted";
        case Verdict::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_complex(Complex z) {
    const double im = z.imag();
    std::string out = format_number(z.real());
    if (std::signbit(im) && im != 0.0) {
        out += "-" + format_number(-im);
    } else {
        out += "+" + format_number(im);
    }
    return out + "i";
}

void ClaimRecord::add_input(std::string key, double value) {
    inputs.emplace_back(std::move(key), format_number(value));
}

void ClaimRecord::add_input(std::string key, std::string value) {
    inputs.emplace_back(std::move(key), std::move(value));
}

void ClaimRecord::decide() {
    if (std::isnan(residual)) {
        verdict = Verdict::indeterminate;
        return;
    }
    verdict = residual <= threshold ? Verdict::supported : Verdict::refuted;
}

}  // namespace zetalab
