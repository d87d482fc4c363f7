#include "zetalab/eval_config.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "zetalab/claim_record.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/numerics_core.hpp"

namespace zetalab {

void EvalConfig::validate() const {
    if (truncation_n && *truncation_n < 2) throw DomainError("truncation_N must be at least 2");
    if (correction_k < 1) throw DomainError("correction_K must be at least 1");
    if (2 * correction_k > kBernoulliCeiling) {
        throw CapabilityError("correction_K needs Bernoulli numbers past the table ceiling");
    }
    if (!(quad_abs_tol > 0.0) || !(quad_rel_tol > 0.0)) {
        throw DomainError("quadrature tolerances must be positive");
    }
    if (max_refine_iters < 1) throw DomainError("max_refine_iters must be positive");
    if (max_quad_panels < 1) throw DomainError("max_quad_panels must be positive");
}

std::size_t EvalConfig::truncation_for(double im_s) const {
    if (truncation_n) return *truncation_n;
    const auto scaled = static_cast<std::size_t>(std::ceil(1.3 * std::abs(im_s))) + 10;
    return std::max<std::size_t>(20, scaled);
}

EvalConfig parse_eval_config(const std::string& json_text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw DomainError("config must be a JSON object");

    EvalConfig cfg;
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "truncation_N") {
                if (value.is_null() || value == "auto") {
                    cfg.truncation_n.reset();
                } else {
                    cfg.truncation_n = value.get<std::size_t>();
                }
            } else if (key == "correction_K") {
                cfg.correction_k = value.get<unsigned>();
            } else if (key == "quad_abs_tol") {
                cfg.quad_abs_tol = value.get<double>();
            } else if (key == "quad_rel_tol") {
                cfg.quad_rel_tol = value.get<double>();
            } else if (key == "max_refine_iters") {
                cfg.max_refine_iters = value.get<unsigned>();
            } else if (key == "max_quad_panels") {
                cfg.max_quad_panels = value.get<std::size_t>();
            } else {
                throw DomainError("unknown config key '" + key + "'");
            }
        } catch (const json::exception& e) {
            throw DomainError("config key '" + key + "': " + e.what());
        }
    }
    cfg.validate();
    return cfg;
}

std::string describe(const EvalConfig& cfg) {
    std::ostringstream out;
    out << "truncation_N=" << (cfg.truncation_n ? std::to_string(*cfg.truncation_n) : "auto")
        << " correction_K=" << cfg.correction_k
        << " quad_abs_tol=" << format_number(cfg.quad_abs_tol)
        << " quad_rel_tol=" << format_number(cfg.quad_rel_tol)
        << " max_refine_iters=" << cfg.max_refine_iters
        << " max_quad_panels=" << cfg.max_quad_panels;
    return out.str();
}

}  // namespace zetalab
