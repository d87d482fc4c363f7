// zetalab command-line front end.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "zetalab/critical_line.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/eval_config.hpp"
#include "zetalab/harness.hpp"
#include "zetalab/zeta_engine.hpp"

namespace {

using namespace zetalab;

struct Common {
    std::string out;
    std::string config;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--out", c.out, "write output to PATH instead of stdout");
    sub->add_option("--config", c.config, "JSON file with EvalConfig overrides")->check(CLI::ExistingFile);
}

EvalConfig load_config(const Common& c) {
    if (c.config.empty()) return {};
    std::ifstream in(c.config);
    std::stringstream buf;
    buf << in.rdbuf();
    EvalConfig cfg = parse_eval_config(buf.str());
    cfg.validate();
    return cfg;
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + c.out + " for writing");
    f << text;
}

std::string zeta_eval(double sigma, double t, const EvalConfig& cfg) {
    const Complex s(sigma, t);
    std::ostringstream out;
    out << "s=" << format_complex(s) << "\n";
    const Complex z = zeta_functional(s, cfg);
    out << "zeta=" << format_complex(z) << "\n";
    out << "abs_zeta=" << format_number(std::abs(z)) << "\n";
    if (sigma > 0.0 && s != Complex(1.0, 0.0)) {
        const Complex e = zeta_eta(s);
        out << "zeta_eta=" << format_complex(e) << "\n";
        out << "evaluator_agreement=" << format_number(std::abs(z - e)) << "\n";
    }
    return out.str();
}

std::string zero_scan(double lo, double hi, double step, const EvalConfig& cfg) {
    const auto zeros = scan_zeros(lo, hi, step, cfg);
    std::string out = "index,t,bracket_lo,bracket_hi,residual,refine_iters\r\n";
    std::size_t i = 0;
    for (const auto& z : zeros) {
        out += std::to_string(++i) + "," + format_number(z.t) + "," + format_number(z.bracket_lo) + "," +
               format_number(z.bracket_hi) + "," + format_number(z.residual) + "," +
               std::to_string(z.refine_iters) + "\r\n";
    }
    return out;
}

std::string count(const std::vector<double>& rect, const EvalConfig& cfg) {
    const Rectangle r{rect[0], rect[1], rect[2], rect[3]};
    const auto res = count_zeros_rectangle(r, cfg);
    std::ostringstream out;
    out << "rectangle=" << format_number(r.sigma_lo) << "," << format_number(r.sigma_hi) << ","
        << format_number(r.t_lo) << "," << format_number(r.t_hi) << "\n";
    out << "count=" << res.count << "\n";
    out << "winding=" << format_complex(res.contour_integral / Complex(0.0, kTwoPi)) << "\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zetalab: zeta evaluation, zero location and claim checking"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    Common common;

    double sigma = 0.5, t = 0.0;
    auto* zeta_cmd = app.add_subcommand("zeta-eval", "evaluate zeta(sigma + it)");
    zeta_cmd->add_option("--sigma", sigma)->required();
    zeta_cmd->add_option("--t", t)->required();
    add_common(zeta_cmd, common);

    double t_lo = 0.0, t_hi = 50.0, step = kDefaultScanStep;
    auto* scan_cmd = app.add_subcommand("zero-scan", "locate zeros of Z(t) on [t-lo, t-hi]");
    scan_cmd->add_option("--t-lo", t_lo);
    scan_cmd->add_option("--t-hi", t_hi);
    scan_cmd->add_option("--step", step);
    add_common(scan_cmd, common);

    std::vector<double> rect;
    auto* count_cmd = app.add_subcommand("count", "count zeros inside a rectangle");
    count_cmd->add_option("--rect", rect, "sigma_lo,sigma_hi,t_lo,t_hi")
        ->required()
        ->delimiter(',')
        ->expected(4);
    add_common(count_cmd, common);

    std::string table_name;
    auto* table_cmd = app.add_subcommand("tables", "reproduce one of the tables as CSV");
    table_cmd->add_option("--id", table_name, "T1..T7")->required();
    add_common(table_cmd, common);

    Figure1Grid grid;
    auto* fig_cmd = app.add_subcommand("figure1", "q(b, gamma) surface as CSV");
    fig_cmd->add_option("--b-min", grid.b_min);
    fig_cmd->add_option("--b-max", grid.b_max);
    fig_cmd->add_option("--b-steps", grid.b_steps);
    fig_cmd->add_option("--gamma-max", grid.gamma_max);
    add_common(fig_cmd, common);

    auto* claims_cmd = app.add_subcommand("claims", "run the claim ledger");
    add_common(claims_cmd, common);

    CLI11_PARSE(app, argc, argv);

    try {
        const EvalConfig cfg = load_config(common);
        if (*zeta_cmd) {
            emit(common, zeta_eval(sigma, t, cfg));
        } else if (*scan_cmd) {
            emit(common, zero_scan(t_lo, t_hi, step, cfg));
        } else if (*count_cmd) {
            emit(common, count(rect, cfg));
        } else if (*table_cmd) {
            const auto id = parse_table_id(table_name);
            if (!id) {
                std::cerr << "zetalab: unknown table id '" << table_name << "' (expected T1..T7)\n";
                return 2;
            }
            emit(common, emit_table(*id, cfg));
        } else if (*fig_cmd) {
            emit(common, emit_figure1(grid));
        } else if (*claims_cmd) {
            emit(common, run_claims(cfg).render());
        }
    } catch (const std::exception& e) {
        std::cerr << "zetalab: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
