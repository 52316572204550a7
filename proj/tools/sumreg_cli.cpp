// Command-line front door: analyze one set, verify theorem batteries over
// enumerated ranges, or render semigroup levels as ASCII diagrams.
//
// Exit codes: 0 success, 1 invalid input or I/O failure, 2 verification
// found failing checks.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sumreg/analysis.hpp"
#include "sumreg/render.hpp"
#include "sumreg/report_io.hpp"
#include "sumreg/verifier.hpp"

namespace {

std::vector<int> parse_set(const std::string& literal) {
    std::vector<int> out;
    std::stringstream ss(literal);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int value;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw sumreg::input_error("cannot parse '" + item + "' as an integer");
        }
        if (pos != item.size())
            throw sumreg::input_error("cannot parse '" + item + "' as an integer");
        if (value < 0)
            throw sumreg::input_error("set elements must be non-negative");
        out.push_back(value);
    }
    if (out.size() < 2)
        throw sumreg::input_error("set literal needs at least 2 elements");
    return out;
}

std::pair<int, int> parse_range(const std::string& literal) {
    const auto dots = literal.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(literal);
            return {v, v};
        }
        return {std::stoi(literal.substr(0, dots)), std::stoi(literal.substr(dots + 2))};
    } catch (const std::exception&) {
        throw sumreg::input_error("cannot parse range '" + literal + "'");
    }
}

int cmd_analyze(const std::string& set_literal, const std::string& format) {
    const std::vector<int> raw = parse_set(set_literal);
    const sumreg::NormalFormSet A = sumreg::normalize(raw);
    const sumreg::SetAnalysis analysis(A, raw);
    if (format == "json") {
        std::cout << sumreg::report_to_json(analysis.report()).dump(2) << '\n';
    } else {
        sumreg::print_report_text(std::cout, analysis.report());
    }
    return 0;
}

int cmd_verify(const std::string& n_literal, int dmax, unsigned jobs,
               const std::string& out_path) {
    const auto [n_lo, n_hi] = parse_range(n_literal);
    sumreg::EnumerationSpec spec;
    spec.n_min = n_lo;
    spec.n_max = n_hi;
    spec.d_max = dmax;
    spec.jobs = jobs;
    const sumreg::VerifySummary summary = sumreg::run_verification(spec);
    for (int i = 0; i < sumreg::kCheckCount; ++i) {
        std::cout << sumreg::check_id(i) << "  pass=" << summary.pass_counts[i]
                  << " fail=" << summary.fail_counts[i]
                  << " n/a=" << summary.na_counts[i] << "  "
                  << sumreg::check_label(i) << '\n';
    }
    for (const auto& rec : summary.records) {
        for (int i = 0; i < sumreg::kCheckCount; ++i) {
            const auto& c = rec.checks[static_cast<std::size_t>(i)];
            if (c.status == sumreg::CheckStatus::fail)
                std::cout << "FAIL " << sumreg::check_id(i) << " on {"
                          << sumreg::join_ints(rec.elements) << "}: " << c.details
                          << '\n';
        }
    }
    std::cout << "sets: " << summary.records.size() << '\n';
    std::cout << "failures: " << summary.total_failures << '\n';
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out)
            throw sumreg::input_error("cannot open output path '" + out_path + "'");
        sumreg::write_csv(out, summary.records);
        if (!out.good())
            throw sumreg::input_error("failed writing '" + out_path + "'");
    }
    return summary.total_failures == 0 ? 0 : 2;
}

int cmd_render(const std::string& set_literal, const std::string& levels_literal,
               bool wide) {
    const std::vector<int> raw = parse_set(set_literal);
    const sumreg::NormalFormSet A = sumreg::normalize(raw);
    if (A.elements() != raw)
        std::cerr << "note: normalized input to {" << sumreg::join_ints(A.elements())
                  << "}\n";
    sumreg::RenderOptions opt;
    opt.wide = wide;
    if (!levels_literal.empty())
        opt.window = parse_range(levels_literal);
    sumreg::render_levels(std::cout, A, opt);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sumset structure and monomial-curve regularity toolkit"};
    app.require_subcommand(1);

    std::string set_literal;
    std::string format = "text";
    auto* analyze = app.add_subcommand(
        "analyze", "compute the full invariant suite of one set");
    analyze->add_option("--set", set_literal, "comma-separated set, e.g. 0,5,9,11,20")
        ->required();
    analyze->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string n_literal = "4";
    int dmax = 0;
    unsigned jobs = 1;
    std::string out_path;
    auto* verify = app.add_subcommand(
        "verify", "run the theorem battery over all sets in a range");
    verify->add_option("--n", n_literal, "number of elements, int or a..b");
    verify->add_option("--dmax", dmax, "largest d to enumerate")->required();
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--out", out_path, "write per-set CSV here");

    std::string render_set;
    std::string levels_literal;
    bool wide = false;
    auto* render = app.add_subcommand("render", "ASCII diagram of semigroup levels");
    render->add_option("--set", render_set, "comma-separated set")->required();
    render->add_option("--levels", levels_literal, "level window, int or a..b");
    render->add_flag("--wide", wide, "allow diagrams wider than 200 columns");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return cmd_analyze(set_literal, format);
        if (verify->parsed())
            return cmd_verify(n_literal, dmax, jobs, out_path);
        if (render->parsed())
            return cmd_render(render_set, levels_literal, wide);
    } catch (const sumreg::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const sumreg::window_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
