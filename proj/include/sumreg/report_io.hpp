#pragma once

#include <ostream>

#include "json.hpp"
#include "sumreg/analysis.hpp"
#include "sumreg/verifier.hpp"

namespace sumreg {

// JSON view of an analysis report. Field names follow the report members;
// -infinity values (m_e, end_h1) serialize as null.
inline nlohmann::json report_to_json(const AnalysisReport& r) {
    nlohmann::json j;
    j["input"] = r.input;
    j["elements"] = r.elements;
    j["already_normal"] = r.already_normal;
    j["n"] = r.n;
    j["d"] = r.d;
    j["c1"] = r.c1;
    j["c2"] = r.c2;
    j["genus1"] = r.genus1;
    j["genus2"] = r.genus2;
    j["C1"] = r.C1;
    j["C2"] = r.C2;
    j["hp"] = {{"slope", r.hp.slope}, {"intercept", r.hp.intercept}};
    j["rhp"] = r.rhp;
    j["ceil_term"] = r.ceil_term;
    j["sigma"] = r.sigma;
    j["sigma_direct"] = r.sigma_direct;
    j["m_e"] = r.m_e ? nlohmann::json(*r.m_e) : nlohmann::json(nullptr);
    j["m_ap"] = r.m_ap;
    j["reg"] = r.reg;
    j["reg_cohomology"] = r.reg_cohomology;
    j["end_h1"] = r.end_h1 ? nlohmann::json(*r.end_h1) : nlohmann::json(nullptr);
    j["end_h2"] = r.end_h2;
    j["cm"] = r.cm;
    j["smooth"] = r.smooth;
    j["D"] = r.D;
    j["last_step"] = r.last_step;
    j["reduction_number"] = r.reduction_number;
    nlohmann::json b;
    b["nathanson"] = r.bounds.nathanson;
    b["wcc"] = r.bounds.wcc;
    b["gs"] = r.bounds.gs;
    b["gw"] = r.bounds.gw;
    b["eg"] = r.bounds.eg;
    b["lvovsky"] = r.bounds.lvovsky;
    b["elias_cm"] = r.bounds.elias_cm ? nlohmann::json(*r.bounds.elias_cm)
                                      : nlohmann::json(nullptr);
    b["glp"] = r.bounds.glp;
    j["bounds"] = b;
    if (r.gw_extremal)
        j["gw_extremal"] = {{"family", to_string(r.gw_extremal->family)},
                            {"a", r.gw_extremal->a}};
    else
        j["gw_extremal"] = nullptr;
    j["cm_special"] = {{"applies", r.cm_special.applies},
                       {"conclusions_hold", r.cm_special.conclusions_hold}};
    return j;
}

inline void print_report_text(std::ostream& os, const AnalysisReport& r) {
    auto ext = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("-inf");
    };
    os << "set: {" << join_ints(r.elements) << "}  n = " << r.n << "  d = " << r.d
       << '\n';
    if (!r.already_normal)
        os << "  (normalized from {" << join_ints(r.input) << "})\n";
    os << "S1 = <A>:   c1 = " << r.c1 << "  genus1 = " << r.genus1 << "  C1 = {"
       << join_ints(r.C1) << "}\n";
    os << "S2 = <d-A>: c2 = " << r.c2 << "  genus2 = " << r.genus2 << "  C2 = {"
       << join_ints(r.C2) << "}\n";
    os << "hilbert polynomial: " << r.hp.slope << "*s + (" << r.hp.intercept << ")\n";
    os << "rhp = " << r.rhp << "  ceil_term = " << r.ceil_term
       << "  sigma = " << r.sigma << "  sigma_direct = " << r.sigma_direct << '\n';
    os << "m_e = " << ext(r.m_e) << "  m_ap = " << r.m_ap << "  reg = " << r.reg
       << "  reg_cohomology = " << r.reg_cohomology << '\n';
    os << "end_h1 = " << ext(r.end_h1) << "  end_h2 = " << r.end_h2 << '\n';
    os << "cm = " << (r.cm ? "true" : "false")
       << "  smooth = " << (r.smooth ? "true" : "false") << "  D = " << r.D
       << "  last_step = " << (r.last_step ? "true" : "false")
       << "  reduction_number = " << r.reduction_number << '\n';
    os << "bounds: nathanson = " << r.bounds.nathanson << "  wcc = " << r.bounds.wcc
       << "  gs = " << r.bounds.gs << "  gw = " << r.bounds.gw
       << "  eg = " << r.bounds.eg << "  lvovsky = " << r.bounds.lvovsky
       << "  elias_cm = "
       << (r.bounds.elias_cm ? std::to_string(*r.bounds.elias_cm) : std::string("n/a"))
       << "  glp = " << r.bounds.glp << '\n';
    os << "gw_extremal: ";
    if (r.gw_extremal)
        os << to_string(r.gw_extremal->family) << "(a = " << r.gw_extremal->a << ")";
    else
        os << "none";
    os << '\n';
    os << "cm_special: applies = " << (r.cm_special.applies ? "true" : "false")
       << "  conclusions_hold = "
       << (r.cm_special.conclusions_hold ? "true" : "false") << '\n';
}

} // namespace sumreg
