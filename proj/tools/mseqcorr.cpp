/*
   Copyright 2026 The mseqcorr authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mseqcorr/mseqcorr.hpp"

namespace {

using namespace mseqcorr;
using nlohmann::json;

std::string poly_pair_str(Poly2 p) { return format_poly(p) + " (" + format_poly_hex(p) + ")"; }

unsigned env_sweep_cap() {
    if (const char* v = std::getenv("MSEQCORR_SWEEP_CAP")) {
        const long cap = std::strtol(v, nullptr, 10);
        if (cap >= 2 && cap <= 48) return static_cast<unsigned>(cap);
        std::cerr << "warning: ignoring MSEQCORR_SWEEP_CAP=" << v << " (want 2..48)\n";
    }
    return 14;
}

int cmd_primpoly(unsigned degree, bool first_only) {
    const auto polys = list_primitive(degree);
    for (const Poly2 g : polys) {
        std::cout << format_poly(g) << '\t' << format_poly_hex(g) << '\n';
        if (first_only) break;
    }
    return 0;
}

int cmd_gen(const std::string& poly_text, std::size_t len, const std::string& format) {
    const Poly2 g = parse_poly(poly_text);
    BinarySeq s = mseq_trace(g);  // rejects non-primitive polynomials
    if (len != 0) s = expand(s, len);
    if (format == "bits") {
        std::cout << s.to_string() << '\n';
    } else if (format == "csv") {
        std::cout << s.to_csv() << '\n';
    } else {
        const json j{{"poly", format_poly(g)}, {"period", s.period()}, {"bits", s.to_string()}};
        std::cout << j.dump() << '\n';
    }
    return 0;
}

json prediction_json(const Prediction& p) {
    return json{{"F", format_poly(p.f)}, {"l", p.l}, {"f0", p.f0}, {"M_predicted", p.value}};
}

int cmd_predict(const std::string& g1_text, const std::string& g2_text, bool as_json) {
    const Poly2 g1 = parse_poly(g1_text);
    const Poly2 g2 = parse_poly(g2_text);
    const Prediction fwd = predict(g1, g2);
    const Prediction rev = predict(g2, g1);
    const long long bound = (1LL << std::min(fwd.n1, fwd.n2)) - 1;
    const long long mag = fwd.value < 0 ? -fwd.value : fwd.value;

    bool eq_known = false, eq = false;
    if (fwd.n1 < fwd.n2) {
        eq_known = true;
        eq = equality_condition(g1, g2);
    } else if (fwd.n2 < fwd.n1) {
        eq_known = true;
        eq = equality_condition(g2, g1);
    }

    if (as_json) {
        json j{{"g1", format_poly(g1)}, {"n1", fwd.n1}, {"g2", format_poly(g2)},      {"n2", fwd.n2},
               {"forward", prediction_json(fwd)},      {"reverse", prediction_json(rev)},
               {"bound", bound},        {"bound_attained", mag == bound}};
        if (eq_known) j["equality_condition"] = eq;
        std::cout << j.dump() << '\n';
        return 0;
    }
    std::cout << "g1 = " << poly_pair_str(g1) << ", n1 = " << fwd.n1 << '\n';
    std::cout << "g2 = " << poly_pair_str(g2) << ", n2 = " << fwd.n2 << '\n';
    std::cout << "F = " << poly_pair_str(fwd.f) << ", l = " << fwd.l << ", f0 = " << fwd.f0 << '\n';
    std::cout << "M(A,B) = " << (fwd.value > 0 ? "+" : "") << fwd.value << '\n';
    std::cout << "bound 2^min(n1,n2)-1 = " << bound << ", attained: " << (mag == bound ? "yes" : "no") << '\n';
    if (eq_known)
        std::cout << "equality condition (smaller-degree modulus divides the other minus one): " << (eq ? "yes" : "no")
                  << '\n';
    std::cout << "reverse order: F = " << poly_pair_str(rev.f) << ", M(B,A) = " << (rev.value > 0 ? "+" : "")
              << rev.value << '\n';
    return 0;
}

int cmd_corr(const std::string& g1_text, const std::string& g2_text, long long tau, const std::string& mode,
             bool as_json) {
    const Poly2 g1 = parse_poly(g1_text);
    const Poly2 g2 = parse_poly(g2_text);
    const BinarySeq s1 = mseq_trace(g1);
    const BinarySeq s2 = mseq_trace(g2);
    const std::size_t joint = std::lcm(s1.period(), s2.period());
    const BinarySeq a = expand(s1, joint);
    const BinarySeq b = expand(s2, joint);

    if (mode == "arith") {
        const CorrValue v = arith_cross_shift(a, b, tau);
        if (as_json) {
            const json j{{"mode", "arith"},   {"g1", format_poly(g1)}, {"g2", format_poly(g2)},
                         {"period", joint},   {"tau", tau},            {"value", v.value},
                         {"I0", v.zeros},     {"I1", v.ones},          {"lhs_ge", v.lhs_ge}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << v.value << '\n';
        }
    } else {
        const long long v = classical_cross(a, b, tau);
        if (as_json) {
            const json j{{"mode", "classical"}, {"g1", format_poly(g1)}, {"g2", format_poly(g2)},
                         {"period", joint},     {"tau", tau},            {"value", v}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << v << '\n';
        }
    }
    return 0;
}

int cmd_verify(unsigned n1, unsigned n2, const std::string& out_path, const std::string& csv_path, bool parallel,
               unsigned cap) {
    SweepOptions opt;
    opt.cap = cap;
    opt.parallel = parallel;
    const SweepReport report = run_sweep(n1, n2, opt);
    const json j = to_json(report);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return 1;
        }
        out << j.dump(2) << '\n';
        std::cout << "pairs_total=" << report.pairs_total() << " pairs_passed=" << report.pairs_passed() << " -> "
                  << out_path << '\n';
    } else {
        std::cout << j.dump(2) << '\n';
    }
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) {
            std::cerr << "error: cannot write " << csv_path << '\n';
            return 1;
        }
        out << to_csv(report);
    }
    for (const auto& r : report.records)
        if (!r.passed())
            std::cerr << "FAIL g1=" << format_poly(r.g1) << " g2=" << format_poly(r.g2) << " first_failure="
                      << r.first_failure << '\n';
    return report.all_passed() ? 0 : 1;
}

int cmd_lemmas(const std::string& g1_text, const std::string& g2_text, bool as_json) {
    const Poly2 g1 = parse_poly(g1_text);
    const Poly2 g2 = parse_poly(g2_text);
    const Prediction pred = predict(g1, g2);
    const unsigned n1 = pred.n1, n2 = pred.n2;
    const long long N1 = (1LL << n1) - 1, N2 = (1LL << n2) - 1;
    const std::size_t NN = static_cast<std::size_t>(N1 * N2);
    const BinarySeq a = expand(mseq_trace(g1), NN);
    const BinarySeq b = expand(mseq_trace(g2), NN);
    const long long brute = arith_cross(a, b).value;
    const RunTables tables = count_runs(a, b, n1, n2);
    const FieldCtx ctx1(g1), ctx2(g2);

    long long n01_sum = 0, n10_sum = 0;
    for (std::size_t t = 0; t < tables.n01.size(); ++t) {
        n01_sum += tables.n01[t];
        n10_sum += tables.n10[t];
    }
    const std::size_t zero_run = max_zero_run_cyclic(a + b);

    json per_t = json::array();
    for (unsigned t = 0; t < n1 + n2; ++t) {
        const HalfInt ud = u_defn(t, ctx1, ctx2);
        const HalfInt vd = v_defn(t, ctx2);
        const HalfInt uc = u1_closed(t, n1, n2) + u2_closed(t, n1, n2, pred.l, pred.f0);
        const HalfInt vc = v_closed(t, n2);
        per_t.push_back(json{{"t", t},
                             {"N01", tables.n01[t]},
                             {"N10", tables.n10[t]},
                             {"U_enumerated", ud.to_string()},
                             {"U_closed", uc.to_string()},
                             {"V_enumerated", vd.to_string()},
                             {"V_closed", vc.to_string()},
                             {"U_minus_V_matches_N01", ud == uc && vd == vc && (ud - vd).is_integer() &&
                                                           (ud - vd).as_integer() == tables.n01[t]}});
    }

    const json j{{"g1", format_poly(g1)},
                 {"g2", format_poly(g2)},
                 {"n1", n1},
                 {"n2", n2},
                 {"period", NN},
                 {"M_definition", brute},
                 {"M_theorem", pred.value},
                 {"M_lemma2", m_via_lemma2(tables, N1, N2)},
                 {"M_lemma4", m_via_lemma4(tables.n01, N1, N2)},
                 {"F", format_poly(pred.f)},
                 {"l", pred.l},
                 {"f0", pred.f0},
                 {"sum_N01", n01_sum},
                 {"sum_N10", n10_sum},
                 {"lemma3_expected_sum_N10", (N2 - 1) * (N1 + 1) / 4},
                 {"max_zero_run_of_sum_seq", zero_run},
                 {"lemma1_zero_run_bound", n1 + n2},
                 {"per_t", per_t}};
    if (as_json) {
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "pair: g1 = " << poly_pair_str(g1) << ", g2 = " << poly_pair_str(g2) << ", period " << NN << '\n';
    std::cout << "M: definition = " << brute << ", theorem = " << pred.value << ", via run tables = "
              << m_via_lemma2(tables, N1, N2) << ", via reduced formula = " << m_via_lemma4(tables.n01, N1, N2)
              << '\n';
    std::cout << "F = " << format_poly(pred.f) << ", l = " << pred.l << ", f0 = " << pred.f0 << '\n';
    std::cout << "sum N01 = " << n01_sum << ", sum N10 = " << n10_sum << " (expected sum N10 = "
              << (N2 - 1) * (N1 + 1) / 4 << ")\n";
    std::cout << "longest zero run of A+B = " << zero_run << " (must be < " << n1 + n2 << ")\n";
    std::cout << "  t |  N01  N10 |  U(enum)  U(closed) |  V(enum)  V(closed)\n";
    for (unsigned t = 0; t < n1 + n2; ++t) {
        const auto& row = per_t[t];
        std::printf(" %2u | %4lld %4lld | %8s %10s | %8s %10s\n", t, tables.n01[t], tables.n10[t],
                    row["U_enumerated"].get<std::string>().c_str(), row["U_closed"].get<std::string>().c_str(),
                    row["V_enumerated"].get<std::string>().c_str(), row["V_closed"].get<std::string>().c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arithmetic crosscorrelation toolkit for binary m-sequences"};
    app.require_subcommand(1);

    // primpoly
    auto* primpoly = app.add_subcommand("primpoly", "list primitive polynomials of a degree");
    unsigned pp_degree = 0;
    bool pp_first = false;
    primpoly->add_option("--degree", pp_degree, "degree (1..16)")->required()->check(CLI::Range(1u, 16u));
    primpoly->add_flag("--first", pp_first, "print only the lowest-mask polynomial");

    // gen
    auto* gen = app.add_subcommand("gen", "generate the canonical-phase m-sequence of a primitive polynomial");
    std::string gen_poly;
    std::size_t gen_len = 0;
    std::string gen_format = "bits";
    gen->add_option("--poly", gen_poly, "primitive polynomial (text or 0x mask)")->required();
    gen->add_option("--len", gen_len, "output length (multiple of the natural period)");
    gen->add_option("--format", gen_format, "bits|csv|json")->check(CLI::IsMember({"bits", "csv", "json"}));

    // predict
    auto* pred = app.add_subcommand("predict", "closed-form arithmetic crosscorrelation of two m-sequences");
    std::string pr_g1, pr_g2;
    bool pr_json = false;
    pred->add_option("--g1", pr_g1, "first primitive polynomial")->required();
    pred->add_option("--g2", pr_g2, "second primitive polynomial")->required();
    pred->add_flag("--json", pr_json, "JSON output");

    // corr
    auto* corr = app.add_subcommand("corr", "definition-level correlation of two m-sequences");
    std::string co_g1, co_g2, co_mode = "arith";
    long long co_tau = 0;
    bool co_json = false;
    corr->add_option("--g1", co_g1, "first primitive polynomial")->required();
    corr->add_option("--g2", co_g2, "second primitive polynomial")->required();
    corr->add_option("--tau", co_tau, "shift applied to the second sequence (default 0)");
    corr->add_option("--mode", co_mode, "arith|classical")->check(CLI::IsMember({"arith", "classical"}));
    corr->add_flag("--json", co_json, "JSON output");

    // verify
    auto* verify = app.add_subcommand("verify", "exhaustive consistency sweep over all primitive pairs");
    unsigned ve_n1 = 0, ve_n2 = 0;
    unsigned ve_cap = env_sweep_cap();
    std::string ve_out, ve_csv;
    bool ve_parallel = false;
    verify->add_option("--n1", ve_n1, "first degree")->required()->check(CLI::Range(1u, 16u));
    verify->add_option("--n2", ve_n2, "second degree")->required()->check(CLI::Range(1u, 16u));
    verify->add_option("--out", ve_out, "write the JSON report to this path");
    verify->add_option("--csv", ve_csv, "also write a flat CSV of the per-pair records");
    verify->add_flag("--parallel", ve_parallel, "check pairs concurrently (report order is unchanged)");
    verify->add_option("--cap", ve_cap, "max allowed n1+n2 (default 14, or MSEQCORR_SWEEP_CAP)");

    // lemmas
    auto* lemmas = app.add_subcommand("lemmas", "per-pair breakdown of every intermediate counting identity");
    std::string le_g1, le_g2;
    bool le_json = false;
    lemmas->add_option("--g1", le_g1, "first primitive polynomial")->required();
    lemmas->add_option("--g2", le_g2, "second primitive polynomial")->required();
    lemmas->add_flag("--json", le_json, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (primpoly->parsed()) return cmd_primpoly(pp_degree, pp_first);
        if (gen->parsed()) return cmd_gen(gen_poly, gen_len, gen_format);
        if (pred->parsed()) return cmd_predict(pr_g1, pr_g2, pr_json);
        if (corr->parsed()) return cmd_corr(co_g1, co_g2, co_tau, co_mode, co_json);
        if (verify->parsed()) return cmd_verify(ve_n1, ve_n2, ve_out, ve_csv, ve_parallel, ve_cap);
        if (lemmas->parsed()) return cmd_lemmas(le_g1, le_g2, le_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
