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

#ifndef MSEQCORR_SWEEP_HPP
#define MSEQCORR_SWEEP_HPP

#include <cstdint>
#include <future>
#include <numeric>
#include <string>
#include <vector>

#include "arithcorr.hpp"
#include "gf2field.hpp"
#include "gf2poly.hpp"
#include "msequence.hpp"
#include "theorem.hpp"

#include "json.hpp"

namespace mseqcorr {

/// One verified (g1, g2) pair: the prediction, the definition-level value,
/// and the outcome of every per-pair consistency check.
struct PairRecord {
    unsigned n1 = 0, n2 = 0;
    Poly2 g1, g2, f;
    unsigned l = 0, f0 = 0;
    long long m_predicted = 0;
    long long m_bruteforce = 0;
    bool lemma1_ok = false;
    bool lemma2_ok = false;
    bool lemma3_ok = false;
    bool lemma4_ok = false;
    bool lemma5_ok = false;
    bool bound_ok = false;
    bool shift_constant_ok = false;
    std::string first_failure;  // empty iff passed

    bool passed() const noexcept { return first_failure.empty(); }

    friend bool operator==(const PairRecord& a, const PairRecord& b) = default;
};

struct SweepOptions {
    unsigned cap = 14;                   // reject sweeps with n1+n2 above this
    bool parallel = false;               // pair-level std::async; ordering unaffected
    unsigned exhaustive_shift_sum = 9;   // n1+n2 <= this: test every tau
    unsigned sampled_shifts = 32;        // larger pairs: evenly spaced taus
};

namespace detail {

/// Run-distribution check on one m-sequence at its natural period: every
/// nonzero t-window occurs 2^(n-t) times and the zero window 2^(n-t)-1
/// times, for 1 <= t <= n.
inline bool census_matches(const BinarySeq& s, unsigned n) {
    for (unsigned t = 1; t <= n; ++t) {
        const auto counts = pattern_census(s, t);
        const std::size_t nonzero_expect = std::size_t{1} << (n - t);
        const std::size_t zero_expect = nonzero_expect - 1;
        const std::string zero_key(t, '0');
        std::size_t seen = 0;
        for (const auto& [pattern, count] : counts) {
            if (count != (pattern == zero_key ? zero_expect : nonzero_expect)) return false;
            seen += count;
        }
        if (seen != s.period()) return false;
        const std::size_t expected_keys = (std::size_t{1} << t) - (zero_expect == 0 ? 1 : 0);
        if (counts.size() != expected_keys) return false;
    }
    return true;
}

inline std::vector<std::size_t> shift_sample(std::size_t period, const SweepOptions& opt, unsigned degree_sum) {
    std::vector<std::size_t> taus;
    if (degree_sum <= opt.exhaustive_shift_sum) {
        taus.resize(period);
        std::iota(taus.begin(), taus.end(), std::size_t{0});
        return taus;
    }
    for (unsigned k = 0; k < opt.sampled_shifts; ++k) {
        const std::size_t tau = static_cast<std::size_t>((static_cast<unsigned __int128>(k) * period) / opt.sampled_shifts);
        if (taus.empty() || taus.back() != tau) taus.push_back(tau);
    }
    return taus;
}

}  // namespace detail

/// Run every consistency check on one primitive pair. The record's
/// first_failure names the earliest failing check, in the order
/// predicted_vs_bruteforce, lemma1..lemma5, bound, shift_constant.
inline PairRecord check_pair(Poly2 g1, Poly2 g2, const SweepOptions& opt = {}) {
    const Prediction pred = predict(g1, g2);  // validates primitivity and coprimality
    PairRecord rec;
    rec.n1 = pred.n1;
    rec.n2 = pred.n2;
    rec.g1 = g1;
    rec.g2 = g2;
    rec.f = pred.f;
    rec.l = pred.l;
    rec.f0 = pred.f0;
    rec.m_predicted = pred.value;

    const long long N1 = (1LL << rec.n1) - 1;
    const long long N2 = (1LL << rec.n2) - 1;
    const std::size_t NN = static_cast<std::size_t>(N1 * N2);

    const BinarySeq a1 = mseq_trace(g1);
    const BinarySeq b1 = mseq_trace(g2);
    const BinarySeq a = expand(a1, NN);
    const BinarySeq b = expand(b1, NN);

    rec.m_bruteforce = arith_cross(a, b).value;

    rec.lemma1_ok = detail::census_matches(a1, rec.n1) && detail::census_matches(b1, rec.n2) &&
                    max_zero_run_cyclic(a + b) < std::size_t{rec.n1} + rec.n2;

    const RunTables tables = count_runs(a, b, rec.n1, rec.n2);
    rec.lemma2_ok = m_via_lemma2(tables, N1, N2) == rec.m_bruteforce;

    long long n10_sum = 0, n01_sum = 0, disagreements = 0;
    for (std::size_t t = 0; t < tables.n10.size(); ++t) {
        n10_sum += tables.n10[t];
        n01_sum += tables.n01[t];
    }
    for (std::size_t i = 0; i < NN; ++i)
        if (a[i] != b[i]) ++disagreements;
    rec.lemma3_ok = n10_sum == (N2 - 1) * (N1 + 1) / 4 && n01_sum + n10_sum == disagreements;

    rec.lemma4_ok = m_via_lemma4(tables.n01, N1, N2) == rec.m_bruteforce;

    rec.lemma5_ok = true;
    try {
        const FieldCtx ctx1(g1);
        const FieldCtx ctx2(g2);
        for (unsigned t = 0; t < rec.n1 + rec.n2 && rec.lemma5_ok; ++t) {
            const HalfInt ud = u_defn(t, ctx1, ctx2);
            const HalfInt vd = v_defn(t, ctx2);
            rec.lemma5_ok = ud == u1_closed(t, rec.n1, rec.n2) + u2_closed(t, rec.n1, rec.n2, rec.l, rec.f0) &&
                            vd == v_closed(t, rec.n2) && (ud - vd).is_integer() &&
                            (ud - vd).as_integer() == tables.n01[t];
        }
    } catch (const std::exception&) {
        rec.lemma5_ok = false;
    }

    const long long bound = (1LL << std::min(rec.n1, rec.n2)) - 1;
    const long long mag = rec.m_bruteforce < 0 ? -rec.m_bruteforce : rec.m_bruteforce;
    rec.bound_ok = mag <= bound;
    if (rec.n1 < rec.n2) rec.bound_ok = rec.bound_ok && ((mag == bound) == equality_condition(g1, g2));

    rec.shift_constant_ok = true;
    for (std::size_t tau : detail::shift_sample(NN, opt, rec.n1 + rec.n2)) {
        if (arith_cross_shift(a, b, static_cast<long long>(tau)).value != rec.m_bruteforce) {
            rec.shift_constant_ok = false;
            break;
        }
    }

    if (rec.m_predicted != rec.m_bruteforce)
        rec.first_failure = "predicted_vs_bruteforce";
    else if (!rec.lemma1_ok)
        rec.first_failure = "lemma1";
    else if (!rec.lemma2_ok)
        rec.first_failure = "lemma2";
    else if (!rec.lemma3_ok)
        rec.first_failure = "lemma3";
    else if (!rec.lemma4_ok)
        rec.first_failure = "lemma4";
    else if (!rec.lemma5_ok)
        rec.first_failure = "lemma5";
    else if (!rec.bound_ok)
        rec.first_failure = "bound";
    else if (!rec.shift_constant_ok)
        rec.first_failure = "shift_constant";
    return rec;
}

struct SweepReport {
    unsigned n1 = 0, n2 = 0;
    std::vector<PairRecord> records;

    std::size_t pairs_total() const noexcept { return records.size(); }
    std::size_t pairs_passed() const noexcept {
        std::size_t n = 0;
        for (const auto& r : records)
            if (r.passed()) ++n;
        return n;
    }
    bool all_passed() const noexcept { return pairs_passed() == pairs_total(); }
};

/// Exhaustive sweep over every primitive pair of the given degrees. Records
/// are ordered by (g1 mask, g2 mask) regardless of scheduling.
inline SweepReport run_sweep(unsigned n1, unsigned n2, const SweepOptions& opt = {}) {
    if (n1 == 0 || n2 == 0) throw std::invalid_argument("run_sweep: degrees must be >= 1");
    if (std::gcd(n1, n2) != 1) throw std::invalid_argument("run_sweep: gcd(n1, n2) must be 1");
    if (n1 + n2 > opt.cap)
        throw std::invalid_argument("run_sweep: n1+n2 exceeds the cap of " + std::to_string(opt.cap) +
                                    " (raise the cap to override)");
    const std::vector<Poly2> gs1 = list_primitive(n1);
    const std::vector<Poly2> gs2 = list_primitive(n2);

    std::vector<std::pair<Poly2, Poly2>> pairs;
    pairs.reserve(gs1.size() * gs2.size());
    for (Poly2 g1 : gs1)
        for (Poly2 g2 : gs2) pairs.emplace_back(g1, g2);

    SweepReport report;
    report.n1 = n1;
    report.n2 = n2;
    report.records.resize(pairs.size());

    if (opt.parallel) {
        std::vector<std::future<PairRecord>> futs;
        futs.reserve(pairs.size());
        for (const auto& [g1, g2] : pairs)
            futs.push_back(std::async(std::launch::async, [g1 = g1, g2 = g2, &opt] { return check_pair(g1, g2, opt); }));
        for (std::size_t i = 0; i < futs.size(); ++i) report.records[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            report.records[i] = check_pair(pairs[i].first, pairs[i].second, opt);
    }
    return report;
}

inline nlohmann::json to_json(const PairRecord& r) {
    nlohmann::json j{{"n1", r.n1},
                     {"n2", r.n2},
                     {"g1", format_poly(r.g1)},
                     {"g2", format_poly(r.g2)},
                     {"F", format_poly(r.f)},
                     {"l", r.l},
                     {"f0", r.f0},
                     {"M_predicted", r.m_predicted},
                     {"M_bruteforce", r.m_bruteforce},
                     {"lemma1_ok", r.lemma1_ok},
                     {"lemma2_ok", r.lemma2_ok},
                     {"lemma3_ok", r.lemma3_ok},
                     {"lemma4_ok", r.lemma4_ok},
                     {"lemma5_ok", r.lemma5_ok},
                     {"bound_ok", r.bound_ok},
                     {"shift_constant_ok", r.shift_constant_ok}};
    if (!r.passed()) j["first_failure"] = r.first_failure;
    return j;
}

inline nlohmann::json to_json(const SweepReport& report) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& r : report.records) pairs.push_back(to_json(r));
    return nlohmann::json{{"n1", report.n1},
                          {"n2", report.n2},
                          {"summary", {{"pairs_total", report.pairs_total()}, {"pairs_passed", report.pairs_passed()}}},
                          {"pairs", std::move(pairs)}};
}

inline PairRecord pair_record_from_json(const nlohmann::json& j) {
    PairRecord r;
    r.n1 = j.at("n1").get<unsigned>();
    r.n2 = j.at("n2").get<unsigned>();
    r.g1 = parse_poly(j.at("g1").get<std::string>());
    r.g2 = parse_poly(j.at("g2").get<std::string>());
    r.f = parse_poly(j.at("F").get<std::string>());
    r.l = j.at("l").get<unsigned>();
    r.f0 = j.at("f0").get<unsigned>();
    r.m_predicted = j.at("M_predicted").get<long long>();
    r.m_bruteforce = j.at("M_bruteforce").get<long long>();
    r.lemma1_ok = j.at("lemma1_ok").get<bool>();
    r.lemma2_ok = j.at("lemma2_ok").get<bool>();
    r.lemma3_ok = j.at("lemma3_ok").get<bool>();
    r.lemma4_ok = j.at("lemma4_ok").get<bool>();
    r.lemma5_ok = j.at("lemma5_ok").get<bool>();
    r.bound_ok = j.at("bound_ok").get<bool>();
    r.shift_constant_ok = j.at("shift_constant_ok").get<bool>();
    if (j.contains("first_failure")) r.first_failure = j.at("first_failure").get<std::string>();
    return r;
}

inline SweepReport sweep_report_from_json(const nlohmann::json& j) {
    SweepReport report;
    report.n1 = j.at("n1").get<unsigned>();
    report.n2 = j.at("n2").get<unsigned>();
    for (const auto& p : j.at("pairs")) report.records.push_back(pair_record_from_json(p));
    return report;
}

/// Flat one-row-per-pair form of the report, for diffing.
inline std::string to_csv(const SweepReport& report) {
    std::string out =
        "n1,n2,g1,g2,F,l,f0,M_predicted,M_bruteforce,lemma1_ok,lemma2_ok,lemma3_ok,lemma4_ok,lemma5_ok,"
        "bound_ok,shift_constant_ok,first_failure\n";
    const auto b = [](bool v) { return v ? "true" : "false"; };
    for (const auto& r : report.records) {
        out += std::to_string(r.n1) + ',' + std::to_string(r.n2) + ',' + format_poly(r.g1) + ',' + format_poly(r.g2) +
               ',' + format_poly(r.f) + ',' + std::to_string(r.l) + ',' + std::to_string(r.f0) + ',' +
               std::to_string(r.m_predicted) + ',' + std::to_string(r.m_bruteforce) + ',' + b(r.lemma1_ok) + ',' +
               b(r.lemma2_ok) + ',' + b(r.lemma3_ok) + ',' + b(r.lemma4_ok) + ',' + b(r.lemma5_ok) + ',' +
               b(r.bound_ok) + ',' + b(r.shift_constant_ok) + ',' + r.first_failure + '\n';
    }
    return out;
}

}  // namespace mseqcorr

#endif  // MSEQCORR_SWEEP_HPP
