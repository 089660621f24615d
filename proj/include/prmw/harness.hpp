// Copyright 2026 The prm-weights Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "codes.hpp"
#include "search.hpp"
#include "space.hpp"
#include "weights.hpp"
#include "witnesses.hpp"

// Experiment runners behind the prm-weights CLI. Each returns a JSON record
// and an exit code: 0 ok, 2 discrepancy, 3 budget exceeded without result.
// Records carry no wall-clock data unless timing is requested, so repeated
// runs are byte-identical.

namespace prmw::harness {

using json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_discrepancy = 2;
inline constexpr int exit_budget = 3;

enum class Format { md, csv, json };

inline Format parse_format(const std::string& s) {
    if (s == "md") return Format::md;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw std::invalid_argument("unknown format '" + s + "'");
}

struct RunConfig {
    Field field = field_of_order(2);
    unsigned n = 1;
    int d = 2;
    Family family = Family::PRM;
    std::uint64_t budget = std::uint64_t{1} << 24;
    unsigned threads = 1;
    std::uint64_t seed = 1;
    double time_limit_seconds = 0;
    bool timing = false;
};

struct Outcome {
    json record;
    int exit_code = exit_ok;
};

namespace detail {

using clock = std::chrono::steady_clock;

template <class T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

inline json header(const char* command, const RunConfig& c) {
    return json{{"command", command},  {"family", to_string(c.family)}, {"q", c.field.q()},
                {"field", c.field.describe()}, {"n", c.n},          {"d", c.d}};
}

inline void finish(json& rec, clock::time_point start, const RunConfig& c) {
    if (c.timing)
        rec["elapsed"] = std::chrono::duration<double>(clock::now() - start).count();
    else
        rec["elapsed"] = nullptr;
}

inline json bounds_json(const WeightPrediction& p) {
    return p.bounds ? json::array({p.bounds->first, p.bounds->second}) : json(nullptr);
}

inline json affine_prediction(unsigned q, unsigned n, int d) {
    const auto ap = decompose_affine(q, n, d);
    return json{{"d", d},
                {"a", ap.a},
                {"b", ap.b},
                {"clamped", ap.clamped},
                {"W1", w1_rm(q, n, d)},
                {"W2", w2_rm(q, n, d)},
                {"status", "exact"}};
}

inline json projective_prediction(unsigned q, unsigned n, int d) {
    const auto pp = decompose_projective(q, n, d);
    const auto w2 = w2_prm(q, n, d);
    return json{{"d", d},
                {"k", pp.k},
                {"l", pp.l},
                {"top_of_range", pp.top_of_range},
                {"W1", w1_prm(q, n, d)},
                {"W2", w2.value},
                {"status", to_string(w2.status)},
                {"source", w2.source},
                {"bounds", bounds_json(w2)},
                {"table_row", table_row_class(q, n, d)}};
}

inline json witness_json(const Witness& w) {
    return json{{"source", w.source}, {"poly", to_string(w.poly)}, {"claimed_weight", w.claimed_weight}, {"verified", w.verified}};
}

inline json hyperplane_json(const Hyperplane& h) { return json(std::vector<unsigned>(h.coeffs.begin(), h.coeffs.end())); }

// Text table helpers
inline std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.is_null() ? std::string() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::string md_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.is_null() ? std::string("-") : v.dump();
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += '\\';
        out += ch;
    }
    return out;
}

inline void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, json>>& out) {
    if (v.is_object() && !v.empty()) {
        for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, out);
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), out);
    } else {
        out.emplace_back(prefix, v);
    }
}

inline std::string render_rows(const std::vector<std::string>& cols, const json& rows, Format f) {
    std::ostringstream os;
    if (f == Format::csv) {
        for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_cell(cols[i]);
        os << "\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_cell(r.value(cols[i], json(nullptr)));
            os << "\n";
        }
    } else {
        os << "|";
        for (const auto& c : cols) os << " " << c << " |";
        os << "\n|";
        for (std::size_t i = 0; i < cols.size(); ++i) os << "---|";
        os << "\n";
        for (const auto& r : rows) {
            os << "|";
            for (const auto& c : cols) os << " " << md_cell(r.value(c, json(nullptr))) << " |";
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace detail

/// JSON pretty-printed; CSV and Markdown as tables (tables command) or
/// flattened key/value pairs (everything else).
inline std::string render(const json& rec, Format f) {
    if (f == Format::json) return rec.dump(2) + "\n";
    if (rec.value("command", "") == "tables") {
        const std::vector<std::string> cls{"row", "W2_RM(n,d-1)", "W2_PRM(n,d)", "status", "instances"};
        const std::vector<std::string> inst{"n", "d", "k", "l", "row", "W2_RM(n,d-1)", "W2_PRM(n,d)", "status", "source",
                                            "oracle_W2_RM", "oracle_W2_PRM", "confirmed"};
        if (f == Format::csv) return detail::render_rows(inst, rec["instances"], f);
        std::ostringstream os;
        os << "## q = " << rec["q"].get<unsigned>() << ", n <= " << rec["n_max"].get<unsigned>() << "\n\n";
        os << detail::render_rows(cls, rec["classes"], f) << "\n";
        os << detail::render_rows(inst, rec["instances"], f);
        return os.str();
    }
    std::vector<std::pair<std::string, json>> flat;
    detail::flatten(rec, "", flat);
    json rows = json::array();
    for (auto& [k, v] : flat) rows.push_back(json{{"key", k}, {"value", v}});
    return detail::render_rows({"key", "value"}, rows, f);
}

inline Outcome run_predict(const RunConfig& c) {
    const auto start = detail::clock::now();
    const unsigned q = c.field.q();
    check_qn(q, c.n);
    if (c.d < 1) throw std::invalid_argument("d must be at least 1");
    json rec = detail::header("predict", c);
    json pred;
    pred["rm"] = detail::affine_prediction(q, c.n, c.d);
    if (c.family == Family::PRM) {
        decompose_projective(q, c.n, c.d);  // validates the range
        pred["rm_prev"] = detail::affine_prediction(q, c.n, c.d - 1);
        pred["prm"] = detail::projective_prediction(q, c.n, c.d);
    }
    rec["prediction"] = std::move(pred);
    detail::finish(rec, start, c);
    return {std::move(rec), exit_ok};
}

inline Outcome run_verify(const RunConfig& c) {
    const auto start = detail::clock::now();
    const Field& F = c.field;
    const unsigned q = F.q(), n = c.n;
    check_qn(q, n);
    const bool projective = c.family == Family::PRM;
    if (projective)
        decompose_projective(q, n, c.d);
    else if (c.d < 1)
        throw std::invalid_argument("d must be at least 1");
    const auto cs = make_code(c.family, F, n, static_cast<unsigned>(c.d));

    json rec = detail::header("verify", c);
    // affine witnesses live at the clamped order
    const int da = projective ? c.d - 1 : std::min<int>(c.d, static_cast<int>(n * (q - 1)));
    const std::uint64_t w1 = projective ? w1_prm(q, n, c.d) : w1_rm(q, n, c.d);
    WeightPrediction w2 = projective ? w2_prm(q, n, c.d)
                                     : WeightPrediction{w2_rm(q, n, c.d), Status::exact, "affine-formula", std::nullopt};
    rec["prediction"] = projective ? detail::projective_prediction(q, n, c.d) : detail::affine_prediction(q, n, c.d);

    bool discrepancy = false;
    json checks = json::array();
    auto check = [&](const std::string& what, const json& expected, const json& observed, bool ok) {
        checks.push_back(json{{"check", what}, {"expected", expected}, {"observed", observed}, {"ok", ok}});
        discrepancy |= !ok;
    };

    // witnesses: built and verified by evaluation regardless of the oracle
    json witnesses = json::array();
    std::vector<Witness> built;
    try {
        auto m = min_weight_affine(F, n, da);
        auto s = second_weight_affine_candidate(F, n, da);
        if (projective) {
            built.push_back(prm_embedded_witness(F, n, static_cast<unsigned>(c.d), m));
            built.push_back(prm_embedded_witness(F, n, static_cast<unsigned>(c.d), s));
            const auto pp = decompose_projective(q, n, c.d);
            if (pp.l == 1 && n >= 3 && pp.k + 2 < n) built.push_back(quadric_witness(F, n, pp.k));
        } else {
            built.push_back(std::move(m));
            built.push_back(std::move(s));
        }
    } catch (const WitnessMismatch& e) {
        check("witness", nullptr, e.what(), false);
    }
    for (const auto& w : built) witnesses.push_back(detail::witness_json(w));

    const auto G = generator_matrix(cs);
    rec["dim"] = G.dim();
    rec["length"] = G.length();

    std::optional<LowWeights> oracle;
    std::string skipped;
    try {
        oracle = exhaustive_low_weights(G, {.budget = c.budget, .threads = c.threads, .time_limit_seconds = c.time_limit_seconds});
    } catch (const BudgetExceeded& e) {
        skipped = e.what();
    }

    if (oracle) {
        check("W1", w1, detail::opt(oracle->w1), oracle->w1 == w1);
        if (w2.status == Status::exact) {
            check("W2", w2.value, detail::opt(oracle->w2), oracle->w2 == w2.value);
        } else {
            const bool inside = oracle->w2 && *oracle->w2 >= w2.bounds->first && *oracle->w2 <= w2.bounds->second;
            check("W2 within bounds", detail::bounds_json(w2), detail::opt(oracle->w2), inside);
        }
        // a witness weight is a codeword weight: W1, or at least W2
        for (const auto& w : built) {
            const bool ok = w.claimed_weight == oracle->w1 || (oracle->w2 && w.claimed_weight >= *oracle->w2);
            check("witness weight in spectrum", w.source, w.claimed_weight, ok);
        }
    }

    rec["W1"] = oracle ? detail::opt(oracle->w1) : json(nullptr);
    rec["W2"] = oracle ? detail::opt(oracle->w2) : json(nullptr);
    rec["method"] = oracle ? "exhaustive" : "skipped";
    rec["seed"] = nullptr;
    if (oracle) {
        rec["oracle"] = json{{"enumerated", oracle->enumerated},
                             {"W1_witness", oracle->w1_witness ? json(to_string(*oracle->w1_witness)) : json(nullptr)},
                             {"W2_witness", oracle->w2_witness ? json(to_string(*oracle->w2_witness)) : json(nullptr)}};
    } else {
        rec["oracle"] = json{{"skipped", skipped}};
    }
    rec["witnesses"] = std::move(witnesses);
    rec["checks"] = std::move(checks);
    const int code = discrepancy ? exit_discrepancy : oracle ? exit_ok : exit_budget;
    rec["status"] = code == exit_discrepancy ? "DISCREPANCY" : code == exit_budget ? "budget_exceeded" : "ok";
    detail::finish(rec, start, c);
    return {std::move(rec), code};
}

/// Symbolic entries of the published next-to-minimal weight tables, keyed by
/// the row labels of table_row_class.
inline std::pair<std::string, std::string> table_row_formulas(unsigned q, const std::string& row) {
    static const std::map<std::string, std::pair<std::string, std::string>> binary{
        {"n>=3, k=0, l=1", {"2^n", "3*2^(n-2)"}},
        {"n>=4, 1<=k<n-2, l=1", {"3*2^(n-k-2)", "3*2^(n-k-2)"}},
        {"n>=2, k=n-2, l=1", {"4", "4"}},
        {"n>=2, k=n-1, l=1", {"2", "2"}}};
    static const std::map<std::string, std::pair<std::string, std::string>> ternary{
        {"n=2, k=0, l=1", {"3^2", "3^2"}},
        {"n>=3, k=0, l=1", {"3^n", "8*3^(n-2)"}},
        {"n>=3, 1<=k<=n-2, l=1", {"8*3^(n-k-2)", "8*3^(n-k-2)"}},
        {"n>=2, 0<=k<=n-2, l=2", {"4*3^(n-k-2)", "4*3^(n-k-2)"}},
        {"n>=1, k=n-1, l=1,2", {"4-l", "4-l"}}};
    static const std::map<std::string, std::pair<std::string, std::string>> general{
        {"n=2, k=0, l=1", {"q^2", "q^2"}},
        {"n>=3, k<n-2, l=1", {"q^(n-k)", "q^(n-k)-q^(n-k-2)"}},
        {"n>=3, k=n-2, l=1", {"q^2", "unknown"}},
        {"n>=2, k<=n-2, 1<l<=(q+1)/2", {"(q-1)(q-l+1)q^(n-k-2)", "(q-1)(q-l+1)q^(n-k-2)"}},
        {"n>=2, k<=n-2, (q+1)/2<l<=q-1", {"(q-1)(q-l+1)q^(n-k-2)", "unknown"}},
        {"n>=1, k=n-1, 1<=l<=q-1", {"q-l+1", "q-l+1"}}};
    const auto& table = q == 2 ? binary : q == 3 ? ternary : general;
    return table.at(row);
}

/// One row per (n, k, l) class plus one line per instance (n, d). With a
/// positive oracle budget, instances with q^dim within budget are checked
/// by exhaustive enumeration.
inline Outcome run_tables(const Field& F, unsigned n_max, std::uint64_t oracle_budget = 0, unsigned threads = 1,
                          bool timing = false) {
    const auto start = detail::clock::now();
    const unsigned q = F.q();
    check_qn(q, n_max);
    json rec{{"command", "tables"}, {"q", q}, {"field", F.describe()}, {"n_max", n_max}, {"oracle_budget", oracle_budget}};
    json classes = json::array(), instances = json::array();
    std::map<std::string, std::size_t> class_index;
    bool discrepancy = false;

    auto oracle_w2 = [&](Family fam, unsigned n, unsigned d) -> std::optional<std::uint64_t> {
        if (oracle_budget == 0) return std::nullopt;
        try {
            return exhaustive_low_weights(make_code(fam, F, n, d), {.budget = oracle_budget, .threads = threads}).w2;
        } catch (const BudgetExceeded&) {
            return std::nullopt;
        }
    };

    for (unsigned n = q == 2 ? 2 : 1; n <= n_max; ++n) {
        for (unsigned d = 2; d <= n * (q - 1) + 1; ++d) {
            const auto pp = decompose_projective(q, n, static_cast<int>(d));
            const auto row = table_row_class(q, n, static_cast<int>(d));
            const auto pred = w2_prm(q, n, static_cast<int>(d));
            const auto rm_prev = w2_rm(q, n, static_cast<int>(d) - 1);
            const bool exact = pred.status == Status::exact;

            auto [it, fresh] = class_index.emplace(row, classes.size());
            if (fresh) {
                const auto [frm, fprm] = table_row_formulas(q, row);
                classes.push_back(json{{"row", row},
                                       {"W2_RM(n,d-1)", frm},
                                       {"W2_PRM(n,d)", exact ? fprm : "unknown in [W1+1, W2_RM(n,d-1)]"},
                                       {"status", exact ? "exact" : "bounded-unknown"},
                                       {"instances", 0}});
            }
            auto& cls = classes[it->second];
            cls["instances"] = cls["instances"].get<unsigned>() + 1;

            json inst{{"n", n},
                      {"d", d},
                      {"k", pp.k},
                      {"l", pp.l},
                      {"row", row},
                      {"W2_RM(n,d-1)", rm_prev},
                      {"W2_PRM(n,d)", exact ? json(pred.value)
                                            : json("[" + std::to_string(pred.bounds->first) + ", " +
                                                   std::to_string(pred.bounds->second) + "]")},
                      {"status", to_string(pred.status)},
                      {"source", pred.source}};
            const auto orm = oracle_w2(Family::RM, n, d - 1);
            const auto oprm = oracle_w2(Family::PRM, n, d);
            inst["oracle_W2_RM"] = detail::opt(orm);
            inst["oracle_W2_PRM"] = detail::opt(oprm);
            if (orm || oprm) {
                bool ok = !orm || *orm == rm_prev;
                if (oprm)
                    ok = ok && (exact ? *oprm == pred.value : *oprm >= pred.bounds->first && *oprm <= pred.bounds->second);
                inst["confirmed"] = ok;
                discrepancy |= !ok;
            } else {
                inst["confirmed"] = nullptr;
            }
            instances.push_back(std::move(inst));
        }
    }
    rec["classes"] = std::move(classes);
    rec["instances"] = std::move(instances);
    rec["elapsed"] = timing ? json(std::chrono::duration<double>(detail::clock::now() - start).count()) : json(nullptr);
    return {std::move(rec), discrepancy ? exit_discrepancy : exit_ok};
}

/// Kinds: min, second (affine, order d); quadric (projective, parameter k);
/// embed-min, embed-second (projective, degree d).
inline Outcome run_witness(const RunConfig& c, const std::string& kind, unsigned k = 0) {
    const auto start = detail::clock::now();
    const Field& F = c.field;
    const unsigned q = F.q(), n = c.n;
    check_qn(q, n);
    RunConfig rc = c;
    std::optional<Witness> w;
    try {
        if (kind == "min" || kind == "second") {
            rc.family = Family::RM;
            w = kind == "min" ? min_weight_affine(F, n, c.d) : second_weight_affine_candidate(F, n, c.d);
        } else if (kind == "quadric") {
            rc.family = Family::PRM;
            rc.d = static_cast<int>(k * (q - 1) + 2);
            w = quadric_witness(F, n, k);
        } else if (kind == "embed-min" || kind == "embed-second") {
            rc.family = Family::PRM;
            decompose_projective(q, n, c.d);
            const auto a = kind == "embed-min" ? min_weight_affine(F, n, c.d - 1) : second_weight_affine_candidate(F, n, c.d - 1);
            w = prm_embedded_witness(F, n, static_cast<unsigned>(c.d), a);
        } else {
            throw std::invalid_argument("unknown witness kind '" + kind + "'");
        }
    } catch (const WitnessMismatch& e) {
        json rec = detail::header("witness", rc);
        rec["kind"] = kind;
        rec["error"] = e.what();
        rec["status"] = "DISCREPANCY";
        detail::finish(rec, start, c);
        return {std::move(rec), exit_discrepancy};
    }
    json rec = detail::header("witness", rc);
    rec["kind"] = kind;
    if (kind == "quadric") rec["k"] = k;
    const json wj = detail::witness_json(*w);
    for (const auto& [key, v] : wj.items()) rec[key] = v;
    if (rc.family == Family::PRM) {
        const auto cc = chart_support_counts(make_code(Family::PRM, F, n, static_cast<unsigned>(rc.d)), w->poly);
        rec["support_at_infinity"] = cc.at_infinity;
        rec["support_affine"] = cc.affine;
    }
    rec["status"] = "ok";
    detail::finish(rec, start, c);
    return {std::move(rec), exit_ok};
}

/// Randomized upper-bound probe; the budget is the number of samples.
inline Outcome run_explore(const RunConfig& c, const std::vector<Strategy>& strategies, std::uint64_t samples) {
    const auto start = detail::clock::now();
    const Field& F = c.field;
    const unsigned q = F.q(), n = c.n;
    check_qn(q, n);
    const bool projective = c.family == Family::PRM;
    if (projective)
        decompose_projective(q, n, c.d);
    else if (c.d < 1)
        throw std::invalid_argument("d must be at least 1");
    const auto cs = make_code(c.family, F, n, static_cast<unsigned>(c.d));

    json rec = detail::header("explore", c);
    rec["prediction"] = projective ? detail::projective_prediction(q, n, c.d) : detail::affine_prediction(q, n, c.d);
    const auto r = randomized_low_weight_search(cs, {.strategies = strategies, .samples = samples, .seed = c.seed});

    // (lower, upper) for the second weight; an exact prediction is a floor for anything found
    const std::uint64_t lower = r.w1 + 1;
    const std::uint64_t upper = projective ? w2_rm(q, n, c.d - 1) : w2_rm(q, n, c.d);
    std::optional<std::uint64_t> floor;
    if (projective) {
        const auto p = w2_prm(q, n, c.d);
        if (p.status == Status::exact) floor = p.value;
    } else {
        floor = upper;
    }

    json names = json::array();
    for (auto s : strategies) names.push_back(to_string(s));
    rec["W1"] = r.w1;
    rec["W2"] = nullptr;
    rec["method"] = "random-search";
    rec["seed"] = c.seed;
    rec["search"] = json{{"strategies", names},
                         {"samples", r.samples},
                         {"best_weight", detail::opt(r.best)},
                         {"strategy", r.best ? json(r.strategy) : json(nullptr)},
                         {"witness", r.witness ? json(to_string(*r.witness)) : json(nullptr)}};
    rec["bounds"] = json::array({lower, upper});

    int code = exit_ok;
    if (!r.best) {
        code = exit_budget;
        rec["within_bounds"] = nullptr;
    } else {
        const bool embed = std::find(strategies.begin(), strategies.end(), Strategy::embed) != strategies.end();
        bool ok = *r.best >= lower && (!embed || *r.best <= upper);
        if (floor) ok = ok && *r.best >= *floor;
        rec["within_bounds"] = *r.best >= lower && *r.best <= upper;
        if (!ok) code = exit_discrepancy;
    }
    rec["status"] = code == exit_ok ? "ok" : code == exit_budget ? "no_result" : "DISCREPANCY";
    detail::finish(rec, start, c);
    return {std::move(rec), code};
}

/// Support and zero-set geometry of a degree-d form in X0..Xn. When d = 0
/// in the config, the polynomial's own degree is used.
inline Outcome run_geometry(const RunConfig& c, const std::string& poly_text) {
    const auto start = detail::clock::now();
    const Field& F = c.field;
    const unsigned q = F.q(), n = c.n;
    check_qn(q, n);
    const auto f = parse_polynomial(F, poly_text, n + 1);
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has no geometry");
    const int d = c.d > 0 ? c.d : f.degree();
    if (d < 1) throw std::invalid_argument("geometry needs a form of degree >= 1");
    if (!f.is_homogeneous(static_cast<unsigned>(d)))
        throw std::invalid_argument("polynomial is not homogeneous of degree " + std::to_string(d));

    RunConfig rc = c;
    rc.family = Family::PRM;
    rc.d = d;
    json rec = detail::header("geometry", rc);
    rec["poly"] = to_string(f);

    const auto cs = make_code(Family::PRM, F, n, static_cast<unsigned>(d));
    const auto S = encode(cs, f).support();
    const Geometry G(F, n);
    const auto Z = S.complement();
    const auto cc = chart_support_counts(cs, f);
    rec["support_size"] = S.size();
    rec["zero_set_size"] = Z.size();
    rec["support_at_infinity"] = cc.at_infinity;
    rec["support_affine"] = cc.affine;

    const auto H = find_avoiding_hyperplane(G, S);
    rec["avoiding_hyperplane"] = H ? detail::hyperplane_json(*H) : json(nullptr);
    const auto r = largest_avoiding_subspace_dim(G, S);
    rec["largest_avoiding_subspace_dim"] = detail::opt(r);

    int code = exit_ok;
    try {
        const auto U = is_hyperplane_union(G, Z, static_cast<unsigned>(d), c.budget);
        if (U) {
            json planes = json::array();
            for (const auto& h : *U) planes.push_back(detail::hyperplane_json(h));
            rec["zero_set_union"] = json{{"is_union", true}, {"hyperplanes", planes}};
        } else {
            rec["zero_set_union"] = json{{"is_union", false}, {"hyperplanes", nullptr}};
        }
    } catch (const BudgetExceeded& e) {
        rec["zero_set_union"] = json{{"is_union", nullptr}, {"skipped", e.what()}};
    }

    // avoidance predicates, when d lies in the projective range
    if (static_cast<unsigned>(d) >= 2 && static_cast<unsigned>(d) <= n * (q - 1) + 1 && !S.empty()) {
        const auto pp = decompose_projective(q, n, d);
        const bool ii = below_hyperplane_threshold(q, n, d, S.size());
        const bool iii = below_subspace_threshold(q, n, d, S.size());
        const bool ii_ok = !ii || H.has_value();
        const bool iii_ok = !iii || (r && *r >= pp.k);
        rec["avoidance"] = json{{"k", pp.k},
                                {"l", pp.l},
                                {"hyperplane_threshold_applies", ii},
                                {"hyperplane_found", H.has_value()},
                                {"subspace_threshold_applies", iii},
                                {"subspace_found", r && *r >= pp.k},
                                {"ok", ii_ok && iii_ok}};
        if (!(ii_ok && iii_ok)) code = exit_discrepancy;
    }
    rec["status"] = code == exit_ok ? "ok" : "DISCREPANCY";
    detail::finish(rec, start, c);
    return {std::move(rec), code};
}

}  // namespace prmw::harness
