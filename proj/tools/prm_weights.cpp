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

// prm-weights: weight predictions, exhaustive checks and witnesses for
// affine and projective Reed-Muller codes over small fields.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "prmw/harness.hpp"

namespace h = prmw::harness;

namespace {

struct Options {
    unsigned q = 0;
    std::string field;
    unsigned n = 2;
    int d = 2;
    std::string family = "PRM";
    std::uint64_t budget = std::uint64_t{1} << 24;
    unsigned threads = 1;
    std::uint64_t seed = 1;
    double time_limit = 0;
    std::string format = "json";
    std::string out;
    bool timing = false;
};

void add_common(CLI::App* app, Options& o) {
    app->add_option("--q", o.q, "field order (prime power <= 27)");
    app->add_option("--field", o.field, "field spec: q, p^m, or p^m:c_m,...,c_0 for a custom modulus");
    app->add_option("--n", o.n, "dimension of the affine/projective space")->check(CLI::PositiveNumber);
    app->add_option("--d", o.d, "degree (projective) or order (affine)");
    app->add_option("--format", o.format, "output format")->check(CLI::IsMember({"md", "csv", "json"}));
    app->add_option("--out", o.out, "write output to FILE instead of stdout");
    app->add_flag("--timing", o.timing, "record wall-clock time in the output");
}

prmw::Field field_of(const Options& o) {
    if (!o.field.empty()) {
        auto F = prmw::parse_field(o.field);
        if (o.q && o.q != F.q()) throw std::invalid_argument("--q and --field disagree");
        return F;
    }
    if (!o.q) throw std::invalid_argument("one of --q or --field is required");
    return prmw::field_of_order(o.q);
}

h::RunConfig config_of(const Options& o) {
    h::RunConfig c;
    c.field = field_of(o);
    c.n = o.n;
    c.d = o.d;
    if (o.family == "RM")
        c.family = prmw::Family::RM;
    else if (o.family == "PRM")
        c.family = prmw::Family::PRM;
    else
        throw std::invalid_argument("family must be RM or PRM");
    c.budget = o.budget;
    c.threads = o.threads;
    c.seed = o.seed;
    c.time_limit_seconds = o.time_limit;
    c.timing = o.timing;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum and next-to-minimal weights of Reed-Muller and projective Reed-Muller codes"};
    app.require_subcommand(1);
    Options o;
    std::string kind = "embed-second", poly, strategies = "linear,quadric,embed,mincomb";
    unsigned k = 0;
    std::uint64_t samples = 2000;
    bool oracle = false;

    auto* predict = app.add_subcommand("predict", "closed-form W1/W2 with sources");
    add_common(predict, o);
    predict->add_option("--family", o.family, "RM or PRM");

    auto* verify = app.add_subcommand("verify", "prediction vs exhaustive oracle vs witnesses");
    add_common(verify, o);
    verify->add_option("--family", o.family, "RM or PRM");
    verify->add_option("--budget", o.budget, "max q^dim for exhaustive enumeration");
    verify->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--time-limit", o.time_limit, "seconds before the oracle gives up (0: none)");

    auto* tables = app.add_subcommand("tables", "next-to-minimal weight tables for one q");
    add_common(tables, o);
    tables->add_flag("--oracle", oracle, "confirm instances by exhaustive enumeration within --budget");
    tables->add_option("--budget", o.budget, "max q^dim per oracle run");
    tables->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);

    auto* witness = app.add_subcommand("witness", "build and verify an explicit low-weight codeword");
    add_common(witness, o);
    witness->add_option("--kind", kind, "min|second|quadric|embed-min|embed-second")
        ->check(CLI::IsMember({"min", "second", "quadric", "embed-min", "embed-second"}));
    witness->add_option("--k", k, "k for the quadric construction (degree k(q-1)+2)");

    auto* explore = app.add_subcommand("explore", "randomized upper-bound search for W2");
    add_common(explore, o);
    explore->add_option("--family", o.family, "RM or PRM");
    explore->add_option("--budget", samples, "number of sampled codewords");
    explore->add_option("--seed", o.seed, "random seed");
    explore->add_option("--strategies", strategies, "comma-separated: linear,quadric,embed,mincomb");

    auto* geometry = app.add_subcommand("geometry", "support and zero-set geometry of a form");
    add_common(geometry, o);
    geometry->add_option("--poly", poly, "homogeneous polynomial in X0..Xn, e.g. 'X1*X3 + X0*X2'")->required();
    geometry->add_option("--budget", o.budget, "max hyperplane subsets for the union test");

    // --d defaults to the polynomial's degree for geometry
    geometry->preparse_callback([&](std::size_t) { o.d = 0; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : h::exit_usage;
    }

    h::Outcome result;
    try {
        const auto cfg = config_of(o);
        if (*predict)
            result = h::run_predict(cfg);
        else if (*verify)
            result = h::run_verify(cfg);
        else if (*tables)
            result = h::run_tables(cfg.field, o.n, oracle ? o.budget : 0, o.threads, o.timing);
        else if (*witness)
            result = h::run_witness(cfg, kind, k);
        else if (*explore)
            result = h::run_explore(cfg, prmw::parse_strategies(strategies), samples);
        else
            result = h::run_geometry(cfg, poly);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return h::exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return h::exit_usage;
    }

    const auto text = h::render(result.record, h::parse_format(o.format));
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << o.out << "\n";
            return h::exit_usage;
        }
        f << text;
    }
    return result.exit_code;
}
