/**
 * @file circle7.cpp
 * @brief Command-line front end. Every subcommand prints one JSON result
 *        line; `batch` streams one result line per request line.
 */

#include "jobs.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using circle7::cli::Json;

Json make_request(const std::string& command, Json params) {
    Json req;
    req["command"] = command;
    req["params"] = std::move(params);
    return req;
}

int emit(const circle7::cli::JobOutcome& out) {
    std::cout << out.result.dump() << "\n";
    return out.exit_code;
}

int run_batch(const std::string& path, int bound) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) {
            std::cerr << "batch: cannot open " << path << "\n";
            return circle7::cli::kExitInput;
        }
        in = &file;
    }
    int worst = circle7::cli::kExitOk;
    std::string line;
    while (std::getline(*in, line)) {
        if (line.empty()) continue;
        Json request;
        circle7::cli::JobOutcome out;
        try {
            request = Json::parse(line);
            out = circle7::cli::run_job(request, bound);
        } catch (const Json::exception& e) {
            out.result["request"] = line;
            out.result["status"] = "error";
            out.result["error"] = std::string("bad request: ") + e.what();
            out.exit_code = circle7::cli::kExitInput;
        }
        std::cout << out.result.dump() << "\n";
        if (out.exit_code == circle7::cli::kExitInternal) worst = out.exit_code;
        else if (out.exit_code != 0 && worst == 0) worst = out.exit_code;
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact diffeomorphism invariants of the circle bundles M_{m,n,l} over "
                 "(CP^1 x CP^2) # CP^3"};
    app.require_subcommand(1);
    int bound = circle7::cli::default_oracle_bound();

    long m = 0, n = 0, l = 0, mbar = 0, nbar = 0, lbar = 0, m0 = 0;
    int count = 0;
    std::vector<long> pol;
    std::string mode = "auto", which = "all", batch_path;
    bool with_witness = false, allow_sign_mixed = false;

    auto add_triple = [&](CLI::App* cmd) {
        cmd->add_option("m", m, "Euler class coefficient of alpha")->required();
        cmd->add_option("n", n, "Euler class coefficient of beta")->required();
        cmd->add_option("l", l, "Euler class coefficient of gamma")->required();
    };

    CLI::App* family = app.add_subcommand("family", "Validate a triple and name its family");
    add_triple(family);

    CLI::App* cohomology =
        app.add_subcommand("cohomology", "Fourth cohomology and characteristic classes");
    add_triple(cohomology);

    CLI::App* invariants = app.add_subcommand("invariants", "s-invariant tuple of a spin M1 triple");
    add_triple(invariants);
    invariants->add_option("--pol", pol, "polarization entries A B C D")->expected(4);
    invariants->add_option("--mode", mode, "computation route: nl, mn or auto");

    CLI::App* classify = app.add_subcommand("classify", "Decide diffeomorphism of two triples");
    add_triple(classify);
    classify->add_option("M", mbar, "second triple, coefficient of alpha")->required();
    classify->add_option("N", nbar, "second triple, coefficient of beta")->required();
    classify->add_option("L", lbar, "second triple, coefficient of gamma")->required();
    classify->add_flag("--with-witness", with_witness, "attach a bounded witness search");
    classify->add_option("--oracle-bound", bound, "entry bound for the witness search");

    CLI::App* audit = app.add_subcommand("bordism-audit", "Recompute the bordism table claims");
    audit->add_option("--which", which, "k2spin|k1spin|k1nonspin|lattice|all");

    CLI::App* ricci = app.add_subcommand("ricci-family", "Diffeomorphic family with distinct s-values");
    ricci->add_option("n", n, "odd n >= 3")->required();
    ricci->add_option("l", l, "even l > 0")->required();
    ricci->add_option("m0", m0, "even starting m")->required();
    ricci->add_option("count", count, "number of entries")->required();
    ricci->add_flag("--allow-sign-mixed", allow_sign_mixed, "skip the negativity lower bound");

    CLI::App* batch = app.add_subcommand("batch", "Run JSON requests, one per line");
    batch->add_option("file", batch_path, "request file, or - for stdin")->required();

    CLI11_PARSE(app, argc, argv);

    Json params;
    if (family->parsed() || cohomology->parsed() || invariants->parsed() || classify->parsed()) {
        params["m"] = m;
        params["n"] = n;
        params["l"] = l;
    }
    if (invariants->parsed()) {
        if (!pol.empty()) {
            params["A"] = pol[0];
            params["B"] = pol[1];
            params["C"] = pol[2];
            params["D"] = pol[3];
        }
        params["mode"] = mode;
        return emit(circle7::cli::run_job(make_request("invariants", params), bound));
    }
    if (family->parsed()) return emit(circle7::cli::run_job(make_request("family", params), bound));
    if (cohomology->parsed())
        return emit(circle7::cli::run_job(make_request("cohomology", params), bound));
    if (classify->parsed()) {
        params["mbar"] = mbar;
        params["nbar"] = nbar;
        params["lbar"] = lbar;
        if (with_witness) params["with_witness"] = 1;
        params["bound"] = bound;
        return emit(circle7::cli::run_job(make_request("classify", params), bound));
    }
    if (audit->parsed()) {
        params["which"] = which;
        return emit(circle7::cli::run_job(make_request("bordism-audit", params), bound));
    }
    if (ricci->parsed()) {
        params["n"] = n;
        params["l"] = l;
        params["m0"] = m0;
        params["count"] = count;
        if (allow_sign_mixed) params["allow_sign_mixed"] = 1;
        return emit(circle7::cli::run_job(make_request("ricci-family", params), bound));
    }
    return run_batch(batch_path, bound);
}
