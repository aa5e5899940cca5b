#include "jobs.hpp"

#include "circle7/bordism.hpp"
#include "circle7/classify.hpp"
#include "circle7/manifold.hpp"
#include "circle7/ricci.hpp"
#include "circle7/sinv.hpp"

#include <cstdlib>

namespace circle7::cli {

namespace {

struct input_error : error {
    using error::error;
};

Int get_int(const Json& params, const std::string& key) {
    if (!params.contains(key)) throw input_error("missing parameter '" + key + "'");
    const Json& v = params.at(key);
    if (!v.is_number_integer()) throw input_error("parameter '" + key + "' must be an integer");
    return Int(static_cast<long>(v.get<long long>()));
}

Int get_int_or(const Json& params, const std::string& key, long dflt) {
    return params.contains(key) ? get_int(params, key) : Int(dflt);
}

std::string get_str_or(const Json& params, const std::string& key, const std::string& dflt) {
    if (!params.contains(key)) return dflt;
    const Json& v = params.at(key);
    if (!v.is_string()) throw input_error("parameter '" + key + "' must be a string");
    return v.get<std::string>();
}

Json frac(const Rat& q) { return q.get_str(); }
Json frac(const QmodZ& q) { return q.rep().get_str(); }

Json pol_json(const Polarization& g) {
    return Json::array({g.A.get_si(), g.B.get_si(), g.C.get_si(), g.D.get_si()});
}

Json bundle_json(const BundleParams& t) {
    Json j;
    j["m"] = t.m.get_str();
    j["n"] = t.n.get_str();
    j["l"] = t.l.get_str();
    j["family"] = family_name(family_of(t));
    j["spin"] = t.spin;
    return j;
}

Json h4_json(const H4Structure& h) {
    Json j;
    j["rank"] = h.rank;
    j["torsion_order"] = h.torsion_order.get_str();
    j["exponent"] = h.exponent.get_str();
    Json factors = Json::array();
    for (const auto& [label, order] : h.cyclic) {
        Json f;
        f["generator"] = label;
        f["order"] = order.get_str();
        factors.push_back(f);
    }
    j["factors"] = factors;
    return j;
}

Json coh_json(const CohPresentation& c) {
    Json j;
    j["statement"] = c.statement;
    j["basis"] = Json::array({c.basis[0], c.basis[1]});
    Json gens = Json::array();
    for (const auto& [label, order] : c.h4_gens) {
        Json g;
        g["generator"] = label;
        g["order"] = order.get_str();
        gens.push_back(g);
    }
    j["h4_generators"] = gens;
    j["w2"] = Json::array({c.w2[0].get_str(), c.w2[1].get_str()});
    Json p1 = Json::array();
    for (const auto& v : c.p1) p1.push_back(v.get_str());
    j["p1"] = p1;
    if (!c.p1_products.empty()) {
        Json p1p = Json::array();
        for (const auto& v : c.p1_products) p1p.push_back(v.get_str());
        j["p1_over_products"] = p1p;
    }
    Json aux;
    aux["d"] = c.aux.d.get_str();
    aux["m1"] = c.aux.m1.get_str();
    aux["n1"] = c.aux.n1.get_str();
    aux["u"] = c.aux.u.get_str();
    aux["v"] = c.aux.v.get_str();
    aux["u_prime"] = c.aux.up.get_str();
    aux["v_prime"] = c.aux.vp.get_str();
    aux["u_prime_refined"] = c.aux.up_refined;
    aux["s"] = c.aux.s.get_str();
    aux["t"] = c.aux.t.get_str();
    aux["p"] = c.aux.p.get_str();
    aux["q"] = c.aux.q.get_str();
    j["bezout"] = aux;
    return j;
}

Polarization pol_from_params(const Json& params) {
    Polarization g{get_int_or(params, "A", 1), get_int_or(params, "B", 0),
                   get_int_or(params, "C", 0), get_int_or(params, "D", 1)};
    if (!g.unimodular()) throw input_error("polarization must have determinant +-1");
    return g;
}

Json cmd_family(const Json& params, std::vector<std::string>& provenance) {
    BundleParams t = validate(get_int(params, "m"), get_int(params, "n"), get_int(params, "l"));
    provenance.push_back("five-family-split");
    return bundle_json(t);
}

Json cmd_cohomology(const Json& params, std::vector<std::string>& provenance) {
    BundleParams t = validate(get_int(params, "m"), get_int(params, "n"), get_int(params, "l"));
    Json j = bundle_json(t);
    j["h4"] = h4_json(h4_structure(t));
    provenance.push_back("h4-closed-form");
    if (family_of(t) == Family::M1) {
        CohPresentation c = char_classes(t);
        j["char_classes"] = coh_json(c);
        provenance.push_back("char-class-presentation-" + std::to_string(c.statement));
    } else {
        // The general characteristic-class statements for the other families.
        switch (family_of(t)) {
            case Family::M2: j["p1"] = "3*m^2*(p*z)^2 + 4*(p*gamma)^2"; break;
            case Family::M3: j["p1"] = "3*(p*beta)^2 + 4*m^2*(p*z)^2"; break;
            case Family::M4: j["p1"] = "3*(p*beta)^2 + 4*(p*gamma)^2"; break;
            default: j["p1"] = "3*(p*beta)^2"; break;
        }
        provenance.push_back("char-class-general-form");
    }
    return j;
}

Json cmd_invariants(const Json& params, std::vector<std::string>& provenance) {
    BundleParams t = validate(get_int(params, "m"), get_int(params, "n"), get_int(params, "l"));
    if (family_of(t) != Family::M1 || !t.spin)
        throw input_error("invariants: needs a spin triple in family M1");
    Polarization g = pol_from_params(params);
    std::string mode = get_str_or(params, "mode", "auto");
    if (mode == "auto") {
        if (gcd(t.n, t.l) == 1) mode = "nl";
        else if (t.m != 0 && gcd(t.m, t.n) == 1) mode = "mn";
        else throw input_error("invariants: neither computation route applies to this triple");
    }
    SInvariant s;
    if (mode == "nl") {
        s = s_invariant_nl(t.m, t.n, t.l, g);
        provenance.push_back("s-closed-form-nl");
    } else if (mode == "mn") {
        s = s_invariant_mn(t.m, t.n, t.l, g);
        provenance.push_back("s-closed-form-mn");
    } else {
        throw input_error("invariants: mode must be nl, mn or auto");
    }
    provenance.push_back("s-table-route");
    Json j = bundle_json(t);
    j["mode"] = mode;
    j["polarization"] = pol_json(g);
    Json sv = Json::array();
    for (const auto& c : s.s) sv.push_back(frac(c));
    j["s"] = sv;
    j["s1"] = frac(s.s[0]);
    j["s10"] = frac(s.s10);
    return j;
}

Json cmd_classify(const Json& params, std::vector<std::string>& provenance, int oracle_bound) {
    BundleParams t1 = validate(get_int(params, "m"), get_int(params, "n"), get_int(params, "l"));
    BundleParams t2 =
        validate(get_int(params, "mbar"), get_int(params, "nbar"), get_int(params, "lbar"));
    Verdict v = decide(t1, t2);
    provenance.push_back(v.reason);
    Json j;
    j["first"] = bundle_json(t1);
    j["second"] = bundle_json(t2);
    j["verdict"] = verdict_name(v.kind);
    j["reason"] = v.reason;
    if (get_int_or(params, "with_witness", 0) != 0) {
        int bound = static_cast<int>(get_int_or(params, "bound", oracle_bound).get_si());
        auto w = oracle_search(t1, t2, bound);
        j["witness_bound"] = bound;
        j["witness"] = w ? pol_json(*w) : Json();
        provenance.push_back("bounded-witness-search");
    }
    return j;
}

Json audit_epi(EpiTable which, const char* name) {
    Json j;
    j["table"] = name;
    j["det"] = epimorphism_matrix(which).det().get_str();
    j["unimodular"] = verify_unimodular(which);
    if (!verify_unimodular(which)) throw table_inconsistent("epimorphism table not unimodular");
    return j;
}

Json audit_lattice() {
    CanonicalDivisors d = canonical_divisors();
    std::string ds;
    for (std::size_t i = 0; i < d.d.size(); ++i)
        ds += (i ? "," : "") + std::to_string(d.d[i]);
    Json j;
    j["divisors"] = ds;
    j["s10_column_zero"] = true;  // enforced inside canonical_divisors
    j["se_matches_charnums"] = se_matrix() == se_matrix_from_charnums();
    if (!(se_matrix() == se_matrix_from_charnums()))
        throw table_inconsistent("S(e) does not match the characteristic-number table");
    return j;
}

Json cmd_bordism_audit(const Json& params, std::vector<std::string>& provenance) {
    std::string which = get_str_or(params, "which", "all");
    Json j;
    if (which == "k2spin") {
        j = audit_epi(EpiTable::K2Spin, "k2spin");
        provenance.push_back("epimorphism-unimodularity");
    } else if (which == "k1spin") {
        j = audit_epi(EpiTable::K1Spin, "k1spin");
        provenance.push_back("epimorphism-unimodularity");
    } else if (which == "k1nonspin") {
        j = audit_epi(EpiTable::K1Nonspin, "k1nonspin");
        provenance.push_back("epimorphism-unimodularity");
    } else if (which == "lattice") {
        j = audit_lattice();
        provenance.push_back("se-canonical-form");
    } else if (which == "all") {
        run_full_audit();
        j["k2spin"] = audit_epi(EpiTable::K2Spin, "k2spin");
        j["k1spin"] = audit_epi(EpiTable::K1Spin, "k1spin");
        j["k1nonspin"] = audit_epi(EpiTable::K1Nonspin, "k1nonspin");
        j["lattice"] = audit_lattice();
        Json quotients = Json::array();
        for (const auto& row : charnum_table()) {
            auto rep = divisibility_audit(row);
            Json q;
            q["generator"] = row.label;
            q["quotients"] = Json::array(
                {rep.qxx.get_str(), rep.qxy.get_str(), rep.qyy.get_str()});
            quotients.push_back(q);
        }
        j["divisibility"] = quotients;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(table_checksum()));
        j["table_checksum"] = buf;
        provenance.push_back("full-table-audit");
    } else {
        throw input_error("bordism-audit: which must be k2spin|k1spin|k1nonspin|lattice|all");
    }
    return j;
}

Json cmd_ricci_family(const Json& params, std::vector<std::string>& provenance) {
    MetricFamilyReport rep =
        ricci_family(get_int(params, "n"), get_int(params, "l"), get_int(params, "m0"),
                     static_cast<int>(get_int(params, "count").get_si()),
                     get_int_or(params, "allow_sign_mixed", 0) != 0);
    provenance.push_back("metric-s-value");
    provenance.push_back("m1-spin-case-3");
    Json j;
    j["n"] = rep.n.get_str();
    j["l"] = rep.l.get_str();
    j["m0"] = rep.m0.get_str();
    j["step"] = rep.step.get_str();
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json je;
        je["m"] = e.m.get_str();
        je["s"] = frac(e.s_value);
        je["verdict"] = verdict_name(e.verdict);
        entries.push_back(je);
    }
    j["entries"] = entries;
    return j;
}

}  // namespace

int default_oracle_bound() {
    if (const char* env = std::getenv("CIRCLE7_ORACLE_BOUND")) {
        int b = std::atoi(env);
        if (b >= 1) return b;
    }
    return 8;
}

JobOutcome run_job(const Json& request, int oracle_bound) {
    Json result;
    result["request"] = request;
    std::vector<std::string> provenance;
    try {
        if (!request.is_object() || !request.contains("command") ||
            !request.at("command").is_string())
            throw input_error("request must be an object with a 'command' string");
        std::string command = request.at("command").get<std::string>();
        Json params = request.contains("params") ? request.at("params") : Json::object();
        if (!params.is_object()) throw input_error("'params' must be an object");

        Json payload;
        if (command == "family") payload = cmd_family(params, provenance);
        else if (command == "cohomology") payload = cmd_cohomology(params, provenance);
        else if (command == "invariants") payload = cmd_invariants(params, provenance);
        else if (command == "classify") payload = cmd_classify(params, provenance, oracle_bound);
        else if (command == "bordism-audit") payload = cmd_bordism_audit(params, provenance);
        else if (command == "ricci-family") payload = cmd_ricci_family(params, provenance);
        else throw input_error("unknown command '" + command + "'");

        result["status"] = "ok";
        result["payload"] = payload;
        result["provenance"] = provenance;
        return {result, kExitOk};
    } catch (const table_inconsistent& e) {
        result["status"] = "error";
        result["error"] = std::string("audit failure: ") + e.what();
        return {result, kExitInternal};
    } catch (const lemma_violation& e) {
        result["status"] = "error";
        result["error"] = std::string("audit failure: ") + e.what();
        return {result, kExitInternal};
    } catch (const internal_error& e) {
        result["status"] = "error";
        result["error"] = std::string("internal error: ") + e.what();
        return {result, kExitInternal};
    } catch (const error& e) {
        result["status"] = "error";
        result["error"] = e.what();
        return {result, kExitInput};
    } catch (const Json::exception& e) {
        result["status"] = "error";
        result["error"] = std::string("bad request: ") + e.what();
        return {result, kExitInput};
    }
}

}  // namespace circle7::cli
