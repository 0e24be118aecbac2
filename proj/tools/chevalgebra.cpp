// chevalgebra: builds the commutative Frobenius algebras attached to the
// simply laced root systems, exports their data, and verifies their
// decomposition and fusion structure in exact arithmetic.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "chevalgebra/e8axial.hpp"
#include "chevalgebra/jsonio.hpp"
#include "chevalgebra/verify.hpp"

using namespace chevalgebra;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string type = "A";
    int rank = 3;
    std::string out;
    uint64_t seed = 20240229;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_seed = false) {
    cmd->add_option("--type", opts.type, "root system type: A, D or E")->required();
    cmd->add_option("--rank", opts.rank, "rank (A: n >= 3, D: n >= 4, E: 6..8)")->required();
    cmd->add_option("--out", opts.out, "write machine-readable JSON here");
    if (with_seed) cmd->add_option("--seed", opts.seed, "seed for sampled sweeps");
}

void emit(const CommonOpts& opts, const Json& payload) {
    if (!opts.out.empty()) write_json(opts.out, payload);
}

Json manifest_for(const std::string& cmd, const CommonOpts& opts, Json extra = Json::object()) {
    Json params;
    params["type"] = opts.type;
    params["rank"] = opts.rank;
    params["seed"] = opts.seed;
    params["threads"] = thread_cap();
    for (auto& [k, v] : extra.items()) params[k] = v;
    return make_manifest(cmd, params);
}

int cmd_roots(const CommonOpts& opts) {
    auto rs = RootSystem::build(opts.type[0], opts.rank);
    Json j;
    j["manifest"] = manifest_for("roots", opts);
    j["type"] = std::string(1, type_char(rs.type));
    j["rank"] = rs.rank;
    j["ambient_dimension"] = rs.ambient;
    j["denominator"] = 2;  // stored coordinates are doubled
    j["count"] = rs.size();
    j["num_positive"] = rs.num_positive;
    Json roots = Json::array();
    for (const auto& r : rs.roots) roots.push_back(json_latvec(r));
    j["roots"] = roots;
    Json simples = Json::array();
    for (int s : rs.simple_indices) simples.push_back(s);
    j["simple_root_indices"] = simples;
    j["highest_root_index"] = rs.highest;
    Json cartan = Json::array();
    for (int i = 0; i < rs.rank; ++i) {
        Json row = Json::array();
        for (int k = 0; k < rs.rank; ++k) row.push_back(int(rs.cartan(i, k).get_num().get_si()));
        cartan.push_back(row);
    }
    j["cartan_pairing"] = cartan;
    emit(opts, j);
    std::cout << "type " << opts.type << opts.rank << ": " << rs.size() << " roots ("
              << rs.num_positive << " positive)\n";
    return kExitOk;
}

int cmd_signs(const CommonOpts& opts) {
    auto rs = RootSystem::build(opts.type[0], opts.rank);
    auto ws = WeightSets::build(rs);
    auto sc = StructConstants::build(rs, ws);
    Json pairs = Json::array();
    for (int a = 0; a < rs.size(); ++a)
        for (int b = 0; b < rs.size(); ++b) {
            if (rs.sum_index[a][b] < 0) continue;
            Json e;
            e["alpha"] = json_latvec(rs.roots[a]);
            e["beta"] = json_latvec(rs.roots[b]);
            e["c"] = sc.c(a, b);
            pairs.push_back(e);
        }
    Json j;
    j["manifest"] = manifest_for("signs", opts);
    j["denominator"] = 2;
    j["pairs"] = pairs;
    emit(opts, j);
    std::cout << "sign table for " << opts.type << opts.rank << ": " << pairs.size()
              << " structure constants\n";
    return kExitOk;
}

int cmd_character(const CommonOpts& opts, const std::string& which, const std::string& method) {
    auto rs = RootSystem::build(opts.type[0], opts.rank);
    auto ws = WeightSets::build(rs);
    FormalCharacter ch;
    if (which == "S2") ch = char_S2(rs, ws);
    else if (which == "A") ch = char_A(rs, ws);
    else if (which == "V") ch = method == "freudenthal" ? freudenthal_char(rs) : char_V_closed(rs, ws);
    else throw CLI::ValidationError("--which must be one of V, S2, A");
    Json j;
    j["manifest"] = manifest_for("character", opts, Json{{"which", which}, {"method", method}});
    Json terms = Json::array();
    for (const auto& [w, m] : ch.terms) {
        Json t;
        t["weight"] = json_latvec(w);
        t["multiplicity"] = json_int(m);
        terms.push_back(t);
    }
    j["denominator"] = 2;
    j["terms"] = terms;
    j["total_dimension"] = json_int(ch.total_dimension());
    emit(opts, j);
    std::cout << "character " << which << " for " << opts.type << opts.rank << ": "
              << ch.terms.size() << " weights, total dimension " << ch.total_dimension() << "\n";
    return kExitOk;
}

int cmd_mult_table(const CommonOpts& opts, const std::string& format) {
    auto alg = Verify::algebra(opts.type[0], opts.rank);
    if (format == "csv") {
        std::ostringstream os;
        os << "i,j,k,num,den\n";
        for (int i = 0; i < alg->dim; ++i)
            for (int j = i; j < alg->dim; ++j)
                for (const auto& [k, c] : alg->mul_basis(i, j).terms)
                    os << i << "," << j << "," << k << "," << c.get_num() << ","
                       << c.get_den() << "\n";
        if (!opts.out.empty()) {
            std::ofstream f(opts.out);
            f << os.str();
        } else {
            std::cout << os.str();
        }
        return kExitOk;
    }
    Json rows = Json::array();
    for (int i = 0; i < alg->dim; ++i)
        for (int j = i; j < alg->dim; ++j) {
            const AlgElem& p = alg->mul_basis(i, j);
            if (p.is_zero()) continue;
            Json row;
            row["i"] = i;
            row["j"] = j;
            row["coeffs"] = json_elem(p);
            rows.push_back(row);
        }
    Json j;
    j["manifest"] = manifest_for("mult-table", opts, Json{{"format", format}});
    j["dimension"] = alg->dim;
    j["rows"] = rows;
    emit(opts, j);
    std::cout << "multiplication table for " << opts.type << opts.rank << ": dimension "
              << alg->dim << ", " << rows.size() << " nonzero products\n";
    return kExitOk;
}

int cmd_gram(const CommonOpts& opts) {
    auto alg = Verify::algebra(opts.type[0], opts.rank);
    Json triples = Json::array();
    for (int i = 0; i < alg->dim; ++i)
        for (int j = i; j < alg->dim; ++j) {
            if (!alg->weights_cancel(i, j)) continue;
            const Rat& v = alg->form_basis(i, j);
            if (is_zero(v)) continue;
            Json t;
            t["i"] = i;
            t["j"] = j;
            t["num"] = json_int(v.get_num());
            t["den"] = json_int(v.get_den());
            triples.push_back(t);
        }
    Json j;
    j["manifest"] = manifest_for("gram", opts);
    j["dimension"] = alg->dim;
    j["entries"] = triples;
    emit(opts, j);
    std::cout << "Gram matrix for " << opts.type << opts.rank << ": " << triples.size()
              << " nonzero entries on dimension " << alg->dim << "\n";
    return kExitOk;
}

int cmd_zerosub(const CommonOpts& opts, const std::string& dump_pi) {
    auto alg = Verify::algebra(opts.type[0], opts.rank);
    const auto& zs = alg->zs;
    auto md = zs.mu_system_solve();
    Json j;
    j["manifest"] = manifest_for("zerosub", opts);
    j["pair_orbits"] = md.orbits;
    Json mus = Json::array();
    for (int i = 0; i < md.orbits; ++i) {
        Json m;
        m["b"] = json_rat(md.b[i]);
        m["mu"] = json_rat(md.mu[i]);
        mus.push_back(m);
    }
    j["mu"] = mus;
    Json pis = Json::array();
    for (int p = 0; p < zs.npos; ++p) {
        const S0Elem& e = zs.pi_of_jroot(p);
        Json entry;
        entry["root"] = json_latvec(alg->rs.roots[p]);
        entry["j_part"] = json_matrix(e.j);
        Json zp = Json::array();
        for (int q = 0; q < zs.npos; ++q) zp.push_back(json_rat(e.z[q]));
        entry["z_part"] = zp;
        pis.push_back(entry);
    }
    j["pi_of_j"] = pis;
    if (!dump_pi.empty()) write_json(dump_pi, j);
    emit(opts, j);
    std::cout << "zero-weight layer for " << opts.type << opts.rank << ": " << md.orbits
              << " pair orbits, pi computed for " << zs.npos << " generators\n";
    return kExitOk;
}

int cmd_verify_fusion(const CommonOpts& opts, const std::string& which, const std::string& level,
                      int root, bool sampled, int pairs) {
    auto alg = Verify::algebra(opts.type[0], opts.rank);
    DecompEngine de(alg);
    DecompTables tables(de);
    if (root < 0) root = alg->rs.highest;
    if (root >= alg->rs.num_positive)
        throw CLI::ValidationError("--root must index a positive root (0.." +
                                   std::to_string(alg->rs.num_positive - 1) + ")");
    Decomposition dec;
    FusionLaw law;
    if (level == "zero") {
        dec = which == "global" ? tables.zero_global() : tables.zero_local(root);
        law = which == "global" ? zero_global_law(alg->rs.type, alg->rs.rank)
                                : zero_local_law(alg->rs.type, alg->rs.rank);
    } else {
        dec = which == "global" ? tables.full_global() : tables.full_local(root);
        law = which == "global" ? full_global_law(alg->rs.type, alg->rs.rank)
                                : full_local_law(alg->rs.type, alg->rs.rank);
    }
    FusionOptions fo;
    fo.sampled = sampled;
    fo.pairs_per_cell = pairs;
    fo.seed = opts.seed;
    auto rep = de.verify_fusion(dec, law, fo);
    Json j;
    j["manifest"] = manifest_for("verify-fusion", opts,
                                 Json{{"which", which},
                                      {"level", level},
                                      {"root", root},
                                      {"mode", rep.mode},
                                      {"pairs_per_cell", pairs}});
    j["dimensions"] = dec.dimensions();
    j["report"] = json_fusion_report(rep);
    emit(opts, j);
    std::cout << (rep.ok ? "fusion law holds" : "FUSION LAW VIOLATED") << " (" << rep.mode
              << " mode, " << rep.total_pairs << " products)\n";
    return rep.ok ? kExitOk : kExitVerificationFailed;
}

int cmd_e8(const std::string& s_str, const std::string& branch, const std::string& p_str,
           const std::string& check, const CommonOpts& opts) {
    // validate the request before paying for the E8 context
    if (check != "nilpotent" && check != "probes" && check != "spectrum" &&
        check != "idempotent" && check != "fusion")
        throw CLI::ValidationError("--check must be spectrum, idempotent, fusion, nilpotent or probes");
    if (check == "spectrum" || check == "idempotent" || check == "fusion") {
        if (s_str.empty()) throw CLI::ValidationError("--s is required for this check");
        auto s = rat_from_string(s_str);
        if (!s || is_zero(*s)) throw CLI::ValidationError("--s must be a nonzero rational");
    }
    auto alg = Verify::algebra('E', 8);
    static E8Axial ax = E8Axial::build(alg);
    Json j;
    j["manifest"] = manifest_for(
        "e8", opts, Json{{"s", s_str}, {"branch", branch}, {"p", p_str}, {"check", check}});
    bool ok = true;

    if (check == "nilpotent") {
        Rat p = p_str.empty() ? rat(-614, 74431) : *rat_from_string(p_str);
        auto ctx = ax.context_from_p(p);
        ok = ctx.has_value() && ctx->degenerate;
        if (ok) {
            AlgElem x = ax.nilpotent_element();
            ok = ax.mul_p(*ctx, x, x).is_zero();
            j["nilpotent_squares_to_zero"] = ok;
        } else {
            j["error"] = "parameter is not the degenerate value";
        }
    } else if (check == "probes") {
        auto probe = ax.c1_zero_probe();
        Json pj;
        pj["p_derived"] = json_rat(probe.p_derived);
        pj["p_closed_form_literal"] = json_rat(probe.p_closed_form);
        pj["derived_has_idempotent"] = probe.derived_has_idempotent;
        pj["closed_form_has_idempotent"] = probe.closed_form_has_idempotent;
        pj["consistent_with_algebra"] =
            probe.derived_has_idempotent && !probe.closed_form_has_idempotent ? "derived"
                                                                              : "ambiguous";
        j["c1_zero_probe"] = pj;
        auto s = rat_from_string(s_str.empty() ? "2/9" : s_str);
        auto ctx = ax.context_from_s(*s, branch != "minus");
        Json bridges = Json::array();
        for (const auto& sc : ax.ad_scalar_checks(ctx)) {
            Json b;
            b["part"] = sc.part;
            b["star_scalar"] = json_rat(sc.got_star);
            b["bridge_eval"] = json_rat(sc.bridge_eval);
            b["tabulated_eval"] = json_rat(sc.expected_eval);
            b["agrees"] = sc.ok;
            ok = ok && sc.ok;
            bridges.push_back(b);
        }
        j["evaluation_bridge"] = bridges;
    } else {
        if (s_str.empty()) throw CLI::ValidationError("--s is required for this check");
        auto s = rat_from_string(s_str);
        if (!s || is_zero(*s)) throw CLI::ValidationError("--s must be a nonzero rational");
        auto ctx = ax.context_from_s(*s, branch != "minus");
        j["c1"] = json_rat(ctx.c1);
        j["c2"] = json_rat(ctx.c2);
        j["p"] = json_rat(ctx.p);
        j["form_degenerate"] = ctx.form_degenerate;
        if (check == "idempotent") {
            AlgElem e = ax.axis(ctx);
            ok = ax.mul_p(ctx, e, e) == e;
            j["idempotent"] = ok;
        } else if (check == "spectrum") {
            auto rep = ax.spectrum_check(ctx);
            ok = rep.ok;
            j["idempotent"] = rep.idempotent;
            j["complement_idempotent"] = rep.complement_idem;
            j["orthogonal"] = rep.orthogonal;
            j["branch_pairing"] = rep.branch_pairing;
            Json scalars = Json::array();
            for (const auto& sc : rep.scalars) {
                Json e;
                e["part"] = sc.part;
                e["ad_a_scalar"] = json_rat(sc.got_star);
                e["axis_eigenvalue"] = json_rat(sc.got_eval);
                e["ok"] = sc.ok;
                scalars.push_back(e);
            }
            j["scalars"] = scalars;
        } else if (check == "fusion") {
            // spot checks of the axial law through the zero-weight blocks
            DecompEngine de(alg);
            DecompTables tables(de);
            Decomposition zl = tables.zero_local(alg->rs.highest);
            auto cs = de.component_solver(zl);
            AlgElem e = ax.axis(ctx);
            AlgElem w3 = ax.witnesses[0].v, w5 = ax.witnesses[1].v;
            // 3 * 3 and 3 * 5 at zero weight: the J_5 (resp. J_1) component
            // and the unit line pairings must vanish per the law
            AlgElem p33 = ax.mul_p(ctx, w3, w3);
            AlgElem p35 = ax.mul_p(ctx, w3, w5);
            bool ok33 = de.component(cs, zl, p33, zl.part_index("5")).is_zero();
            bool ok35 = de.component(cs, zl, p35, zl.part_index("1")).is_zero() &&
                        is_zero(ax.form_p(ctx, p35, ax.one));
            j["cell_3_3_no_part5"] = ok33;
            j["cell_3_5_only_part5"] = ok35;
            bool okee = ax.mul_p(ctx, e, ax.one - e).is_zero();
            j["cell_e_ecomp_empty"] = okee;
            ok = ok33 && ok35 && okee;
        } else {
            throw CLI::ValidationError("--check must be spectrum, idempotent, fusion, "
                                       "nilpotent or probes");
        }
    }
    j["ok"] = ok;
    emit(opts, j);
    std::cout << "e8 " << check << ": " << (ok ? "pass" : "FAIL") << "\n";
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_all(const CommonOpts& opts) {
    char t = opts.type[0];
    int n = opts.rank;
    std::vector<CheckResult> results;
    results.push_back(Verify::struct_constants(t, n));
    results.push_back(Verify::zerosub_checks(t, n));
    int dim = Verify::algebra(t, n)->dim;
    bool small = dim <= 120;
    if (small) results.push_back(Verify::frobenius_full(t, n));
    else results.push_back(Verify::frobenius_sampled(t, n, 1000, opts.seed));
    results.push_back(Verify::equivariance(t, n, small, 300, opts.seed));
    if (dim <= 700) results.push_back(Verify::characters_match(t, n));
    if (dim <= 700) results.push_back(Verify::unit_check(t, n));
    bool all_ok = true;
    Json checks = Json::array();
    for (const auto& r : results) {
        all_ok = all_ok && r.ok;
        std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << " ("
                  << r.seconds << "s)\n";
        Json c;
        c["name"] = r.name;
        c["ok"] = r.ok;
        c["detail"] = r.detail;
        checks.push_back(c);
    }
    Json j;
    j["manifest"] = manifest_for("verify-all", opts);
    j["checks"] = checks;
    j["ok"] = all_ok;
    emit(opts, j);
    return all_ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic Frobenius algebras for the simply laced Chevalley groups"};
    app.require_subcommand(1);

    CommonOpts roots_o, signs_o, char_o, mult_o, gram_o, zsub_o, fuse_o, e8_o, all_o;

    std::string config_path;
    app.add_option("--config", config_path,
                   "JSON file with {\"command\": ..., \"args\": {flag: value}}");

    auto* roots_cmd = app.add_subcommand("roots", "build and export a root system");
    add_common(roots_cmd, roots_o);

    auto* signs_cmd = app.add_subcommand("signs", "structure constant sign table");
    add_common(signs_cmd, signs_o);

    auto* char_cmd = app.add_subcommand("character", "formal characters of the key modules");
    add_common(char_cmd, char_o);
    std::string which = "V", method = "closed";
    char_cmd->add_option("--which", which, "V, S2 or A")->required();
    char_cmd->add_option("--method", method, "closed or freudenthal (V only)");

    auto* mult_cmd = app.add_subcommand("mult-table", "full multiplication table");
    add_common(mult_cmd, mult_o);
    std::string format = "json";
    mult_cmd->add_option("--format", format, "json or csv");

    auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of the Frobenius form");
    add_common(gram_cmd, gram_o);

    auto* zsub_cmd = app.add_subcommand("zerosub", "zero-weight layer: projection and mu data");
    add_common(zsub_cmd, zsub_o);
    std::string dump_pi;
    zsub_cmd->add_option("--dump-pi", dump_pi, "write the projection data to this file");

    auto* fuse_cmd = app.add_subcommand("verify-fusion", "verify a fusion law exactly");
    add_common(fuse_cmd, fuse_o, true);
    std::string fwhich = "global", flevel = "zero";
    int froot = -1, fpairs = 50;
    bool fsampled = false;
    fuse_cmd->add_option("--which", fwhich, "global or local")->required();
    fuse_cmd->add_option("--level", flevel, "zero (weight-zero algebra) or full");
    fuse_cmd->add_option("--root", froot, "positive root index for local decompositions");
    fuse_cmd->add_flag("--sampled", fsampled, "sample vector pairs instead of sweeping");
    fuse_cmd->add_option("--pairs", fpairs, "sampled pairs per part pair");

    auto* e8_cmd = app.add_subcommand("e8", "one-parameter family checks");
    std::string s_str, branch = "plus", p_str, check = "spectrum";
    e8_cmd->add_option("--s", s_str, "rational parameter, nonzero (e.g. 2/9)");
    e8_cmd->add_option("--branch", branch, "plus or minus");
    e8_cmd->add_option("--p", p_str, "direct parameter entry (degenerate checks)");
    e8_cmd->add_option("--check", check, "spectrum, idempotent, fusion, nilpotent or probes");
    e8_cmd->add_option("--out", e8_o.out, "write machine-readable JSON here");
    e8_cmd->add_option("--seed", e8_o.seed, "seed echoed into the manifest");
    e8_o.type = "E";
    e8_o.rank = 8;

    auto* all_cmd = app.add_subcommand("verify-all", "run the invariant suite for one type");
    add_common(all_cmd, all_o, true);

    try {
        // a JSON config mirrors the flags: synthesize the argv it describes
        std::vector<std::string> args;
        for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
        if (args.size() == 2 && args[0] == "--config") {
            std::ifstream in(args[1]);
            if (!in) {
                std::cerr << "usage error: cannot open config file " << args[1] << "\n";
                return kExitUsage;
            }
            Json cfg = Json::parse(in);
            args.clear();
            args.push_back(cfg.at("command").get<std::string>());
            if (cfg.contains("args"))
                for (auto& [k, v] : cfg["args"].items()) {
                    args.push_back("--" + k);
                    if (!v.is_boolean())
                        args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
                }
        }
        std::vector<const char*> cargv = {argv[0]};
        for (const auto& a : args) cargv.push_back(a.c_str());
        app.parse(int(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const Json::exception& e) {
        std::cerr << "usage error: bad config file: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (roots_cmd->parsed()) return cmd_roots(roots_o);
        if (signs_cmd->parsed()) return cmd_signs(signs_o);
        if (char_cmd->parsed()) return cmd_character(char_o, which, method);
        if (mult_cmd->parsed()) return cmd_mult_table(mult_o, format);
        if (gram_cmd->parsed()) return cmd_gram(gram_o);
        if (zsub_cmd->parsed()) return cmd_zerosub(zsub_o, dump_pi);
        if (fuse_cmd->parsed())
            return cmd_verify_fusion(fuse_o, fwhich, flevel, froot, fsampled, fpairs);
        if (e8_cmd->parsed()) return cmd_e8(s_str, branch, p_str, check, e8_o);
        if (all_cmd->parsed()) return cmd_verify_all(all_o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}
