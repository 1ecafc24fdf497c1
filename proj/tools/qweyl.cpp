// qweyl: batch front-end for the A(alpha,beta,gamma) toolkit.
// JSON on stdout, human-readable summary on stderr.
// Exit codes: 0 success / all checks pass, 1 failed check or domain violation,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qweyl/io.hpp"

using namespace qweyl;

namespace {

struct CommonOpts {
    long l = 0;
    std::string alpha = "0", beta = "0", gamma = "0";
};

void add_params_flags(CLI::App* cmd, CommonOpts& o, bool need_l = true) {
    auto* lopt = cmd->add_option("--l", o.l, "order of q^2 (l >= 2)");
    if (need_l) lopt->required();
    cmd->add_option("--alpha", o.alpha, "scalar literal, polynomial in t = q^2");
    cmd->add_option("--beta", o.beta, "scalar literal");
    cmd->add_option("--gamma", o.gamma, "scalar literal");
}

Params make_params(const CommonOpts& o) {
    FieldPtr ctx = FieldCtx::make(o.l);
    return Params::make(ctx, parse_scalar(ctx, o.alpha), parse_scalar(ctx, o.beta),
                        parse_scalar(ctx, o.gamma));
}

json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    return json::parse(in);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"exact computations in the 3-cyclic quantum Weyl algebra"};
    app.require_subcommand(1);
    long seed = 0;
    app.add_option("--seed", seed, "seed for randomized checks (output is deterministic per seed)");

    // field-info
    auto* c_field = app.add_subcommand("field-info", "print data of the ground field Q(zeta_l)");
    long fi_l = 0;
    c_field->add_option("--l", fi_l, "order of q^2")->required();

    // verify-identities
    auto* c_verify = app.add_subcommand("verify-identities", "run the algebra identity suite");
    CommonOpts vo;
    add_params_flags(c_verify, vo);
    int a_max = 0;
    c_verify->add_option("--a-max", a_max, "max exponent per identity (default 2l)");

    // pideg
    auto* c_pideg = app.add_subcommand("pideg", "PI degree report");
    long pd_l = 0;
    c_pideg->add_option("--l", pd_l, "order of q^2")->required();

    // semigroup-check
    auto* c_semi = app.add_subcommand("semigroup-check", "kernel semigroup generation check");
    long sg_l = 0, sg_bound = 0;
    c_semi->add_option("--l", sg_l, "order of q^2")->required();
    c_semi->add_option("--bound", sg_bound, "box bound (default 3l)");

    // build-module
    auto* c_build = app.add_subcommand("build-module", "build a family module as matrices");
    CommonOpts bo;
    add_params_flags(c_build, bo);
    std::string b_family, b_params = "{}";
    c_build->add_option("--family", b_family, "family tag M0..M7")->required();
    c_build->add_option("--params", b_params, "family parameters as JSON of scalar literals");

    // check-module
    auto* c_check = app.add_subcommand("check-module", "verify relations, simplicity, Schur scalars");
    std::string ck_in;
    c_check->add_option("--in", ck_in, "Rep JSON file (default stdin)");

    // classify
    auto* c_classify = app.add_subcommand("classify", "classify a simple module");
    std::string cl_in;
    std::vector<std::string> cl_hints;
    c_classify->add_option("--in", cl_in, "Rep JSON file (default stdin)");
    c_classify->add_option("--hint-z", cl_hints, "candidate Z-eigenvalue (scalar literal, repeatable)");

    // iso
    auto* c_iso = app.add_subcommand("iso", "cross-check the isomorphism criterion");
    CommonOpts io_;
    add_params_flags(c_iso, io_);
    std::string i_family, i_params = "{}", i_family2, i_params2 = "{}";
    c_iso->add_option("--family", i_family, "first family tag")->required();
    c_iso->add_option("--params", i_params, "first family parameters (JSON)");
    c_iso->add_option("--family2", i_family2, "second family tag")->required();
    c_iso->add_option("--params2", i_params2, "second family parameters (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (*c_field) {
        FieldPtr ctx = FieldCtx::make(fi_l);
        json mod = json::array();
        for (const Rat& r : ctx->modulus()) {
            std::ostringstream os;
            os << numerator(r);
            if (denominator(r) != 1) os << '/' << denominator(r);
            mod.push_back(os.str());
        }
        emit(json{{"l", ctx->order()},
                  {"degree", ctx->degree()},
                  {"modulus", mod},
                  {"zeta", scalar_literal(q2pow(ctx, 1))}});
        std::cerr << "Q(zeta_" << fi_l << "): degree " << ctx->degree() << " over Q\n";
        return 0;
    }

    if (*c_verify) {
        Params p = make_params(vo);
        if (a_max <= 0) a_max = static_cast<int>(2 * vo.l);
        IdentityReport rep = verify_identity_suite(p, a_max);
        emit(report_to_json(rep, p, a_max));
        long failed = 0;
        for (const auto& c : rep.checks)
            if (!c.pass) {
                std::cerr << "FAIL " << c.identity << "\n";
                ++failed;
            }
        std::cerr << rep.checks.size() - failed << "/" << rep.checks.size()
                  << " identities hold\n";
        return rep.all_pass ? 0 : 1;
    }

    if (*c_pideg) {
        PIReport r = pi_report(pd_l);
        emit(pi_report_to_json(r));
        std::cerr << "PI degree at l=" << pd_l << ": brute force " << r.pideg_bruteforce
                  << ", invariant factors " << r.pideg_factors << ", claimed " << r.pideg_claimed
                  << (r.consistent() ? " (consistent)\n" : " (INCONSISTENT)\n");
        return r.consistent() ? 0 : 1;
    }

    if (*c_semi) {
        if (sg_bound <= 0) sg_bound = 3 * sg_l;
        bool ok = semigroup_generators_check(sg_l, sg_bound);
        emit(json{{"l", sg_l}, {"bound", sg_bound}, {"pass", ok}});
        std::cerr << "semigroup generation up to bound " << sg_bound << ": "
                  << (ok ? "pass" : "fail") << "\n";
        return ok ? 0 : 1;
    }

    if (*c_build) {
        Params p = make_params(bo);
        FamilySpec spec = family_spec_from_json(
            p.ctx, json{{"family", b_family}, {"params", json::parse(b_params)}});
        Rep r = build_family(spec, p);
        emit(rep_to_json(r));
        std::cerr << family_name(spec.tag) << " module of dimension " << r.dim << "\n";
        return 0;
    }

    if (*c_check) {
        Rep r = rep_from_json(read_json_input(ck_in));
        bool relations = check_relations(r);
        bool simple = relations && is_simple_burnside(r);
        json out{{"dim", r.dim}, {"relations", relations}, {"simple", simple}};
        bool scalars_ok = false;
        if (simple) {
            try {
                CentralScalars cs = central_scalars(r);
                out["scalars"] = json{{"xl", scalar_literal(cs.xl)},
                                      {"yl", scalar_literal(cs.yl)},
                                      {"zl", scalar_literal(cs.zl)},
                                      {"omega", scalar_literal(cs.omega)}};
                scalars_ok = true;
            } catch (const NotSchurScalar& e) {
                out["scalars_error"] = e.what();
            }
        }
        emit(out);
        std::cerr << "relations " << (relations ? "hold" : "FAIL") << "; "
                  << (simple ? "simple" : "not simple (Burnside)") << "\n";
        return (relations && simple && scalars_ok) ? 0 : 1;
    }

    if (*c_classify) {
        Rep r = rep_from_json(read_json_input(cl_in));
        Hints hints;
        for (const auto& h : cl_hints) hints.z_eigenvalues.push_back(parse_scalar(r.p.ctx, h));
        ClassifyResult res = classify(r, hints);
        emit(classify_result_to_json(res));
        std::cerr << "classified as " << family_name(res.tag) << "\n";
        return 0;
    }

    if (*c_iso) {
        Params p = make_params(io_);
        FamilySpec s1 = family_spec_from_json(
            p.ctx, json{{"family", i_family}, {"params", json::parse(i_params)}});
        FamilySpec s2 = family_spec_from_json(
            p.ctx, json{{"family", i_family2}, {"params", json::parse(i_params2)}});
        bool crit = iso_by_criterion(s1, s2, p);
        Rep r1 = build_family(s1, p), r2 = build_family(s2, p);
        auto [dim, basis] = intertwiner_space(r1, r2);
        emit(json{{"iso_by_criterion", crit}, {"intertwiner_dim", dim}});
        bool agree = crit == (dim > 0);
        std::cerr << "criterion: " << (crit ? "isomorphic" : "not isomorphic")
                  << "; intertwiner dimension " << dim
                  << (agree ? " (agree)\n" : " (DISAGREE)\n");
        return agree ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.pos << ": " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "JSON error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
