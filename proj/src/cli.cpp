#include "cocyclelab/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

#include "cocyclelab/oracle.hpp"

namespace cocyclelab {

namespace {

std::string pair_key(const std::string& name, size_t i, size_t j) {
    return name + "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")";
}

std::string basis_key(const std::string& name, size_t i) {
    return name + "(e" + std::to_string(i + 1) + ")";
}

void echo_inputs(Report& rep, const ProblemSpec& spec) {
    rep.convention = spec.convention;
    rep.inputs["mode"] = spec.lagrangian_mode ? "lagrangian" : "direct";
    rep.inputs["problem"] = spec.render();
}

void warn_nonconstant_determinant(Report& rep, const KForm& omega) {
    Poly det = two_form_determinant(omega);
    if (!det.is_constant())
        rep.warnings.push_back("NonConstantDeterminant: det(omega) = " + det.str() +
                               "; results valid off its vanishing locus");
}

int effective_degree_bound(const ProblemSpec& spec, const Cochain& alpha) {
    if (spec.degree_bound >= 0) return spec.degree_bound;
    unsigned d = 0;
    for (const auto& [t, v] : alpha.values()) d = std::max(d, v.total_degree());
    return static_cast<int>(d) + 2;
}

void cmd_two_form(Report& rep, const ProblemSpec& spec) {
    if (spec.lagrangian_mode) {
        auto [via_pullback, via_partials] = lagrangian_two_form_routes(spec.phase, spec.l_invariant + spec.l_delta);
        rep.results["omega_L"] = via_pullback.str();
        rep.results["omega_L_second_partials"] = via_partials.str();
        rep.check("routes_agree", via_pullback == via_partials,
                  via_pullback.str() + " vs " + via_partials.str());
        KForm d = exterior_derivative(via_pullback);
        rep.check("closed", d.is_zero(), "d(omega_L) = " + d.str());
        warn_nonconstant_determinant(rep, via_pullback);
    } else {
        rep.results["omega"] = spec.omega.str();
        KForm d = exterior_derivative(spec.omega);
        rep.check("closed", d.is_zero(), "d(omega) = " + d.str());
        Poly det = two_form_determinant(spec.omega);
        rep.check("nondegenerate", !det.is_zero(), "det(omega) = 0");
        warn_nonconstant_determinant(rep, spec.omega);
    }
}

void cmd_decompose(Report& rep, const ProblemSpec& spec) {
    System sys = spec.to_system();
    rep.results["omega"] = sys.omega.str();
    rep.results["omega_i"] = sys.omega_inv.str();
    rep.results["delta_omega"] = sys.delta_omega.str();
    rep.pass("invariant_part_invariant");
    rep.pass("omega_i_invariant");
    rep.pass("delta_omega_closed");
    rep.pass("lie_derivative_restatement");
    warn_nonconstant_determinant(rep, sys.omega);
}

void cmd_momenta(Report& rep, const ProblemSpec& spec) {
    System sys = spec.to_system();
    MomentumFamily family = momentum_maps(sys);
    for (size_t i = 0; i < family.basis_momenta.size(); ++i)
        rep.results[basis_key("J", i)] = family.basis_momenta[i].str();
    rep.pass("one_forms_closed");
    rep.pass("dJ_matches_contraction");
    rep.pass("vanishes_at_base_point");
}

void cmd_cocycle(Report& rep, const ProblemSpec& spec) {
    System sys = spec.to_system();
    Cochain omega_c = canonical_cocycle(sys.omega, sys.action);
    const size_t dim = sys.action.algebra().dimension();
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i + 1; j < dim; ++j)
            rep.results[pair_key("Omega", i, j)] = omega_c.value({(int)i, (int)j}).str();
    rep.pass("omega_closed");
    CocycleCheck check = is_cocycle(omega_c);
    rep.check("is_cocycle", check.ok, "delta(Omega) != 0: " + check.witness_value.str());
}

void cmd_sigma(Report& rep, const ProblemSpec& spec) {
    System sys = spec.to_system();
    MomentumFamily family = momentum_maps(sys);
    Cochain sig = sigma(sys, family);
    const size_t dim = sys.action.algebra().dimension();
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = i + 1; j < dim; ++j)
            rep.results[pair_key("Sigma", i, j)] = sig.value({(int)i, (int)j}).str();
    rep.pass("values_polynomial");
}

void prop2_results(Report& rep, const System& sys, const Prop2Report& p2) {
    const size_t dim = sys.action.algebra().dimension();
    for (size_t i = 0; i < dim; ++i) {
        rep.results[basis_key("J", i)] = p2.momenta.basis_momenta[i].str();
        rep.results[basis_key("DeltaX", i)] = p2.delta_fields[i].str();
    }
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = i + 1; j < dim; ++j) {
            rep.results[pair_key("Omega", i, j)] = p2.omega_cochain.value({(int)i, (int)j}).str();
            rep.results[pair_key("Sigma", i, j)] = p2.sigma_cochain.value({(int)i, (int)j}).str();
        }
    }
    rep.results["deltaJ"] = p2.delta_j.str();
    rep.results["identity"] = sys.convention == SignConvention::PaperA
                                  ? "Sigma = Omega(b,a) + deltaJ"
                                  : "Sigma = Omega(a,b) + deltaJ";
}

void prop2_checks(Report& rep, const Prop2Report& p2) {
    std::string hyp_witness;
    for (const PairValue& h : p2.hypothesis)
        if (!h.value.is_zero())
            hyp_witness = pair_key("omega(DX,DX)", h.i, h.j) + " = " + h.value.str();
    rep.check("hypothesis_omega_DX_DX_zero", p2.hypothesis_ok, hyp_witness);
    rep.check("exact_identity", p2.identity_ok, "residual = " + p2.residual.str());
    std::string inter_witness;
    for (const PairValue& v : p2.bracket_identity)
        if (!v.value.is_zero()) inter_witness = pair_key("bracket", v.i, v.j) + " = " + v.value.str();
    for (const PairValue& v : p2.momentum_identity)
        if (!v.value.is_zero()) inter_witness = pair_key("momentum", v.i, v.j) + " = " + v.value.str();
    rep.check("proof_intermediates", p2.intermediates_ok, inter_witness);
    rep.check("lemma1_contraction_identity", p2.lemma1_ok, "i_{DX}omega != i_{X}delta_omega");
}

void cmd_prop2(Report& rep, const ProblemSpec& spec) {
    System sys = spec.to_system();
    Prop2Report p2 = verify_prop2(sys);
    prop2_results(rep, sys, p2);
    prop2_checks(rep, p2);
    // Cohomology verdict: Sigma and -e*Omega differ by the exact coboundary dJ.
    rep.check("sigma_cohomologous_omega", p2.identity_ok, "witness beta = J fails");
    warn_nonconstant_determinant(rep, sys.omega);
}

void cmd_residual(Report& rep, const ProblemSpec& spec) {
    System sys = spec.to_system();
    Cochain c = remark2_residual(sys);
    rep.results["c"] = c.str();
    rep.pass("values_constant");
    rep.check("residual_zero", c.is_zero(), "c = " + c.str());
}

void cmd_reconcile(Report& rep, const ProblemSpec& spec) {
    System sys = spec.to_system();
    Remark1Report r1 = remark1_reconcile(sys, spec.base_point);
    for (const Remark1Row& row : r1.rows) {
        rep.results[pair_key("Sigma", row.i, row.j)] = row.sigma_value.str();
        rep.results[pair_key("Omega_at_x0", row.i, row.j)] = row.omega_at_x0.str();
        rep.results[pair_key("J_bracket_at_x0", row.i, row.j)] = row.j_bracket_at_x0.str();
    }
    rep.check("sigma_constant", r1.constant_ok, "Sigma has nonconstant values");
    std::string witness;
    for (const Remark1Row& row : r1.rows)
        if (!row.ok) witness = pair_key("Sigma", row.i, row.j) + " != e*Omega(x0) - J_[a,b](x0)";
    rep.check("real_cocycle_reconciliation", r1.reconcile_ok, witness);
}

void cmd_jacobi(Report& rep, const ProblemSpec& spec) {
    System sys = spec.to_system();
    Cochain omega_c = canonical_cocycle(sys.omega, sys.action);
    const size_t dim = sys.action.algebra().dimension();
    bool all_zero = true;
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = i + 1; j < dim; ++j) {
            for (size_t k = j + 1; k < dim; ++k) {
                AlgebraVector ei(dim, Rational(0)), ej(dim, Rational(0)), ek(dim, Rational(0));
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                Poly defect = jacobi_defect(omega_c, {ei, Poly(sys.chart)}, {ej, Poly(sys.chart)},
                                            {ek, Poly(sys.chart)});
                all_zero = all_zero && defect.is_zero();
                rep.results["defect(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                            ",e" + std::to_string(k + 1) + ")"] = defect.str();
            }
        }
    }
    CocycleCheck check = is_cocycle(omega_c);
    rep.check("jacobi_defects_vanish", all_zero, "nonzero defect over a basis triple");
    rep.check("jacobi_iff_cocycle", all_zero == check.ok, "Jacobi and cocycle tests disagree");
}

void cmd_trivial(Report& rep, const ProblemSpec& spec) {
    System sys = spec.to_system();
    Cochain omega_c = canonical_cocycle(sys.omega, sys.action);
    int bound = effective_degree_bound(spec, omega_c);
    CoboundarySolve solve = coboundary_solve(omega_c, bound);
    rep.results["degree_bound"] = bound;
    if (solve.beta) {
        for (size_t i = 0; i < sys.action.algebra().dimension(); ++i)
            rep.results[basis_key("beta", i)] = solve.beta->value({(int)i}).str();
        rep.results["cohomology_class"] = "trivial (coboundary within bound)";
        rep.pass("witness_verified");
    } else {
        rep.results["beta"] = "none";
        rep.results["cohomology_class"] = "nontrivial within degree bound";
        rep.results["certificate"] = "rank " + std::to_string(solve.rank) + " < augmented rank " +
                                     std::to_string(solve.aug_rank) + " over " +
                                     std::to_string(solve.unknowns) + " unknowns";
        rep.check("unsolvability_certified", solve.aug_rank > solve.rank, "no certificate");
    }
}

void cmd_oracle(Report& rep, const ProblemSpec& spec) {
    const TrialPlan& plan = spec.plan;
    System sys = spec.to_system();
    const Rational eps(orientation(sys.convention));
    const size_t dim = sys.action.algebra().dimension();

    if (spec.lagrangian_mode) {
        auto [r1, r2] = lagrangian_two_form_routes(spec.phase, spec.l_invariant + spec.l_delta);
        Verdict v = point_check(r1, r2, plan);
        rep.check("point:two_form_routes", v.ok, v.detail);
    }

    Prop2Report p2 = verify_prop2(sys);
    for (size_t a = 0; a < dim; ++a) {
        KForm dj = exterior_derivative(KForm::from_function(p2.momenta.basis_momenta[a]));
        KForm rhs = eps * interior_product(sys.action.basis_generator(a), sys.omega_inv);
        Verdict v = point_check(dj, rhs, plan);
        rep.check(basis_key("point:dJ_contraction", a), v.ok, v.detail);

        KForm lhs1 = interior_product(p2.delta_fields[a], sys.omega);
        KForm rhs1 = interior_product(sys.action.basis_generator(a), sys.delta_omega);
        Verdict l1 = point_check(lhs1, rhs1, plan);
        rep.check(basis_key("point:lemma1", a), l1.ok, l1.detail);
    }
    for (const PairValue& h : p2.hypothesis) {
        Verdict v = point_check(h.value, Poly(sys.chart), plan);
        rep.check(pair_key("point:hypothesis", h.i, h.j), v.ok, v.detail);
    }
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = i + 1; j < dim; ++j) {
            const std::vector<int> pair{(int)i, (int)j};
            Poly residual = p2.residual.value(pair);
            Verdict v = point_check(residual, Poly(sys.chart), plan);
            rep.check(pair_key("point:identity", i, j), v.ok, v.detail);

            // {J_i,J_j} = e*(omega - 2*delta_omega)(X_i, X_j), pointwise.
            AlgebraVector br = sys.action.algebra().basis_bracket(i, j);
            Poly lhs = p2.sigma_cochain.value(pair) + momentum_of(p2.momenta, br);
            const VectorField gens[2] = {sys.action.basis_generator(i), sys.action.basis_generator(j)};
            Poly rhs = eps * (sys.omega.evaluate_on(gens) -
                              Rational(2) * sys.delta_omega.evaluate_on(gens));
            Verdict v2 = point_check(lhs, rhs, plan);
            rep.check(pair_key("point:proof_bracket", i, j), v2.ok, v2.detail);
        }
    }

    Verdict fd_omega = fd_check_d(sys.omega, plan);
    rep.check("fd:d_omega", fd_omega.ok, fd_omega.detail);
    Verdict fd_delta = fd_check_d(sys.delta_omega, plan);
    rep.check("fd:d_delta_omega", fd_delta.ok, fd_delta.detail);
    for (size_t a = 0; a < dim; ++a) {
        KForm eta = eps * interior_product(sys.action.basis_generator(a), sys.omega_inv);
        Verdict v = fd_check_d(eta, plan);
        rep.check(basis_key("fd:d_momentum_form", a), v.ok, v.detail);
    }
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = i + 1; j < dim; ++j) {
            Verdict v = fd_check_bracket(sys.action.basis_generator(i),
                                         sys.action.basis_generator(j), plan);
            rep.check(pair_key("fd:generator_bracket", i, j), v.ok, v.detail);
        }
    }
}

} // namespace

Report run_command(const std::string& command, const ProblemSpec& spec) {
    Report rep;
    rep.command = command;
    echo_inputs(rep, spec);
    try {
        if (command == "two-form")
            cmd_two_form(rep, spec);
        else if (command == "decompose")
            cmd_decompose(rep, spec);
        else if (command == "momenta")
            cmd_momenta(rep, spec);
        else if (command == "cocycle")
            cmd_cocycle(rep, spec);
        else if (command == "sigma")
            cmd_sigma(rep, spec);
        else if (command == "prop2")
            cmd_prop2(rep, spec);
        else if (command == "residual")
            cmd_residual(rep, spec);
        else if (command == "reconcile")
            cmd_reconcile(rep, spec);
        else if (command == "jacobi")
            cmd_jacobi(rep, spec);
        else if (command == "trivial")
            cmd_trivial(rep, spec);
        else if (command == "oracle")
            cmd_oracle(rep, spec);
        else
            throw Error("unknown command: " + command);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        rep.fail(std::string("error"), e.what());
    }
    return rep;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact canonical-cocycle toolkit for Lie group actions on symplectic charts"};
    app.name("cocyclelab");

    std::string command, file;
    bool json = false;
    std::string sign_convention, base_point_csv;
    int degree_bound = -2;
    long long seed = -1;
    int trials = -1;
    double fd_step = -1.0, fd_tol = -1.0;

    app.add_option("command", command,
                   "two-form | decompose | momenta | cocycle | sigma | prop2 | residual | "
                   "reconcile | jacobi | trivial | oracle")
        ->required();
    app.add_option("file", file, "problem file")->required();
    app.add_flag("--json", json, "emit the JSON report");
    app.add_option("--sign-convention", sign_convention, "A or B (overrides the file option)");
    app.add_option("--base-point", base_point_csv, "comma-separated rationals");
    app.add_option("--degree-bound", degree_bound, "degree bound for coboundary solving");
    app.add_option("--seed", seed, "oracle seed");
    app.add_option("--trials", trials, "oracle trials");
    app.add_option("--fd-step", fd_step, "finite-difference step");
    app.add_option("--fd-tol", fd_tol, "finite-difference relative tolerance");

    std::vector<std::string> argv_copy = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("cocyclelab");
        for (const std::string& a : argv_copy) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    ProblemSpec spec;
    try {
        spec = parse_problem_file(file);
        if (!sign_convention.empty()) {
            if (sign_convention == "A" || sign_convention == "paper-A")
                spec.convention = SignConvention::PaperA;
            else if (sign_convention == "B" || sign_convention == "paper-B")
                spec.convention = SignConvention::PaperB;
            else
                throw Error("--sign-convention must be A or B");
        }
        if (!base_point_csv.empty()) {
            std::vector<Rational> pt;
            std::istringstream is(base_point_csv);
            std::string item;
            while (std::getline(is, item, ',')) {
                Rational r(item);
                r.canonicalize();
                pt.push_back(r);
            }
            if (pt.size() != spec.phase.dimension())
                throw Error("--base-point needs " + std::to_string(spec.phase.dimension()) +
                            " coordinates");
            spec.base_point = std::move(pt);
        }
        if (degree_bound != -2) spec.degree_bound = degree_bound;
        if (seed >= 0) spec.plan.seed = static_cast<std::uint64_t>(seed);
        if (trials >= 0) spec.plan.trials = trials;
        if (fd_step > 0) spec.plan.fd_step = fd_step;
        if (fd_tol > 0) spec.plan.fd_tolerance = fd_tol;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Report rep = run_command(command, spec);
    if (json)
        out << rep.to_json().dump(2) << "\n";
    else
        out << rep.human();
    return rep.all_pass() ? 0 : 1;
}

} // namespace cocyclelab
