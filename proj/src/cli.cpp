// Copyright 2026 The locc-discrim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "locc/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "locc/basis_builder.hpp"
#include "locc/jnr.hpp"
#include "locc/kspace.hpp"
#include "locc/protocol.hpp"
#include "locc/simulator.hpp"
#include "locc/states.hpp"

namespace locc {

namespace {

using nlohmann::json;

struct GlobalFlags {
    double zero_tol = 1e-10;
    double ortho_tol = 1e-8;
    double rank_tol = 1e-8;
    double support_tol = 1e-9;
    std::uint64_t seed = 0;
    bool reorthonormalize = false;
    bool best_effort = false;
};

struct Analysis {
    StateFamily family;
    OperatorRep rep;
    KSpaceBasis kspace;
    SchmidtProfile profile;
    std::vector<std::string> warnings;
};

std::string regime_name(std::size_t n) {
    if (n <= 2)
        return "deterministic";
    if (n == 3)
        return "conclusive";
    return "none";
}

Analysis analyze_family(const std::string &path, const GlobalFlags &flags) {
    FamilyOptions fo;
    fo.ortho_tol = flags.ortho_tol;
    fo.reorthonormalize = flags.reorthonormalize;
    Analysis a{load_family_file(path, fo), {}, {}, {}, {}};
    a.rep = operator_rep(a.family);
    a.kspace = build_kspace(a.rep, flags.rank_tol);
    a.profile = schmidt_profile(a.family);
    a.warnings = a.kspace.warnings;
    if (a.family.reorthonormalized)
        a.warnings.push_back("input states were reorthonormalized (Gram-Schmidt)");
    const auto n = a.kspace.dim();
    if (n == 0)
        a.warnings.push_back("dim K = 0: any basis of H_B distinguishes the family");
    if (n >= 4)
        a.warnings.push_back("dim K = " + std::to_string(n) +
                             " >= 4: the joint numerical range need not be convex, so no "
                             "distinguishing basis is guaranteed (needs N <= 3)");
    return a;
}

BasisOptions basis_options(const GlobalFlags &flags) {
    BasisOptions o;
    o.zero_tol = flags.zero_tol;
    o.seed = flags.seed;
    o.best_effort = flags.best_effort;
    return o;
}

DistinguishingBasis build_basis(const Analysis &a, const GlobalFlags &flags) {
    const auto n = a.kspace.dim();
    const std::size_t slots = n >= 4 ? 0 : error_slots_for(n);
    return build_distinguishing_basis(a.kspace.operators, a.family.dim_b, slots,
                                      basis_options(flags));
}

json tolerances(const GlobalFlags &flags) {
    return {{"zero_tol", flags.zero_tol},
            {"ortho_tol", flags.ortho_tol},
            {"rank_tol", flags.rank_tol},
            {"support_tol", flags.support_tol}};
}

json per_label(const StateFamily &family, const std::vector<double> &values) {
    json out = json::object();
    for (std::size_t l = 0; l < family.size(); ++l)
        out[family.labels[l]] = values[l];
    return out;
}

json profiles_json(const Analysis &a) {
    json out = json::object();
    for (std::size_t l = 0; l < a.family.size(); ++l) {
        const auto &p = a.profile.probabilities[l];
        out[a.family.labels[l]] = std::vector<double>(p.data(), p.data() + p.size());
    }
    return out;
}

void emit(const json &doc, std::ostream &out) { out << doc.dump(2) << '\n'; }

int cmd_analyze(const std::string &path, const GlobalFlags &flags, std::ostream &out) {
    auto a = analyze_family(path, flags);
    const auto n = a.kspace.dim();
    json report;
    report["dim_a"] = a.family.dim_a;
    report["dim_b"] = a.family.dim_b;
    report["m"] = a.family.size();
    report["n"] = n;
    report["generator_count"] = a.kspace.generator_count;
    report["regime"] = regime_name(n);
    report["schmidt_profiles"] = profiles_json(a);
    if (n <= 3) {
        const auto slots = error_slots_for(n);
        report["n_p"] = slots;
        report["schmidt_bound"] = discrimination_bound(a.profile, slots);
        const auto basis = build_basis(a, flags);
        const auto bounds = bound_report(a.profile, a.rep, basis);
        report["error_masses"] = per_label(a.family, bounds.error_mass);
        report["mass_bound"] = bounds.mass_bound;
        report["basis_residual"] = verify_basis(a.kspace.operators, basis, flags.zero_tol).max_residual;
    } else {
        report["n_p"] = nullptr;
        report["schmidt_bound"] = nullptr;
    }
    report["tolerances"] = tolerances(flags);
    report["seed"] = flags.seed;
    report["reorthonormalized"] = a.family.reorthonormalized;
    report["warnings"] = a.warnings;
    emit(report, out);
    return kExitOk;
}

int cmd_compile(const std::string &path, const std::string &out_path, const GlobalFlags &flags,
                std::ostream &out, std::ostream &err) {
    auto a = analyze_family(path, flags);
    const auto n = a.kspace.dim();
    if (n >= 4 && !flags.best_effort) {
        err << "dim K = " << n
            << " >= 4: no guaranteed protocol; rerun with --best-effort for an "
               "unguaranteed attempt\n";
        return kExitUnsupported;
    }
    const auto basis = build_basis(a, flags);
    CompileOptions co;
    co.support_tol = flags.support_tol;
    co.verify_tol = std::max(1e-9, 10.0 * flags.zero_tol);
    co.meta = {flags.seed, flags.zero_tol, flags.ortho_tol, flags.rank_tol, flags.support_tol};
    CompileSummary summary;
    const auto protocol = compile_protocol(a.family, a.rep, a.kspace.operators, basis, co, &summary);

    std::ofstream file(out_path);
    if (!file) {
        err << "cannot write protocol file " << out_path << '\n';
        return kExitInvalidInput;
    }
    file << protocol_to_json(protocol).dump(2) << '\n';

    const auto bounds = bound_report(a.profile, a.rep, basis);
    json report;
    report["protocol"] = out_path;
    report["n"] = n;
    report["regime"] = regime_name(n);
    report["best_effort"] = basis.best_effort;
    report["n_p"] = basis.error_slots;
    report["bob_outcomes"] = basis.dim();
    std::vector<std::size_t> zero_slots;
    for (std::size_t k = basis.error_slots; k < basis.dim(); ++k)
        zero_slots.push_back(k + 1);
    report["zero_slots"] = zero_slots;
    report["basis_residual"] = summary.basis_residual;
    report["gram_deviation"] = summary.basis_gram_deviation;
    report["max_branch_overlap"] = summary.max_branch_overlap;
    report["reconstruction_error"] = summary.reconstruction_error;
    report["error_masses"] = per_label(a.family, bounds.error_mass);
    report["mass_bound"] = bounds.mass_bound;
    report["schmidt_bound"] = bounds.schmidt_bound;
    report["warnings"] = a.warnings;
    emit(report, out);
    return kExitOk;
}

int cmd_simulate(const std::string &protocol_path, const std::string &states_path,
                 const std::string &true_state, std::size_t trials,
                 const std::optional<std::string> &out_path, const GlobalFlags &flags,
                 std::ostream &out, std::ostream &err) {
    FamilyOptions fo;
    fo.ortho_tol = flags.ortho_tol;
    fo.reorthonormalize = flags.reorthonormalize;
    const auto family = load_family_file(states_path, fo);
    const auto protocol = load_protocol_file(protocol_path);
    const auto index = family.index_of(true_state);
    if (index == family.size()) {
        err << "unknown state label '" << true_state << "'\n";
        return kExitInvalidInput;
    }
    if (trials == 0) {
        err << "--trials must be >= 1\n";
        return kExitInvalidInput;
    }
    const auto dist = outcome_distribution(protocol, family, index);
    const auto stats = tally(dist, family, protocol, sample_outcomes(dist, trials, flags.seed),
                             flags.seed);
    auto doc = stats_to_json(stats);
    doc["analytic"] = {{"success", dist.success()},
                       {"inconclusive", dist.inconclusive()},
                       {"misid", dist.misidentification()}};
    if (out_path) {
        std::ofstream file(*out_path);
        if (!file) {
            err << "cannot write " << *out_path << '\n';
            return kExitInvalidInput;
        }
        emit(doc, file);
    } else {
        emit(doc, out);
    }
    return kExitOk;
}

int cmd_bound(const std::string &path, std::optional<std::size_t> np, const GlobalFlags &flags,
              std::ostream &out, std::ostream &err) {
    auto a = analyze_family(path, flags);
    if (!np) {
        if (a.kspace.dim() >= 4) {
            err << "dim K >= 4: no default error-slot count; pass --np\n";
            return kExitUnsupported;
        }
        np = error_slots_for(a.kspace.dim());
    }
    if (*np > a.family.dim_b) {
        err << "--np exceeds dim_b\n";
        return kExitInvalidInput;
    }
    const auto bounds = bound_report(a.profile, *np);
    json report;
    report["n"] = a.kspace.dim();
    report["n_p"] = *np;
    report["schmidt_profiles"] = profiles_json(a);
    report["schmidt_sums"] = per_label(a.family, bounds.schmidt_sum);
    report["bound"] = bounds.schmidt_bound;
    emit(report, out);
    return kExitOk;
}

int cmd_jnr_sample(const std::string &path, std::size_t samples,
                   const std::optional<std::string> &out_path, const GlobalFlags &flags,
                   std::ostream &out, std::ostream &err) {
    auto a = analyze_family(path, flags);
    const auto n = a.kspace.dim();
    if (n == 0) {
        err << "dim K = 0: the joint numerical range is the single point {}; nothing to sample\n";
        return kExitUnsupported;
    }
    const auto d = static_cast<Eigen::Index>(a.family.dim_b);
    const auto points =
        sample_range(a.kspace.operators, ComplexMatrix::Identity(d, d), samples, flags.seed);
    if (out_path) {
        std::ofstream file(*out_path);
        if (!file) {
            err << "cannot write " << *out_path << '\n';
            return kExitInvalidInput;
        }
        write_csv(file, points, n);
    } else {
        write_csv(out, points, n);
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Local (LOCC) discrimination of orthonormal bipartite pure states", "locc"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--tol", flags.zero_tol, "Zero-vector residual tolerance")->capture_default_str();
    app.add_option("--ortho-tol", flags.ortho_tol, "Orthonormality tolerance for input states")
        ->capture_default_str();
    app.add_option("--rank-tol", flags.rank_tol, "Relative rank tolerance for dim K")
        ->capture_default_str();
    app.add_option("--support-tol", flags.support_tol, "Cutoff for ||X_l g_k|| > 0")
        ->capture_default_str();
    app.add_option("--seed", flags.seed, "Seed for every randomized step")->capture_default_str();
    app.add_flag("--reorthonormalize", flags.reorthonormalize,
                 "Gram-Schmidt the input family instead of rejecting it");
    app.add_flag("--best-effort", flags.best_effort,
                 "Attempt a basis for dim K >= 4 (no guarantee)");

    std::string states, protocol_path, out_path, true_state;
    std::optional<std::string> opt_out;
    std::size_t trials = 10000, samples = 1000;
    std::optional<std::size_t> np;

    auto *analyze = app.add_subcommand("analyze", "Report dim K, regime, Schmidt bound");
    analyze->add_option("states", states, "State file (JSON)")->required();

    auto *compile = app.add_subcommand("compile", "Build the distinguishing basis and protocol");
    compile->add_option("states", states, "State file (JSON)")->required();
    compile->add_option("-o,--out", out_path, "Protocol file to write")->required();

    auto *simulate_cmd = app.add_subcommand("simulate", "Monte Carlo run of a compiled protocol");
    simulate_cmd->add_option("protocol", protocol_path, "Protocol file (JSON)")->required();
    simulate_cmd->add_option("states", states, "State file (JSON)")->required();
    simulate_cmd->add_option("--true-state", true_state, "Label of the prepared state")
        ->required();
    simulate_cmd->add_option("--trials", trials, "Number of trials")->capture_default_str();
    simulate_cmd->add_option("-o,--out", opt_out, "Write stats here instead of stdout");

    auto *bound = app.add_subcommand("bound", "Schmidt lower bound on the success probability");
    bound->add_option("states", states, "State file (JSON)")->required();
    bound->add_option("--np", np, "Number of error slots (default from dim K)");

    auto *jnr = app.add_subcommand("jnr-sample", "Sample the joint numerical range of (A_1..A_N)");
    jnr->add_option("states", states, "State file (JSON)")->required();
    jnr->add_option("--samples", samples, "Number of points")->capture_default_str();
    jnr->add_option("-o,--out", opt_out, "CSV file (default stdout)");

    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitInvalidInput;
    }

    try {
        if (*analyze)
            return cmd_analyze(states, flags, out);
        if (*compile)
            return cmd_compile(states, out_path, flags, out, err);
        if (*simulate_cmd)
            return cmd_simulate(protocol_path, states, true_state, trials, opt_out, flags, out,
                                err);
        if (*bound)
            return cmd_bound(states, np, flags, out, err);
        if (*jnr)
            return cmd_jnr_sample(states, samples, opt_out, flags, out, err);
    } catch (const BasisSearchFailed &e) {
        err << "search failed: " << e.what() << "\n  best residual " << e.best().residual
            << " (" << to_string(e.best().method) << "), " << e.partial().cols()
            << " basis vectors accepted before the failure\n";
        return kExitSearchFailed;
    } catch (const SearchFailed &e) {
        err << "search failed: " << e.what() << '\n';
        return kExitSearchFailed;
    } catch (const UnsupportedRegime &e) {
        err << e.what() << '\n';
        return kExitUnsupported;
    } catch (const NotOrthonormal &e) {
        err << "invalid state family: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

} // namespace locc
