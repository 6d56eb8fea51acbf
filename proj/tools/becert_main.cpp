// becert: construct the 4x4 bipartite family states, run the positivity and
// trace-norm criteria, and emit range-criterion certificates.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "becert/errors.hpp"
#include "becert/json_io.hpp"
#include "becert/linalg.hpp"
#include "becert/ppt.hpp"
#include "becert/range_criterion.hpp"
#include "becert/state_family.hpp"

namespace {

using namespace becert;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitNumericalFailure = 2;

struct ParamFlags {
    double eps = -1.0; // unset
    std::string a, b, c, d;
    bool normalize = false;
};

Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    const double re = std::stod(text.substr(0, comma));
    const double im = comma == std::string::npos ? 0.0 : std::stod(text.substr(comma + 1));
    return {re, im};
}

void add_param_flags(CLI::App* cmd, ParamFlags& flags, bool with_eps = true) {
    if (with_eps) cmd->add_option("--eps", flags.eps, "mixing parameter in [0, 1]");
    cmd->add_option("--a", flags.a, "complex parameter a as 're,im' (default 0.5)");
    cmd->add_option("--b", flags.b, "complex parameter b as 're,im' (default 0.5)");
    cmd->add_option("--c", flags.c, "complex parameter c as 're,im' (default 0.5)");
    cmd->add_option("--d", flags.d, "complex parameter d as 're,im' (default 0.5)");
    cmd->add_flag("--normalize", flags.normalize,
                  "rescale (a, b, c, d) onto the unit constraint");
}

FamilyParams params_from_flags(const ParamFlags& flags) {
    if (flags.eps < 0.0) throw EpsRangeError("--eps is required");
    FamilyParams p = FamilyParams::symmetric(flags.eps);
    if (!flags.a.empty()) p.a = parse_complex(flags.a);
    if (!flags.b.empty()) p.b = parse_complex(flags.b);
    if (!flags.c.empty()) p.c = parse_complex(flags.c);
    if (!flags.d.empty()) p.d = parse_complex(flags.d);
    if (flags.normalize) p = FamilyParams::normalized(p.a, p.b, p.c, p.d, p.eps);
    p.validate();
    return p;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StateValidationError("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw StateValidationError("cannot write " + out_path);
    out << text;
}

void emit_json(const nlohmann::json& j, const std::string& out_path) {
    emit(j.dump(2) + "\n", out_path);
}

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

int run(int argc, char** argv) {
    CLI::App app{"certification toolkit for a 4x4 bipartite state family"};
    app.require_subcommand(1);

    ParamFlags flags;
    std::string in_path, out_path;
    std::uint64_t seed = 0;
    double tol = kDefaultRankTol;

    auto* state_cmd = app.add_subcommand("state", "construct a family state and write it as JSON");
    add_param_flags(state_cmd, flags);
    state_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* ppt_cmd = app.add_subcommand("ppt", "partial-transpose spectrum report");
    add_param_flags(ppt_cmd, flags);
    ppt_cmd->add_option("--in", in_path, "state file instead of parameters");
    ppt_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* ccnr_cmd = app.add_subcommand("ccnr", "trace-norm criteria report");
    add_param_flags(ccnr_cmd, flags);
    ccnr_cmd->add_option("--in", in_path, "state file instead of parameters");
    ccnr_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* certify_cmd = app.add_subcommand("certify", "run the range-criterion pipeline");
    add_param_flags(certify_cmd, flags);
    certify_cmd->add_option("--in", in_path, "state file carrying a params block");
    certify_cmd->add_option("--seed", seed, "seed for span sampling (default 0)");
    certify_cmd->add_option("--tol", tol, "rank tolerance (default 1e-10)");
    certify_cmd->add_option("--out", out_path, "output path (default stdout)");

    double sweep_start = 0.0, sweep_end = 0.0;
    int sweep_steps = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "criteria sweep over an eps grid, as CSV");
    sweep_cmd->add_option("start", sweep_start, "first eps value")->required();
    sweep_cmd->add_option("end", sweep_end, "last eps value")->required();
    sweep_cmd->add_option("steps", sweep_steps, "number of grid points")->required();
    add_param_flags(sweep_cmd, flags, /*with_eps=*/false);
    sweep_cmd->add_option("--seed", seed, "seed for span sampling (default 0)");
    sweep_cmd->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    if (state_cmd->parsed()) {
        const FamilyParams p = params_from_flags(flags);
        emit_json(state_to_json(family_state(p), p), out_path);
        return kExitOk;
    }

    if (ppt_cmd->parsed()) {
        std::optional<FamilyParams> params;
        std::optional<DensityMatrix> state;
        if (!in_path.empty()) {
            LoadedState loaded = state_from_json(load_json(in_path));
            state = loaded.state;
            params = loaded.params;
        } else {
            params = params_from_flags(flags);
        }
        nlohmann::json j;
        if (params) {
            j = spectrum_to_json(spectrum_report(*params));
            j["threshold"] = ppt_threshold(*params);
        }
        if (state) {
            const EigResult eig = hermitian_eig(partial_transpose(*state));
            j["numeric_eigenvalues"] = eig.eigenvalues;
            j["min_eig_numeric"] = eig.eigenvalues.front();
            if (!params) {
                j["min_eig"] = eig.eigenvalues.front();
                j["is_ppt"] = eig.eigenvalues.front() >= -kPptTol;
            }
        }
        emit_json(j, out_path);
        return kExitOk;
    }

    if (ccnr_cmd->parsed()) {
        const DensityMatrix state = in_path.empty()
                                        ? family_state(params_from_flags(flags))
                                        : state_from_json(load_json(in_path)).state;
        emit_json(criterion_to_json(criterion_report(state)), out_path);
        return kExitOk;
    }

    if (certify_cmd->parsed()) {
        FamilyParams p{};
        if (!in_path.empty()) {
            const LoadedState loaded = state_from_json(load_json(in_path));
            if (!loaded.params)
                throw StateValidationError("certify needs a state file with a params block");
            p = *loaded.params;
            p.validate();
        } else {
            p = params_from_flags(flags);
        }
        nlohmann::json j = certificate_to_json(certify(p, seed, tol));
        j["params"] = params_to_json(p);
        j["spectrum"] = spectrum_to_json(spectrum_report(p));
        j["criteria"] = criterion_to_json(criterion_report(family_state(p)));
        emit_json(j, out_path);
        return kExitOk;
    }

    // sweep
    if (sweep_steps < 1 || sweep_end < sweep_start || sweep_start < 0.0 || sweep_end > 1.0)
        throw EpsRangeError("sweep grid must satisfy 0 <= start <= end <= 1 and steps >= 1");
    if (sweep_steps == 1 && sweep_end != sweep_start)
        throw EpsRangeError("a single-point sweep needs start == end");

    std::string csv = "eps,min_pt_eig,pt_trace_norm,ccnr_trace_norm,verdict\n";
    for (int row = 0; row < sweep_steps; ++row) {
        const double eps =
            sweep_steps == 1
                ? sweep_start
                : sweep_start + row * (sweep_end - sweep_start) / (sweep_steps - 1);
        ParamFlags row_flags = flags;
        row_flags.eps = eps;
        const FamilyParams p = params_from_flags(row_flags);
        const DensityMatrix rho = family_state(p);
        const double min_pt_eig = hermitian_eig(partial_transpose(rho)).eigenvalues.front();
        const CriterionReport criteria = criterion_report(rho);
        const Certificate cert = certify(p, seed);
        csv += format_number(eps) + "," + format_number(min_pt_eig) + "," +
               format_number(criteria.pt_trace_norm) + "," +
               format_number(criteria.ccnr_trace_norm) + "," + verdict_name(cert.verdict) +
               "\n";
    }
    emit(csv, out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const NoConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericalFailure;
    } catch (const NoStabilizationError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericalFailure;
    } catch (const Error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
