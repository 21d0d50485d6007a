// Command-line front end: single-point breakdowns, parameter sweeps over
// omega_c / beta / eta / N, and figure presets rendered as CSV.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "vsc/perturbation.hpp"
#include "vsc/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

vsc::SweepSpec parse_sweep(const std::string& text) {
    // VAR:START:STOP:STEPS[:log]
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() < 4 || parts.size() > 5)
        throw CLI::ValidationError("--sweep", "expected VAR:START:STOP:STEPS[:log]");

    vsc::SweepSpec spec;
    if (parts[0] == "omega_c") spec.variable = vsc::SweepVariable::OmegaC;
    else if (parts[0] == "beta") spec.variable = vsc::SweepVariable::Beta;
    else if (parts[0] == "eta") spec.variable = vsc::SweepVariable::Eta;
    else if (parts[0] == "n") spec.variable = vsc::SweepVariable::NMolecules;
    else throw CLI::ValidationError("--sweep", "variable must be omega_c|beta|eta|n");
    try {
        spec.start = std::stod(parts[1]);
        spec.stop = std::stod(parts[2]);
        spec.steps = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--sweep", "malformed numeric field");
    }
    if (parts.size() == 5) {
        if (parts[4] != "log")
            throw CLI::ValidationError("--sweep", "fifth field must be 'log'");
        spec.scale = vsc::SweepScale::Log;
    }
    return spec;
}

std::vector<vsc::Column> standard_columns(bool with_pert, bool with_centroid) {
    std::vector<vsc::Column> cols = {
        vsc::Column::LambdaPlus, vsc::Column::LambdaMinus, vsc::Column::LambdaB1,
        vsc::Column::LambdaB2,   vsc::Column::LambdaUnstable, vsc::Column::SShift,
        vsc::Column::Kappa,      vsc::Column::KappaStar,   vsc::Column::KappaGH,
        vsc::Column::KappaZPE,
    };
    if (with_centroid) cols.push_back(vsc::Column::KappaCentroid);
    cols.push_back(vsc::Column::DeltaG);
    if (with_pert) {
        cols.push_back(vsc::Column::SPert);
        cols.push_back(vsc::Column::LambdaUnstablePert);
    }
    return cols;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cavity-modified reaction rate corrections under vibrational "
                 "strong coupling: polariton spectra, ZPE shifts, Grote-Hynes and "
                 "centroid-tunneling corrections, N-molecule scaling, selectivity"};

    std::string preset_name, sweep_text, out_path, plot_path;
    vsc::ReactionParams rp;
    vsc::CavitySetup cs;
    std::string mode = "incoherent";
    bool with_pert = false, with_centroid = false;
    bool list_presets = false;

    app.set_config("--config")->description("flat key = value file, '#' comments; "
                                            "command-line flags override file values");
    app.add_option("--preset", preset_name,
                   "figure preset name (see --list-presets); overrides parameter flags");
    app.add_flag("--list-presets", list_presets, "list preset names and exit");
    app.add_option("--omega", rp.omega, "well vibrational frequency (reference unit)");
    app.add_option("--omega-b", rp.omega_b, "barrier frequency");
    app.add_option("--eta", rp.eta, "well VSC strength");
    app.add_option("--eta-b", rp.eta_b, "barrier VSC strength");
    app.add_option("--e-a", rp.e_a, "activation energy");
    app.add_option("--omega-c", cs.omega_c, "cavity frequency");
    app.add_option("--beta", cs.beta, "inverse temperature (hbar = 1)");
    app.add_option("--n", cs.n_molecules, "molecule count N");
    app.add_option("--mode", mode, "incoherent|coherent")
        ->check(CLI::IsMember({"incoherent", "coherent"}));
    app.add_option("--sweep", sweep_text,
                   "VAR:START:STOP:STEPS[:log], VAR in {omega_c,beta,eta,n}; "
                   "sweeping eta sets eta and eta-b together");
    app.add_option("--out", out_path, "CSV destination (default: stdout)");
    app.add_option("--plot-script", plot_path, "write a gnuplot script for the CSV");
    app.add_flag("--with-perturbative", with_pert, "add perturbative columns");
    app.add_flag("--with-centroid", with_centroid, "add the kappa_centroid column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (list_presets) {
        for (const auto& n : vsc::preset_names())
            std::cout << n << ": " << vsc::preset(n).description << "\n";
        return kExitOk;
    }

    cs.mode = mode == "coherent" ? vsc::CouplingMode::Coherent
                                 : vsc::CouplingMode::Incoherent;

    try {
        vsc::SweepResult result;
        bool have_sweep = false;

        if (!preset_name.empty()) {
            if (!sweep_text.empty()) {
                std::cerr << "error: --preset and --sweep are mutually exclusive\n";
                return kExitUsage;
            }
            vsc::Preset p;
            try {
                p = vsc::preset(preset_name);
            } catch (const vsc::DomainError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
            result = vsc::run_sweeps(p.curves);
            have_sweep = true;
        } else if (!sweep_text.empty()) {
            vsc::RunConfig cfg;
            cfg.reaction = rp;
            cfg.cavity = cs;
            try {
                cfg.sweep = parse_sweep(sweep_text);
            } catch (const CLI::Error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
            cfg.columns = standard_columns(with_pert, with_centroid);
            cfg.include_perturbative = with_pert;
            cfg.include_centroid = with_centroid;
            try {
                result = vsc::run_sweep(cfg);
            } catch (const vsc::DomainError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
            have_sweep = true;
        } else {
            // Single-point mode: labeled breakdown on stdout.
            vsc::RunConfig cfg;
            cfg.reaction = rp;
            cfg.cavity = cs;
            cfg.columns = standard_columns(with_pert, true);
            try {
                for (const auto& [name, value] : vsc::single_point(cfg))
                    std::cout << name << " " << value << "\n";
            } catch (const vsc::DomainError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitDomain;
            }
            return kExitOk;
        }

        if (have_sweep) {
            try {
                if (out_path.empty()) {
                    std::cout << vsc::to_csv(result);
                } else {
                    vsc::write_csv(result, out_path);
                }
                if (!plot_path.empty()) {
                    const std::string csv_ref = out_path.empty() ? "sweep.csv" : out_path;
                    vsc::write_plot_script(result, csv_ref, plot_path);
                }
            } catch (const std::ios_base::failure& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitIo;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
