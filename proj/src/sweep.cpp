#include "vsc/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vsc/perturbation.hpp"

namespace vsc {

void SweepSpec::validate() const {
    if (!(start > 0)) throw DomainError("sweep: start must be > 0");
    if (!(start < stop)) throw DomainError("sweep: start must be < stop");
    if (steps < 2) throw DomainError("sweep: steps must be >= 2");
    if (scale == SweepScale::Log && !(start > 0))
        throw DomainError("sweep: log scale requires positive start");
}

std::vector<double> SweepSpec::grid() const {
    validate();
    std::vector<double> g(steps);
    if (scale == SweepScale::Log) {
        const double la = std::log(start), lb = std::log(stop);
        for (int i = 0; i < steps; ++i)
            g[i] = std::exp(la + (lb - la) * i / (steps - 1));
    } else {
        for (int i = 0; i < steps; ++i)
            g[i] = start + (stop - start) * i / (steps - 1);
    }
    if (variable == SweepVariable::NMolecules) {
        // Integer grid; duplicates produced by rounding are kept so the row
        // count stays as declared.
        for (double& v : g) v = std::round(v);
    }
    return g;
}

const char* column_name(Column c) {
    switch (c) {
        case Column::LambdaPlus: return "lambda_plus";
        case Column::LambdaMinus: return "lambda_minus";
        case Column::LambdaB1: return "lambda_b1";
        case Column::LambdaB2: return "lambda_b2";
        case Column::LambdaUnstable: return "lambda_unstable";
        case Column::SShift: return "S";
        case Column::Kappa: return "kappa";
        case Column::KappaStar: return "kappa_star";
        case Column::KappaGH: return "kappa_gh";
        case Column::KappaZPE: return "kappa_zpe";
        case Column::KappaCentroid: return "kappa_centroid";
        case Column::DeltaG: return "delta_g";
        case Column::SPert: return "S_pert";
        case Column::LambdaUnstablePert: return "lambda_unstable_pert";
        case Column::Phi1: return "phi1";
    }
    return "?";
}

namespace {

const char* variable_name(SweepVariable v) {
    switch (v) {
        case SweepVariable::OmegaC: return "omega_c";
        case SweepVariable::Beta: return "beta";
        case SweepVariable::Eta: return "eta";
        case SweepVariable::NMolecules: return "n_molecules";
    }
    return "?";
}

void apply_sweep_value(ReactionParams& rp, CavitySetup& cs, SweepVariable var, double v) {
    switch (var) {
        case SweepVariable::OmegaC: cs.omega_c = v; break;
        case SweepVariable::Beta: cs.beta = v; break;
        case SweepVariable::Eta: rp.eta = rp.eta_b = v; break;
        case SweepVariable::NMolecules: cs.n_molecules = static_cast<int>(v); break;
    }
}

Row evaluate_point(const RunConfig& cfg, double value) {
    ReactionParams rp = cfg.reaction;
    CavitySetup cs = cfg.cavity;
    apply_sweep_value(rp, cs, cfg.sweep.variable, value);

    Row row;
    row.curve = cfg.curve;
    row.value = value;
    row.status = "ok";
    row.cells.assign(cfg.columns.size(), std::nullopt);

    const WellSpectrum ws = well_spectrum(rp, cs);
    const BarrierSpectrum bs = barrier_spectrum(rp, cs);
    const double s = zpe_shift_exact(ws, bs, rp.omega);
    const double k = kappa(ws, bs, cs.beta, rp.omega);

    for (std::size_t i = 0; i < cfg.columns.size(); ++i) {
        auto& cell = row.cells[i];
        switch (cfg.columns[i]) {
            case Column::LambdaPlus: cell = ws.lambda_plus; break;
            case Column::LambdaMinus: cell = ws.lambda_minus; break;
            case Column::LambdaB1: cell = bs.stable.at(0); break;
            case Column::LambdaB2:
                if (bs.stable.size() > 1) cell = bs.stable[1];
                break;
            case Column::LambdaUnstable: cell = bs.lambda_unstable; break;
            case Column::SShift: cell = s; break;
            case Column::Kappa: cell = k; break;
            case Column::KappaStar: cell = kappa_star(ws, bs, cs.beta, rp.omega); break;
            case Column::KappaGH: cell = kappa_gh(bs, rp.omega_b); break;
            case Column::KappaZPE: cell = kappa_zpe(s, cs.beta); break;
            case Column::KappaCentroid:
                try {
                    cell = kappa_centroid(ws, bs, cs.beta, rp.omega, rp.omega_b);
                } catch (const CrossoverTemperature&) {
                    row.status = "crossover";
                }
                break;
            case Column::DeltaG: cell = delta_g(k, cs.beta); break;
            case Column::SPert:
                try {
                    cell = zpe_shift_pert(rp, cs);
                } catch (const ResonanceDivergence&) {
                    row.status = "resonance";
                }
                break;
            case Column::LambdaUnstablePert:
                try {
                    cell = barrier_freqs_pert(rp, cs).second;
                } catch (const ResonanceDivergence&) {
                    row.status = "resonance";
                }
                break;
            case Column::Phi1: {
                const ChannelSpec ch1{rp.omega_b, rp.eta_b, rp.e_a};
                const SharedWell shared{rp.omega, rp.eta, cs.omega_c,
                                        cs.beta, cs.n_molecules, cs.mode};
                cell = branching_ratio(ch1, *cfg.second_channel, shared);
                break;
            }
        }
    }
    return row;
}

} // namespace

void RunConfig::validate() const {
    reaction.validate();
    cavity.validate();
    sweep.validate();
    if (columns.empty()) throw DomainError("config: no output columns requested");
    for (Column c : columns)
        if (c == Column::Phi1 && !second_channel)
            throw DomainError("config: phi1 column requires a second channel");
}

SweepResult run_sweep(const RunConfig& cfg) {
    return run_sweeps({cfg});
}

SweepResult run_sweeps(const std::vector<RunConfig>& cfgs) {
    if (cfgs.empty()) throw DomainError("run_sweeps: no configs");
    SweepResult out;
    out.param = variable_name(cfgs.front().sweep.variable);
    out.columns = cfgs.front().columns;
    for (const RunConfig& cfg : cfgs) {
        cfg.validate();
        if (cfg.columns != out.columns || variable_name(cfg.sweep.variable) != out.param)
            throw DomainError("run_sweeps: curve configs must share columns and variable");
        for (double v : cfg.sweep.grid()) out.rows.push_back(evaluate_point(cfg, v));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> single_point(const RunConfig& cfg) {
    cfg.reaction.validate();
    cfg.cavity.validate();
    if (cfg.columns.empty()) throw DomainError("config: no output columns requested");
    for (Column c : cfg.columns)
        if (c == Column::Phi1 && !cfg.second_channel)
            throw DomainError("config: phi1 column requires a second channel");

    RunConfig one = cfg;
    one.sweep.variable = SweepVariable::OmegaC;
    one.sweep.start = cfg.cavity.omega_c;
    one.sweep.stop = cfg.cavity.omega_c * 2;  // unused beyond validation
    one.sweep.steps = 2;
    const Row row = evaluate_point(one, cfg.cavity.omega_c);

    std::vector<std::pair<std::string, std::string>> out;
    char buf[64];
    for (std::size_t i = 0; i < cfg.columns.size(); ++i) {
        std::string value = "n/a";
        if (row.cells[i]) {
            std::snprintf(buf, sizeof buf, "%.11e", *row.cells[i]);
            value = buf;
        }
        out.emplace_back(column_name(cfg.columns[i]), value);
    }
    out.emplace_back("status", row.status);
    return out;
}

namespace {

RunConfig base_config() {
    RunConfig cfg;
    cfg.reaction = ReactionParams{1.0, 0.5, 0.0, 0.1, 0.1};
    cfg.cavity = CavitySetup{1.0, 1, CouplingMode::Incoherent, 10.0};
    cfg.sweep = SweepSpec{SweepVariable::OmegaC, 0.25, 4.0, 151, SweepScale::Linear};
    return cfg;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

std::vector<std::string> preset_names() {
    return {"fig1", "fig2a", "fig2b", "fig2c", "fig2d", "fig3", "fig4a", "fig4b",
            "fig4c", "fig5", "s1a", "s1b", "s2", "s3", "s4"};
}

Preset preset(const std::string& name) {
    Preset p;
    p.name = name;

    if (name == "fig1") {
        p.description = "kappa, kappa_GH, kappa_ZPE vs omega_c; omega_b=0.5, "
                        "eta=eta_b=0.1; curves beta in {1,5,10}";
        for (double beta : {1.0, 5.0, 10.0}) {
            RunConfig cfg = base_config();
            cfg.curve = "beta=" + fmt(beta);
            cfg.cavity.beta = beta;
            cfg.columns = {Column::Kappa, Column::KappaGH, Column::KappaZPE};
            p.curves.push_back(cfg);
        }
    } else if (name == "fig2a") {
        p.description = "well polariton frequencies lambda_+/- vs omega_c at eta=0.1";
        RunConfig cfg = base_config();
        cfg.curve = "eta=0.1";
        cfg.columns = {Column::LambdaPlus, Column::LambdaMinus};
        p.curves.push_back(cfg);
    } else if (name == "fig2b" || name == "fig2c" || name == "s2") {
        p.description = name == "fig2c"
                            ? "kappa vs omega_c at beta=10 for eta in {0.05,0.1,0.2}"
                            : "ZPE shift S (and lambda_unstable for s2) vs omega_c with "
                              "perturbative columns, eta in {0.05,0.1,0.2}";
        for (double eta : {0.05, 0.1, 0.2}) {
            RunConfig cfg = base_config();
            cfg.curve = "eta=" + fmt(eta);
            cfg.reaction.eta = cfg.reaction.eta_b = eta;
            if (name == "fig2c") {
                cfg.columns = {Column::Kappa};
            } else if (name == "fig2b") {
                cfg.columns = {Column::SShift, Column::SPert};
                cfg.include_perturbative = true;
            } else {
                cfg.columns = {Column::SShift, Column::LambdaUnstable, Column::SPert,
                               Column::LambdaUnstablePert};
                cfg.include_perturbative = true;
            }
            p.curves.push_back(cfg);
        }
    } else if (name == "fig2d") {
        p.description = "kappa vs eta at omega_c=1, beta=10 (eta_b swept with eta)";
        RunConfig cfg = base_config();
        cfg.curve = "omega_c=1";
        cfg.sweep = SweepSpec{SweepVariable::Eta, 0.01, 0.3, 151, SweepScale::Linear};
        cfg.columns = {Column::Kappa};
        p.curves.push_back(cfg);
    } else if (name == "fig3") {
        p.description = "branching ratio phi1 vs omega_c; channel 1 (omega_b=0.5, "
                        "eta_b=0.1), channel 2 omega_b=1.2, eta_b2 in {0.10,0.11,0.12}; "
                        "beta=5, equal activation energies";
        for (double eta_b2 : {0.10, 0.11, 0.12}) {
            RunConfig cfg = base_config();
            cfg.curve = "eta_b2=" + fmt(eta_b2);
            cfg.cavity.beta = 5.0;
            cfg.sweep.start = 0.1;
            cfg.columns = {Column::Phi1};
            cfg.second_channel = ChannelSpec{1.2, eta_b2, 0.0};
            p.curves.push_back(cfg);
        }
    } else if (name == "fig4a" || name == "fig4b" || name == "s4") {
        p.description = name == "s4"
                            ? "incoherent S and lambda_unstable vs omega_c for N in "
                              "{1,2,4,8,16} with perturbative columns"
                            : "kappa vs omega_c for N in {1,2,4,8,16}, " +
                                  std::string(name == "fig4a" ? "incoherent" : "coherent") +
                                  " TST";
        for (int n : {1, 2, 4, 8, 16}) {
            RunConfig cfg = base_config();
            cfg.curve = "N=" + fmt(n);
            cfg.cavity.n_molecules = n;
            cfg.cavity.mode = name == "fig4b" ? CouplingMode::Coherent
                                              : CouplingMode::Incoherent;
            if (name == "s4") {
                cfg.columns = {Column::SShift, Column::LambdaUnstable, Column::SPert,
                               Column::LambdaUnstablePert};
                cfg.include_perturbative = true;
            } else {
                cfg.columns = {Column::Kappa};
            }
            p.curves.push_back(cfg);
        }
    } else if (name == "fig4c") {
        p.description = "kappa vs N at omega_c=1 for incoherent and coherent TST; "
                        "N grid 1..32";
        for (CouplingMode mode : {CouplingMode::Incoherent, CouplingMode::Coherent}) {
            RunConfig cfg = base_config();
            cfg.curve = mode == CouplingMode::Incoherent ? "incoherent" : "coherent";
            cfg.cavity.mode = mode;
            cfg.sweep = SweepSpec{SweepVariable::NMolecules, 1, 32, 32, SweepScale::Linear};
            cfg.columns = {Column::Kappa};
            p.curves.push_back(cfg);
        }
    } else if (name == "fig5") {
        p.description = "kappa_centroid vs omega_c; curves beta in {1,5,10}; "
                        "rows past the crossover are status-marked";
        for (double beta : {1.0, 5.0, 10.0}) {
            RunConfig cfg = base_config();
            cfg.curve = "beta=" + fmt(beta);
            cfg.cavity.beta = beta;
            cfg.columns = {Column::KappaCentroid, Column::Kappa};
            cfg.include_centroid = true;
            p.curves.push_back(cfg);
        }
    } else if (name == "s1a") {
        p.description = "kappa vs omega_c; curves beta in {1,5,10,20}";
        for (double beta : {1.0, 5.0, 10.0, 20.0}) {
            RunConfig cfg = base_config();
            cfg.curve = "beta=" + fmt(beta);
            cfg.cavity.beta = beta;
            cfg.columns = {Column::Kappa};
            p.curves.push_back(cfg);
        }
    } else if (name == "s1b") {
        p.description = "kappa vs beta at omega_c=1";
        RunConfig cfg = base_config();
        cfg.curve = "omega_c=1";
        cfg.sweep = SweepSpec{SweepVariable::Beta, 0.1, 20.0, 151, SweepScale::Linear};
        cfg.columns = {Column::Kappa};
        p.curves.push_back(cfg);
    } else if (name == "s3") {
        p.description = "omega_b=1.5 variant: S and kappa vs omega_c, curves beta in "
                        "{1,5,10}, eta=eta_b=0.1";
        for (double beta : {1.0, 5.0, 10.0}) {
            RunConfig cfg = base_config();
            cfg.curve = "beta=" + fmt(beta);
            cfg.reaction.omega_b = 1.5;
            cfg.cavity.beta = beta;
            cfg.columns = {Column::SShift, Column::Kappa, Column::SPert};
            cfg.include_perturbative = true;
            p.curves.push_back(cfg);
        }
    } else {
        std::string names;
        for (const auto& n : preset_names()) names += (names.empty() ? "" : ", ") + n;
        throw DomainError("unknown preset '" + name + "'; valid presets: " + names);
    }
    return p;
}

std::string to_csv(const SweepResult& result) {
    std::string out = "curve,param,value";
    for (Column c : result.columns) {
        out += ',';
        out += column_name(c);
    }
    out += ",status\n";

    char buf[64];
    for (const Row& row : result.rows) {
        out += row.curve;
        out += ',';
        out += result.param;
        std::snprintf(buf, sizeof buf, ",%.11e", row.value);
        out += buf;
        for (const auto& cell : row.cells) {
            if (cell) {
                std::snprintf(buf, sizeof buf, ",%.11e", *cell);
                out += buf;
            } else {
                out += ',';
            }
        }
        out += ',';
        out += row.status;
        out += '\n';
    }
    return out;
}

void write_csv(const SweepResult& result, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot open for writing: " + path);
    f << to_csv(result);
    if (!f) throw std::ios_base::failure("write failed: " + path);
}

std::string plot_script(const SweepResult& result, const std::string& csv_path) {
    // gnuplot; column lookup by header name, no computation in the script.
    std::vector<std::string> curves;
    for (const Row& row : result.rows)
        if (curves.empty() || curves.back() != row.curve) curves.push_back(row.curve);

    std::ostringstream os;
    os << "set datafile separator ','\n";
    os << "set key autotitle columnhead\n";
    os << "set xlabel '" << result.param << "'\n";
    bool has_phi = false;
    for (Column c : result.columns) has_phi = has_phi || c == Column::Phi1;
    if (has_phi) os << "phi_guide(x) = 0.5\n";
    os << "plot \\\n";
    bool first = true;
    for (const std::string& curve : curves) {
        for (Column c : result.columns) {
            if (!first) os << ", \\\n";
            first = false;
            // Row selection by curve label; empty cells make gaps.
            os << "  '" << csv_path << "' using (strcol('curve') eq '" << curve
               << "' ? column('value') : NaN):'" << column_name(c)
               << "' with lines title '" << curve << " " << column_name(c) << "'";
        }
    }
    if (has_phi) os << ", \\\n  phi_guide(x) title '50%'";
    os << '\n';
    return os.str();
}

void write_plot_script(const SweepResult& result, const std::string& csv_path,
                       const std::string& script_path) {
    std::ofstream f(script_path, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot open for writing: " + script_path);
    f << plot_script(result, csv_path);
    if (!f) throw std::ios_base::failure("write failed: " + script_path);
}

} // namespace vsc
