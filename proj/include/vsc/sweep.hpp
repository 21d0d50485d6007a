#pragma once

// Parameter sweeps and figure presets: one row per grid point, rendered as
// CSV with deterministic byte-identical output.  Crossover/resonance
// errors become empty cells plus a status column; a sweep never aborts on
// them.

#include <optional>
#include <string>
#include <vector>

#include "vsc/model.hpp"
#include "vsc/rates.hpp"

namespace vsc {

enum class SweepVariable { OmegaC, Beta, Eta, NMolecules };
enum class SweepScale { Linear, Log };

struct SweepSpec {
    SweepVariable variable = SweepVariable::OmegaC;
    double start = 0.25;
    double stop  = 4.0;
    int steps    = 151;
    SweepScale scale = SweepScale::Linear;

    void validate() const;
    std::vector<double> grid() const;
};

/// Column identifiers, in the declared output order.
enum class Column {
    LambdaPlus,
    LambdaMinus,
    LambdaB1,
    LambdaB2,
    LambdaUnstable,
    SShift,
    Kappa,
    KappaStar,
    KappaGH,
    KappaZPE,
    KappaCentroid,
    DeltaG,
    SPert,
    LambdaUnstablePert,
    Phi1,
};

const char* column_name(Column c);

struct RunConfig {
    std::string curve;  ///< label distinguishing curves of one preset
    ReactionParams reaction;
    CavitySetup cavity;
    SweepSpec sweep;
    std::vector<Column> columns;
    bool include_perturbative = false;
    bool include_centroid     = false;
    /// When set, a Phi1 column is computed against this second channel.
    std::optional<ChannelSpec> second_channel;

    void validate() const;
};

struct Row {
    std::string curve;
    double value;  ///< swept-variable value
    std::vector<std::optional<double>> cells;  ///< one per config column
    std::string status;  ///< "ok", "crossover" or "resonance"
};

struct SweepResult {
    std::string param;  ///< swept-variable name
    std::vector<Column> columns;
    std::vector<Row> rows;
};

/// Evaluates one grid; deterministic row order.
SweepResult run_sweep(const RunConfig& cfg);

/// Evaluates several configs (one per curve) into a single table.
SweepResult run_sweeps(const std::vector<RunConfig>& cfgs);

/// Single-point breakdown for the named columns (no sweep).
std::vector<std::pair<std::string, std::string>> single_point(const RunConfig& cfg);

struct Preset {
    std::string name;
    std::string description;
    std::vector<RunConfig> curves;
};

/// Fully parameterized figure preset; throws DomainError for unknown names
/// (the message lists the valid ones).
Preset preset(const std::string& name);

std::vector<std::string> preset_names();

/// CSV: header then rows, 12 significant digits, scientific notation,
/// empty cells for absent values, trailing newline.  Byte-identical across
/// repeated runs of the same config.
std::string to_csv(const SweepResult& result);
void write_csv(const SweepResult& result, const std::string& path);

/// Plain gnuplot script reading the CSV by column name; no computation
/// inside the script.
std::string plot_script(const SweepResult& result, const std::string& csv_path);
void write_plot_script(const SweepResult& result, const std::string& csv_path,
                       const std::string& script_path);

} // namespace vsc
