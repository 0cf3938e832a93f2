#pragma once

#include "rumorcluster/evaluation.hpp"
#include "rumorcluster/features.hpp"
#include "rumorcluster/post.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace rumorcluster {

enum class Algorithm { RbfSpectral, NnSpectral, KMeans, FuzzyCMeans };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::RbfSpectral,
                                               Algorithm::NnSpectral, Algorithm::KMeans,
                                               Algorithm::FuzzyCMeans};
inline constexpr FeatureSet kAllFeatureSets[] = {FeatureSet::Content, FeatureSet::Social,
                                                 FeatureSet::Both};

const char* algorithm_name(Algorithm a);          // config token, e.g. "rbf_spectral"
const char* algorithm_display_name(Algorithm a);  // report label, e.g. "RBF Spectral"

struct KmeansParams {
    std::size_t n_init = 10;
    std::size_t max_iter = 300;
};

struct FuzzyParams {
    double m = 2.0;
    double tol = 1e-5;
    std::size_t max_iter = 300;
};

struct Hyperparameters {
    std::optional<double> sigma;   // absent = median heuristic
    std::size_t knn_k = 10;
    KmeansParams kmeans;
    FuzzyParams fuzzy;
};

struct PcaConfig {
    bool enabled = true;
    std::size_t d = 2;
};

enum class ReportFormat { Csv, Markdown };

/// One experiment grid: events x algorithms x feature sets, plus
/// hyperparameters, seed and output destination. Parsed from a JSON document
/// with exactly these keys; unknown keys are rejected.
struct ExperimentConfig {
    std::optional<std::filesystem::path> pheme_dir;
    std::vector<std::filesystem::path> jsonl_paths;
    std::vector<std::string> events;              // empty = all loaded events
    std::vector<FeatureSet> feature_sets;         // canonical order, deduplicated
    std::vector<Algorithm> algorithms;            // canonical order, deduplicated
    Hyperparameters hyper;
    PcaConfig pca;
    std::uint64_t seed = 0;
    std::filesystem::path output_path;
    ReportFormat output_format = ReportFormat::Csv;
};

/// Parse and validate a config document. Throws ConfigError.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// One report row per grid cell. Rows with a non-empty error carry no
/// metrics; the majority baseline is always present for a loaded event.
struct ReportRow {
    std::string event;
    Algorithm algorithm = Algorithm::RbfSpectral;
    FeatureSet feature_set = FeatureSet::Content;
    std::optional<Metrics> metrics;
    double majority_baseline = 0.0;
    bool degenerate = false;
    std::size_t iterations = 0;
    double wall_seconds = 0.0;   // observability only; never serialized
    std::string error;
};

struct EvalReport {
    std::vector<ReportRow> rows;
};

/// Load the configured input, then run every (event, algorithm, feature set)
/// cell: build matrix -> min-max normalize -> optional PCA -> cluster ->
/// align labels -> metrics. Cell errors become error rows; the run
/// continues. Cells run in parallel (RUMORCLUSTER_WORKERS overrides the
/// worker count) but rows come back in canonical order, and cell i is seeded
/// with config.seed + i, so the report is a pure function of the config.
EvalReport run_experiment(const ExperimentConfig& config);

// --- report serialization ---------------------------------------------------

/// CSV: fixed header, metrics as percentages with 2 decimals, NA as "-".
std::string report_to_csv(const EvalReport& report);

/// Markdown: one table per event, algorithm rows, A/P/R/F1 column group per
/// feature set, majority baseline in the event heading.
std::string report_to_markdown(const EvalReport& report);

/// Inverse of report_to_csv. Throws InputError with the offending line.
EvalReport parse_report_csv(const std::string& text);

/// Render and write a report. Throws std::invalid_argument("nothing to emit")
/// on an empty report, InputError on an unwritable path.
void emit_report(const EvalReport& report, ReportFormat format,
                 const std::filesystem::path& path);

} // namespace rumorcluster
