#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "trp/game.hpp"
#include "trp/kit.hpp"
#include "trp/markov.hpp"
#include "trp/mcts.hpp"
#include "trp/metrics.hpp"

namespace trp {

/// Alphabet file: JSON object mapping each symbol to its category list, with
/// exactly one symbol carrying "empty".
std::shared_ptr<const TokenAlphabet> load_alphabet(const std::filesystem::path& path);

/// Domain file: alphabet reference, rules block, goal/failure specs and the
/// threat token list. Relative references resolve against the file location.
std::shared_ptr<const Domain> load_domain(const std::filesystem::path& path);

/// Kit file: domain reference plus the numeric parameters; holds both the
/// fixed values and the variety ranges.
struct KitFile {
    KnowledgeKit kit;
    ParamRanges ranges;
};
KitFile load_kit(const std::filesystem::path& path);

Level load_level(const std::filesystem::path& path,
                 std::shared_ptr<const TokenAlphabet> alphabet);
void save_level(const Level& level, const std::filesystem::path& path);

/// Batch configuration for the CLI; flag values may override fields.
struct ExperimentConfig {
    std::filesystem::path kit_path;
    std::vector<std::filesystem::path> sources;
    SearchBudget budget;
    bool budget_from_config = false;
    int population = 50;
    std::uint64_t base_seed = 1;
    std::filesystem::path out_dir;
    std::string mode = "fixed";  // fixed | variety
};
ExperimentConfig load_config(const std::filesystem::path& path);

std::string trace_to_json(const PlaythroughRecord& record);
void save_trace(const PlaythroughRecord& record, const std::filesystem::path& path);

std::string model_to_json(const MarkovModel& model);

/// CSV with the fixed column order:
/// playable, plagiarism_mean, plagiarism_std, selfsim_mean, selfsim_std, n.
std::string report_csv_header(bool with_label);
std::string report_csv_row(const MetricsReport& report, const std::string& label = "");
std::string report_pretty(const MetricsReport& report, const std::string& label);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace trp
