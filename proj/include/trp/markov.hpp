#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "trp/level.hpp"
#include "trp/rng.hpp"

namespace trp {

/// L-shaped context of a 2x2 window: the three tiles around the top-right.
struct MarkovContext {
    char bottom_left = '\0';
    char bottom_right = '\0';
    char top_left = '\0';

    auto operator<=>(const MarkovContext&) const = default;
};

/// 2x2-window tile model: empirical distribution of the top-right tile given
/// the remaining three tiles, learned with equal weighting per occurrence.
class MarkovModel {
public:
    using Distribution = std::vector<std::pair<char, double>>;  // symbol -> probability

    MarkovModel(std::map<MarkovContext, Distribution> table,
                std::shared_ptr<const TokenAlphabet> alphabet,
                std::vector<std::string> border_columns, std::vector<std::string> border_rows);

    const std::map<MarkovContext, Distribution>& table() const { return table_; }
    const TokenAlphabet& alphabet() const { return *alphabet_; }
    std::shared_ptr<const TokenAlphabet> alphabet_ptr() const { return alphabet_; }
    const std::vector<std::string>& border_columns() const { return border_columns_; }
    const std::vector<std::string>& border_rows() const { return border_rows_; }

    /// Sampled top-right tile; the empty token for unseen contexts.
    char sample(const MarkovContext& ctx, RandomStream& rng) const;

    bool operator==(const MarkovModel& other) const {
        return table_ == other.table_ && border_columns_ == other.border_columns_ &&
               border_rows_ == other.border_rows_;
    }

private:
    std::map<MarkovContext, Distribution> table_;
    std::shared_ptr<const TokenAlphabet> alphabet_;
    std::vector<std::string> border_columns_;  // training columns, top-to-bottom strings
    std::vector<std::string> border_rows_;     // training bottom rows
};

/// Counts every 2x2 window across the levels and normalizes per context.
/// Throws EmptyTrainingSet.
MarkovModel train(const std::vector<Level>& levels);

/// Seeds the left column and bottom row from sampled training borders, then
/// fills left-to-right, bottom-to-top, sampling each tile from its L-context.
Level mc_generate(const MarkovModel& model, int width, int height, RandomStream& rng);

}  // namespace trp
