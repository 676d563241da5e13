#include "trp/markov.hpp"

#include <algorithm>

namespace trp {

MarkovModel::MarkovModel(std::map<MarkovContext, Distribution> table,
                         std::shared_ptr<const TokenAlphabet> alphabet,
                         std::vector<std::string> border_columns,
                         std::vector<std::string> border_rows)
    : table_(std::move(table)), alphabet_(std::move(alphabet)),
      border_columns_(std::move(border_columns)), border_rows_(std::move(border_rows)) {}

char MarkovModel::sample(const MarkovContext& ctx, RandomStream& rng) const {
    const auto it = table_.find(ctx);
    if (it == table_.end()) return alphabet_->empty_symbol();  // unseen state
    const double u = rng.uniform_real01();
    double acc = 0.0;
    for (const auto& [symbol, prob] : it->second) {
        acc += prob;
        if (u < acc) return symbol;
    }
    return it->second.back().first;  // guard against rounding at u ~ 1
}

MarkovModel train(const std::vector<Level>& levels) {
    if (levels.empty()) throw EmptyTrainingSet();

    std::map<MarkovContext, std::map<char, int>> counts;
    std::vector<std::string> columns;
    std::vector<std::string> bottom_rows;

    for (const Level& level : levels) {
        for (int row = 0; row + 1 < level.height(); ++row) {
            for (int col = 0; col + 1 < level.width(); ++col) {
                MarkovContext ctx;
                ctx.top_left = level.at(col, row);
                ctx.bottom_left = level.at(col, row + 1);
                ctx.bottom_right = level.at(col + 1, row + 1);
                counts[ctx][level.at(col + 1, row)] += 1;
            }
        }
        for (int col = 0; col < level.width(); ++col) {
            std::string column;
            for (int row = 0; row < level.height(); ++row) column.push_back(level.at(col, row));
            columns.push_back(std::move(column));
        }
        std::string bottom;
        for (int col = 0; col < level.width(); ++col) {
            bottom.push_back(level.at(col, level.height() - 1));
        }
        bottom_rows.push_back(std::move(bottom));
    }

    // Deduplicate borders so duplicate training levels leave the model unchanged.
    std::sort(columns.begin(), columns.end());
    columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
    std::sort(bottom_rows.begin(), bottom_rows.end());
    bottom_rows.erase(std::unique(bottom_rows.begin(), bottom_rows.end()), bottom_rows.end());

    std::map<MarkovContext, MarkovModel::Distribution> table;
    for (const auto& [ctx, outcomes] : counts) {
        int total = 0;
        for (const auto& [symbol, n] : outcomes) total += n;
        MarkovModel::Distribution dist;
        dist.reserve(outcomes.size());
        for (const auto& [symbol, n] : outcomes) {
            dist.emplace_back(symbol, static_cast<double>(n) / static_cast<double>(total));
        }
        table.emplace(ctx, std::move(dist));
    }
    return MarkovModel(std::move(table), levels.front().alphabet_ptr(), std::move(columns),
                       std::move(bottom_rows));
}

namespace {

char cyclic_at(const std::string& s, int i) {
    return s[static_cast<std::size_t>(i) % s.size()];
}

}  // namespace

Level mc_generate(const MarkovModel& model, int width, int height, RandomStream& rng) {
    Level out(width, height, model.alphabet_ptr());

    // Seed the bottom row, then the left column (the column owns the corner).
    const std::string& row_seed = model.border_rows()[rng.uniform_index(model.border_rows().size())];
    for (int col = 0; col < width; ++col) out.set(col, height - 1, cyclic_at(row_seed, col));
    const std::string& col_seed =
        model.border_columns()[rng.uniform_index(model.border_columns().size())];
    for (int row = 0; row < height; ++row) out.set(0, row, cyclic_at(col_seed, row));

    // Fill column by column, bottom to top: each cell is the top-right of an
    // L made of its left and lower neighbors.
    for (int col = 1; col < width; ++col) {
        for (int row = height - 2; row >= 0; --row) {
            MarkovContext ctx;
            ctx.top_left = out.at(col - 1, row);
            ctx.bottom_left = out.at(col - 1, row + 1);
            ctx.bottom_right = out.at(col, row + 1);
            out.set(col, row, model.sample(ctx, rng));
        }
    }
    return out;
}

}  // namespace trp
