#include "trp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace trp {

bool playability_dungeon(const Level& level) {
    if (level.count_category(TokenCategory::PlayerStart) != 1) return false;
    if (level.count_category(TokenCategory::Key) < 1) return false;
    if (level.count_category(TokenCategory::Door) < 1) return false;

    const Position start = level.find_category(TokenCategory::PlayerStart).front();
    std::vector<char> seen(static_cast<std::size_t>(level.width()) * level.height(), 0);
    std::queue<Position> frontier;
    frontier.push(start);
    seen[static_cast<std::size_t>(start.row) * level.width() + start.col] = 1;
    bool key = false, door = false;
    while (!frontier.empty()) {
        const Position p = frontier.front();
        frontier.pop();
        if (level.is(p, TokenCategory::Key)) key = true;
        if (level.is(p, TokenCategory::Door)) door = true;
        if (key && door) return true;
        const Position next[4] = {
            {p.col, p.row - 1}, {p.col, p.row + 1}, {p.col - 1, p.row}, {p.col + 1, p.row}};
        for (const Position& n : next) {
            if (!level.in_bounds(n) || level.is(n, TokenCategory::Solid)) continue;
            char& mark = seen[static_cast<std::size_t>(n.row) * level.width() + n.col];
            if (!mark) {
                mark = 1;
                frontier.push(n);
            }
        }
    }
    return key && door;
}

namespace {

/// Search state for the geometric platformer check: where the player is and
/// how much jump ascent remains.
struct MoveState {
    Position pos;
    int phase = 0;

    bool operator<(const MoveState& o) const {
        if (!(pos == o.pos)) return pos < o.pos;
        return phase < o.phase;
    }
};

bool solid_at(const Level& level, Position p) {
    return level.in_bounds(p) && level.is(p, TokenCategory::Solid);
}

}  // namespace

bool playability_platformer(const Level& level, const PlatformerRules& rules) {
    std::set<int> goal_cols;
    for (const Position& p : level.find_category(TokenCategory::Goal)) goal_cols.insert(p.col);
    if (goal_cols.empty()) return false;

    // First open cell of column 2, top to bottom.
    const int start_col = std::min(2, level.width() - 1);
    int start_row = -1;
    for (int row = 0; row < level.height(); ++row) {
        if (!level.is(start_col, row, TokenCategory::Solid)) {
            start_row = row;
            break;
        }
    }
    if (start_row < 0) throw NoStartPosition();

    std::set<MoveState> seen;
    std::queue<MoveState> frontier;
    const MoveState start{{start_col, start_row}, 0};
    frontier.push(start);
    seen.insert(start);

    while (!frontier.empty()) {
        const MoveState cur = frontier.front();
        frontier.pop();
        if (goal_cols.count(cur.pos.col)) return true;

        const Position below{cur.pos.col, cur.pos.row + 1};
        const bool grounded = level.in_bounds(below) && level.is(below, TokenCategory::Solid);

        for (int h : {-1, 0, 1}) {
            for (int jump = 0; jump < 2; ++jump) {
                if (jump && !grounded) continue;
                MoveState next = cur;
                if (jump) next.phase = rules.jump_height;
                const Position side{next.pos.col + h, next.pos.row};
                if (h != 0 && level.in_bounds(side) && !solid_at(level, side)) next.pos = side;
                if (next.phase > 0) {
                    const Position up{next.pos.col, next.pos.row - 1};
                    if (level.in_bounds(up) && !solid_at(level, up)) {
                        next.pos = up;
                        --next.phase;
                    } else {
                        next.phase = 0;
                    }
                } else {
                    const Position down{next.pos.col, next.pos.row + 1};
                    if (down.row >= level.height()) continue;  // fell below the screen
                    if (!solid_at(level, down)) next.pos = down;
                }
                if (seen.insert(next).second) frontier.push(next);
            }
        }
    }
    return false;
}

double plagiarism(const Level& generated, const Level& source) {
    if (generated.width() != source.width() || generated.height() != source.height()) {
        throw DimensionMismatch(generated.width(), generated.height(), source.width(),
                                source.height());
    }
    int matches = 0;
    for (int row = 0; row < generated.height(); ++row) {
        for (int col = 0; col < generated.width(); ++col) {
            if (generated.at(col, row) == source.at(col, row)) ++matches;
        }
    }
    return 100.0 * static_cast<double>(matches) /
           static_cast<double>(generated.width() * generated.height());
}

double self_similarity(const std::vector<Level>& population) {
    if (population.size() < 2) throw PopulationTooSmall();
    double sum = 0.0;
    int pairs = 0;
    for (std::size_t i = 0; i < population.size(); ++i) {
        for (std::size_t j = i + 1; j < population.size(); ++j) {
            sum += plagiarism(population[i], population[j]);
            ++pairs;
        }
    }
    return sum / pairs;
}

namespace {

struct MeanStdev {
    double mean = 0.0;
    double stdev = 0.0;
};

MeanStdev sample_stats(const std::vector<double>& xs) {
    MeanStdev out;
    if (xs.empty()) return out;
    for (double x : xs) out.mean += x;
    out.mean /= static_cast<double>(xs.size());
    if (xs.size() < 2) return out;
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.stdev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    return out;
}

}  // namespace

MetricsReport evaluate_population(const std::vector<Level>& population,
                                  const std::vector<Level>& sources, const Domain& domain) {
    MetricsReport report;
    report.population_size = static_cast<int>(population.size());
    report.source_count = static_cast<int>(sources.size());
    if (population.empty()) return report;

    int playable = 0;
    std::vector<double> plag;
    plag.reserve(population.size());
    for (const Level& level : population) {
        bool ok = false;
        try {
            ok = domain.kind == DomainKind::Dungeon
                     ? playability_dungeon(level)
                     : playability_platformer(level, domain.platformer);
        } catch (const NoStartPosition&) {
            ok = false;
        }
        if (ok) ++playable;

        double best = 0.0;
        for (const Level& source : sources) best = std::max(best, plagiarism(level, source));
        plag.push_back(best);
    }
    report.playable_fraction = static_cast<double>(playable) / population.size();

    const MeanStdev p = sample_stats(plag);
    report.plagiarism_mean = p.mean;
    report.plagiarism_stdev = p.stdev;

    if (population.size() >= 2) {
        std::vector<double> sims;
        sims.reserve(population.size() * (population.size() - 1) / 2);
        for (std::size_t i = 0; i < population.size(); ++i) {
            for (std::size_t j = i + 1; j < population.size(); ++j) {
                sims.push_back(plagiarism(population[i], population[j]));
            }
        }
        const MeanStdev s = sample_stats(sims);
        report.self_similarity_mean = s.mean;
        report.self_similarity_stdev = s.stdev;
    }
    return report;
}

}  // namespace trp
