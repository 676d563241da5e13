#pragma once

#include <vector>

#include "trp/game.hpp"
#include "trp/level.hpp"

namespace trp {

struct MetricsReport {
    double playable_fraction = 0.0;
    double plagiarism_mean = 0.0;
    double plagiarism_stdev = 0.0;
    double self_similarity_mean = 0.0;
    double self_similarity_stdev = 0.0;
    int population_size = 0;
    int source_count = 1;  // >1 means plagiarism is the max match over sources
};

/// Required elements (exactly one player start, a key and a door) plus
/// flood-fill reachability of a key and a door from the start. Enemies are
/// passable; only solid tiles block.
bool playability_dungeon(const Level& level);

/// Geometric reachability of the goal column from the first open cell of
/// column 2, searched over (position, jump phase) under the platformer
/// movement rules with enemies ignored. Throws NoStartPosition when column 2
/// is fully solid.
bool playability_platformer(const Level& level, const PlatformerRules& rules = {});

/// Percentage of directly matching tile positions. Throws DimensionMismatch.
double plagiarism(const Level& generated, const Level& source);

/// Mean plagiarism over all unordered pairs of the population.
/// Throws PopulationTooSmall for fewer than two levels.
double self_similarity(const std::vector<Level>& population);

/// Population report: playability by the domain checker, plagiarism against
/// the source(s) as mean +/- sample standard deviation, pairwise
/// self-similarity likewise. With several sources a level's plagiarism is its
/// maximum match over them.
MetricsReport evaluate_population(const std::vector<Level>& population,
                                  const std::vector<Level>& sources, const Domain& domain);

}  // namespace trp
