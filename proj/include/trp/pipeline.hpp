#pragma once

#include <cstdint>
#include <vector>

#include "trp/kit.hpp"
#include "trp/level.hpp"
#include "trp/mcts.hpp"
#include "trp/rng.hpp"

namespace trp {

/// Axis-aligned rectangle inside a sketch; after partitioning both dimensions
/// are bounded by the kit parameter s.
struct Segment {
    Position origin;
    int width = 1;
    int height = 1;

    int area() const { return width * height; }
    bool operator==(const Segment&) const = default;
};

/// A death site ranked by its share of all observed deaths.
struct ThreatCandidate {
    Position position;
    char cause = '\0';
    int deaths = 0;
    double relevance = 0.0;

    bool operator==(const ThreatCandidate&) const = default;
};

/// Rectangular patch of token symbols cut from a source level.
struct LevelPatch {
    int width = 0;
    int height = 0;
    std::vector<char> tokens;  // row-major

    char at(int col, int row) const {
        return tokens[static_cast<std::size_t>(row) * width + col];
    }
};

enum class SketchPolicy { PathCarve };

/// Visited positions carve 0 (open); everything else is 1 (structure).
/// Throws EmptyRecord when the record visited nothing.
BinarySketch reconstruct_sketch(const PlaythroughRecord& record, int width, int height,
                                SketchPolicy policy = SketchPolicy::PathCarve);

/// Recursive binary splitting: any region wider or taller than s is split
/// along its longer violating axis at a uniformly random interior line.
/// The result tiles the grid exactly.
std::vector<Segment> partition_sketch(int width, int height, int s, RandomStream& rng);

/// Count of matching cells between two equal-sized sketches.
/// Throws DimensionMismatch.
int binary_similarity(const BinarySketch& a, const BinarySketch& b);

/// Scores every window of the source against the sketch restricted to the
/// segment and returns the token patch of one maximum-score window, chosen
/// uniformly at random. The source should already be threat-stripped.
/// Throws SegmentLargerThanSource.
LevelPatch match_segment(const BinarySketch& sketch, const Segment& seg, const Level& source,
                         RandomStream& rng);

/// Fills a whole sketch: partitions it, then pastes the best-matching source
/// window per segment, larger segments first (ties by row-major origin).
Level fill(const BinarySketch& sketch, const Level& stripped_source, int s, RandomStream& rng);

/// Groups failure events by (position, cause) and ranks them by d_e / d_t,
/// descending; ties by row-major position, then cause symbol.
std::vector<ThreatCandidate> rank_threats(const PlaythroughRecord& record);

/// Places cause tokens at candidate positions in rank order, skipping cells
/// that are not empty, until the cumulative relevance of placed candidates
/// reaches e. e = 0 places nothing; e = 1 attempts every candidate.
Level place_threats(const Level& level, const std::vector<ThreatCandidate>& ranked, double e);

struct GenerationParams {
    int t = 1;
    int s = 2;
    double e = 0.25;
};

/// Intermediate artifacts of one generation, kept for audits and debugging.
struct GenerationResult {
    Level level;    // final output
    Level filled;   // raw fill output, before repair and threat placement
    BinarySketch sketch;
    std::vector<Segment> segments;
    std::vector<ThreatCandidate> ranked;
    PlaythroughRecord record;
    GenerationParams params;
};

/// Full TRP pipeline: play (t searches) -> reconstruct -> partition + fill
/// from the threat-stripped source -> place threats -> restore required
/// tokens. Deterministic for a fixed (source, kit, budget, seed).
GenerationResult generate(const Level& source, const KnowledgeKit& kit,
                          const SearchBudget& budget, std::uint64_t seed);

/// Independent uniform draws from each choice set, in t, s, e order.
GenerationParams sample_params(const ParamRanges& ranges, RandomStream& rng);

}  // namespace trp
