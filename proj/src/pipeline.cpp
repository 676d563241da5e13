#include "trp/pipeline.hpp"

#include <algorithm>
#include <queue>

namespace trp {

BinarySketch reconstruct_sketch(const PlaythroughRecord& record, int width, int height,
                                SketchPolicy policy) {
    (void)policy;  // PathCarve is the only policy
    if (record.visited.empty()) throw EmptyRecord();
    BinarySketch sketch(width, height, 1);
    for (const Position& p : record.visited) {
        if (p.col >= 0 && p.row >= 0 && p.col < width && p.row < height) {
            sketch.set(p.col, p.row, 0);
        }
    }
    return sketch;
}

namespace {

void split_region(Segment region, int s, RandomStream& rng, std::vector<Segment>& out) {
    const bool wide = region.width > s;
    const bool tall = region.height > s;
    if (!wide && !tall) {
        out.push_back(region);
        return;
    }
    // Split the longer violating axis; prefer width on equal extents.
    const bool split_width = wide && (!tall || region.width >= region.height);
    if (split_width) {
        const int cut = rng.uniform_int(1, region.width - 1);
        split_region({region.origin, cut, region.height}, s, rng, out);
        split_region({{region.origin.col + cut, region.origin.row}, region.width - cut,
                      region.height},
                     s, rng, out);
    } else {
        const int cut = rng.uniform_int(1, region.height - 1);
        split_region({region.origin, region.width, cut}, s, rng, out);
        split_region({{region.origin.col, region.origin.row + cut}, region.width,
                      region.height - cut},
                     s, rng, out);
    }
}

}  // namespace

std::vector<Segment> partition_sketch(int width, int height, int s, RandomStream& rng) {
    std::vector<Segment> out;
    split_region({{0, 0}, width, height}, s, rng, out);
    return out;
}

int binary_similarity(const BinarySketch& a, const BinarySketch& b) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw DimensionMismatch(a.width(), a.height(), b.width(), b.height());
    }
    int matches = 0;
    for (int row = 0; row < a.height(); ++row) {
        for (int col = 0; col < a.width(); ++col) {
            if (a.at(col, row) == b.at(col, row)) ++matches;
        }
    }
    return matches;
}

namespace {

/// Matching-cell count between sketch[seg] and the source window at `at`,
/// without materializing sub-sketches.
int window_score(const BinarySketch& sketch, const Segment& seg, const BinarySketch& source_bin,
                 Position at) {
    int matches = 0;
    for (int row = 0; row < seg.height; ++row) {
        for (int col = 0; col < seg.width; ++col) {
            if (sketch.at(seg.origin.col + col, seg.origin.row + row) ==
                source_bin.at(at.col + col, at.row + row)) {
                ++matches;
            }
        }
    }
    return matches;
}

LevelPatch cut_patch(const Level& source, Position at, int width, int height) {
    LevelPatch patch;
    patch.width = width;
    patch.height = height;
    patch.tokens.reserve(static_cast<std::size_t>(width) * height);
    for (int row = 0; row < height; ++row) {
        for (int col = 0; col < width; ++col) {
            patch.tokens.push_back(source.at(at.col + col, at.row + row));
        }
    }
    return patch;
}

LevelPatch match_segment_impl(const BinarySketch& sketch, const Segment& seg,
                              const Level& source, const BinarySketch& source_bin,
                              RandomStream& rng) {
    if (seg.width > source.width() || seg.height > source.height()) {
        throw SegmentLargerThanSource(seg.width, seg.height, source.width(), source.height());
    }
    int best = -1;
    std::vector<Position> ties;
    for (int row = 0; row + seg.height <= source.height(); ++row) {
        for (int col = 0; col + seg.width <= source.width(); ++col) {
            const int score = window_score(sketch, seg, source_bin, {col, row});
            if (score > best) {
                best = score;
                ties.assign(1, {col, row});
            } else if (score == best) {
                ties.push_back({col, row});
            }
        }
    }
    const Position at = ties.size() == 1 ? ties.front() : ties[rng.uniform_index(ties.size())];
    return cut_patch(source, at, seg.width, seg.height);
}

}  // namespace

namespace {

Level fill_impl(const BinarySketch& sketch, const Level& stripped_source, int s,
                RandomStream& rng, std::vector<Segment>* segments_out) {
    std::vector<Segment> segments = partition_sketch(sketch.width(), sketch.height(), s, rng);
    // Larger segments first preserves large-scale structure; ties row-major.
    std::sort(segments.begin(), segments.end(), [](const Segment& a, const Segment& b) {
        if (a.area() != b.area()) return a.area() > b.area();
        return a.origin < b.origin;
    });

    const BinarySketch source_bin = binarize(stripped_source);
    Level out(sketch.width(), sketch.height(), stripped_source.alphabet_ptr());
    for (const Segment& seg : segments) {
        const LevelPatch patch = match_segment_impl(sketch, seg, stripped_source, source_bin, rng);
        for (int row = 0; row < seg.height; ++row) {
            for (int col = 0; col < seg.width; ++col) {
                out.set(seg.origin.col + col, seg.origin.row + row, patch.at(col, row));
            }
        }
    }
    if (segments_out) *segments_out = std::move(segments);
    return out;
}

}  // namespace

LevelPatch match_segment(const BinarySketch& sketch, const Segment& seg, const Level& source,
                         RandomStream& rng) {
    return match_segment_impl(sketch, seg, source, binarize(source), rng);
}

Level fill(const BinarySketch& sketch, const Level& stripped_source, int s, RandomStream& rng) {
    return fill_impl(sketch, stripped_source, s, rng, nullptr);
}

std::vector<ThreatCandidate> rank_threats(const PlaythroughRecord& record) {
    const int total = record.total_failures();
    std::vector<ThreatCandidate> out;
    if (total == 0) return out;
    out.reserve(record.failures.size());
    for (const auto& [event, count] : record.failures) {
        ThreatCandidate c;
        c.position = event.position;
        c.cause = event.cause;
        c.deaths = count;
        c.relevance = static_cast<double>(count) / static_cast<double>(total);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const ThreatCandidate& a, const ThreatCandidate& b) {
        if (a.relevance != b.relevance) return a.relevance > b.relevance;
        if (!(a.position == b.position)) return a.position < b.position;
        return a.cause < b.cause;
    });
    return out;
}

Level place_threats(const Level& level, const std::vector<ThreatCandidate>& ranked, double e) {
    Level out = level;
    double placed_relevance = 0.0;
    for (const ThreatCandidate& c : ranked) {
        if (placed_relevance >= e) break;
        if (!out.in_bounds(c.position) || !out.is_empty_at(c.position)) continue;
        out.set(c.position, c.cause);
        placed_relevance += c.relevance;
    }
    return out;
}

namespace {

/// Nearest empty cell to `want` (Manhattan distance, row-major tie-break).
/// Returns false when the level has no empty cell at all.
bool nearest_empty(const Level& level, Position want, Position& found) {
    int best = INT32_MAX;
    bool any = false;
    for (int row = 0; row < level.height(); ++row) {
        for (int col = 0; col < level.width(); ++col) {
            if (!level.is_empty_at({col, row})) continue;
            const int d = manhattan({col, row}, want);
            if (d < best) {
                best = d;
                found = {col, row};
                any = true;
            }
        }
    }
    return any;
}

void place_at_or_near(Level& level, Position want, char symbol) {
    if (level.in_bounds(want) && level.is_empty_at(want)) {
        level.set(want, symbol);
        return;
    }
    Position p;
    if (nearest_empty(level, want, p)) level.set(p, symbol);
}

/// Restores required game elements the fill may have dropped: exactly one
/// player start, and at least one instance of every goal token.
void repair_required_tokens(Level& level, const Level& source, const Domain& domain) {
    const auto source_starts = source.find_category(TokenCategory::PlayerStart);
    auto starts = level.find_category(TokenCategory::PlayerStart);
    if (!source_starts.empty()) {
        const Position want = source_starts.front();
        if (starts.empty()) {
            const char player = source.at(want);
            place_at_or_near(level, want, player);
        } else if (starts.size() > 1) {
            // Keep the start closest to the source's; clear the rest.
            std::sort(starts.begin(), starts.end(), [&](Position a, Position b) {
                const int da = manhattan(a, want), db = manhattan(b, want);
                if (da != db) return da < db;
                return a < b;
            });
            for (std::size_t i = 1; i < starts.size(); ++i) {
                level.set(starts[i], level.alphabet().empty_symbol());
            }
        }
    }
    for (const GoalPredicate& g : domain.goals) {
        if (level.count_symbol(g.token) > 0) continue;
        for (const Position& p : source.find_symbol(g.token)) {
            place_at_or_near(level, p, g.token);
        }
    }
}

}  // namespace

GenerationResult generate(const Level& source, const KnowledgeKit& kit,
                          const SearchBudget& budget, std::uint64_t seed) {
    const Domain& domain = *kit.domain;
    const Level prepared = domain.prepare_source(source);

    PlaythroughRecord record = collect_records(prepared, kit, kit.t, budget, seed);
    BinarySketch sketch = reconstruct_sketch(record, prepared.width(), prepared.height());

    const Level stripped = strip_threats(prepared, domain.threat_tokens);
    RandomStream fill_rng(mix_seed(seed, 0x66696c6cULL));  // independent of the search streams

    std::vector<Segment> segments;
    Level filled = fill_impl(sketch, stripped, kit.s, fill_rng, &segments);

    std::vector<ThreatCandidate> ranked = rank_threats(record);
    Level result = place_threats(filled, ranked, kit.e);
    repair_required_tokens(result, prepared, domain);

    return GenerationResult{std::move(result), std::move(filled), std::move(sketch),
                            std::move(segments), std::move(ranked), std::move(record),
                            GenerationParams{kit.t, kit.s, kit.e}};
}

GenerationParams sample_params(const ParamRanges& ranges, RandomStream& rng) {
    GenerationParams p;
    p.t = ranges.t_choices[rng.uniform_index(ranges.t_choices.size())];
    p.s = ranges.s_choices[rng.uniform_index(ranges.s_choices.size())];
    p.e = ranges.e_choices[rng.uniform_index(ranges.e_choices.size())];
    return p;
}

}  // namespace trp
