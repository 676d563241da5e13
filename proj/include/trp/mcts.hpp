#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "trp/game.hpp"
#include "trp/kit.hpp"

namespace trp {

struct SearchNode {
    GameState state;
    SearchNode* parent = nullptr;
    Action action_from_parent = Action::Wait;
    int visits = 0;
    double total_value = 0.0;
    std::vector<Action> untried;
    std::vector<std::unique_ptr<SearchNode>> children;

    explicit SearchNode(GameState s) : state(std::move(s)) {
        if (!state.terminal()) untried = legal_actions(state);
    }

    double mean_value() const { return total_value / visits; }
    Position position() const { return state.player(); }
};

/// What a playthrough leaves behind: every tree-node player position, every
/// observed death (as a multiset keyed by position and cause), the committed
/// trajectory, and whether the goal sequence was completed.
struct PlaythroughRecord {
    std::set<Position> visited;
    std::map<FailureEvent, int> failures;  // multiset stored as counts
    bool success = false;
    std::vector<Position> executed_path;

    void add_failure(const FailureEvent& e) { ++failures[e]; }
    int total_failures() const;

    /// Set/multiset union; does not touch `success` or `executed_path` order
    /// beyond appending. Order-independent for visited/failures.
    void merge(const PlaythroughRecord& other);

    bool operator==(const PlaythroughRecord&) const = default;
};

/// Eq. for the UCT tree policy: mean value plus c * sqrt(ln(parent visits) /
/// own visits). Throws UnvisitedNode when the node has no visits (unvisited
/// children are selected before any UCT comparison) or no parent.
double uct_value(const SearchNode& node, double c);

/// Child with the maximum UCT value; ties broken uniformly at random.
SearchNode* select_child(SearchNode& node, double c, RandomStream& rng);

/// One Selection -> Expansion -> Simulation -> Backpropagation pass.
/// New tree-node positions are added to the record, and every loss state hit
/// by the pass (in the tree or in the rollout) records a failure event.
void mcts_iteration(SearchNode& root, const KnowledgeKit& kit, const SearchBudget& budget,
                    RandomStream& rng, PlaythroughRecord& record);

/// Plays the level start to finish: per committed move, builds a fresh tree
/// with budget.iterations_per_move iterations, then commits the most-visited
/// root action (ties uniform). Returns the record merged across all trees.
PlaythroughRecord run_playthrough(const Level& level, const KnowledgeKit& kit,
                                  const SearchBudget& budget, std::uint64_t seed);

/// Union of t playthroughs seeded base_seed .. base_seed + t - 1. A failed
/// playthrough is retried with derived fresh seeds up to 3 times, then its
/// final attempt is merged anyway. success = every merged playthrough won.
PlaythroughRecord collect_records(const Level& level, const KnowledgeKit& kit, int t,
                                  const SearchBudget& budget, std::uint64_t base_seed);

}  // namespace trp
