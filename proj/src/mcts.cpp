#include "trp/mcts.hpp"

#include <cmath>

namespace trp {

int PlaythroughRecord::total_failures() const {
    int n = 0;
    for (const auto& [event, count] : failures) n += count;
    return n;
}

void PlaythroughRecord::merge(const PlaythroughRecord& other) {
    visited.insert(other.visited.begin(), other.visited.end());
    for (const auto& [event, count] : other.failures) failures[event] += count;
    executed_path.insert(executed_path.end(), other.executed_path.begin(),
                         other.executed_path.end());
}

double uct_value(const SearchNode& node, double c) {
    if (node.visits < 1 || node.parent == nullptr || node.parent->visits < node.visits) {
        throw UnvisitedNode();
    }
    return node.mean_value() +
           c * std::sqrt(std::log(static_cast<double>(node.parent->visits)) /
                         static_cast<double>(node.visits));
}

SearchNode* select_child(SearchNode& node, double c, RandomStream& rng) {
    double best = -HUGE_VAL;
    std::vector<SearchNode*> ties;
    for (const auto& child : node.children) {
        const double v = uct_value(*child, c);
        if (v > best) {
            best = v;
            ties.assign(1, child.get());
        } else if (v == best) {
            ties.push_back(child.get());
        }
    }
    return ties.size() == 1 ? ties.front() : ties[rng.uniform_index(ties.size())];
}

void mcts_iteration(SearchNode& root, const KnowledgeKit& kit, const SearchBudget& budget,
                    RandomStream& rng, PlaythroughRecord& record) {
    // Selection: descend while fully expanded.
    SearchNode* node = &root;
    while (!node->state.terminal() && node->untried.empty() && !node->children.empty()) {
        node = select_child(*node, kit.c, rng);
    }

    // Expansion: realize one unexpanded child, chosen uniformly.
    if (!node->state.terminal() && !node->untried.empty()) {
        const std::size_t i = rng.uniform_index(node->untried.size());
        const Action a = node->untried[i];
        node->untried.erase(node->untried.begin() + static_cast<std::ptrdiff_t>(i));
        auto child = std::make_unique<SearchNode>(step(node->state, a, rng));
        child->parent = node;
        child->action_from_parent = a;
        record.visited.insert(child->position());
        node->children.push_back(std::move(child));
        node = node->children.back().get();
    }

    // Simulation: random legal actions until terminal or the depth cap.
    GameState sim = node->state;
    int depth = 0;
    while (!sim.terminal() &&
           (budget.max_rollout_depth == 0 || depth < budget.max_rollout_depth)) {
        const auto actions = legal_actions(sim);
        sim = step(sim, actions[rng.uniform_index(actions.size())], rng);
        ++depth;
    }
    if (sim.outcome() == Outcome::Loss) record.add_failure(*sim.failure());
    const double value = evaluate_state(sim);

    // Backpropagation: add the value to every node up to the root.
    for (SearchNode* n = node; n != nullptr; n = n->parent) {
        n->visits += 1;
        n->total_value += value;
    }
}

namespace {

Action commit_action(const SearchNode& root, RandomStream& rng) {
    int best = -1;
    std::vector<Action> ties;
    for (const auto& child : root.children) {
        if (child->visits > best) {
            best = child->visits;
            ties.assign(1, child->action_from_parent);
        } else if (child->visits == best) {
            ties.push_back(child->action_from_parent);
        }
    }
    return ties.size() == 1 ? ties.front() : ties[rng.uniform_index(ties.size())];
}

}  // namespace

PlaythroughRecord run_playthrough(const Level& level, const KnowledgeKit& kit,
                                  const SearchBudget& budget, std::uint64_t seed) {
    const auto domain = kit.domain;
    auto prepared = std::make_shared<Level>(domain->prepare_source(level));
    domain->require_goal_tokens(*prepared);

    RandomStream rng(seed);
    PlaythroughRecord record;
    GameState state = GameState::initial(prepared, domain);
    record.visited.insert(state.player());
    record.executed_path.push_back(state.player());

    for (int move = 0; move < budget.max_moves && !state.terminal(); ++move) {
        SearchNode root(state);
        for (int i = 0; i < budget.iterations_per_move; ++i) {
            mcts_iteration(root, kit, budget, rng, record);
        }
        if (root.children.empty()) break;
        state = step(state, commit_action(root, rng), rng);
        record.visited.insert(state.player());
        record.executed_path.push_back(state.player());
        if (state.outcome() == Outcome::Loss) record.add_failure(*state.failure());
    }

    record.success = state.outcome() == Outcome::Win;
    return record;
}

PlaythroughRecord collect_records(const Level& level, const KnowledgeKit& kit, int t,
                                  const SearchBudget& budget, std::uint64_t base_seed) {
    constexpr int kMaxRetries = 3;
    PlaythroughRecord merged;
    merged.success = true;
    for (int i = 0; i < t; ++i) {
        std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
        PlaythroughRecord rec = run_playthrough(level, kit, budget, seed);
        for (int retry = 1; !rec.success && retry <= kMaxRetries; ++retry) {
            rec = run_playthrough(level, kit, budget, mix_seed(seed, static_cast<std::uint64_t>(retry)));
        }
        merged.merge(rec);
        merged.success = merged.success && rec.success;
    }
    return merged;
}

}  // namespace trp
