#pragma once

#include <memory>
#include <vector>

namespace trp {

struct Domain;

/// Search effort limits for one playthrough. max_rollout_depth == 0 means
/// unbounded (rollouts run until a terminal state).
struct SearchBudget {
    int iterations_per_move = 200;
    int max_rollout_depth = 0;
    int max_moves = 500;
};

/// The designer-authored knowledge a domain requires: affordances (goals,
/// failures and threat tokens live on the Domain) plus the numeric dials for
/// search (c, rollout depth) and generation (t playthroughs, segment bound s,
/// threat share e).
struct KnowledgeKit {
    std::shared_ptr<const Domain> domain;
    double c = 0.25;
    int max_rollout_depth = 0;  // 0 = unbounded
    int t = 1;
    int s = 2;
    double e = 0.25;
};

/// Choice sets for the variety regime; each draw must satisfy the
/// KnowledgeKit field invariants.
struct ParamRanges {
    std::vector<int> t_choices;
    std::vector<int> s_choices;
    std::vector<double> e_choices;
};

}  // namespace trp
