#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trp/level.hpp"
#include "trp/rng.hpp"

namespace trp {

enum class Action : std::uint8_t {
    Up,
    Down,
    Left,
    Right,
    Wait,
    Jump,
    JumpLeft,
    JumpRight,
};

const char* action_name(Action a);

enum class GoalKind {
    Reach,        // player stands on a cell holding the token
    ReachColumn,  // player's column matches a cell holding the token
    Collect,      // player inventory contains the token
};

struct GoalPredicate {
    GoalKind kind = GoalKind::Reach;
    char token = '\0';
};

/// Ordered sequence of goal predicates; playthroughs pursue them in order.
using GoalSpec = std::vector<GoalPredicate>;

struct FailureSpec {
    bool threat_contact = true;
    bool below_screen = false;
};

struct FailureEvent {
    Position position;
    char cause = '\0';

    bool operator==(const FailureEvent&) const = default;
};

inline bool operator<(const FailureEvent& a, const FailureEvent& b) {
    if (!(a.position == b.position)) return a.position < b.position;
    return a.cause < b.cause;
}

struct DungeonRules {
    std::map<char, int> enemy_periods;  // enemy symbol -> move period in steps
};

struct PlatformerRules {
    int jump_height = 3;  // cells of ascent, one per step, then gravity
};

enum class DomainKind { Dungeon, Platformer };

/// A playable game domain: alphabet, movement rules and the knowledge-kit
/// affordances (goal sequence, failure conditions, threat token list).
struct Domain {
    std::string name;
    DomainKind kind = DomainKind::Dungeon;
    std::shared_ptr<const TokenAlphabet> alphabet;
    GoalSpec goals;
    FailureSpec failures;
    DungeonRules dungeon;
    PlatformerRules platformer;
    std::vector<char> threat_tokens;
    bool swap_bottom_pits = false;  // side-view pit preprocessing applies
    int default_iterations_per_move = 200;
    int default_max_moves = 500;

    /// Applies any required preprocessing to a raw source level. Idempotent.
    Level prepare_source(const Level& level) const;

    /// Throws NoGoalCells if any goal token is absent from the level.
    void require_goal_tokens(const Level& level) const;
};

struct Enemy {
    Position pos;
    char symbol = '\0';
    int period = 1;
    int dir = -1;  // platformer patrol direction

    bool operator==(const Enemy&) const = default;
};

enum class Outcome { Ongoing, Win, Loss };

/// Immutable game state; step() returns a new value. Enemy tokens in the
/// level grid become dynamic entities, their cells reading as empty floor.
class GameState {
public:
    static GameState initial(std::shared_ptr<const Level> level,
                             std::shared_ptr<const Domain> domain);

    const Level& level() const { return *level_; }
    std::shared_ptr<const Level> level_ptr() const { return level_; }
    const Domain& domain() const { return *domain_; }
    std::shared_ptr<const Domain> domain_ptr() const { return domain_; }

    Position player() const { return player_; }
    int goal_index() const { return goal_index_; }
    int step_count() const { return step_count_; }
    int jump_phase() const { return jump_phase_; }
    const std::vector<Enemy>& enemies() const { return enemies_; }
    const std::vector<char>& inventory() const { return inventory_; }
    const std::optional<FailureEvent>& failure() const { return failure_; }

    Outcome outcome() const;
    bool terminal() const { return outcome() != Outcome::Ongoing; }

    /// Token at a cell with collected items removed and enemies lifted out.
    char effective_token(Position p) const;
    bool solid(Position p) const { return level_->is(p, TokenCategory::Solid); }
    bool supported() const;  // platformer: standing on a solid cell

    bool operator==(const GameState& other) const;

private:
    friend GameState step(const GameState&, Action, RandomStream&);

    std::shared_ptr<const Level> level_;
    std::shared_ptr<const Domain> domain_;
    Position player_;
    int goal_index_ = 0;
    int step_count_ = 0;
    int jump_phase_ = 0;
    std::vector<Enemy> enemies_;
    std::vector<char> inventory_;
    std::vector<Position> taken_;  // sorted cells whose item was collected
    std::optional<FailureEvent> failure_;

    bool item_taken(Position p) const;
    bool goal_holds(const GoalPredicate& g) const;
    void advance_goals();
    void check_player_contact();
    std::vector<Position> goal_cells(const GoalPredicate& g) const;

    friend double evaluate_state(const GameState&);
};

/// Actions available in the current state, in a fixed canonical order.
/// Throws TerminalState on terminal states.
std::vector<Action> legal_actions(const GameState& state);

/// Advances the state by one action. Enemy randomness draws from the given
/// stream, so identical (state, action, stream state) gives identical results.
/// Throws IllegalAction if the action is not currently legal.
GameState step(const GameState& state, Action action, RandomStream& rng);

/// Reward shaping: win -> 1, loss -> -1, otherwise 1 - d / (width + height)
/// with d the Manhattan distance to the closest cell satisfying the current
/// goal. Throws NoGoalCells when the current goal token is absent.
double evaluate_state(const GameState& state);

Outcome is_terminal(const GameState& state);

}  // namespace trp
