#include "trp/game.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>

namespace trp {

namespace {

const char* kActionNames[] = {
    "up", "down", "left", "right", "wait", "jump", "jump-left", "jump-right",
};

struct Delta {
    int dcol;
    int drow;
};

Delta dungeon_delta(Action a) {
    switch (a) {
        case Action::Up: return {0, -1};
        case Action::Down: return {0, 1};
        case Action::Left: return {-1, 0};
        case Action::Right: return {1, 0};
        default: return {0, 0};
    }
}

int horizontal_intent(Action a) {
    switch (a) {
        case Action::Left:
        case Action::JumpLeft: return -1;
        case Action::Right:
        case Action::JumpRight: return 1;
        default: return 0;
    }
}

bool is_jump(Action a) {
    return a == Action::Jump || a == Action::JumpLeft || a == Action::JumpRight;
}

}  // namespace

const char* action_name(Action a) {
    return kActionNames[static_cast<int>(a)];
}

Level Domain::prepare_source(const Level& level) const {
    return swap_bottom_pits ? preprocess_pits(level) : level;
}

void Domain::require_goal_tokens(const Level& level) const {
    for (const GoalPredicate& g : goals) {
        if (level.count_symbol(g.token) == 0) throw NoGoalCells(g.token);
    }
}

GameState GameState::initial(std::shared_ptr<const Level> level,
                             std::shared_ptr<const Domain> domain) {
    GameState s;
    s.level_ = std::move(level);
    s.domain_ = std::move(domain);

    const auto starts = s.level_->find_category(TokenCategory::PlayerStart);
    if (starts.empty()) throw Error("level has no player-start token");
    s.player_ = starts.front();

    for (int row = 0; row < s.level_->height(); ++row) {
        for (int col = 0; col < s.level_->width(); ++col) {
            const char sym = s.level_->at(col, row);
            if (!s.domain_->alphabet->is(sym, TokenCategory::Threat)) continue;
            if (s.domain_->alphabet->is(sym, TokenCategory::Pit)) continue;  // static hazard
            Enemy e;
            e.pos = {col, row};
            e.symbol = sym;
            if (auto it = s.domain_->dungeon.enemy_periods.find(sym);
                it != s.domain_->dungeon.enemy_periods.end()) {
                e.period = it->second;
            }
            s.enemies_.push_back(e);
        }
    }

    s.advance_goals();
    if (s.outcome() == Outcome::Ongoing) s.check_player_contact();
    return s;
}

Outcome GameState::outcome() const {
    if (failure_) return Outcome::Loss;
    if (goal_index_ >= static_cast<int>(domain_->goals.size())) return Outcome::Win;
    return Outcome::Ongoing;
}

bool GameState::item_taken(Position p) const {
    return std::binary_search(taken_.begin(), taken_.end(), p);
}

char GameState::effective_token(Position p) const {
    const char sym = level_->at(p);
    if (item_taken(p)) return level_->alphabet().empty_symbol();
    const auto& alpha = level_->alphabet();
    // Mobile threats live in the entity list, not the grid.
    if (alpha.is(sym, TokenCategory::Threat) && !alpha.is(sym, TokenCategory::Pit)) {
        return alpha.empty_symbol();
    }
    return sym;
}

bool GameState::supported() const {
    const Position below{player_.col, player_.row + 1};
    return level_->in_bounds(below) && solid(below);
}

std::vector<Position> GameState::goal_cells(const GoalPredicate& g) const {
    std::vector<Position> cells = level_->find_symbol(g.token);
    if (g.kind == GoalKind::Collect) {
        std::erase_if(cells, [this](Position p) { return item_taken(p); });
    }
    return cells;
}

bool GameState::goal_holds(const GoalPredicate& g) const {
    switch (g.kind) {
        case GoalKind::Collect:
            return std::find(inventory_.begin(), inventory_.end(), g.token) != inventory_.end();
        case GoalKind::Reach:
            return level_->at(player_) == g.token;
        case GoalKind::ReachColumn: {
            for (const Position& p : level_->find_symbol(g.token)) {
                if (p.col == player_.col) return true;
            }
            return false;
        }
    }
    return false;
}

void GameState::advance_goals() {
    while (goal_index_ < static_cast<int>(domain_->goals.size()) &&
           goal_holds(domain_->goals[static_cast<std::size_t>(goal_index_)])) {
        ++goal_index_;
    }
}

void GameState::check_player_contact() {
    if (!domain_->failures.threat_contact) return;
    // Static threat tokens (pits) kill on contact.
    const char sym = level_->at(player_);
    const auto& alpha = level_->alphabet();
    if (alpha.is(sym, TokenCategory::Threat) && alpha.is(sym, TokenCategory::Pit)) {
        failure_ = FailureEvent{player_, sym};
        return;
    }
    for (const Enemy& e : enemies_) {
        if (e.pos == player_) {
            failure_ = FailureEvent{player_, e.symbol};
            return;
        }
    }
}

bool GameState::operator==(const GameState& other) const {
    return player_ == other.player_ && goal_index_ == other.goal_index_ &&
           step_count_ == other.step_count_ && jump_phase_ == other.jump_phase_ &&
           enemies_ == other.enemies_ && inventory_ == other.inventory_ &&
           taken_ == other.taken_ && failure_ == other.failure_ &&
           *level_ == *other.level_;
}

std::vector<Action> legal_actions(const GameState& state) {
    if (state.terminal()) throw TerminalState();
    std::vector<Action> out;
    if (state.domain().kind == DomainKind::Dungeon) {
        const Position p = state.player();
        for (Action a : {Action::Up, Action::Down, Action::Left, Action::Right}) {
            const Delta d = dungeon_delta(a);
            const Position to{p.col + d.dcol, p.row + d.drow};
            if (state.level().in_bounds(to) && !state.solid(to)) out.push_back(a);
        }
        out.push_back(Action::Wait);
    } else {
        out.assign({Action::Left, Action::Right, Action::Wait});
        if (state.supported()) {
            out.push_back(Action::Jump);
            out.push_back(Action::JumpLeft);
            out.push_back(Action::JumpRight);
        }
    }
    return out;
}

namespace {

void move_dungeon_enemies(const Level& level, RandomStream& rng, int step_number,
                          std::vector<Enemy>& enemies, std::optional<FailureEvent>& failure,
                          Position player) {
    static const Delta kDirs[4] = {{0, -1}, {0, 1}, {-1, 0}, {1, 0}};
    for (Enemy& e : enemies) {
        if (step_number % e.period != 0) continue;
        Position open[4];
        std::size_t n = 0;
        for (const Delta& d : kDirs) {
            const Position to{e.pos.col + d.dcol, e.pos.row + d.drow};
            if (level.in_bounds(to) && !level.is(to, TokenCategory::Solid)) open[n++] = to;
        }
        if (n > 0) e.pos = open[rng.uniform_index(n)];
        if (e.pos == player) {
            failure = FailureEvent{player, e.symbol};
            return;
        }
    }
}

void move_platformer_enemies(const Level& level, std::vector<Enemy>& enemies,
                             std::optional<FailureEvent>& failure, Position player) {
    for (Enemy& e : enemies) {
        const Position next{e.pos.col + e.dir, e.pos.row};
        const Position next_below{next.col, next.row + 1};
        const bool walkable = level.in_bounds(next) && !level.is(next, TokenCategory::Solid) &&
                              level.in_bounds(next_below) &&
                              level.is(next_below, TokenCategory::Solid);
        if (walkable) {
            e.pos = next;
        } else {
            e.dir = -e.dir;  // reverse on walls and ledges, move next step
        }
        if (e.pos == player) {
            failure = FailureEvent{player, e.symbol};
            return;
        }
    }
}

}  // namespace

GameState step(const GameState& state, Action action, RandomStream& rng) {
    const auto legal = legal_actions(state);  // throws TerminalState on terminal input
    if (std::find(legal.begin(), legal.end(), action) == legal.end()) {
        throw IllegalAction(action_name(action));
    }

    GameState s = state;
    const Level& level = s.level();
    const int height = level.height();

    if (s.domain().kind == DomainKind::Dungeon) {
        const Delta d = dungeon_delta(action);
        s.player_ = {s.player_.col + d.dcol, s.player_.row + d.drow};
    } else {
        if (is_jump(action)) s.jump_phase_ = s.domain().platformer.jump_height;
        const int h = horizontal_intent(action);
        if (h != 0) {
            const Position to{s.player_.col + h, s.player_.row};
            if (level.in_bounds(to) && !s.solid(to)) s.player_ = to;
        }
        if (s.jump_phase_ > 0) {
            const Position up{s.player_.col, s.player_.row - 1};
            if (level.in_bounds(up) && !s.solid(up)) {
                s.player_ = up;
                --s.jump_phase_;
            } else {
                s.jump_phase_ = 0;  // bonked a ceiling
            }
        } else if (!s.supported()) {
            const Position down{s.player_.col, s.player_.row + 1};
            if (down.row >= height) {
                // One tile below the screen: pit failure, clamped to the bottom row.
                const auto pits = level.alphabet().with_category(TokenCategory::Pit);
                const char cause = pits.empty() ? level.at(s.player_) : pits.front();
                s.player_ = {s.player_.col, height - 1};
                s.failure_ = FailureEvent{s.player_, cause};
            } else if (!s.solid(down)) {
                s.player_ = down;
            }
        }
    }

    ++s.step_count_;
    if (s.failure_) return s;

    // Pick up collectible items (key-categorized tokens).
    const char at_player = s.level().at(s.player_);
    if (s.level().alphabet().is(at_player, TokenCategory::Key) && !s.item_taken(s.player_)) {
        auto it = std::lower_bound(s.taken_.begin(), s.taken_.end(), s.player_);
        s.taken_.insert(it, s.player_);
        s.inventory_.push_back(at_player);
    }

    s.advance_goals();
    if (s.outcome() == Outcome::Win) return s;

    s.check_player_contact();
    if (s.failure_) return s;

    if (s.domain().kind == DomainKind::Dungeon) {
        move_dungeon_enemies(level, rng, s.step_count_, s.enemies_, s.failure_, s.player_);
    } else {
        move_platformer_enemies(level, s.enemies_, s.failure_, s.player_);
    }
    return s;
}

double evaluate_state(const GameState& state) {
    switch (state.outcome()) {
        case Outcome::Win: return 1.0;
        case Outcome::Loss: return -1.0;
        case Outcome::Ongoing: break;
    }
    const GoalPredicate& goal =
        state.domain().goals[static_cast<std::size_t>(state.goal_index())];
    const auto cells = state.goal_cells(goal);
    if (cells.empty()) throw NoGoalCells(goal.token);

    int d = INT_MAX;
    for (const Position& c : cells) {
        const int dist = goal.kind == GoalKind::ReachColumn
                             ? std::abs(state.player().col - c.col)
                             : manhattan(state.player(), c);
        d = std::min(d, dist);
    }
    return 1.0 - static_cast<double>(d) /
                     static_cast<double>(state.level().width() + state.level().height());
}

Outcome is_terminal(const GameState& state) {
    return state.outcome();
}

}  // namespace trp
