#include "trp/level.hpp"

#include <algorithm>
#include <cstdlib>

namespace trp {

namespace {

const char* kCategoryNames[kCategoryCount] = {
    "empty", "solid", "threat", "player-start", "goal", "key", "door", "pit",
};

}  // namespace

const char* category_name(TokenCategory c) {
    return kCategoryNames[static_cast<int>(c)];
}

TokenCategory category_from_name(const std::string& name) {
    for (int i = 0; i < kCategoryCount; ++i) {
        if (name == kCategoryNames[i]) return static_cast<TokenCategory>(i);
    }
    throw ConfigError("unknown token category '" + name + "'");
}

TokenAlphabet::TokenAlphabet(std::vector<Token> tokens, char empty_symbol)
    : tokens_(std::move(tokens)), empty_(empty_symbol) {
    std::fill(std::begin(index_), std::end(index_), -1);
    int empties = 0;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        const Token& t = tokens_[i];
        if (index_[byte(t.symbol)] >= 0) {
            throw ConfigError("duplicate token symbol '" + std::string(1, t.symbol) + "'");
        }
        index_[byte(t.symbol)] = static_cast<int>(i);
        if (t.has(TokenCategory::Empty)) {
            ++empties;
            // The empty token carries no other category.
            if (t.categories != (1u << static_cast<unsigned>(TokenCategory::Empty))) {
                throw ConfigError("empty token '" + std::string(1, t.symbol) +
                                  "' may not carry other categories");
            }
        }
    }
    if (empties != 1) {
        throw ConfigError("alphabet must designate exactly one empty token, got " +
                          std::to_string(empties));
    }
    if (!contains(empty_) || !token(empty_).has(TokenCategory::Empty)) {
        throw ConfigError("designated empty symbol is not the empty-categorized token");
    }
}

const Token& TokenAlphabet::token(char symbol) const {
    const int i = index_[byte(symbol)];
    if (i < 0) throw UnknownToken(symbol, -1, -1);
    return tokens_[static_cast<std::size_t>(i)];
}

std::vector<char> TokenAlphabet::with_category(TokenCategory c) const {
    std::vector<char> out;
    for (const Token& t : tokens_) {
        if (t.has(c)) out.push_back(t.symbol);
    }
    return out;
}

Level::Level(int width, int height, std::shared_ptr<const TokenAlphabet> alphabet)
    : width_(width), height_(height),
      cells_(static_cast<std::size_t>(width) * height, alphabet->empty_symbol()),
      alphabet_(std::move(alphabet)) {}

void Level::set(int col, int row, char symbol) {
    if (!alphabet_->contains(symbol)) throw UnknownToken(symbol, col, row);
    cells_[static_cast<std::size_t>(row) * width_ + col] = symbol;
}

std::vector<Position> Level::find_symbol(char symbol) const {
    std::vector<Position> out;
    for (int row = 0; row < height_; ++row) {
        for (int col = 0; col < width_; ++col) {
            if (at(col, row) == symbol) out.push_back({col, row});
        }
    }
    return out;
}

std::vector<Position> Level::find_category(TokenCategory c) const {
    std::vector<Position> out;
    for (int row = 0; row < height_; ++row) {
        for (int col = 0; col < width_; ++col) {
            if (is(col, row, c)) out.push_back({col, row});
        }
    }
    return out;
}

int Level::count_symbol(char symbol) const {
    return static_cast<int>(std::count(cells_.begin(), cells_.end(), symbol));
}

int Level::count_category(TokenCategory c) const {
    int n = 0;
    for (char s : cells_) {
        if (alphabet_->is(s, c)) ++n;
    }
    return n;
}

BinarySketch::BinarySketch(int width, int height, std::uint8_t fill)
    : width_(width), height_(height),
      cells_(static_cast<std::size_t>(width) * height, fill ? 1 : 0) {}

int BinarySketch::count_ones() const {
    return static_cast<int>(std::count(cells_.begin(), cells_.end(), 1));
}

std::string BinarySketch::to_text() const {
    std::string out;
    out.reserve(cells_.size() + height_);
    for (int row = 0; row < height_; ++row) {
        for (int col = 0; col < width_; ++col) {
            out.push_back(at(col, row) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

Level parse_level(const std::string& text, std::shared_ptr<const TokenAlphabet> alphabet) {
    std::vector<std::string> rows;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            rows.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) rows.push_back(current);  // tolerate a missing final newline
    while (!rows.empty() && rows.back().empty()) rows.pop_back();

    if (rows.empty()) throw EmptyInput();
    const int width = static_cast<int>(rows[0].size());
    if (width == 0) throw EmptyInput();
    const int height = static_cast<int>(rows.size());

    Level level(width, height, alphabet);
    for (int row = 0; row < height; ++row) {
        if (static_cast<int>(rows[row].size()) != width) {
            throw RaggedRows(width, static_cast<int>(rows[row].size()), row);
        }
        for (int col = 0; col < width; ++col) {
            const char s = rows[row][static_cast<std::size_t>(col)];
            if (!alphabet->contains(s)) throw UnknownToken(s, col, row);
            level.set(col, row, s);
        }
    }
    return level;
}

std::string serialize_level(const Level& level) {
    std::string out;
    out.reserve(static_cast<std::size_t>(level.width() + 1) * level.height());
    for (int row = 0; row < level.height(); ++row) {
        for (int col = 0; col < level.width(); ++col) {
            out.push_back(level.at(col, row));
        }
        out.push_back('\n');
    }
    return out;
}

BinarySketch binarize(const Level& level) {
    BinarySketch sketch(level.width(), level.height());
    const char empty = level.alphabet().empty_symbol();
    for (int row = 0; row < level.height(); ++row) {
        for (int col = 0; col < level.width(); ++col) {
            sketch.set(col, row, level.at(col, row) == empty ? 0 : 1);
        }
    }
    return sketch;
}

Level strip_threats(const Level& level, const std::vector<char>& threat_symbols) {
    Level out = level;
    const char empty = level.alphabet().empty_symbol();
    for (int row = 0; row < level.height(); ++row) {
        for (int col = 0; col < level.width(); ++col) {
            const char s = level.at(col, row);
            if (std::find(threat_symbols.begin(), threat_symbols.end(), s) !=
                threat_symbols.end()) {
                out.set(col, row, empty);
            }
        }
    }
    return out;
}

Level preprocess_pits(const Level& level) {
    const std::vector<char> pits = level.alphabet().with_category(TokenCategory::Pit);
    if (pits.empty()) throw ConfigError("alphabet has no pit token");
    const char pit = pits.front();
    Level out = level;
    const int bottom = level.height() - 1;
    for (int col = 0; col < level.width(); ++col) {
        if (level.is_empty_at({col, bottom})) out.set(col, bottom, pit);
    }
    return out;
}

}  // namespace trp
