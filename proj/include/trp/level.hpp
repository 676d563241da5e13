#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "trp/errors.hpp"

namespace trp {

enum class TokenCategory : std::uint8_t {
    Empty = 0,
    Solid,
    Threat,
    PlayerStart,
    Goal,
    Key,
    Door,
    Pit,
};

constexpr int kCategoryCount = 8;

const char* category_name(TokenCategory c);
TokenCategory category_from_name(const std::string& name);

struct Token {
    char symbol = '\0';
    std::uint8_t categories = 0;  // bitmask over TokenCategory

    bool has(TokenCategory c) const {
        return (categories & (1u << static_cast<unsigned>(c))) != 0;
    }
    void add(TokenCategory c) { categories |= (1u << static_cast<unsigned>(c)); }
};

/// The token set of a game domain. Holds exactly one designated empty token
/// and no duplicate symbols; a token is either the empty token or carries no
/// Empty category at all.
class TokenAlphabet {
public:
    TokenAlphabet(std::vector<Token> tokens, char empty_symbol);

    bool contains(char symbol) const { return index_[byte(symbol)] >= 0; }
    const Token& token(char symbol) const;
    char empty_symbol() const { return empty_; }
    const std::vector<Token>& tokens() const { return tokens_; }

    bool is(char symbol, TokenCategory c) const { return token(symbol).has(c); }
    std::vector<char> with_category(TokenCategory c) const;

private:
    static std::size_t byte(char c) { return static_cast<unsigned char>(c); }

    std::vector<Token> tokens_;
    char empty_;
    int index_[256];
};

/// Grid coordinate. Row 0 is the top of the screen; the row one tile below
/// the screen is row == height and lies outside the grid.
struct Position {
    int col = 0;
    int row = 0;

    bool operator==(const Position&) const = default;
};

/// Row-major ordering: by row, then by column.
inline bool operator<(const Position& a, const Position& b) {
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
}

inline int manhattan(Position a, Position b) {
    return std::abs(a.col - b.col) + std::abs(a.row - b.row);
}

/// Rectangular grid of token symbols over a shared alphabet.
class Level {
public:
    Level(int width, int height, std::shared_ptr<const TokenAlphabet> alphabet);

    int width() const { return width_; }
    int height() const { return height_; }
    bool in_bounds(int col, int row) const {
        return col >= 0 && row >= 0 && col < width_ && row < height_;
    }
    bool in_bounds(Position p) const { return in_bounds(p.col, p.row); }

    char at(int col, int row) const { return cells_[static_cast<std::size_t>(row) * width_ + col]; }
    char at(Position p) const { return at(p.col, p.row); }
    void set(int col, int row, char symbol);
    void set(Position p, char symbol) { set(p.col, p.row, symbol); }

    const TokenAlphabet& alphabet() const { return *alphabet_; }
    std::shared_ptr<const TokenAlphabet> alphabet_ptr() const { return alphabet_; }

    bool is(int col, int row, TokenCategory c) const { return alphabet_->is(at(col, row), c); }
    bool is(Position p, TokenCategory c) const { return is(p.col, p.row, c); }
    bool is_empty_at(Position p) const { return at(p) == alphabet_->empty_symbol(); }

    std::vector<Position> find_symbol(char symbol) const;
    std::vector<Position> find_category(TokenCategory c) const;
    int count_symbol(char symbol) const;
    int count_category(TokenCategory c) const;

    /// Grid equality (dimensions and symbols); the alphabet objects may differ.
    bool operator==(const Level& other) const {
        return width_ == other.width_ && height_ == other.height_ && cells_ == other.cells_;
    }

private:
    int width_;
    int height_;
    std::vector<char> cells_;
    std::shared_ptr<const TokenAlphabet> alphabet_;
};

/// Intermediary 0/1 grid: 0 marks open/visited structure, 1 marks the rest.
class BinarySketch {
public:
    BinarySketch(int width, int height, std::uint8_t fill = 0);

    int width() const { return width_; }
    int height() const { return height_; }
    std::uint8_t at(int col, int row) const {
        return cells_[static_cast<std::size_t>(row) * width_ + col];
    }
    void set(int col, int row, std::uint8_t v) {
        cells_[static_cast<std::size_t>(row) * width_ + col] = v ? 1 : 0;
    }

    int count_ones() const;
    std::string to_text() const;  // rows of '0'/'1' characters, '\n' separated

    bool operator==(const BinarySketch&) const = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> cells_;
};

Level parse_level(const std::string& text, std::shared_ptr<const TokenAlphabet> alphabet);
std::string serialize_level(const Level& level);

/// 0 where the cell holds the designated empty token, 1 otherwise.
BinarySketch binarize(const Level& level);

/// Replaces every cell holding one of the given threat symbols with the empty token.
Level strip_threats(const Level& level, const std::vector<char>& threat_symbols);

/// Side-view preprocessing: every bottom-row empty cell becomes the pit token.
Level preprocess_pits(const Level& level);

}  // namespace trp
