#pragma once

#include <stdexcept>
#include <string>

namespace trp {

/// Base class for all recoverable errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
    EmptyInput() : Error("level text is empty") {}
};

struct UnknownToken : Error {
    char symbol;
    int col;
    int row;
    UnknownToken(char s, int c, int r)
        : Error("unknown token '" + std::string(1, s) + "' at col " + std::to_string(c) +
                ", row " + std::to_string(r)),
          symbol(s), col(c), row(r) {}
};

struct RaggedRows : Error {
    int expected;
    int found;
    int row_index;
    RaggedRows(int exp, int got, int row)
        : Error("row " + std::to_string(row) + " has " + std::to_string(got) +
                " columns, expected " + std::to_string(exp)),
          expected(exp), found(got), row_index(row) {}
};

struct TerminalState : Error {
    TerminalState() : Error("state is terminal") {}
};

struct IllegalAction : Error {
    explicit IllegalAction(const std::string& what) : Error("illegal action: " + what) {}
};

struct NoGoalCells : Error {
    char token;
    explicit NoGoalCells(char t)
        : Error("no cells hold goal token '" + std::string(1, t) + "'"), token(t) {}
};

struct UnvisitedNode : Error {
    UnvisitedNode() : Error("UCT value requested for an unvisited node") {}
};

struct EmptyRecord : Error {
    EmptyRecord() : Error("playthrough record has no visited positions") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch(int aw, int ah, int bw, int bh)
        : Error("dimension mismatch: " + std::to_string(aw) + "x" + std::to_string(ah) +
                " vs " + std::to_string(bw) + "x" + std::to_string(bh)) {}
};

struct SegmentLargerThanSource : Error {
    SegmentLargerThanSource(int sw, int sh, int lw, int lh)
        : Error("segment " + std::to_string(sw) + "x" + std::to_string(sh) +
                " exceeds source " + std::to_string(lw) + "x" + std::to_string(lh)) {}
};

struct EmptyTrainingSet : Error {
    EmptyTrainingSet() : Error("training set is empty") {}
};

struct NoStartPosition : Error {
    NoStartPosition() : Error("start column is fully solid") {}
};

struct PopulationTooSmall : Error {
    PopulationTooSmall() : Error("population needs at least two levels") {}
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace trp
