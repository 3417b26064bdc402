#pragma once

#include <memory>
#include <string>

#include "gts/domain.hpp"

namespace gts {

// 3x3 tic-tac-toe. X (the max player) moves first from the empty board.
// Position encoding: a = X occupancy bits, b = O occupancy bits (square
// index 0..8, row-major), c = side to move (0 = X, 1 = O). Children are
// the empty squares in ascending index order; move feature = square.
// Evaluation: +1 X win, -1 O win, 0 otherwise (also used at depth cutoff).
class TicTacToeDomain : public SearchDomain {
public:
    std::string name() const override { return "tictactoe"; }
    Pos root() const override { return Pos{0, 0, 0}; }
    bool is_leaf(const Pos& p) const override;
    int child_count(const Pos& p) const override;
    Pos child(const Pos& p, int idx) const override;
    Value evaluate(const Pos& p) const override;
    uint64_t hash(const Pos& p) const override;
    NodeType node_type(const Pos& p) const override {
        return p.c == 0 ? NodeType::MAX : NodeType::MIN;
    }
    Value val_max() const override { return 1; }
    int feature_count() const override { return 9; }
    int move_feature(const Pos& parent, int child_idx) const override;

    // Builds a position from 9 cells ('X', 'O', '.') and the side to move.
    static Pos make(const std::string& cells, char to_move);
};

std::unique_ptr<TicTacToeDomain> tictactoe();

} // namespace gts
