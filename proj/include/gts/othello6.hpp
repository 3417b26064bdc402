#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gts/domain.hpp"

namespace gts {

// 6x6 Othello. Black is the max player and moves first. Square index is
// row*6 + col (row 0 at the top); the four center squares start occupied
// with (2,3) and (3,2) black, (2,2) and (3,3) white.
//
// Position encoding: a = black bitboard (low 36 bits), b = white bitboard,
// c = side to move (0 = black, 1 = white).
//
// Rules: children are the legal moves in ascending square order; a player
// with no legal move passes (a single child with the side flipped); the
// game ends when neither side can move. Evaluation is the disc
// differential popcount(black) - popcount(white), bounded by val_max 64.
//
// Hashing: 64-bit Zobrist keys drawn from PCG32 seeded with
// (0x9E3779B97F4A7C15, stream 0), in the order black squares 0..35, white
// squares 0..35, then the white-to-move key; each 64-bit key is
// (hi32 << 32) | lo32 from two consecutive PCG32 outputs.
class Othello6Domain : public SearchDomain {
public:
    std::string name() const override { return "othello6"; }
    Pos root() const override;
    bool is_leaf(const Pos& p) const override;
    int child_count(const Pos& p) const override;
    Pos child(const Pos& p, int idx) const override;
    Value evaluate(const Pos& p) const override;
    uint64_t hash(const Pos& p) const override;
    NodeType node_type(const Pos& p) const override {
        return p.c == 0 ? NodeType::MAX : NodeType::MIN;
    }
    Value val_max() const override { return 64; }
    int feature_count() const override { return 37; } // squares + pass
    int move_feature(const Pos& parent, int child_idx) const override;

    // Bitboard of legal destination squares for the side to move.
    static uint64_t legal_moves(const Pos& p);

    static Pos make(const std::string& cells, char to_move); // 'B','W','.'
};

std::unique_ptr<Othello6Domain> othello6();

// Deterministic benchmark start positions: position i is reached by playing
// 4 + (i mod 7) uniformly random legal moves from the initial position
// (PCG32 stream seed + i + 1), skipping lines that end the game early.
std::vector<Pos> othello6_positions(int count, uint64_t seed);

} // namespace gts
