#include "gts/tictactoe.hpp"

#include <stdexcept>

namespace gts {

namespace {

constexpr uint32_t LINES[8] = {
    0b000000111, 0b000111000, 0b111000000, // rows
    0b001001001, 0b010010010, 0b100100100, // columns
    0b100010001, 0b001010100,              // diagonals
};

bool has_line(uint64_t bits) {
    for (uint32_t line : LINES)
        if ((bits & line) == line) return true;
    return false;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

uint64_t empties(const Pos& p) { return ~(p.a | p.b) & 0x1FFull; }

int nth_empty(const Pos& p, int idx) {
    uint64_t e = empties(p);
    for (int sq = 0; sq < 9; sq++) {
        if (e & (1ull << sq)) {
            if (idx == 0) return sq;
            idx--;
        }
    }
    throw std::out_of_range("tictactoe child index");
}

} // namespace

bool TicTacToeDomain::is_leaf(const Pos& p) const {
    return has_line(p.a) || has_line(p.b) || empties(p) == 0;
}

int TicTacToeDomain::child_count(const Pos& p) const {
    if (is_leaf(p)) return 0;
    return __builtin_popcountll(empties(p));
}

Pos TicTacToeDomain::child(const Pos& p, int idx) const {
    int sq = nth_empty(p, idx);
    Pos c = p;
    if (p.c == 0)
        c.a |= 1ull << sq;
    else
        c.b |= 1ull << sq;
    c.c = p.c ^ 1;
    return c;
}

Value TicTacToeDomain::evaluate(const Pos& p) const {
    if (has_line(p.a)) return 1;
    if (has_line(p.b)) return -1;
    return 0;
}

uint64_t TicTacToeDomain::hash(const Pos& p) const {
    // (a, b) determines the side to move, so boards reached by transposed
    // move orders share a hash.
    return splitmix64(p.a | (p.b << 9));
}

int TicTacToeDomain::move_feature(const Pos& parent, int child_idx) const {
    return nth_empty(parent, child_idx);
}

Pos TicTacToeDomain::make(const std::string& cells, char to_move) {
    if (cells.size() != 9) throw std::invalid_argument("tictactoe board needs 9 cells");
    Pos p;
    for (int sq = 0; sq < 9; sq++) {
        char ch = cells[sq];
        if (ch == 'X' || ch == 'x')
            p.a |= 1ull << sq;
        else if (ch == 'O' || ch == 'o')
            p.b |= 1ull << sq;
        else if (ch != '.')
            throw std::invalid_argument("tictactoe cells must be 'X', 'O' or '.'");
    }
    if (to_move == 'X' || to_move == 'x')
        p.c = 0;
    else if (to_move == 'O' || to_move == 'o')
        p.c = 1;
    else
        throw std::invalid_argument("to_move must be 'X' or 'O'");
    return p;
}

std::unique_ptr<TicTacToeDomain> tictactoe() { return std::make_unique<TicTacToeDomain>(); }

} // namespace gts
