#include "gts/othello6.hpp"

#include <bit>
#include <stdexcept>

namespace gts {
namespace {

constexpr uint64_t BOARD_MASK = (1ull << 36) - 1;

constexpr int ROWS = 6;
constexpr int COLS = 6;

constexpr int DR[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
constexpr int DC[8] = {-1, 0, 1, -1, 1, -1, 0, 1};

struct Pcg32 {
    uint64_t state;
    uint64_t inc;
    Pcg32(uint64_t initstate, uint64_t initseq) {
        state = 0;
        inc = (initseq << 1) | 1;
        next();
        state += initstate;
        next();
    }
    uint32_t next() {
        uint64_t old = state;
        state = old * 6364136223846793005ull + inc;
        uint32_t xorshifted = static_cast<uint32_t>(((old >> 18) ^ old) >> 27);
        uint32_t rot = static_cast<uint32_t>(old >> 59);
        return (xorshifted >> rot) | (xorshifted << ((-rot) & 31));
    }
    uint64_t next64() {
        uint64_t hi = next();
        return (hi << 32) | next();
    }
    // Unbiased-enough bounded draw for tiny bounds.
    uint32_t bounded(uint32_t n) { return next() % n; }
};

struct Zobrist {
    uint64_t square[2][36];
    uint64_t side;
    Zobrist() {
        Pcg32 rng(0x9E3779B97F4A7C15ull, 0);
        for (int color = 0; color < 2; ++color)
            for (int sq = 0; sq < 36; ++sq)
                square[color][sq] = rng.next64();
        side = rng.next64();
    }
};

const Zobrist& zobrist() {
    static const Zobrist z;
    return z;
}

// Discs flipped by the mover placing on `sq`; 0 if the move is illegal.
uint64_t flips_for(uint64_t own, uint64_t opp, int sq) {
    if (((own | opp) >> sq) & 1) return 0;
    int r0 = sq / COLS, c0 = sq % COLS;
    uint64_t flips = 0;
    for (int d = 0; d < 8; ++d) {
        uint64_t line = 0;
        int r = r0 + DR[d], c = c0 + DC[d];
        while (r >= 0 && r < ROWS && c >= 0 && c < COLS) {
            int s = r * COLS + c;
            if ((opp >> s) & 1) {
                line |= 1ull << s;
            } else if ((own >> s) & 1) {
                flips |= line;
                break;
            } else {
                break;
            }
            r += DR[d];
            c += DC[d];
        }
    }
    return flips;
}

uint64_t moves_of(uint64_t own, uint64_t opp) {
    uint64_t empty = ~(own | opp) & BOARD_MASK;
    uint64_t moves = 0;
    for (uint64_t e = empty; e; e &= e - 1) {
        int sq = std::countr_zero(e);
        if (flips_for(own, opp, sq)) moves |= 1ull << sq;
    }
    return moves;
}

void own_opp(const Pos& p, uint64_t& own, uint64_t& opp) {
    if (p.c == 0) {
        own = p.a;
        opp = p.b;
    } else {
        own = p.b;
        opp = p.a;
    }
}

int nth_set(uint64_t bits, int n) {
    for (int i = 0; i < n; ++i) bits &= bits - 1;
    return std::countr_zero(bits);
}

} // namespace

Pos Othello6Domain::root() const {
    Pos p;
    p.a = (1ull << 15) | (1ull << 20); // black: (2,3), (3,2)
    p.b = (1ull << 14) | (1ull << 21); // white: (2,2), (3,3)
    p.c = 0;
    return p;
}

uint64_t Othello6Domain::legal_moves(const Pos& p) {
    uint64_t own, opp;
    own_opp(p, own, opp);
    return moves_of(own, opp);
}

bool Othello6Domain::is_leaf(const Pos& p) const {
    return moves_of(p.a, p.b) == 0 && moves_of(p.b, p.a) == 0;
}

int Othello6Domain::child_count(const Pos& p) const {
    uint64_t own, opp;
    own_opp(p, own, opp);
    uint64_t mine = moves_of(own, opp);
    if (mine) return std::popcount(mine);
    return moves_of(opp, own) ? 1 : 0; // pass, unless the game is over
}

Pos Othello6Domain::child(const Pos& p, int idx) const {
    uint64_t own, opp;
    own_opp(p, own, opp);
    uint64_t mine = moves_of(own, opp);
    Pos q = p;
    q.c = p.c ^ 1;
    if (!mine) return q; // pass
    int sq = nth_set(mine, idx);
    uint64_t fl = flips_for(own, opp, sq);
    own |= fl | (1ull << sq);
    opp &= ~fl;
    if (p.c == 0) {
        q.a = own;
        q.b = opp;
    } else {
        q.a = opp;
        q.b = own;
    }
    return q;
}

Value Othello6Domain::evaluate(const Pos& p) const {
    return std::popcount(p.a) - std::popcount(p.b);
}

uint64_t Othello6Domain::hash(const Pos& p) const {
    const Zobrist& z = zobrist();
    uint64_t h = 0;
    for (uint64_t bits = p.a; bits; bits &= bits - 1)
        h ^= z.square[0][std::countr_zero(bits)];
    for (uint64_t bits = p.b; bits; bits &= bits - 1)
        h ^= z.square[1][std::countr_zero(bits)];
    if (p.c != 0) h ^= z.side;
    return h;
}

int Othello6Domain::move_feature(const Pos& parent, int child_idx) const {
    uint64_t own, opp;
    own_opp(parent, own, opp);
    uint64_t mine = moves_of(own, opp);
    if (!mine) return 36; // pass
    return nth_set(mine, child_idx);
}

Pos Othello6Domain::make(const std::string& cells, char to_move) {
    if (cells.size() != 36) throw std::invalid_argument("othello6: need 36 cells");
    Pos p;
    for (int i = 0; i < 36; ++i) {
        if (cells[i] == 'B')
            p.a |= 1ull << i;
        else if (cells[i] == 'W')
            p.b |= 1ull << i;
        else if (cells[i] != '.')
            throw std::invalid_argument("othello6: cells must be B, W or .");
    }
    if (to_move != 'B' && to_move != 'W')
        throw std::invalid_argument("othello6: side must be B or W");
    p.c = to_move == 'B' ? 0 : 1;
    return p;
}

std::unique_ptr<Othello6Domain> othello6() {
    return std::make_unique<Othello6Domain>();
}

std::vector<Pos> othello6_positions(int count, uint64_t seed) {
    Othello6Domain dom;
    std::vector<Pos> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        int plies = 4 + (i % 7);
        Pos p;
        for (uint64_t attempt = 0;; ++attempt) {
            Pcg32 rng(seed + i + 1, attempt);
            p = dom.root();
            bool ok = true;
            for (int k = 0; k < plies; ++k) {
                int n = dom.child_count(p);
                if (n == 0) {
                    ok = false;
                    break;
                }
                p = dom.child(p, static_cast<int>(rng.bounded(n)));
            }
            if (ok && !dom.is_leaf(p)) break;
        }
        out.push_back(p);
    }
    return out;
}

} // namespace gts
