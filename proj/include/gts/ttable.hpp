#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gts/value.hpp"

namespace gts {

enum class ReplacePolicy { DEEP_PREFERRED, ALWAYS };

// What a successful probe returns.
struct TTData {
    Value lo = NEG_INF; // lower bound on the node value
    Value hi = POS_INF; // upper bound
    int draft = 0;      // subtree height the entry was computed at
    int best = -1;      // best move (child index), -1 if unknown
};

struct TTCounters {
    uint64_t probes = 0;
    uint64_t hits = 0;
    uint64_t stores = 0;
    uint64_t overwrites = 0; // same-key updates
    uint64_t evictions = 0;  // different-key slot replaced
    uint64_t dropped = 0;    // new store discarded by the policy
};

// Fixed-size direct-mapped transposition table. Entries are packed into
// 16 bytes: the full 64-bit key plus two words holding both value bounds
// (24-bit biased encoding, with all-zeros / all-ones reserved for -inf and
// +inf), a 6-bit draft, a 2-bit age and an 8-bit best move (0xFF = none).
class TTable {
public:
    TTable(int capacity_log2, ReplacePolicy policy);

    // Hit iff the slot holds this key with draft >= min_draft.
    std::optional<TTData> probe(uint64_t hash, int min_draft);

    // Ordering hint: the stored best move for this key at any draft
    // (-1 if absent). Does not touch the probe/hit counters, so a
    // too-shallow entry can still seed move ordering across iterative
    // deepening iterations without skewing bound-probe accounting.
    int peek_move(uint64_t hash) const;

    // Store bounds (lo <= hi required); best == -1 keeps any previous
    // best move for the same key. Same key and draft merge-tightens the
    // interval; a different draft replaces the entry outright. On a key
    // collision DEEP_PREFERRED keeps the deeper, current-age entry and
    // otherwise drops the store; ALWAYS replaces.
    void store(uint64_t hash, int draft, Value lo, Value hi, int best = -1);

    void clear();
    void strip_bounds(); // reset all bounds to (-inf, +inf), keep best moves
    void bump_age();     // start a new search generation

    int capacity_log2() const { return capacity_log2_; }
    size_t capacity() const { return slots_.size(); }
    size_t used() const { return used_; }
    const TTCounters& counters() const { return counters_; }
    void reset_counters() { counters_ = {}; }
    // Stores that destroyed or discarded information; nonzero means a
    // rerun on this table may diverge from an unbounded-memory run.
    uint64_t info_loss() const { return counters_.evictions + counters_.dropped; }

private:
    struct Entry {
        uint64_t key = 0;
        uint32_t w0 = 0;
        uint32_t w1 = 0;
    };
    static_assert(sizeof(Entry) == 16, "TT entry must pack into 16 bytes");

    std::vector<Entry> slots_;
    int capacity_log2_;
    ReplacePolicy policy_;
    uint32_t age_ = 0;
    size_t used_ = 0;
    TTCounters counters_;
};

std::unique_ptr<TTable> tt_new(int capacity_log2,
                               ReplacePolicy policy = ReplacePolicy::DEEP_PREFERRED);

inline std::optional<TTData> tt_probe(TTable& tt, uint64_t hash, int min_draft) {
    return tt.probe(hash, min_draft);
}

inline void tt_store(TTable& tt, uint64_t hash, int draft, Value lo, Value hi,
                     int best = -1) {
    tt.store(hash, draft, lo, hi, best);
}

} // namespace gts
