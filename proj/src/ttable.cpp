#include "gts/ttable.hpp"

#include <stdexcept>

namespace gts {
namespace {

constexpr uint32_t ENC_NEG_INF = 0x000000;
constexpr uint32_t ENC_POS_INF = 0xFFFFFF;
constexpr Value ENC_BIAS = 1 << 21;
constexpr int MAX_DRAFT = 63;
constexpr uint32_t BEST_NONE = 0xFF;

uint32_t enc_val(Value v) {
    if (v <= NEG_INF) return ENC_NEG_INF;
    if (v >= POS_INF) return ENC_POS_INF;
    if (v < -VAL_MAX_LIMIT || v > VAL_MAX_LIMIT)
        throw std::logic_error("tt_store: value out of encodable range");
    return static_cast<uint32_t>(v + ENC_BIAS);
}

Value dec_val(uint32_t e) {
    if (e == ENC_NEG_INF) return NEG_INF;
    if (e == ENC_POS_INF) return POS_INF;
    return static_cast<Value>(e) - ENC_BIAS;
}

} // namespace

TTable::TTable(int capacity_log2, ReplacePolicy policy)
    : capacity_log2_(capacity_log2), policy_(policy) {
    if (capacity_log2 < 1 || capacity_log2 > 30)
        throw std::invalid_argument("tt_new: capacity_log2 must be in [1, 30]");
    slots_.resize(size_t(1) << capacity_log2);
}

std::optional<TTData> TTable::probe(uint64_t hash, int min_draft) {
    ++counters_.probes;
    if (hash == 0) hash = 1; // 0 is the empty-slot sentinel
    const Entry& e = slots_[hash & (slots_.size() - 1)];
    if (e.key != hash) return std::nullopt;
    int draft = static_cast<int>((e.w0 >> 24) & 0x3F);
    if (draft < min_draft) return std::nullopt;
    ++counters_.hits;
    TTData d;
    d.lo = dec_val(e.w0 & 0xFFFFFF);
    d.hi = dec_val(e.w1 & 0xFFFFFF);
    d.draft = draft;
    uint32_t best = (e.w1 >> 24) & 0xFF;
    d.best = best == BEST_NONE ? -1 : static_cast<int>(best);
    return d;
}

int TTable::peek_move(uint64_t hash) const {
    if (hash == 0) hash = 1;
    const Entry& e = slots_[hash & (slots_.size() - 1)];
    if (e.key != hash) return -1;
    uint32_t best = (e.w1 >> 24) & 0xFF;
    return best == BEST_NONE ? -1 : static_cast<int>(best);
}

void TTable::store(uint64_t hash, int draft, Value lo, Value hi, int best) {
    if (lo > hi) throw std::logic_error("tt_store: lo > hi");
    if (draft < 0) throw std::logic_error("tt_store: negative draft");
    if (best < -1 || best >= static_cast<int>(BEST_NONE))
        throw std::logic_error("tt_store: best move out of range");
    ++counters_.stores;
    if (hash == 0) hash = 1;
    if (draft > MAX_DRAFT) draft = MAX_DRAFT;
    Entry& e = slots_[hash & (slots_.size() - 1)];

    uint32_t enc_best = best < 0 ? BEST_NONE : static_cast<uint32_t>(best);
    if (e.key == hash) {
        int old_draft = static_cast<int>((e.w0 >> 24) & 0x3F);
        if (old_draft == draft) {
            // Same search horizon: tighten the interval.
            Value mlo = std::max(lo, dec_val(e.w0 & 0xFFFFFF));
            Value mhi = std::min(hi, dec_val(e.w1 & 0xFFFFFF));
            if (mlo <= mhi) {
                lo = mlo;
                hi = mhi;
            }
            if (enc_best == BEST_NONE) enc_best = (e.w1 >> 24) & 0xFF;
        }
        ++counters_.overwrites;
    } else if (e.key != 0) {
        int old_draft = static_cast<int>((e.w0 >> 24) & 0x3F);
        uint32_t old_age = (e.w0 >> 30) & 0x3;
        if (policy_ == ReplacePolicy::DEEP_PREFERRED && old_age == age_ &&
            draft < old_draft) {
            ++counters_.dropped;
            return;
        }
        ++counters_.evictions;
    } else {
        ++used_;
    }

    e.key = hash;
    e.w0 = enc_val(lo) | (static_cast<uint32_t>(draft) << 24) | (age_ << 30);
    e.w1 = enc_val(hi) | (enc_best << 24);
}

void TTable::clear() {
    std::fill(slots_.begin(), slots_.end(), Entry{});
    used_ = 0;
    age_ = 0;
}

void TTable::strip_bounds() {
    for (Entry& e : slots_) {
        if (e.key == 0) continue;
        e.w0 = ENC_NEG_INF | (e.w0 & 0xFF000000);
        e.w1 = ENC_POS_INF | (e.w1 & 0xFF000000);
    }
}

void TTable::bump_age() { age_ = (age_ + 1) & 0x3; }

std::unique_ptr<TTable> tt_new(int capacity_log2, ReplacePolicy policy) {
    return std::make_unique<TTable>(capacity_log2, policy);
}

} // namespace gts
