#pragma once

#include <cstdint>
#include <stdexcept>

namespace gts {

// Integer game values. Leaf evaluations lie in [-val_max, val_max] with
// val_max a per-domain constant <= VAL_MAX_LIMIT. The infinities are
// sentinels strictly outside every legal value range and far enough from
// the integer limits that +/-1 adjustments and negation cannot overflow.
using Value = int32_t;

inline constexpr Value POS_INF = Value(1) << 30;
inline constexpr Value NEG_INF = -POS_INF;
inline constexpr Value VAL_MAX_LIMIT = Value(1) << 20;

struct Window {
    Value alpha = NEG_INF;
    Value beta = POS_INF;
};

inline void require_window(const Window& w) {
    if (w.alpha >= w.beta) throw std::invalid_argument("search window requires alpha < beta");
}

inline void require_window(Value alpha, Value beta) {
    require_window(Window{alpha, beta});
}

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded() : std::runtime_error("node budget exceeded") {}
};

} // namespace gts
