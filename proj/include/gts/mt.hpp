#pragma once

#include "gts/search.hpp"
#include "gts/ttable.hpp"

namespace gts {

// MT: null-window (gamma-1, gamma) alpha-beta with storage. Returns a
// fail-soft bound: g >= gamma proves f(n) >= g, g < gamma proves
// f(n) <= g. Child bounds are consulted before recursing; leaves retrieve
// both bounds and are only re-evaluated when neither is known; one bound
// is stored per node per pass. Interior nodes do not retrieve their own
// bounds at entry. Increments stats.mt_calls once per call.
Value mt(const SearchDomain& dom, const Pos& root, Value gamma, int depth,
         TTable& tt, const SearchOpts& opts = {});

enum class NextRule { PLUS_INF, MINUS_INF, GUESS, BISECT, STEP, BEST };

struct MTDriverSpec {
    NextRule rule = NextRule::PLUS_INF;
    Value f0 = 0;        // GUESS: first probe
    Value stepsize = 10; // STEP: maximum downward jump per pass
};

// Generic MTD driver: repeated MT passes with a rule-specific next bound
// until the root interval closes (f- = f+). Emits one `pass` trace event
// per MT call. BEST is not a value driver; use mtd_best.
Value mtd(const SearchDomain& dom, const Pos& root, int depth,
          const MTDriverSpec& spec, TTable& tt, const SearchOpts& opts = {});

// MTD(+inf) = MT-SSS*: start at +inf, next bound = current upper bound.
Value mtd_sss(const SearchDomain& dom, const Pos& root, int depth, TTable& tt,
              const SearchOpts& opts = {});

// MTD(-inf) = MT-DUAL*: start just above -inf, next bound = f- + 1.
Value mtd_dual(const SearchDomain& dom, const Pos& root, int depth, TTable& tt,
               const SearchOpts& opts = {});

// MTD(f): start at a guess, then step by one off the matching bound.
Value mtd_f(const SearchDomain& dom, const Pos& root, Value f0, int depth,
            TTable& tt, const SearchOpts& opts = {});

// MTD(bi): bisect the current interval (ceiling average; infinite sides
// bracketed at +/-(val_max + 1)).
Value mtd_bi(const SearchDomain& dom, const Pos& root, int depth, TTable& tt,
             const SearchOpts& opts = {});

// MTD(step): from above in jumps of at most stepsize.
Value mtd_step(const SearchDomain& dom, const Pos& root, Value stepsize,
               int depth, TTable& tt, const SearchOpts& opts = {});

// MTD(best): proves which root move is best without converging on the
// exact root value (stop rule: best child's lower bound >= every other
// child's upper bound). Returns the root child index (left-most winner).
int mtd_best(const SearchDomain& dom, const Pos& root, int depth, TTable& tt,
             const SearchOpts& opts = {});

} // namespace gts
