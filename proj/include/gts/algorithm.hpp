#pragma once

#include <optional>
#include <string>

namespace gts {

enum class Algorithm {
    MINIMAX,
    ALPHA_BETA,
    ALPHA_BETA_TT,
    ASPWIN,
    NEGASCOUT,
    ASPIRATION_NEGASCOUT,
    MTD_SSS,
    MTD_DUAL,
    MTD_F,
    MTD_BI,
    MTD_STEP,
    MTD_BEST,
    SSS_STAR,
    ALPHA_BETA_ETC,
};

inline const char* algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::MINIMAX: return "minimax";
    case Algorithm::ALPHA_BETA: return "alpha_beta";
    case Algorithm::ALPHA_BETA_TT: return "alpha_beta_tt";
    case Algorithm::ASPWIN: return "aspwin";
    case Algorithm::NEGASCOUT: return "negascout";
    case Algorithm::ASPIRATION_NEGASCOUT: return "aspiration_negascout";
    case Algorithm::MTD_SSS: return "mtd_sss";
    case Algorithm::MTD_DUAL: return "mtd_dual";
    case Algorithm::MTD_F: return "mtd_f";
    case Algorithm::MTD_BI: return "mtd_bi";
    case Algorithm::MTD_STEP: return "mtd_step";
    case Algorithm::MTD_BEST: return "mtd_best";
    case Algorithm::SSS_STAR: return "sss_star";
    case Algorithm::ALPHA_BETA_ETC: return "alpha_beta_etc";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& name);

// True for algorithms that read/write a transposition table.
inline bool algorithm_uses_tt(Algorithm a) {
    switch (a) {
    case Algorithm::MINIMAX:
    case Algorithm::ALPHA_BETA:
    case Algorithm::SSS_STAR: return false;
    default: return true;
    }
}

} // namespace gts
