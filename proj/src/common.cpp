#include <ostream>
#include <sstream>

#include "gts/algorithm.hpp"
#include "gts/domain.hpp"
#include "gts/trace.hpp"

namespace gts {

std::optional<Algorithm> parse_algorithm(const std::string& name) {
    static constexpr Algorithm all[] = {
        Algorithm::MINIMAX,       Algorithm::ALPHA_BETA,
        Algorithm::ALPHA_BETA_TT, Algorithm::ASPWIN,
        Algorithm::NEGASCOUT,     Algorithm::ASPIRATION_NEGASCOUT,
        Algorithm::MTD_SSS,       Algorithm::MTD_DUAL,
        Algorithm::MTD_F,         Algorithm::MTD_BI,
        Algorithm::MTD_STEP,      Algorithm::MTD_BEST,
        Algorithm::SSS_STAR,      Algorithm::ALPHA_BETA_ETC,
    };
    for (Algorithm a : all)
        if (name == algorithm_name(a)) return a;
    return std::nullopt;
}

std::string path_str(const Path& p) {
    std::string s = "r";
    for (int idx : p) {
        s += '.';
        s += std::to_string(idx);
    }
    return s;
}

bool path_before(const Path& a, const Path& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool path_is_ancestor(const Path& a, const Path& b) {
    if (a.size() >= b.size()) return false;
    return std::equal(a.begin(), a.end(), b.begin());
}

std::string value_str(Value v) {
    if (v >= POS_INF) return "inf";
    if (v <= NEG_INF) return "-inf";
    return std::to_string(v);
}

void LineTrace::leaf(const Path& p, Value v) {
    out_ << "leaf " << path_str(p) << ' ' << value_str(v) << '\n';
}

void LineTrace::ttcut(const Path& p, Value bound) {
    out_ << "ttcut " << path_str(p) << ' ' << value_str(bound) << '\n';
}

void LineTrace::pass(int k, Value gamma, Value g, uint64_t leaves) {
    out_ << "pass " << k << " gamma=" << value_str(gamma) << " g=" << value_str(g)
         << " leaves=" << leaves << '\n';
}

void LineTrace::op(int gamma_case, const Path& p, char state, Value merit) {
    out_ << "op " << gamma_case << " node=" << path_str(p) << " state=" << state
         << " h=" << value_str(merit) << '\n';
}

} // namespace gts
