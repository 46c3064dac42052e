#pragma once

#include <array>
#include <optional>
#include <string>

#include "kicked_top/types.hpp"

namespace kt {

// The nine twist-strength classes of the recurrence table, kappa = c * pi*j/2
// with c = 0..8. Tokens follow the CLI spelling (p stands for pi).
enum class KappaClass : int {
    zero = 0,    // 0
    pj_half = 1, // pi j / 2
    pj = 2,      // pi j
    pj_3half = 3,
    two_pj = 4,
    pj_5half = 5,
    three_pj = 6,
    pj_7half = 7,
    four_pj = 8,
};

inline constexpr std::array<const char*, 9> kappa_class_tokens = {
    "0", "pj/2", "pj", "3pj/2", "2pj", "5pj/2", "3pj", "7pj/2", "4pj"};

std::optional<KappaClass> parse_kappa_class(const std::string& token);
const char* kappa_class_token(KappaClass c);
double kappa_of(SpinParams spin, KappaClass c);

// True minimal recurrence period at p = pi/2, or nullopt where none exists
// within any horizon. Matches the published table for generic spins and
// carries the verified low-dimension exceptions:
//   - j = 1/2: the twist is a global phase (m^2 = 1/4 on both levels), so the
//     period is 4 in every class;
//   - j = 1 and j = 3: the starred 48-kick classes shorten to 16 kicks.
std::optional<int> expected_period(SpinParams spin, KappaClass c);

// A ratio r/s (kappa = pi j r/s) lands in the table classes exactly when the
// reduced denominator is 1 or 2; kappa is 4*pi*j periodic up to global phase,
// so r may be reduced mod 4s first.
bool is_table_ratio(int r, int s);

} // namespace kt
