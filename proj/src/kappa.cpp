#include "kicked_top/kappa.hpp"

#include <numbers>
#include <numeric>

namespace kt {

std::optional<KappaClass> parse_kappa_class(const std::string& token) {
    for (int i = 0; i < static_cast<int>(kappa_class_tokens.size()); ++i)
        if (token == kappa_class_tokens[static_cast<std::size_t>(i)]) return static_cast<KappaClass>(i);
    return std::nullopt;
}

const char* kappa_class_token(KappaClass c) {
    return kappa_class_tokens[static_cast<std::size_t>(static_cast<int>(c))];
}

double kappa_of(SpinParams spin, KappaClass c) {
    return static_cast<int>(c) * std::numbers::pi * spin.j() / 2.0;
}

std::optional<int> expected_period(SpinParams spin, KappaClass c) {
    const int idx = static_cast<int>(c);
    if (spin.two_j == 1) return 4; // twist is a global phase at j = 1/2
    if (spin.is_integer()) {
        switch (idx) {
            case 0: return 4;
            case 2: case 6: return 8;
            case 4: return 2;
            case 8: return 4;
            default: // starred classes: 48, except the j = 1, 3 shortening
                return (spin.two_j == 2 || spin.two_j == 6) ? 16 : 48;
        }
    }
    switch (idx) {
        case 0: return 4;
        case 2: case 6: return 12;
        case 4: case 8: return 4;
        default: return std::nullopt; // no half-integer recurrence in starred classes
    }
}

bool is_table_ratio(int r, int s) {
    const int g = std::gcd(r, s);
    r /= g;
    s /= g;
    r %= 4 * s;
    return s == 1 || s == 2;
}

} // namespace kt
