#include "aimm/constructions.hpp"

#include <bit>
#include <stdexcept>

namespace aimm {

TruthTable carlet_feng(const FieldSpec& spec, CfSupport support) {
    if (spec.n() < 2) throw std::invalid_argument("carlet_feng: need n >= 2");
    TruthTable f(spec.n());
    uint32_t alpha = spec.primitive().index();
    uint32_t half = spec.order() / 2;
    uint32_t power = 1;  // a^0
    if (support == CfSupport::with_zero) {
        f.set(0, 1);
        for (uint32_t j = 0; j + 1 < half; ++j) {
            f.set(power, 1);
            power = spec.mul(power, alpha);
        }
    } else {
        for (uint32_t j = 0; j < half; ++j) {
            f.set(power, 1);
            power = spec.mul(power, alpha);
        }
    }
    return f;
}

TruthTable majority(unsigned n) {
    if (n < 1) throw std::invalid_argument("majority: need n >= 1");
    TruthTable f(n);
    for (uint32_t i = 0; i < f.size(); ++i)
        if (static_cast<unsigned>(std::popcount(i)) > n / 2) f.set(i, 1);
    return f;
}

}  // namespace aimm
