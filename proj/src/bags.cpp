#include "spectre/bags.hpp"

#include <stdexcept>

namespace spectre {

SpecBag project(const PairBag& pairs)
{
    SpecBag out;
    for (const auto& [key, c] : pairs)
        out.add(key.alpha, c);
    return out;
}

Rat moment(const SpecBag& sp, unsigned k)
{
    Rat sum;
    for (const auto& [alpha, c] : sp)
        sum += pow(alpha, k) * Rat(c);
    return sum;
}

Rat max_value(const SpecBag& sp)
{
    for (auto it = sp.entries().rbegin(); it != sp.entries().rend(); ++it)
        if (it->second > 0)
            return it->first;
    throw std::invalid_argument("empty spectrum has no maximum");
}

Rat min_value(const SpecBag& sp)
{
    for (const auto& [alpha, c] : sp)
        if (c > 0)
            return alpha;
    throw std::invalid_argument("empty spectrum has no minimum");
}

} // namespace spectre
