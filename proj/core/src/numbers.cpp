#include <gaugecoho/numbers.hpp>

namespace gaugecoho
{

bool is_prime(std::uint64_t p)
{
    if (p < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d <= p / d; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    __extension__ using wide = unsigned __int128;
    return static_cast<std::uint64_t>(static_cast<wide>(a) * b % p);
}

} // namespace gaugecoho
