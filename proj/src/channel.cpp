#include "swipt/channel.hpp"

namespace swipt {

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = index + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return seed ^ z;
}

} // namespace swipt
