#include "injectsim/core.hpp"

#include <cmath>
#include <cstdio>

namespace injectsim {

std::string SimTime::str() const {
    const bool neg = us_ < 0;
    const std::int64_t abs = neg ? -us_ : us_;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%s%lld.%06lld", neg ? "-" : "",
                  static_cast<long long>(abs / 1000000), static_cast<long long>(abs % 1000000));
    return buf;
}

double distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t fnv1a64(const std::string& s, std::uint64_t seed) {
    return fnv1a64(s.data(), s.size(), seed);
}

}  // namespace injectsim
