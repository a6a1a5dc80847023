#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace flowtopo {

// Splittable deterministic generator. Every random choice in the pipeline
// derives from the single config seed through named splits, so results do
// not depend on thread scheduling or call order.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : state_(seed) {}

    // splitmix64 step
    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased enough for fold dealing and subsampling ranges.
    std::uint64_t next_below(std::uint64_t n) {
        return n == 0 ? 0 : next_u64() % n;
    }

    double next_unit() { // [0, 1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Child generator for an independent named stream.
    SplitRng split(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
        for (const char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        SplitRng mixer(state_ ^ h);
        return SplitRng(mixer.next_u64());
    }

    SplitRng split(std::uint64_t label) const {
        SplitRng mixer(state_ ^ (label * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
        return SplitRng(mixer.next_u64());
    }

private:
    std::uint64_t state_;
};

// In-place Fisher-Yates with a pinned generator (std::shuffle is not
// reproducible across standard libraries).
template <typename Vec>
void deterministic_shuffle(Vec& v, SplitRng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace flowtopo
