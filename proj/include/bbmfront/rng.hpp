#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace bbmfront {

// SplitMix64 finalizer. Invertible, so distinct inputs give distinct outputs.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Counter-based stream: Philox2x64-10 keyed by a hash of
// (root_seed, stream_path). Draws depend only on (key, counter), so a child
// stream derived at any point yields the same sequence regardless of how much
// the parent has been consumed. That makes replica ensembles order-independent
// and safe to fill from a worker pool.
class RngStream {
public:
    explicit RngStream(std::uint64_t root_seed)
        : root_seed_(root_seed), key_(mix64(root_seed + 0x9E3779B97F4A7C15ULL)) {}

    // Child stream for substream `index`; appends to the stream path.
    RngStream derive(std::uint64_t index) const {
        RngStream child(*this);
        child.path_.push_back(index);
        child.key_ = mix64(key_ ^ mix64(index + 0xA0761D6478BD642FULL));
        child.ctr_ = 0;
        child.avail_ = 0;
        child.has_spare_ = false;
        return child;
    }

    std::uint64_t root_seed() const { return root_seed_; }
    const std::vector<std::uint64_t>& stream_path() const { return path_; }

    std::uint64_t next_u64() {
        if (avail_ == 0) {
            philox_block();
            avail_ = 2;
        }
        return block_[--avail_];
    }

    // Uniform on [0,1), 53-bit mantissa.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0,1): never returns 0, safe under log().
    double uniform_pos() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Standard normal, Marsaglia polar method with cached spare.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

private:
    void philox_block() {
        std::uint64_t c0 = ctr_++;
        std::uint64_t c1 = key_ ^ 0xD2B74407B1CE6E93ULL;
        std::uint64_t k = key_;
        for (int round = 0; round < 10; ++round) {
            const unsigned __int128 prod =
                static_cast<unsigned __int128>(c0) * 0xD2B74407B1CE6E93ULL;
            const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 64);
            const std::uint64_t lo = static_cast<std::uint64_t>(prod);
            c0 = hi ^ k ^ c1;
            c1 = lo;
            k += 0x9E3779B97F4A7C15ULL;
        }
        block_[0] = c0;
        block_[1] = c1;
    }

    std::uint64_t root_seed_;
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
    std::uint64_t block_[2] = {0, 0};
    int avail_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
    std::vector<std::uint64_t> path_;
};

inline RngStream derive_stream(const RngStream& rng, std::uint64_t index) {
    return rng.derive(index);
}

}  // namespace bbmfront
