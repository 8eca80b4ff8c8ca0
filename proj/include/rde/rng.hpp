#pragma once

#include <cstdint>
#include <span>

#include "rde/bytes.hpp"

namespace rde {

/// Injected randomness source. Protocol code never talks to the OS
/// directly, so everything can be replayed from a fixed seed.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual void fill(std::span<std::uint8_t> out) = 0;

    Bytes bytes(std::size_t n) {
        Bytes out(n);
        fill(out);
        return out;
    }
};

/// OS-backed randomness (OpenSSL RAND_bytes).
class SystemRandom final : public RandomSource {
public:
    void fill(std::span<std::uint8_t> out) override;
};

/// Deterministic stream: SHA-256 over seed || counter. Identical seeds
/// produce identical streams on every platform.
class SeededRandom final : public RandomSource {
public:
    explicit SeededRandom(std::uint64_t seed) : seed_(seed) {}
    void fill(std::span<std::uint8_t> out) override;

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    Bytes buffer_;
};

}  // namespace rde
