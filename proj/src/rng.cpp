#include "rde/rng.hpp"

#include <openssl/rand.h>

#include <cstring>

#include "rde/crypto.hpp"
#include "rde/errors.hpp"

namespace rde {

void SystemRandom::fill(std::span<std::uint8_t> out) {
    if (out.empty()) return;
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1)
        fail(Errc::io_error, "RAND_bytes failed");
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
    std::size_t pos = 0;
    while (pos < out.size()) {
        if (buffer_.empty()) {
            std::uint8_t block[16];
            for (int i = 0; i < 8; ++i) {
                block[i] = static_cast<std::uint8_t>(seed_ >> (56 - 8 * i));
                block[8 + i] = static_cast<std::uint8_t>(counter_ >> (56 - 8 * i));
            }
            ++counter_;
            buffer_ = crypto::sha256(ByteView(block, sizeof block));
        }
        std::size_t n = std::min(out.size() - pos, buffer_.size());
        std::memcpy(out.data() + pos, buffer_.data(), n);
        buffer_.erase(buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(n));
        pos += n;
    }
}

}  // namespace rde
