#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rde {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline std::string to_string(ByteView b) {
    return std::string(b.begin(), b.end());
}

Bytes cat(std::initializer_list<ByteView> parts);

void append(Bytes& out, ByteView part);

/// Lowercase continuous hex, the canonical textual form for file payloads.
std::string to_hex(ByteView data);

/// Uppercase space-separated hex, used for transcript dumps.
std::string to_hex_spaced(ByteView data);

/// Accepts both hex forms above (case-insensitive, whitespace ignored).
Bytes from_hex(std::string_view text);

}  // namespace rde
