#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rde/bytes.hpp"

namespace rde {

/// Short-form ISO 7816-4 command APDU (data <= 255, le <= 256).
struct CommandApdu {
    std::uint8_t cla = 0;
    std::uint8_t ins = 0;
    std::uint8_t p1 = 0;
    std::uint8_t p2 = 0;
    Bytes data;
    std::optional<std::uint16_t> le;

    bool operator==(const CommandApdu&) const = default;
};

struct ResponseApdu {
    Bytes data;
    std::uint16_t sw = 0;

    bool ok() const { return sw == 0x9000; }
    bool operator==(const ResponseApdu&) const = default;
};

// common status words
inline constexpr std::uint16_t kSwOk = 0x9000;
inline constexpr std::uint16_t kSwSecurityStatus = 0x6982;
inline constexpr std::uint16_t kSwSmObjectsIncorrect = 0x6988;
inline constexpr std::uint16_t kSwFileNotFound = 0x6A82;
inline constexpr std::uint16_t kSwWrongLength = 0x6700;
inline constexpr std::uint16_t kSwAuthFailed = 0x6300;

/// READ BINARY with a short file identifier: cla 00, ins B0, p1 = 80|sfi,
/// p2 = offset, le = n (256 encoded as 00).
CommandApdu encode_read_binary_sfi(int sfi, int offset, int n);

Bytes encode_command(const CommandApdu& c);
CommandApdu decode_command(ByteView bytes);

Bytes encode_response(const ResponseApdu& r);
ResponseApdu decode_response(ByteView bytes);

/// DER-style TLV with one- or two-byte tags and definite lengths.
struct TlvObject {
    std::uint16_t tag = 0;
    Bytes value;

    bool operator==(const TlvObject&) const = default;
};

Bytes encode_tlv(const TlvObject& obj);
Bytes tlv(std::uint16_t tag, ByteView value);

/// Parses a sequence of TLV objects covering the input exactly.
std::vector<TlvObject> decode_tlv_sequence(ByteView bytes);

/// First object with the given tag, or nullptr.
const TlvObject* find_tlv(const std::vector<TlvObject>& objs, std::uint16_t tag);

}  // namespace rde
