#include "rde/bytes.hpp"

#include <cctype>

#include "rde/errors.hpp"

namespace rde {

Bytes cat(std::initializer_list<ByteView> parts) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    Bytes out;
    out.reserve(total);
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

void append(Bytes& out, ByteView part) {
    out.insert(out.end(), part.begin(), part.end());
}

namespace {
constexpr char kLower[] = "0123456789abcdef";
constexpr char kUpper[] = "0123456789ABCDEF";
}  // namespace

std::string to_hex(ByteView data) {
    std::string s;
    s.reserve(data.size() * 2);
    for (auto b : data) {
        s.push_back(kLower[b >> 4]);
        s.push_back(kLower[b & 0xF]);
    }
    return s;
}

std::string to_hex_spaced(ByteView data) {
    std::string s;
    s.reserve(data.size() * 3);
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (i) s.push_back(' ');
        s.push_back(kUpper[data[i] >> 4]);
        s.push_back(kUpper[data[i] & 0xF]);
    }
    return s;
}

Bytes from_hex(std::string_view text) {
    Bytes out;
    out.reserve(text.size() / 2);
    int hi = -1;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            v = c - 'A' + 10;
        else
            fail(Errc::malformed, "invalid hex character");
        if (hi < 0) {
            hi = v;
        } else {
            out.push_back(static_cast<std::uint8_t>(hi << 4 | v));
            hi = -1;
        }
    }
    if (hi >= 0) fail(Errc::malformed, "odd-length hex string");
    return out;
}

}  // namespace rde
