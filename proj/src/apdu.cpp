#include "rde/apdu.hpp"

#include "rde/errors.hpp"

namespace rde {

CommandApdu encode_read_binary_sfi(int sfi, int offset, int n) {
    if (sfi < 1 || sfi > 30) fail(Errc::range_error, "sfi must be in 1..30");
    if (offset < 0 || offset > 255) fail(Errc::range_error, "offset must be in 0..255");
    if (n < 1 || n > 256) fail(Errc::range_error, "read length must be in 1..256");
    CommandApdu c;
    c.cla = 0x00;
    c.ins = 0xB0;
    c.p1 = static_cast<std::uint8_t>(0x80 | sfi);
    c.p2 = static_cast<std::uint8_t>(offset);
    c.le = static_cast<std::uint16_t>(n);
    return c;
}

Bytes encode_command(const CommandApdu& c) {
    if (c.data.size() > 255) fail(Errc::range_error, "short APDU data limit is 255");
    if (c.le && (*c.le < 1 || *c.le > 256)) fail(Errc::range_error, "le must be in 1..256");
    Bytes out{c.cla, c.ins, c.p1, c.p2};
    if (!c.data.empty()) {
        out.push_back(static_cast<std::uint8_t>(c.data.size()));
        append(out, c.data);
    }
    if (c.le) out.push_back(static_cast<std::uint8_t>(*c.le & 0xFF));  // 256 -> 00
    return out;
}

CommandApdu decode_command(ByteView bytes) {
    if (bytes.size() < 4) fail(Errc::truncated_apdu, "command shorter than a header");
    CommandApdu c;
    c.cla = bytes[0];
    c.ins = bytes[1];
    c.p1 = bytes[2];
    c.p2 = bytes[3];
    if (bytes.size() == 4) return c;  // case 1
    if (bytes.size() == 5) {          // case 2
        c.le = bytes[4] == 0 ? 256 : bytes[4];
        return c;
    }
    std::size_t lc = bytes[4];
    if (lc == 0) fail(Errc::malformed, "extended-length APDUs are not supported");
    if (bytes.size() == 5 + lc) {  // case 3
        c.data.assign(bytes.begin() + 5, bytes.end());
        return c;
    }
    if (bytes.size() == 6 + lc) {  // case 4
        c.data.assign(bytes.begin() + 5, bytes.begin() + 5 + static_cast<std::ptrdiff_t>(lc));
        c.le = bytes[5 + lc] == 0 ? 256 : bytes[5 + lc];
        return c;
    }
    if (bytes.size() < 5 + lc) fail(Errc::truncated_apdu, "data shorter than lc");
    fail(Errc::length_mismatch, "trailing bytes after the le field");
}

Bytes encode_response(const ResponseApdu& r) {
    Bytes out = r.data;
    out.push_back(static_cast<std::uint8_t>(r.sw >> 8));
    out.push_back(static_cast<std::uint8_t>(r.sw & 0xFF));
    return out;
}

ResponseApdu decode_response(ByteView bytes) {
    if (bytes.size() < 2) fail(Errc::truncated_apdu, "response shorter than a status word");
    ResponseApdu r;
    r.data.assign(bytes.begin(), bytes.end() - 2);
    r.sw = static_cast<std::uint16_t>(bytes[bytes.size() - 2] << 8 | bytes[bytes.size() - 1]);
    return r;
}

namespace {

void encode_tag(Bytes& out, std::uint16_t tag) {
    if (tag > 0xFF) {
        std::uint8_t hi = static_cast<std::uint8_t>(tag >> 8);
        if ((hi & 0x1F) != 0x1F) fail(Errc::malformed, "invalid two-byte tag");
        out.push_back(hi);
        out.push_back(static_cast<std::uint8_t>(tag & 0xFF));
    } else {
        if ((tag & 0x1F) == 0x1F) fail(Errc::malformed, "one-byte tag reserved for multi-byte form");
        out.push_back(static_cast<std::uint8_t>(tag));
    }
}

void encode_length(Bytes& out, std::size_t len) {
    if (len < 0x80) {
        out.push_back(static_cast<std::uint8_t>(len));
    } else if (len <= 0xFF) {
        out.push_back(0x81);
        out.push_back(static_cast<std::uint8_t>(len));
    } else if (len <= 0xFFFF) {
        out.push_back(0x82);
        out.push_back(static_cast<std::uint8_t>(len >> 8));
        out.push_back(static_cast<std::uint8_t>(len & 0xFF));
    } else {
        fail(Errc::range_error, "value longer than 65535 bytes");
    }
}

struct Cursor {
    ByteView in;
    std::size_t pos = 0;

    std::uint8_t take() {
        if (pos >= in.size()) fail(Errc::truncated_apdu, "TLV input exhausted");
        return in[pos++];
    }
};

TlvObject decode_one(Cursor& cur) {
    TlvObject obj;
    std::uint8_t t0 = cur.take();
    if ((t0 & 0x1F) == 0x1F) {
        std::uint8_t t1 = cur.take();
        if (t1 & 0x80) fail(Errc::malformed, "tags longer than two bytes are not supported");
        obj.tag = static_cast<std::uint16_t>(t0 << 8 | t1);
    } else {
        obj.tag = t0;
    }
    std::size_t len;
    std::uint8_t l0 = cur.take();
    if (l0 < 0x80) {
        len = l0;
    } else if (l0 == 0x80) {
        fail(Errc::indefinite_length, "indefinite lengths are not allowed");
    } else if (l0 == 0x81) {
        len = cur.take();
        if (len < 0x80) fail(Errc::malformed, "non-minimal length encoding");
    } else if (l0 == 0x82) {
        std::size_t hi = cur.take();
        len = hi << 8 | cur.take();
        if (len <= 0xFF) fail(Errc::malformed, "non-minimal length encoding");
    } else {
        fail(Errc::malformed, "length form too long");
    }
    if (cur.in.size() - cur.pos < len) fail(Errc::truncated_apdu, "TLV value truncated");
    obj.value.assign(cur.in.begin() + static_cast<std::ptrdiff_t>(cur.pos),
                     cur.in.begin() + static_cast<std::ptrdiff_t>(cur.pos + len));
    cur.pos += len;
    return obj;
}

}  // namespace

Bytes encode_tlv(const TlvObject& obj) {
    Bytes out;
    encode_tag(out, obj.tag);
    encode_length(out, obj.value.size());
    append(out, obj.value);
    return out;
}

Bytes tlv(std::uint16_t tag, ByteView value) {
    return encode_tlv(TlvObject{tag, Bytes(value.begin(), value.end())});
}

std::vector<TlvObject> decode_tlv_sequence(ByteView bytes) {
    std::vector<TlvObject> out;
    Cursor cur{bytes};
    while (cur.pos < bytes.size()) out.push_back(decode_one(cur));
    return out;
}

const TlvObject* find_tlv(const std::vector<TlvObject>& objs, std::uint16_t tag) {
    for (const auto& o : objs)
        if (o.tag == tag) return &o;
    return nullptr;
}

}  // namespace rde
