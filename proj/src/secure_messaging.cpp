#include "rde/secure_messaging.hpp"

#include <limits>

#include "rde/crypto.hpp"
#include "rde/errors.hpp"

namespace rde {

bool is_aes(CipherSuite suite) {
    return suite != CipherSuite::tdes_cbc_cbc;
}

std::size_t block_size(CipherSuite suite) {
    return is_aes(suite) ? 16 : 8;
}

std::size_t key_length(CipherSuite suite) {
    switch (suite) {
        case CipherSuite::tdes_cbc_cbc: return 16;
        case CipherSuite::aes_cbc_cmac_128: return 16;
        case CipherSuite::aes_cbc_cmac_192: return 24;
        case CipherSuite::aes_cbc_cmac_256: return 32;
    }
    fail(Errc::unknown_suite, "bad cipher suite value");
}

const char* suite_name(CipherSuite suite) {
    switch (suite) {
        case CipherSuite::tdes_cbc_cbc: return "3des";
        case CipherSuite::aes_cbc_cmac_128: return "aes128";
        case CipherSuite::aes_cbc_cmac_192: return "aes192";
        case CipherSuite::aes_cbc_cmac_256: return "aes256";
    }
    fail(Errc::unknown_suite, "bad cipher suite value");
}

CipherSuite suite_from_name(std::string_view name) {
    if (name == "3des") return CipherSuite::tdes_cbc_cbc;
    if (name == "aes128") return CipherSuite::aes_cbc_cmac_128;
    if (name == "aes192") return CipherSuite::aes_cbc_cmac_192;
    if (name == "aes256") return CipherSuite::aes_cbc_cmac_256;
    fail(Errc::unknown_suite, "unknown cipher suite '" + std::string(name) + "'");
}

Bytes derive_key(ByteView secret, std::uint32_t counter, CipherSuite suite) {
    Bytes input(secret.begin(), secret.end());
    input.push_back(static_cast<std::uint8_t>(counter >> 24));
    input.push_back(static_cast<std::uint8_t>(counter >> 16));
    input.push_back(static_cast<std::uint8_t>(counter >> 8));
    input.push_back(static_cast<std::uint8_t>(counter));
    bool long_hash = suite == CipherSuite::aes_cbc_cmac_192 ||
                     suite == CipherSuite::aes_cbc_cmac_256;
    Bytes digest = long_hash ? crypto::sha256(input) : crypto::sha1(input);
    digest.resize(key_length(suite));
    if (suite == CipherSuite::tdes_cbc_cbc) crypto::adjust_des_parity(digest);
    return digest;
}

Bytes pad2(ByteView data, std::size_t block) {
    Bytes out(data.begin(), data.end());
    out.push_back(0x80);
    while (out.size() % block != 0) out.push_back(0x00);
    return out;
}

Bytes unpad2(ByteView data, std::size_t block) {
    if (data.empty() || data.size() % block != 0)
        fail(Errc::no_padding_marker, "input is not a positive multiple of the block size");
    std::size_t i = data.size();
    while (i > 0 && data[i - 1] == 0x00) --i;
    if (i == 0 || data[i - 1] != 0x80)
        fail(Errc::no_padding_marker, "no 0x80 marker found");
    return Bytes(data.begin(), data.begin() + static_cast<std::ptrdiff_t>(i - 1));
}

SmSession derive_session_keys(ByteView shared_secret, CipherSuite suite) {
    SmSession s;
    s.suite = suite;
    s.ks_enc = derive_key(shared_secret, 1, suite);
    s.ks_mac = derive_key(shared_secret, 2, suite);
    s.ssc = 0;
    return s;
}

Bytes ssc_block(const SmSession& s) {
    std::size_t width = block_size(s.suite);
    Bytes out(width, 0);
    std::uint64_t v = s.ssc;
    for (std::size_t i = 0; i < 8; ++i) {
        out[width - 1 - i] = static_cast<std::uint8_t>(v & 0xFF);
        v >>= 8;
    }
    return out;
}

namespace {

void bump_ssc(SmSession& s) {
    if (s.ssc == std::numeric_limits<std::uint64_t>::max())
        fail(Errc::ssc_exhausted, "send sequence counter exhausted");
    ++s.ssc;
}

Bytes data_iv(const SmSession& s) {
    if (is_aes(s.suite)) return crypto::aes_ecb_encrypt_block(s.ks_enc, ssc_block(s));
    return Bytes(8, 0);
}

Bytes encrypt_blocks(const SmSession& s, ByteView padded) {
    if (is_aes(s.suite)) return crypto::aes_cbc_encrypt(s.ks_enc, data_iv(s), padded);
    return crypto::tdes_cbc_encrypt(s.ks_enc, data_iv(s), padded);
}

Bytes decrypt_blocks(const SmSession& s, ByteView ct) {
    if (is_aes(s.suite)) return crypto::aes_cbc_decrypt(s.ks_enc, data_iv(s), ct);
    return crypto::tdes_cbc_decrypt(s.ks_enc, data_iv(s), ct);
}

// CMAC over the padded input for AES; the retail MAC pads by itself.
Bytes compute_mac(const SmSession& s, ByteView input) {
    if (is_aes(s.suite)) {
        Bytes mac = crypto::aes_cmac(s.ks_mac, pad2(input, 16));
        mac.resize(8);
        return mac;
    }
    return crypto::retail_mac(s.ks_mac, input);
}

Bytes padded_header(const SmSession& s, const CommandApdu& c) {
    return pad2(Bytes{c.cla, c.ins, c.p1, c.p2}, block_size(s.suite));
}

Bytes decrypt_do87(const SmSession& s, ByteView value) {
    if (value.empty() || value[0] != 0x01)
        fail(Errc::malformed_sm_objects, "DO'87' must start with the 01 content marker");
    ByteView ct = value.subspan(1);
    if (ct.empty() || ct.size() % block_size(s.suite) != 0)
        fail(Errc::malformed_sm_objects, "DO'87' ciphertext is not whole blocks");
    return unpad2(decrypt_blocks(s, ct), block_size(s.suite));
}

/// Splits protected-APDU payload into the MAC'd prefix (re-encoded DOs in
/// received order) and the DO'8E' value, which must come last.
struct SplitSm {
    std::vector<TlvObject> objs;  // everything before DO'8E'
    Bytes preceding;              // their exact encoding
    Bytes mac;
};

SplitSm split_sm_objects(ByteView payload) {
    std::vector<TlvObject> objs;
    try {
        objs = decode_tlv_sequence(payload);
    } catch (const Error&) {
        fail(Errc::malformed_sm_objects, "protected payload is not a TLV sequence");
    }
    if (objs.empty() || objs.back().tag != 0x8E)
        fail(Errc::malformed_sm_objects, "DO'8E' missing or not in final position");
    SplitSm out;
    out.mac = objs.back().value;
    if (out.mac.size() != 8) fail(Errc::malformed_sm_objects, "DO'8E' must hold 8 bytes");
    objs.pop_back();
    for (const auto& o : objs) {
        if (o.tag == 0x8E) fail(Errc::malformed_sm_objects, "duplicate DO'8E'");
        append(out.preceding, encode_tlv(o));
    }
    out.objs = std::move(objs);
    return out;
}

}  // namespace

CommandApdu protect_command(SmSession& s, const CommandApdu& c) {
    bump_ssc(s);
    CommandApdu out;
    out.cla = c.cla | 0x0C;
    out.ins = c.ins;
    out.p1 = c.p1;
    out.p2 = c.p2;

    Bytes do87, do97;
    if (!c.data.empty()) {
        Bytes ct = encrypt_blocks(s, pad2(c.data, block_size(s.suite)));
        Bytes value{0x01};
        append(value, ct);
        do87 = tlv(0x87, value);
    }
    if (c.le) do97 = tlv(0x97, Bytes{static_cast<std::uint8_t>(*c.le & 0xFF)});

    Bytes mac_in = cat({ssc_block(s), padded_header(s, out), do87, do97});
    Bytes do8e = tlv(0x8E, compute_mac(s, mac_in));

    out.data = cat({do87, do97, do8e});
    out.le = 256;
    return out;
}

CommandApdu unprotect_command(SmSession& s, const CommandApdu& c) {
    bump_ssc(s);
    if ((c.cla & 0x0C) != 0x0C)
        fail(Errc::malformed_sm_objects, "command lacks the secure-messaging cla bits");
    SplitSm sm = split_sm_objects(c.data);

    Bytes mac_in = cat({ssc_block(s), padded_header(s, c), sm.preceding});
    if (compute_mac(s, mac_in) != sm.mac)
        fail(Errc::mac_mismatch, "command MAC check failed");

    CommandApdu plain;
    plain.cla = c.cla & 0xF3;
    plain.ins = c.ins;
    plain.p1 = c.p1;
    plain.p2 = c.p2;
    for (const auto& o : sm.objs) {
        if (o.tag == 0x87) {
            plain.data = decrypt_do87(s, o.value);
        } else if (o.tag == 0x97) {
            if (o.value.size() != 1)
                fail(Errc::malformed_sm_objects, "DO'97' must hold one byte");
            plain.le = o.value[0] == 0 ? 256 : o.value[0];
        } else {
            fail(Errc::malformed_sm_objects, "unexpected data object in command");
        }
    }
    return plain;
}

ResponseApdu protect_response(SmSession& s, const ResponseApdu& r) {
    bump_ssc(s);
    Bytes do87;
    if (!r.data.empty()) {
        Bytes ct = encrypt_blocks(s, pad2(r.data, block_size(s.suite)));
        Bytes value{0x01};
        append(value, ct);
        do87 = tlv(0x87, value);
    }
    Bytes do99 = tlv(0x99, Bytes{static_cast<std::uint8_t>(r.sw >> 8),
                                 static_cast<std::uint8_t>(r.sw & 0xFF)});
    Bytes mac_in = cat({ssc_block(s), do87, do99});
    Bytes do8e = tlv(0x8E, compute_mac(s, mac_in));

    ResponseApdu out;
    out.data = cat({do87, do99, do8e});
    out.sw = r.sw;
    return out;
}

ResponseApdu unprotect_response(SmSession& s, const ResponseApdu& r) {
    bump_ssc(s);
    SplitSm sm = split_sm_objects(r.data);

    Bytes mac_in = cat({ssc_block(s), sm.preceding});
    if (compute_mac(s, mac_in) != sm.mac)
        fail(Errc::mac_mismatch, "response MAC check failed");

    ResponseApdu plain;
    bool have_status = false;
    for (const auto& o : sm.objs) {
        if (o.tag == 0x87) {
            plain.data = decrypt_do87(s, o.value);
        } else if (o.tag == 0x99) {
            if (o.value.size() != 2)
                fail(Errc::malformed_sm_objects, "DO'99' must hold two bytes");
            plain.sw = static_cast<std::uint16_t>(o.value[0] << 8 | o.value[1]);
            have_status = true;
        } else {
            fail(Errc::malformed_sm_objects, "unexpected data object in response");
        }
    }
    if (!have_status) fail(Errc::malformed_sm_objects, "DO'99' missing");
    if (plain.sw != r.sw)
        fail(Errc::status_mismatch, "DO'99' disagrees with the outer status word");
    return plain;
}

}  // namespace rde
