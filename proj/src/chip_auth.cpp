#include "rde/chip_auth.hpp"

#include "rde/errors.hpp"

namespace rde {

namespace {

std::uint8_t suite_code(CipherSuite s) {
    return static_cast<std::uint8_t>(s);
}

CipherSuite suite_from_code(std::uint8_t c) {
    if (c < 1 || c > 4) fail(Errc::unknown_suite, "unknown suite code in data group 14");
    return static_cast<CipherSuite>(c);
}

CurveId curve_from_code(std::uint8_t c) {
    if (c < 1 || c > 2) fail(Errc::unknown_curve, "unknown curve code in data group 14");
    return static_cast<CurveId>(c);
}

}  // namespace

Bytes encode_dg14(const Dg14Content& c) {
    const auto& params = DomainParameters::get(c.curve);
    Bytes body = cat({tlv(0x80, Bytes{suite_code(c.suite)}),
                      tlv(0x81, Bytes{static_cast<std::uint8_t>(c.curve)}),
                      tlv(0x86, encode_point(c.ca_public, params))});
    return tlv(0x6E, body);
}

Dg14Content parse_dg14(ByteView bytes) {
    auto outer = decode_tlv_sequence(bytes);
    if (outer.size() != 1 || outer[0].tag != 0x6E)
        fail(Errc::malformed, "data group 14 must be a single tag-6E object");
    auto inner = decode_tlv_sequence(outer[0].value);
    const TlvObject* suite = find_tlv(inner, 0x80);
    const TlvObject* curve = find_tlv(inner, 0x81);
    const TlvObject* point = find_tlv(inner, 0x86);
    if (!suite || suite->value.size() != 1 || !curve || curve->value.size() != 1 || !point)
        fail(Errc::malformed, "data group 14 lacks suite, curve or key object");

    Dg14Content c;
    c.suite = suite_from_code(suite->value[0]);
    c.curve = curve_from_code(curve->value[0]);
    c.ca_public = decode_point(point->value, DomainParameters::get(c.curve));
    return c;
}

CaTranscript terminal_chip_auth(const Dg14Content& dg14, const Scalar& k) {
    const auto& params = DomainParameters::get(dg14.curve);
    CaTranscript t;
    t.ephemeral_public = scalar_mult(k, generator(params), params);
    GroupElement shared = scalar_mult(k, dg14.ca_public, params);
    t.session = derive_session_keys(shared_secret_x(shared, params), dg14.suite);
    return t;
}

SmSession chip_receive_ca(const Scalar& x, CipherSuite suite, CurveId curve, ByteView z_bytes) {
    const auto& params = DomainParameters::get(curve);
    GroupElement z = decode_point(z_bytes, params);
    GroupElement shared = scalar_mult(x, z, params);
    if (shared.identity) fail(Errc::off_curve_point, "shared point is the identity");
    return derive_session_keys(shared_secret_x(shared, params), suite);
}

CommandApdu encode_mse_set_kat(ByteView z_encoded) {
    CommandApdu c;
    c.cla = 0x00;
    c.ins = 0x22;
    c.p1 = 0x41;
    c.p2 = 0xA6;
    c.data = tlv(0x91, z_encoded);
    return c;
}

Bytes parse_mse_set_kat(const CommandApdu& c) {
    if (c.ins != 0x22 || c.p1 != 0x41 || c.p2 != 0xA6)
        fail(Errc::malformed, "not an MSE:SET KAT command");
    auto objs = decode_tlv_sequence(c.data);
    const TlvObject* key = find_tlv(objs, 0x91);
    if (!key || objs.size() != 1) fail(Errc::malformed, "expected exactly one DO'91'");
    return key->value;
}

}  // namespace rde
