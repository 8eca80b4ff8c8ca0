#include "rde/passive_auth.hpp"

#include <algorithm>

#include "rde/apdu.hpp"
#include "rde/crypto.hpp"
#include "rde/errors.hpp"

namespace rde {

EcdsaSignature ecdsa_sign(const Scalar& d, ByteView message, const DomainParameters& params,
                          RandomSource& rng) {
    BigInt e = bn_from_bytes(crypto::sha256(message));
    while (true) {
        auto [k, big_r] = generate_keypair(params, rng);
        BigInt r = mod_reduce(big_r.x, params.q);
        if (r == 0) continue;
        BigInt s = mod_reduce(mod_inverse(k.value(), params.q) * (e + r * d.value()), params.q);
        if (s == 0) continue;
        return {r, s};
    }
}

bool ecdsa_verify(const GroupElement& public_key, ByteView message, const EcdsaSignature& sig,
                  const DomainParameters& params) {
    if (sig.r <= 0 || sig.r >= params.q || sig.s <= 0 || sig.s >= params.q) return false;
    BigInt e = bn_from_bytes(crypto::sha256(message));
    BigInt w = mod_inverse(sig.s, params.q);
    Scalar u1 = Scalar::from_integer(mod_reduce(e * w, params.q), params);
    Scalar u2 = Scalar::from_integer(mod_reduce(sig.r * w, params.q), params);
    GroupElement p = point_add(scalar_mult(u1, generator(params), params),
                               scalar_mult(u2, public_key, params), params);
    if (p.identity) return false;
    return mod_reduce(p.x, params.q) == sig.r;
}

IssuerKeypair IssuerKeypair::generate(RandomSource& rng, CurveId curve) {
    auto [d, q] = generate_keypair(DomainParameters::get(curve), rng);
    return {d, q, curve};
}

Bytes sod_signed_body(const std::vector<SodEntry>& entries) {
    Bytes body = tlv(0x80, Bytes{0x01});  // hash algorithm: SHA-256
    for (const auto& entry : entries) {
        if (entry.hash.size() != 32) fail(Errc::malformed, "entry hash must be 32 bytes");
        Bytes record = cat({tlv(0x02, Bytes{static_cast<std::uint8_t>(entry.dg_number)}),
                            tlv(0x04, entry.hash)});
        append(body, tlv(0xA1, record));
    }
    return body;
}

DocumentSecurityObject create_sod(const IssuerKeypair& issuer,
                                  const std::vector<DataGroup>& dgs, RandomSource& rng) {
    if (dgs.empty()) fail(Errc::malformed, "no data groups to sign");
    DocumentSecurityObject sod;
    for (const auto& dg : dgs) {
        if (dg.number < 1 || dg.number > 16) fail(Errc::range_error, "dg number must be 1..16");
        sod.entries.push_back({dg.number, crypto::sha256(dg.content)});
    }
    std::sort(sod.entries.begin(), sod.entries.end(),
              [](const SodEntry& a, const SodEntry& b) { return a.dg_number < b.dg_number; });
    for (std::size_t i = 1; i < sod.entries.size(); ++i)
        if (sod.entries[i].dg_number == sod.entries[i - 1].dg_number)
            fail(Errc::duplicate_dg_number, "data group numbers must be unique");

    const auto& params = DomainParameters::get(issuer.curve);
    EcdsaSignature sig = ecdsa_sign(issuer.signing_key, sod_signed_body(sod.entries), params, rng);
    sod.signature = cat({bn_to_bytes(sig.r, params.field_bytes()),
                         bn_to_bytes(sig.s, params.field_bytes())});
    sod.issuer_curve = issuer.curve;
    sod.issuer_public = issuer.public_key;
    return sod;
}

bool verify_sod_signature(const DocumentSecurityObject& sod) {
    const auto& params = DomainParameters::get(sod.issuer_curve);
    std::size_t w = params.field_bytes();
    if (sod.signature.size() != 2 * w) return false;
    EcdsaSignature sig{bn_from_bytes(ByteView(sod.signature).subspan(0, w)),
                       bn_from_bytes(ByteView(sod.signature).subspan(w))};
    return ecdsa_verify(sod.issuer_public, sod_signed_body(sod.entries), sig, params);
}

bool verify_dg(const DocumentSecurityObject& sod, const DataGroup& dg) {
    if (!verify_sod_signature(sod)) return false;
    for (const auto& entry : sod.entries)
        if (entry.dg_number == dg.number) return entry.hash == crypto::sha256(dg.content);
    return false;
}

Bytes encode_sod(const DocumentSecurityObject& sod) {
    const auto& params = DomainParameters::get(sod.issuer_curve);
    Bytes issuer = cat({tlv(0x81, Bytes{static_cast<std::uint8_t>(sod.issuer_curve)}),
                        tlv(0x86, encode_point(sod.issuer_public, params))});
    Bytes value = cat({sod_signed_body(sod.entries), tlv(0x5F37, sod.signature),
                       tlv(0xA2, issuer)});
    return tlv(0x77, value);
}

DocumentSecurityObject parse_sod(ByteView bytes) {
    auto outer = decode_tlv_sequence(bytes);
    if (outer.size() != 1 || outer[0].tag != 0x77)
        fail(Errc::malformed, "security object must be a single tag-77 object");
    auto objs = decode_tlv_sequence(outer[0].value);
    if (objs.size() < 4 || objs[0].tag != 0x80 || objs[0].value != Bytes{0x01})
        fail(Errc::malformed, "unsupported or missing hash-algorithm marker");

    DocumentSecurityObject sod;
    std::size_t i = 1;
    for (; i < objs.size() && objs[i].tag == 0xA1; ++i) {
        auto record = decode_tlv_sequence(objs[i].value);
        const TlvObject* num = find_tlv(record, 0x02);
        const TlvObject* hash = find_tlv(record, 0x04);
        if (!num || num->value.size() != 1 || !hash || hash->value.size() != 32)
            fail(Errc::malformed, "bad security-object entry");
        sod.entries.push_back({num->value[0], hash->value});
    }
    if (sod.entries.empty()) fail(Errc::malformed, "security object lists no data groups");
    for (std::size_t j = 1; j < sod.entries.size(); ++j)
        if (sod.entries[j].dg_number <= sod.entries[j - 1].dg_number)
            fail(Errc::malformed, "entries must be strictly ascending");

    if (i + 2 != objs.size() || objs[i].tag != 0x5F37 || objs[i + 1].tag != 0xA2)
        fail(Errc::malformed, "signature or issuer object missing");
    sod.signature = objs[i].value;

    auto issuer = decode_tlv_sequence(objs[i + 1].value);
    const TlvObject* curve = find_tlv(issuer, 0x81);
    const TlvObject* point = find_tlv(issuer, 0x86);
    if (!curve || curve->value.size() != 1 || !point)
        fail(Errc::malformed, "issuer block lacks curve or key");
    if (curve->value[0] < 1 || curve->value[0] > 2)
        fail(Errc::unknown_curve, "unknown curve code in security object");
    sod.issuer_curve = static_cast<CurveId>(curve->value[0]);
    sod.issuer_public = decode_point(point->value, DomainParameters::get(sod.issuer_curve));
    if (sod.signature.size() != 2 * DomainParameters::get(sod.issuer_curve).field_bytes())
        fail(Errc::malformed, "signature width does not match the curve");
    return sod;
}

}  // namespace rde
