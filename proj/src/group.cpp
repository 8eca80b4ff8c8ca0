#include "rde/group.hpp"

#include <string>

#include "rde/errors.hpp"

namespace rde {

BigInt bn_from_hex(std::string_view hex) {
    return BigInt("0x" + std::string(hex));
}

BigInt bn_from_bytes(ByteView bytes) {
    BigInt v = 0;
    for (auto b : bytes) {
        v <<= 8;
        v |= b;
    }
    return v;
}

Bytes bn_to_bytes(const BigInt& v, std::size_t width) {
    Bytes out(width, 0);
    BigInt t = v;
    for (std::size_t i = 0; i < width && t != 0; ++i) {
        out[width - 1 - i] = static_cast<std::uint8_t>(t & 0xFF);
        t >>= 8;
    }
    if (t != 0) fail(Errc::range_error, "integer does not fit the field width");
    return out;
}

BigInt mod_reduce(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    // extended Euclid
    BigInt r0 = m, r1 = mod_reduce(a, m);
    BigInt t0 = 0, t1 = 1;
    while (r1 != 0) {
        BigInt qt = r0 / r1;
        BigInt r2 = r0 - qt * r1;
        r0 = r1;
        r1 = r2;
        BigInt t2 = t0 - qt * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) fail(Errc::range_error, "not invertible");
    return mod_reduce(t0, m);
}

const char* curve_name(CurveId id) {
    switch (id) {
        case CurveId::brainpoolP256r1: return "brainpoolP256r1";
        case CurveId::brainpoolP320r1: return "brainpoolP320r1";
    }
    return "?";
}

CurveId curve_from_name(std::string_view name) {
    if (name == "brainpoolP256r1" || name == "bp256") return CurveId::brainpoolP256r1;
    if (name == "brainpoolP320r1" || name == "bp320") return CurveId::brainpoolP320r1;
    fail(Errc::unknown_curve, std::string(name));
}

namespace {

DomainParameters make_p256() {
    DomainParameters d;
    d.curve_id = CurveId::brainpoolP256r1;
    d.p = bn_from_hex("A9FB57DBA1EEA9BC3E660A909D838D726E3BF623D52620282013481D1F6E5377");
    d.a = bn_from_hex("7D5A0975FC2C3057EEF67530417AFFE7FB8055C126DC5C6CE94A4B44F330B5D9");
    d.b = bn_from_hex("26DC5C6CE94A4B44F330B5D9BBD77CBF958416295CF7E1CE6BCCDC18FF8C07B6");
    d.gx = bn_from_hex("8BD2AEB9CB7E57CB2C4B482FFC81B7AFB9DE27E1E3BD23C23A4453BD9ACE3262");
    d.gy = bn_from_hex("547EF835C3DAC4FD97F8461A14611DC9C27745132DED8E545C1D54C72F046997");
    d.q = bn_from_hex("A9FB57DBA1EEA9BC3E660A909D838D718C397AA3B561A6F7901E0E82974856A7");
    return d;
}

DomainParameters make_p320() {
    DomainParameters d;
    d.curve_id = CurveId::brainpoolP320r1;
    d.p = bn_from_hex(
        "D35E472036BC4FB7E13C785ED201E065F98FCFA6F6F40DEF4F92B9EC7893EC28FCD412B1F1B32E27");
    d.a = bn_from_hex(
        "3EE30B568FBAB0F883CCEBD46D3F3BB8A2A73513F5EB79DA66190EB085FFA9F492F375A97D860EB4");
    d.b = bn_from_hex(
        "520883949DFDBC42D3AD198640688A6FE13F41349554B49ACC31DCCD884539816F5EB4AC8FB1F1A6");
    d.gx = bn_from_hex(
        "43BD7E9AFB53D8B85289BCC48EE5BFE6F20137D10A087EB6E7871E2A10A599C710AF8D0D39E20611");
    d.gy = bn_from_hex(
        "14FDD05545EC1CC8AB4093247F77275E0743FFED117182EAA9C77877AAAC6AC7D35245D1692E8EE1");
    d.q = bn_from_hex(
        "D35E472036BC4FB7E13C785ED201E065F98FCFA5B68F12A32D482EC7EE8658E98691555B44C59311");
    return d;
}

BigInt mod(const BigInt& a, const BigInt& m) {
    return mod_reduce(a, m);
}

BigInt mod_inv(const BigInt& a, const BigInt& m) {
    return mod_inverse(a, m);
}

// Jacobian coordinates; (X, Y, Z) with x = X/Z^2, y = Y/Z^3.
struct Jac {
    BigInt x, y, z;  // z == 0 encodes the identity
};

Jac to_jac(const GroupElement& p) {
    if (p.identity) return {1, 1, 0};
    return {p.x, p.y, 1};
}

GroupElement from_jac(const Jac& j, const DomainParameters& d) {
    if (j.z == 0) return GroupElement::infinity();
    BigInt zi = mod_inv(j.z, d.p);
    BigInt zi2 = mod(zi * zi, d.p);
    return GroupElement::affine(mod(j.x * zi2, d.p), mod(j.y * zi2 * zi, d.p));
}

Jac jac_double(const Jac& p, const DomainParameters& d) {
    if (p.z == 0 || p.y == 0) return {1, 1, 0};
    const BigInt& m = d.p;
    BigInt y2 = mod(p.y * p.y, m);
    BigInt s = mod(4 * p.x * y2, m);
    BigInt z2 = mod(p.z * p.z, m);
    BigInt w = mod(3 * p.x * p.x + d.a * z2 * z2, m);
    BigInt x3 = mod(w * w - 2 * s, m);
    BigInt y3 = mod(w * (s - x3) - 8 * y2 * y2, m);
    BigInt z3 = mod(2 * p.y * p.z, m);
    return {x3, y3, z3};
}

Jac jac_add(const Jac& p, const Jac& q, const DomainParameters& d) {
    if (p.z == 0) return q;
    if (q.z == 0) return p;
    const BigInt& m = d.p;
    BigInt z1z1 = mod(p.z * p.z, m);
    BigInt z2z2 = mod(q.z * q.z, m);
    BigInt u1 = mod(p.x * z2z2, m);
    BigInt u2 = mod(q.x * z1z1, m);
    BigInt s1 = mod(p.y * z2z2 * q.z, m);
    BigInt s2 = mod(q.y * z1z1 * p.z, m);
    if (u1 == u2) {
        if (s1 != s2) return {1, 1, 0};
        return jac_double(p, d);
    }
    BigInt h = mod(u2 - u1, m);
    BigInt r = mod(s2 - s1, m);
    BigInt h2 = mod(h * h, m);
    BigInt h3 = mod(h2 * h, m);
    BigInt u1h2 = mod(u1 * h2, m);
    BigInt x3 = mod(r * r - h3 - 2 * u1h2, m);
    BigInt y3 = mod(r * (u1h2 - x3) - s1 * h3, m);
    BigInt z3 = mod(h * p.z * q.z, m);
    return {x3, y3, z3};
}

BigInt curve_rhs(const BigInt& x, const DomainParameters& d) {
    return mod(x * x * x + d.a * x + d.b, d.p);
}

// p = 3 (mod 4) for both curves, so a square root is rhs^((p+1)/4).
BigInt sqrt_mod_p(const BigInt& v, const DomainParameters& d) {
    BigInt e = (d.p + 1) >> 2;
    return boost::multiprecision::powm(v, e, d.p);
}

}  // namespace

std::size_t DomainParameters::field_bytes() const {
    return curve_id == CurveId::brainpoolP256r1 ? 32u : 40u;
}

int DomainParameters::q_bits() const {
    return curve_id == CurveId::brainpoolP256r1 ? 256 : 320;
}

const DomainParameters& DomainParameters::get(CurveId id) {
    static const DomainParameters p256 = make_p256();
    static const DomainParameters p320 = make_p320();
    return id == CurveId::brainpoolP256r1 ? p256 : p320;
}

Scalar Scalar::from_integer(BigInt v, const DomainParameters& params) {
    if (v <= 0 || v >= params.q) fail(Errc::range_error, "scalar out of (0, q)");
    return Scalar(std::move(v));
}

Scalar Scalar::from_bytes(ByteView bytes, const DomainParameters& params) {
    return from_integer(bn_from_bytes(bytes), params);
}

bool on_curve(const GroupElement& pt, const DomainParameters& params) {
    if (pt.identity) return true;
    if (pt.x < 0 || pt.x >= params.p || pt.y < 0 || pt.y >= params.p) return false;
    return mod(pt.y * pt.y, params.p) == curve_rhs(pt.x, params);
}

GroupElement point_add(const GroupElement& p, const GroupElement& q,
                       const DomainParameters& params) {
    if (p.identity) return q;
    if (q.identity) return p;
    const BigInt& m = params.p;
    if (p.x == q.x && mod(p.y + q.y, m) == 0) return GroupElement::infinity();
    BigInt lambda;
    if (p.x == q.x && p.y == q.y) {
        lambda = mod((3 * p.x * p.x + params.a) * mod_inv(2 * p.y, m), m);
    } else {
        lambda = mod((q.y - p.y) * mod_inv(q.x - p.x, m), m);
    }
    BigInt x3 = mod(lambda * lambda - p.x - q.x, m);
    BigInt y3 = mod(lambda * (p.x - x3) - p.y, m);
    return GroupElement::affine(std::move(x3), std::move(y3));
}

GroupElement point_neg(const GroupElement& p, const DomainParameters& params) {
    if (p.identity) return p;
    return GroupElement::affine(p.x, mod(-p.y, params.p));
}

GroupElement point_sub(const GroupElement& p, const GroupElement& q,
                       const DomainParameters& params) {
    return point_add(p, point_neg(q, params), params);
}

GroupElement scalar_mult(const Scalar& k, const GroupElement& p,
                         const DomainParameters& params) {
    Jac acc{1, 1, 0};
    Jac base = to_jac(p);
    const BigInt& v = k.value();
    for (int i = static_cast<int>(boost::multiprecision::msb(v)); i >= 0; --i) {
        acc = jac_double(acc, params);
        if (boost::multiprecision::bit_test(v, static_cast<unsigned>(i)))
            acc = jac_add(acc, base, params);
    }
    return from_jac(acc, params);
}

GroupElement generator(const DomainParameters& params) {
    return GroupElement::affine(params.gx, params.gy);
}

std::pair<Scalar, GroupElement> generate_keypair(const DomainParameters& params,
                                                 RandomSource& rng) {
    for (;;) {
        Bytes raw = rng.bytes(params.field_bytes());
        BigInt v = bn_from_bytes(raw);
        if (v <= 0 || v >= params.q) continue;  // rejection sampling
        Scalar k = Scalar::from_integer(std::move(v), params);
        GroupElement pub = scalar_mult(k, generator(params), params);
        return {std::move(k), std::move(pub)};
    }
}

GroupElement embed_pin(ByteView pin, const DomainParameters& params) {
    BigInt x = mod(bn_from_bytes(pin), params.p);
    for (int tries = 0; tries < 1000; ++tries) {
        BigInt rhs = curve_rhs(x, params);
        BigInt y = sqrt_mod_p(rhs, params);
        if (mod(y * y, params.p) == rhs) {
            if (boost::multiprecision::bit_test(y, 0)) y = params.p - y;
            return GroupElement::affine(std::move(x), std::move(y));
        }
        x = mod(x + 1, params.p);
    }
    fail(Errc::embedding_failed, "no curve point found near the PIN value");
}

Bytes encode_point(const GroupElement& pt, const DomainParameters& params) {
    if (pt.identity) fail(Errc::malformed_point, "identity has no wire encoding");
    std::size_t w = params.field_bytes();
    Bytes out;
    out.reserve(1 + 2 * w);
    out.push_back(0x04);
    append(out, bn_to_bytes(pt.x, w));
    append(out, bn_to_bytes(pt.y, w));
    return out;
}

GroupElement decode_point(ByteView bytes, const DomainParameters& params) {
    std::size_t w = params.field_bytes();
    if (bytes.size() != 1 + 2 * w)
        fail(Errc::malformed_point, "wrong encoded point length");
    if (bytes[0] != 0x04)
        fail(Errc::malformed_point, "expected the uncompressed tag 04");
    GroupElement pt = GroupElement::affine(bn_from_bytes(bytes.subspan(1, w)),
                                           bn_from_bytes(bytes.subspan(1 + w, w)));
    if (!on_curve(pt, params)) fail(Errc::off_curve_point, "point not on curve");
    return pt;
}

Bytes shared_secret_x(const GroupElement& pt, const DomainParameters& params) {
    if (pt.identity) fail(Errc::malformed_point, "shared secret is the identity");
    return bn_to_bytes(pt.x, params.field_bytes());
}

}  // namespace rde
