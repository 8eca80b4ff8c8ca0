#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string_view>
#include <utility>

#include "rde/bytes.hpp"
#include "rde/rng.hpp"

namespace rde {

using BigInt = boost::multiprecision::cpp_int;

BigInt bn_from_hex(std::string_view hex);
BigInt bn_from_bytes(ByteView bytes);
Bytes bn_to_bytes(const BigInt& v, std::size_t width);

/// a mod m, result in [0, m).
BigInt mod_reduce(const BigInt& a, const BigInt& m);

/// Multiplicative inverse mod a prime m (extended Euclid).
BigInt mod_inverse(const BigInt& a, const BigInt& m);

enum class CurveId : std::uint8_t {
    brainpoolP256r1 = 1,
    brainpoolP320r1 = 2,
};

const char* curve_name(CurveId id);
CurveId curve_from_name(std::string_view name);

/// Short-Weierstrass curve y^2 = x^3 + ax + b over GF(p), prime group
/// order q, cofactor 1 (RFC 5639 values compiled in).
struct DomainParameters {
    CurveId curve_id;
    BigInt p, a, b;
    BigInt gx, gy;
    BigInt q;
    int cofactor = 1;

    std::size_t field_bytes() const;
    int q_bits() const;

    static const DomainParameters& get(CurveId id);
};

struct GroupElement {
    bool identity = true;
    BigInt x, y;

    static GroupElement infinity() { return {}; }
    static GroupElement affine(BigInt px, BigInt py) {
        return {false, std::move(px), std::move(py)};
    }

    bool operator==(const GroupElement& o) const {
        return identity == o.identity && (identity || (x == o.x && y == o.y));
    }
};

/// Integer in (0, q); construction validates the range.
class Scalar {
public:
    static Scalar from_integer(BigInt v, const DomainParameters& params);
    static Scalar from_bytes(ByteView bytes, const DomainParameters& params);

    const BigInt& value() const { return value_; }

private:
    explicit Scalar(BigInt v) : value_(std::move(v)) {}
    BigInt value_;
};

bool on_curve(const GroupElement& pt, const DomainParameters& params);

GroupElement point_add(const GroupElement& p, const GroupElement& q,
                       const DomainParameters& params);
GroupElement point_neg(const GroupElement& p, const DomainParameters& params);
GroupElement point_sub(const GroupElement& p, const GroupElement& q,
                       const DomainParameters& params);
GroupElement scalar_mult(const Scalar& k, const GroupElement& p,
                         const DomainParameters& params);

GroupElement generator(const DomainParameters& params);

std::pair<Scalar, GroupElement> generate_keypair(const DomainParameters& params,
                                                 RandomSource& rng);

/// Maps a PIN to a curve point: interpret the PIN as a big-endian integer,
/// then walk x upward until x^3+ax+b is a square; of the two candidates the
/// point with even y is returned. Identical PINs give identical points.
GroupElement embed_pin(ByteView pin, const DomainParameters& params);

/// Uncompressed encoding 04 || x || y with fixed-width field elements.
Bytes encode_point(const GroupElement& pt, const DomainParameters& params);
GroupElement decode_point(ByteView bytes, const DomainParameters& params);

/// Fixed-width big-endian x-coordinate, the shared-secret byte string.
Bytes shared_secret_x(const GroupElement& pt, const DomainParameters& params);

}  // namespace rde
