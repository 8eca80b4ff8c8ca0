#pragma once

#include "rde/apdu.hpp"
#include "rde/bytes.hpp"
#include "rde/group.hpp"
#include "rde/secure_messaging.hpp"

namespace rde {

/// What data group 14 advertises: the one suite the chip speaks, the
/// curve, and the chip's static public key Y.
struct Dg14Content {
    CipherSuite suite;
    CurveId curve;
    GroupElement ca_public;
};

/// Fixed TLV profile: tag 6E wrapping 80 (suite code), 81 (curve code)
/// and 86 (uncompressed point). See docs/FORMATS.md.
Bytes encode_dg14(const Dg14Content& c);
Dg14Content parse_dg14(ByteView bytes);

/// Terminal view of a finished key agreement.
struct CaTranscript {
    GroupElement ephemeral_public;  // Z = kG
    SmSession session;
};

/// Runs the terminal half: Z = kG, shared point kY, session keys from the
/// x-coordinate. Pure in (dg14, k), which is what makes the chip's side
/// predictable to anyone holding dg14.
CaTranscript terminal_chip_auth(const Dg14Content& dg14, const Scalar& k);

/// Chip half: decodes Z, insists it is on the curve and not the identity,
/// derives the session from x·Z.
SmSession chip_receive_ca(const Scalar& x, CipherSuite suite, CurveId curve, ByteView z_bytes);

/// MSE:SET KAT carrying the encoded ephemeral key in DO'91'.
CommandApdu encode_mse_set_kat(ByteView z_encoded);

/// Pulls the DO'91' value back out; errors on anything unexpected.
Bytes parse_mse_set_kat(const CommandApdu& c);

}  // namespace rde
