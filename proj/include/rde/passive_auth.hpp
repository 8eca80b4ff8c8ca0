#pragma once

#include <vector>

#include "rde/bytes.hpp"
#include "rde/group.hpp"
#include "rde/rng.hpp"

namespace rde {

struct DataGroup {
    int number = 0;  // 1..16
    Bytes content;
};

struct SodEntry {
    int dg_number = 0;
    Bytes hash;  // SHA-256 of the data group content
};

/// ECDSA r and s as integers; serialized fixed-width r || s.
struct EcdsaSignature {
    BigInt r, s;
};

EcdsaSignature ecdsa_sign(const Scalar& d, ByteView message, const DomainParameters& params,
                          RandomSource& rng);
bool ecdsa_verify(const GroupElement& public_key, ByteView message, const EcdsaSignature& sig,
                  const DomainParameters& params);

struct IssuerKeypair {
    Scalar signing_key;
    GroupElement public_key;
    CurveId curve;

    static IssuerKeypair generate(RandomSource& rng, CurveId curve = CurveId::brainpoolP256r1);
};

/// The document security object: per-group hashes signed by the issuer.
/// The issuer public key travels inside the object; no certificate chain.
struct DocumentSecurityObject {
    std::vector<SodEntry> entries;  // ascending dg numbers
    Bytes signature;                // r || s, fixed width
    CurveId issuer_curve = CurveId::brainpoolP256r1;
    GroupElement issuer_public;
};

/// The byte string the issuer signs: hash-algorithm marker plus one
/// record per data group. Recomputable from any parsed object.
Bytes sod_signed_body(const std::vector<SodEntry>& entries);

DocumentSecurityObject create_sod(const IssuerKeypair& issuer,
                                  const std::vector<DataGroup>& dgs, RandomSource& rng);

bool verify_sod_signature(const DocumentSecurityObject& sod);

/// True iff the signature is good and the group's hash matches its entry.
bool verify_dg(const DocumentSecurityObject& sod, const DataGroup& dg);

Bytes encode_sod(const DocumentSecurityObject& sod);
DocumentSecurityObject parse_sod(ByteView bytes);

}  // namespace rde
