#include "rde/errors.hpp"

namespace rde {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::malformed: return "Malformed";
        case Errc::truncated_apdu: return "TruncatedApdu";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::trailing_garbage: return "TrailingGarbage";
        case Errc::indefinite_length: return "IndefiniteLength";
        case Errc::range_error: return "RangeError";
        case Errc::malformed_point: return "MalformedPoint";
        case Errc::off_curve_point: return "OffCurvePoint";
        case Errc::embedding_failed: return "EmbeddingFailed";
        case Errc::mac_mismatch: return "MacMismatch";
        case Errc::status_mismatch: return "StatusMismatch";
        case Errc::no_padding_marker: return "NoPaddingMarker";
        case Errc::malformed_sm_objects: return "MalformedSmObjects";
        case Errc::ssc_exhausted: return "SscExhausted";
        case Errc::unknown_suite: return "UnknownSuite";
        case Errc::unknown_curve: return "UnknownCurve";
        case Errc::duplicate_dg_number: return "DuplicateDgNumber";
        case Errc::pa_failure: return "PaFailure";
        case Errc::consent_missing: return "ConsentMissing";
        case Errc::params_inconsistent: return "ParamsInconsistent";
        case Errc::bac_failure: return "BacFailure";
        case Errc::card_rejected_sm: return "CardRejectedSm";
        case Errc::auth_decrypt_failure: return "AuthDecryptFailure";
        case Errc::unsupported_version: return "UnsupportedVersion";
        case Errc::io_error: return "IoError";
    }
    return "UnknownError";
}

}  // namespace rde
