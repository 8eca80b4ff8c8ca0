#pragma once

#include <stdexcept>
#include <string>

namespace rde {

enum class Errc {
    // codecs
    malformed,
    truncated_apdu,
    length_mismatch,
    trailing_garbage,
    indefinite_length,
    range_error,
    // group / points
    malformed_point,
    off_curve_point,
    embedding_failed,
    // secure messaging
    mac_mismatch,
    status_mismatch,
    no_padding_marker,
    malformed_sm_objects,
    ssc_exhausted,
    // chip authentication / passive authentication
    unknown_suite,
    unknown_curve,
    duplicate_dg_number,
    pa_failure,
    // rde protocol
    consent_missing,
    params_inconsistent,
    bac_failure,
    card_rejected_sm,
    auth_decrypt_failure,
    unsupported_version,
    io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace rde
