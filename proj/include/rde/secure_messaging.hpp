#pragma once

#include <cstdint>
#include <string_view>

#include "rde/apdu.hpp"
#include "rde/bytes.hpp"

namespace rde {

enum class CipherSuite : std::uint8_t {
    tdes_cbc_cbc = 1,
    aes_cbc_cmac_128 = 2,
    aes_cbc_cmac_192 = 3,
    aes_cbc_cmac_256 = 4,
};

bool is_aes(CipherSuite suite);
std::size_t block_size(CipherSuite suite);   // 8 for 3DES, 16 for AES
std::size_t key_length(CipherSuite suite);   // 16, 16, 24, 32
const char* suite_name(CipherSuite suite);   // "3des", "aes128", ...
CipherSuite suite_from_name(std::string_view name);

/// Key derivation for both session keys and BAC document keys:
/// H(secret || 32-bit big-endian counter) truncated to the suite's key
/// length. H is SHA-1 for 3DES and AES-128, SHA-256 for AES-192/256.
/// 3DES keys get their odd-parity bits fixed up.
Bytes derive_key(ByteView secret, std::uint32_t counter, CipherSuite suite);

/// Padding method 2: append 0x80, zero-fill to the block boundary.
Bytes pad2(ByteView data, std::size_t block);
Bytes unpad2(ByteView data, std::size_t block);

/// One side of a secure-messaging channel. The counterpart holds an
/// identical copy; both advance their counters in lockstep.
struct SmSession {
    CipherSuite suite = CipherSuite::aes_cbc_cmac_128;
    Bytes ks_enc;
    Bytes ks_mac;
    std::uint64_t ssc = 0;
};

/// KS_Enc from counter 1, KS_MAC from counter 2, counter starts at 0.
SmSession derive_session_keys(ByteView shared_secret, CipherSuite suite);

/// The counter as it enters MAC and IV computations: 8 bytes big-endian
/// for 3DES, 16 for AES.
Bytes ssc_block(const SmSession& s);

/// Wraps a plain command: bumps the counter, encrypts data into DO'87',
/// moves le into DO'97', appends the DO'8E' MAC. cla gets the secure bit.
CommandApdu protect_command(SmSession& s, const CommandApdu& c);

/// Verifies the MAC before touching the ciphertext, then undoes the wrap.
CommandApdu unprotect_command(SmSession& s, const CommandApdu& c);

/// Wraps a response: DO'87' (if data), DO'99' (status), DO'8E' (MAC).
/// The outer status word mirrors the one inside DO'99'.
ResponseApdu protect_response(SmSession& s, const ResponseApdu& r);

ResponseApdu unprotect_response(SmSession& s, const ResponseApdu& r);

}  // namespace rde
