#pragma once

#include <span>

#include "rde/bytes.hpp"

// Thin wrappers over OpenSSL libcrypto. All block-mode functions work on
// whole blocks only; padding is the caller's business.

namespace rde::crypto {

Bytes sha1(ByteView data);
Bytes sha256(ByteView data);

// AES-CBC without padding; data must be a multiple of 16.
Bytes aes_cbc_encrypt(ByteView key, ByteView iv, ByteView data);
Bytes aes_cbc_decrypt(ByteView key, ByteView iv, ByteView data);

// Single-block AES-ECB, used to derive per-message IVs from the counter.
Bytes aes_ecb_encrypt_block(ByteView key, ByteView block);

// Two-key triple DES in CBC mode (key = K1 || K2, 16 bytes), no padding.
Bytes tdes_cbc_encrypt(ByteView key, ByteView iv, ByteView data);
Bytes tdes_cbc_decrypt(ByteView key, ByteView iv, ByteView data);

// Single DES on one 8-byte block.
Bytes des_block_encrypt(ByteView key, ByteView block);
Bytes des_block_decrypt(ByteView key, ByteView block);

// Full 16-byte AES-CMAC (SP 800-38B); callers truncate as needed.
Bytes aes_cmac(ByteView key, ByteView data);

// ISO 9797-1 MAC algorithm 3 (DES, zero IV) with padding method 2
// applied internally. key = Ka || Kb, 16 bytes; output 8 bytes.
Bytes retail_mac(ByteView key, ByteView data);

// AES-256-CCM, 12-byte nonce, 16-byte tag appended to the ciphertext.
Bytes ccm_encrypt(ByteView key, ByteView nonce, ByteView plaintext);
Bytes ccm_decrypt(ByteView key, ByteView nonce, ByteView ciphertext_and_tag);

// Sets the DES odd-parity bit on every byte.
void adjust_des_parity(std::span<std::uint8_t> key);

}  // namespace rde::crypto
