#include "rde/crypto.hpp"

#include <openssl/core_names.h>
#include <openssl/evp.h>

#include <bit>
#include <memory>

#include "rde/errors.hpp"

namespace rde::crypto {

namespace {

struct CtxDeleter {
    void operator()(EVP_CIPHER_CTX* c) const { EVP_CIPHER_CTX_free(c); }
    void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
    void operator()(EVP_MAC_CTX* c) const { EVP_MAC_CTX_free(c); }
    void operator()(EVP_MAC* c) const { EVP_MAC_free(c); }
};

template <typename T>
using Ptr = std::unique_ptr<T, CtxDeleter>;

[[noreturn]] void ossl_fail(const char* what) {
    fail(Errc::io_error, std::string("openssl: ") + what);
}

Bytes digest(const EVP_MD* md, ByteView data) {
    Bytes out(static_cast<std::size_t>(EVP_MD_size(md)));
    unsigned len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, md, nullptr) != 1)
        ossl_fail("digest");
    out.resize(len);
    return out;
}

const EVP_CIPHER* aes_cbc_for(std::size_t key_len) {
    switch (key_len) {
        case 16: return EVP_aes_128_cbc();
        case 24: return EVP_aes_192_cbc();
        case 32: return EVP_aes_256_cbc();
    }
    fail(Errc::range_error, "unsupported AES key length");
}

Bytes cipher_run(const EVP_CIPHER* cipher, bool enc, ByteView key, ByteView iv,
                 ByteView data) {
    Ptr<EVP_CIPHER_CTX> ctx(EVP_CIPHER_CTX_new());
    if (!ctx) ossl_fail("ctx");
    if (EVP_CipherInit_ex(ctx.get(), cipher, nullptr, key.data(),
                          iv.empty() ? nullptr : iv.data(), enc ? 1 : 0) != 1)
        ossl_fail("init");
    EVP_CIPHER_CTX_set_padding(ctx.get(), 0);
    Bytes out(data.size() + 16);
    int len = 0;
    if (EVP_CipherUpdate(ctx.get(), out.data(), &len, data.data(),
                         static_cast<int>(data.size())) != 1)
        ossl_fail("update");
    int fin = 0;
    if (EVP_CipherFinal_ex(ctx.get(), out.data() + len, &fin) != 1)
        ossl_fail("final");
    out.resize(static_cast<std::size_t>(len + fin));
    return out;
}

// 2-key EDE keys are expanded to K1||K2||K1; a single-DES key to K||K||K.
Bytes expand_des_key(ByteView key) {
    if (key.size() == 8) return cat({key, key, key});
    if (key.size() == 16) return cat({key, key, ByteView(key.data(), 8)});
    fail(Errc::range_error, "DES key must be 8 or 16 bytes");
}

}  // namespace

Bytes sha1(ByteView data) { return digest(EVP_sha1(), data); }
Bytes sha256(ByteView data) { return digest(EVP_sha256(), data); }

Bytes aes_cbc_encrypt(ByteView key, ByteView iv, ByteView data) {
    if (data.size() % 16) fail(Errc::length_mismatch, "AES-CBC input not block aligned");
    return cipher_run(aes_cbc_for(key.size()), true, key, iv, data);
}

Bytes aes_cbc_decrypt(ByteView key, ByteView iv, ByteView data) {
    if (data.size() % 16) fail(Errc::length_mismatch, "AES-CBC input not block aligned");
    return cipher_run(aes_cbc_for(key.size()), false, key, iv, data);
}

Bytes aes_ecb_encrypt_block(ByteView key, ByteView block) {
    if (block.size() != 16) fail(Errc::length_mismatch, "AES block must be 16 bytes");
    const EVP_CIPHER* cipher = key.size() == 16   ? EVP_aes_128_ecb()
                               : key.size() == 24 ? EVP_aes_192_ecb()
                                                  : EVP_aes_256_ecb();
    return cipher_run(cipher, true, key, {}, block);
}

Bytes tdes_cbc_encrypt(ByteView key, ByteView iv, ByteView data) {
    if (data.size() % 8) fail(Errc::length_mismatch, "3DES-CBC input not block aligned");
    return cipher_run(EVP_des_ede3_cbc(), true, expand_des_key(key), iv, data);
}

Bytes tdes_cbc_decrypt(ByteView key, ByteView iv, ByteView data) {
    if (data.size() % 8) fail(Errc::length_mismatch, "3DES-CBC input not block aligned");
    return cipher_run(EVP_des_ede3_cbc(), false, expand_des_key(key), iv, data);
}

Bytes des_block_encrypt(ByteView key, ByteView block) {
    if (block.size() != 8) fail(Errc::length_mismatch, "DES block must be 8 bytes");
    return cipher_run(EVP_des_ede3_ecb(), true, expand_des_key(ByteView(key.data(), 8)),
                      {}, block);
}

Bytes des_block_decrypt(ByteView key, ByteView block) {
    if (block.size() != 8) fail(Errc::length_mismatch, "DES block must be 8 bytes");
    return cipher_run(EVP_des_ede3_ecb(), false, expand_des_key(ByteView(key.data(), 8)),
                      {}, block);
}

Bytes aes_cmac(ByteView key, ByteView data) {
    Ptr<EVP_MAC> mac(EVP_MAC_fetch(nullptr, "CMAC", nullptr));
    if (!mac) ossl_fail("CMAC fetch");
    Ptr<EVP_MAC_CTX> ctx(EVP_MAC_CTX_new(mac.get()));
    if (!ctx) ossl_fail("CMAC ctx");
    const char* cipher_name = key.size() == 16   ? "AES-128-CBC"
                              : key.size() == 24 ? "AES-192-CBC"
                                                 : "AES-256-CBC";
    OSSL_PARAM params[] = {
        OSSL_PARAM_construct_utf8_string(OSSL_MAC_PARAM_CIPHER,
                                         const_cast<char*>(cipher_name), 0),
        OSSL_PARAM_construct_end(),
    };
    if (EVP_MAC_init(ctx.get(), key.data(), key.size(), params) != 1)
        ossl_fail("CMAC init");
    if (EVP_MAC_update(ctx.get(), data.data(), data.size()) != 1) ossl_fail("CMAC update");
    Bytes out(16);
    std::size_t len = 0;
    if (EVP_MAC_final(ctx.get(), out.data(), &len, out.size()) != 1)
        ossl_fail("CMAC final");
    out.resize(len);
    return out;
}

Bytes retail_mac(ByteView key, ByteView data) {
    if (key.size() != 16) fail(Errc::range_error, "retail MAC key must be 16 bytes");
    ByteView ka(key.data(), 8);
    ByteView kb(key.data() + 8, 8);
    // padding method 2
    Bytes padded(data.begin(), data.end());
    padded.push_back(0x80);
    while (padded.size() % 8) padded.push_back(0x00);

    Bytes h(8, 0);
    for (std::size_t i = 0; i < padded.size(); i += 8) {
        for (int j = 0; j < 8; ++j) h[static_cast<std::size_t>(j)] ^= padded[i + j];
        h = des_block_encrypt(ka, h);
    }
    return des_block_encrypt(ka, des_block_decrypt(kb, h));
}

namespace {

Bytes ccm_run(bool enc, ByteView key, ByteView nonce, ByteView input, ByteView tag) {
    Ptr<EVP_CIPHER_CTX> ctx(EVP_CIPHER_CTX_new());
    if (!ctx) ossl_fail("ctx");
    if (EVP_CipherInit_ex(ctx.get(), EVP_aes_256_ccm(), nullptr, nullptr, nullptr,
                          enc ? 1 : 0) != 1)
        ossl_fail("ccm init");
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_AEAD_SET_IVLEN,
                            static_cast<int>(nonce.size()), nullptr) != 1)
        ossl_fail("ccm ivlen");
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_AEAD_SET_TAG,
                            static_cast<int>(tag.size()),
                            enc ? nullptr : const_cast<std::uint8_t*>(tag.data())) != 1)
        ossl_fail("ccm tag");
    if (EVP_CipherInit_ex(ctx.get(), nullptr, nullptr, key.data(), nonce.data(),
                          enc ? 1 : 0) != 1)
        ossl_fail("ccm key");
    int len = 0;
    if (EVP_CipherUpdate(ctx.get(), nullptr, &len, nullptr,
                         static_cast<int>(input.size())) != 1)
        ossl_fail("ccm msglen");
    Bytes out(input.size() + 16);
    if (EVP_CipherUpdate(ctx.get(), out.data(), &len, input.data(),
                         static_cast<int>(input.size())) != 1) {
        // decryption lands here on tag mismatch
        fail(Errc::auth_decrypt_failure, "CCM authentication failed");
    }
    out.resize(static_cast<std::size_t>(len));
    if (enc) {
        Bytes got_tag(tag.size());
        if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_AEAD_GET_TAG,
                                static_cast<int>(got_tag.size()), got_tag.data()) != 1)
            ossl_fail("ccm get tag");
        append(out, got_tag);
    }
    return out;
}

}  // namespace

Bytes ccm_encrypt(ByteView key, ByteView nonce, ByteView plaintext) {
    if (key.size() != 32 || nonce.size() != 12)
        fail(Errc::range_error, "CCM wants a 32-byte key and 12-byte nonce");
    Bytes dummy(16);
    return ccm_run(true, key, nonce, plaintext, dummy);
}

Bytes ccm_decrypt(ByteView key, ByteView nonce, ByteView ciphertext_and_tag) {
    if (key.size() != 32 || nonce.size() != 12)
        fail(Errc::range_error, "CCM wants a 32-byte key and 12-byte nonce");
    if (ciphertext_and_tag.size() < 16)
        fail(Errc::auth_decrypt_failure, "ciphertext shorter than the tag");
    ByteView ct(ciphertext_and_tag.data(), ciphertext_and_tag.size() - 16);
    ByteView tag(ciphertext_and_tag.data() + ct.size(), 16);
    return ccm_run(false, key, nonce, ct, tag);
}

void adjust_des_parity(std::span<std::uint8_t> key) {
    for (auto& b : key) {
        unsigned ones = static_cast<unsigned>(std::popcount(static_cast<unsigned>(b & 0xFE)));
        b = static_cast<std::uint8_t>((b & 0xFE) | ((ones % 2) ? 0 : 1));
    }
}

}  // namespace rde::crypto
