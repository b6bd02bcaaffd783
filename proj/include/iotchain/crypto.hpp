/*
   Copyright 2026 The iotchain Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <sodium.h>

#include <cstring>
#include <stdexcept>

#include <iotchain/bytes.hpp>

namespace iotchain {

inline void ensure_crypto_init() {
    static const int rc = sodium_init();
    if (rc < 0) {
        throw std::runtime_error("libsodium initialization failed");
    }
}

inline Hash32 sha256(BytesView data) {
    ensure_crypto_init();
    Hash32 out;
    crypto_hash_sha256(out.bytes.data(), data.data(), data.size());
    return out;
}

inline Hash32 sha256(std::string_view text) {
    return sha256(BytesView{reinterpret_cast<const uint8_t*>(text.data()), text.size()});
}

// URIResource attribute value: strings are not indexable, so events carry the
// digest of the UTF-8 URI instead.
inline Hash32 uri_digest(std::string_view uri) { return sha256(uri); }

using Seed = std::array<uint8_t, 32>;
using PublicKey = std::array<uint8_t, 32>;
using SecretKey = std::array<uint8_t, 64>;

static_assert(crypto_sign_PUBLICKEYBYTES == 32);
static_assert(crypto_sign_SECRETKEYBYTES == 64);
static_assert(crypto_sign_BYTES == 64);

// Ed25519 signing key pair.
struct KeyPair {
    PublicKey public_key{};
    SecretKey secret_key{};
    Seed seed{};

    static KeyPair from_seed(const Seed& seed) {
        ensure_crypto_init();
        KeyPair kp;
        kp.seed = seed;
        crypto_sign_seed_keypair(kp.public_key.data(), kp.secret_key.data(), seed.data());
        return kp;
    }

    static KeyPair generate() {
        ensure_crypto_init();
        Seed seed;
        randombytes_buf(seed.data(), seed.size());
        return from_seed(seed);
    }
};

using Signature = std::array<uint8_t, 64>;

inline Signature sign_message(const SecretKey& sk, BytesView message) {
    ensure_crypto_init();
    Signature sig;
    crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(), sk.data());
    return sig;
}

inline bool verify_message(const PublicKey& pk, BytesView message, const Signature& sig) {
    ensure_crypto_init();
    return crypto_sign_verify_detached(sig.data(), message.data(), message.size(), pk.data()) == 0;
}

// Address = first 20 bytes of the public key's SHA-256 digest.
inline Address address_from_public_key(const PublicKey& pk) {
    const Hash32 digest = sha256(BytesView{pk});
    Address addr;
    std::memcpy(addr.bytes.data(), digest.bytes.data(), addr.bytes.size());
    return addr;
}

}  // namespace iotchain
