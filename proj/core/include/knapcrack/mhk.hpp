#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "knapcrack/instance.hpp"

namespace knapcrack {

// Merkle-Hellman private key: a superincreasing sequence hidden behind a
// modular multiplication. Invariants: b_i > sum(b_1..b_{i-1}), q > sum(b),
// 1 < w < q, gcd(w, q) = 1.
struct PrivateKey {
  std::vector<std::uint64_t> superincreasing;
  std::uint64_t modulus = 0;
  std::uint64_t multiplier = 0;
};

struct PublicKey {
  std::vector<std::uint64_t> weights;  // a_i = (w * b_i) mod q

  std::uint64_t weight_total() const noexcept;
};

struct KeyPair {
  PrivateKey private_key;
  PublicKey public_key;
};

// One encrypted block: c = sum of the public weights selected by the bits.
using CiphertextBlock = std::uint64_t;

// A whole message, split into block_size-bit blocks; byte_len records the
// original length so trailing pad bits can be dropped on decode.
struct Ciphertext {
  std::size_t block_size = 0;
  std::size_t byte_len = 0;
  std::vector<CiphertextBlock> blocks;
};

// Throws ValidationError when an invariant fails.
void validate(const PrivateKey& key);
void validate(const PublicKey& key);

PublicKey derive_public(const PrivateKey& key);

// Deterministic given (n, seed, magnitude). Each superincreasing element
// adds a fresh draw from [1, 2^magnitude] on top of the running sum; the
// modulus sits just above the total; the multiplier is drawn until coprime.
// Throws CapacityError when the parameters cannot stay inside 64 bits.
KeyPair generate_keypair(std::size_t n, std::uint64_t seed, unsigned magnitude = 10);

CiphertextBlock encrypt_block(const Chromosome& bits, const PublicKey& key);

// Trapdoor decryption: c' = w^-1 * c mod q, then greedy descent over the
// superincreasing sequence. Throws MalformedCiphertextError on a nonzero
// residue.
Chromosome decrypt_block(CiphertextBlock cipher, const PrivateKey& key);

// Splits the message bits into block_size-bit chromosomes, most significant
// bit of each byte first, zero-padding the tail.
std::vector<Chromosome> encode_message(std::span<const std::uint8_t> bytes,
                                       std::size_t block_size);

std::vector<std::uint8_t> decode_message(const std::vector<Chromosome>& blocks,
                                         std::size_t byte_len);
// Convenience overload: keeps every full byte, drops a partial tail byte.
std::vector<std::uint8_t> decode_message(const std::vector<Chromosome>& blocks);

Ciphertext encrypt_message(std::span<const std::uint8_t> bytes, const PublicKey& key);
std::vector<std::uint8_t> decrypt_message(const Ciphertext& ciphertext,
                                          const PrivateKey& key);

}  // namespace knapcrack
