#pragma once

#include <stdexcept>

namespace knapcrack {

// Paired containers disagree on length (chromosome vs weights, block vs key).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A request exceeds a hard resource bound (oracle guard, 64-bit envelope).
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ciphertext block does not decode to a subset under the private key.
struct MalformedCiphertextError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ciphertext block exceeds the sum of the public weights; no subset can reach it.
struct InfeasibleCiphertextError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MissingCellError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptySummaryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace knapcrack
