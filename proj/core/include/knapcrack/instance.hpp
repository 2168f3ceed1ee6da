#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace knapcrack {

// Fixed-length bit vector; bit i selects weight i of an instance.
class Chromosome {
 public:
  Chromosome() = default;
  explicit Chromosome(std::size_t n) : bits_(n, 0) {}
  explicit Chromosome(std::vector<std::uint8_t> bits);

  // Parses "0"/"1" characters, leftmost character first.
  static Chromosome from_string(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool test(std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }
  std::size_t count() const noexcept;

  std::string to_string() const;
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  auto operator<=>(const Chromosome&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Deduplicated solutions, ordered by bit pattern for reproducible output.
using SolutionSet = std::set<Chromosome>;

// A subset-sum problem: positive weights and a target sum. The target may
// exceed the weight total; such instances are legal and unsatisfiable.
// The weight total must fit in 64 bits so every subset sum is exact.
class Instance {
 public:
  Instance(std::vector<std::uint64_t> weights, std::uint64_t target);

  const std::vector<std::uint64_t>& weights() const noexcept { return weights_; }
  std::uint64_t target() const noexcept { return target_; }
  std::size_t size() const noexcept { return weights_.size(); }
  std::uint64_t weight_total() const noexcept { return total_; }

 private:
  std::vector<std::uint64_t> weights_;
  std::uint64_t target_ = 0;
  std::uint64_t total_ = 0;
};

// Sum of the weights selected by the chromosome.
std::uint64_t evaluate(const Instance& instance, const Chromosome& chromosome);

// |sum - target|.
std::uint64_t difference(std::uint64_t sum, std::uint64_t target) noexcept;

}  // namespace knapcrack
