#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boolpso {

inline constexpr int kMinVariables = 1;
inline constexpr int kMaxVariables = 16;

/// Thrown when a truth table or a parameter violates a documented precondition.
class BoolFunError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Truth table of an n-variable Boolean function.
///
/// Entry i holds f(x) where x = (x_1, ..., x_n) is the binary expansion of i
/// with x_1 as the most significant bit (lexicographic order). The Hamming
/// weight is cached and kept in sync by every mutator.
class BooleanFunction {
 public:
  BooleanFunction() = default;

  /// Constant-zero function of n variables.
  explicit BooleanFunction(int n);

  static BooleanFunction from_bits(int n, std::vector<std::uint8_t> bits);
  static BooleanFunction from_predicate(int n, const std::function<bool(std::uint32_t)>& pred);
  static BooleanFunction constant(int n, bool value);
  /// The projection f(x) = x_i, 1 <= i <= n.
  static BooleanFunction variable(int n, int i);

  int n() const { return n_; }
  std::size_t size() const { return table_.size(); }
  std::size_t weight() const { return weight_; }
  bool balanced() const { return 2 * weight_ == table_.size(); }

  bool operator[](std::size_t i) const { return table_[i] != 0; }
  std::span<const std::uint8_t> bits() const { return table_; }

  void set(std::size_t i, bool value);
  /// Exchanges the values at positions i and j; the weight is unchanged.
  void swap_bits(std::size_t i, std::size_t j);

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

  /// Hex rendering, most significant nibble bit first. Requires n >= 2.
  std::string to_hex() const;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> table_;
  std::size_t weight_ = 0;
};

/// Parses a hex truth table; whitespace is ignored. The digit count must be
/// 2^n / 4 for some 2 <= n <= 16.
BooleanFunction parse_truth_table(std::string_view text);

std::size_t hamming_distance(const BooleanFunction& a, const BooleanFunction& b);

inline int parity(std::uint32_t v) { return __builtin_parity(v); }
inline int popcount(std::uint32_t v) { return __builtin_popcount(v); }

}  // namespace boolpso
