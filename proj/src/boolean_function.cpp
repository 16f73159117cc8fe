#include "boolpso/boolean_function.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace boolpso {

namespace {

void check_n(int n) {
  if (n < kMinVariables || n > kMaxVariables) {
    throw BoolFunError("number of variables must be in [1, 16], got " + std::to_string(n));
  }
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BooleanFunction::BooleanFunction(int n) : n_(n) {
  check_n(n);
  table_.assign(std::size_t{1} << n, 0);
}

BooleanFunction BooleanFunction::from_bits(int n, std::vector<std::uint8_t> bits) {
  check_n(n);
  if (bits.size() != (std::size_t{1} << n)) {
    throw BoolFunError("truth table length " + std::to_string(bits.size()) +
                       " does not match 2^" + std::to_string(n));
  }
  BooleanFunction f;
  f.n_ = n;
  f.weight_ = 0;
  for (auto& b : bits) {
    b = b ? 1 : 0;
    f.weight_ += b;
  }
  f.table_ = std::move(bits);
  return f;
}

BooleanFunction BooleanFunction::from_predicate(int n,
                                                const std::function<bool(std::uint32_t)>& pred) {
  BooleanFunction f(n);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (pred(x)) f.set(x, true);
  }
  return f;
}

BooleanFunction BooleanFunction::constant(int n, bool value) {
  BooleanFunction f(n);
  if (value) {
    std::fill(f.table_.begin(), f.table_.end(), std::uint8_t{1});
    f.weight_ = f.table_.size();
  }
  return f;
}

BooleanFunction BooleanFunction::variable(int n, int i) {
  check_n(n);
  if (i < 1 || i > n) throw BoolFunError("variable index out of range");
  const std::uint32_t mask = std::uint32_t{1} << (n - i);
  return from_predicate(n, [mask](std::uint32_t x) { return (x & mask) != 0; });
}

void BooleanFunction::set(std::size_t i, bool value) {
  const std::uint8_t v = value ? 1 : 0;
  if (table_[i] == v) return;
  table_[i] = v;
  if (v) {
    ++weight_;
  } else {
    --weight_;
  }
}

void BooleanFunction::swap_bits(std::size_t i, std::size_t j) { std::swap(table_[i], table_[j]); }

std::string BooleanFunction::to_hex() const {
  if (n_ < 2) throw BoolFunError("hex rendering needs at least 2 variables");
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(table_.size() / 4);
  for (std::size_t i = 0; i < table_.size(); i += 4) {
    const int nibble = (table_[i] << 3) | (table_[i + 1] << 2) | (table_[i + 2] << 1) | table_[i + 3];
    out.push_back(kDigits[nibble]);
  }
  return out;
}

BooleanFunction parse_truth_table(std::string_view text) {
  std::vector<int> nibbles;
  nibbles.reserve(text.size());
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    const int v = hex_value(c);
    if (v < 0) throw BoolFunError(std::string("non-hex character '") + c + "' in truth table");
    nibbles.push_back(v);
  }
  const std::size_t bits = nibbles.size() * 4;
  int n = 0;
  while (n <= kMaxVariables && (std::size_t{1} << n) < bits) ++n;
  if (nibbles.empty() || n < 2 || n > kMaxVariables || (std::size_t{1} << n) != bits) {
    throw BoolFunError("truth table of " + std::to_string(nibbles.size()) +
                       " hex digits is not 2^n/4 for a supported n");
  }
  std::vector<std::uint8_t> table(bits);
  for (std::size_t i = 0; i < bits; ++i) {
    table[i] = static_cast<std::uint8_t>((nibbles[i / 4] >> (3 - i % 4)) & 1);
  }
  return BooleanFunction::from_bits(n, std::move(table));
}

std::size_t hamming_distance(const BooleanFunction& a, const BooleanFunction& b) {
  if (a.size() != b.size()) throw BoolFunError("hamming distance of tables with different lengths");
  std::size_t d = 0;
  const auto x = a.bits();
  const auto y = b.bits();
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

}  // namespace boolpso
