#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace engelkit {

// Collection arithmetic for P = <a, b | a^(p^n), b^(p^(n-1)), a^b = a^q>,
// q = 1 + p, on normal forms b^j a^k:
//   b^j1 a^k1 * b^j2 a^k2 = b^(j1+j2) a^(k1 q^j2 + k2).
// j lives mod p^(n-1), k mod p^n.
class ModularArithmetic {
public:
  struct Coord {
    std::int64_t j = 0;
    std::int64_t k = 0;
    friend bool operator==(const Coord &, const Coord &) = default;
  };

  // Validates p odd prime, n >= 2.
  ModularArithmetic(std::int64_t p, int n);

  std::int64_t p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  std::int64_t a_order() const noexcept { return a_order_; } // p^n
  std::int64_t b_order() const noexcept { return b_order_; } // p^(n-1)
  std::int64_t multiplier() const noexcept { return multiplier_; }
  std::uint64_t order() const noexcept {
    return static_cast<std::uint64_t>(a_order_) * static_cast<std::uint64_t>(b_order_);
  }

  // q^j mod p^n for any integer j (q has order p^(n-1) mod p^n).
  std::int64_t qpow(std::int64_t j) const;

  Coord reduce(std::int64_t j, std::int64_t k) const;
  Coord mul(Coord g, Coord h) const;
  Coord inv(Coord g) const;
  Coord power(Coord g, std::int64_t e) const;

  // (b a^c)^j = b^j a^(c s_j), s_j = (q^j - 1)/p = 1 + q + ... + q^(j-1).
  // Closed form, valid for any j >= 0.
  Coord twisted_b_power(std::int64_t c, std::int64_t j) const;
  // s_j mod p^n
  std::int64_t geometric_sum(std::int64_t j) const;

  // Test hooks: a corrupted collection rule for mutation fixtures.
  // Production code never calls these.
  void corrupt_multiplier(std::int64_t q);
  void corrupt_carry(std::int64_t offset) { carry_offset_ = offset; }

private:
  std::int64_t p_;
  int n_;
  std::int64_t a_order_;
  std::int64_t b_order_;
  std::int64_t multiplier_;
  std::int64_t carry_offset_ = 0;
  std::vector<std::int64_t> qpow_table_; // empty when b_order_ is large
};

} // namespace engelkit
