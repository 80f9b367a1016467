#include "engelkit/modular.hpp"

#include <string>

#include "engelkit/arith.hpp"
#include "engelkit/errors.hpp"

namespace engelkit {

namespace {
constexpr std::int64_t kQpowTableLimit = 1 << 16;
}

ModularArithmetic::ModularArithmetic(std::int64_t p, int n) : p_(p), n_(n) {
  if (p % 2 == 0 || !arith::is_prime(p))
    throw InvalidArgument("modular group needs an odd prime p, got " + std::to_string(p));
  if (n < 2)
    throw InvalidArgument("modular group needs n >= 2, got " + std::to_string(n));
  a_order_ = arith::checked_pow(p, n);
  b_order_ = a_order_ / p;
  // one extra factor of p so geometric sums can be divided exactly
  (void)arith::checked_pow(p, n + 1);
  multiplier_ = 1 + p;
  if (b_order_ <= kQpowTableLimit) {
    qpow_table_.resize(static_cast<std::size_t>(b_order_));
    std::int64_t acc = 1;
    for (auto &v : qpow_table_) {
      v = acc;
      acc = arith::mulmod(acc, multiplier_, a_order_);
    }
  }
}

void ModularArithmetic::corrupt_multiplier(std::int64_t q) {
  multiplier_ = q;
  qpow_table_.clear();
}

std::int64_t ModularArithmetic::qpow(std::int64_t j) const {
  auto e = arith::mod(j, b_order_);
  if (!qpow_table_.empty())
    return qpow_table_[static_cast<std::size_t>(e)];
  return arith::powmod(multiplier_, static_cast<std::uint64_t>(e), a_order_);
}

ModularArithmetic::Coord ModularArithmetic::reduce(std::int64_t j, std::int64_t k) const {
  return {arith::mod(j, b_order_), arith::mod(k, a_order_)};
}

ModularArithmetic::Coord ModularArithmetic::mul(Coord g, Coord h) const {
  auto k = arith::mulmod(g.k, qpow(h.j), a_order_) + h.k;
  if (carry_offset_ != 0 && g.j != 0 && h.j != 0)
    k += carry_offset_;
  return {arith::mod(g.j + h.j, b_order_), arith::mod(k, a_order_)};
}

ModularArithmetic::Coord ModularArithmetic::inv(Coord g) const {
  // (j,k)(-j,k') = (0, k q^-j + k')
  auto k = arith::mulmod(g.k, qpow(-g.j), a_order_);
  return {arith::mod(-g.j, b_order_), arith::mod(-k, a_order_)};
}

ModularArithmetic::Coord ModularArithmetic::power(Coord g, std::int64_t e) const {
  if (e < 0) {
    g = inv(g);
    e = -e;
  }
  Coord result{};
  while (e > 0) {
    if (e & 1)
      result = mul(result, g);
    g = mul(g, g);
    e >>= 1;
  }
  return result;
}

std::int64_t ModularArithmetic::geometric_sum(std::int64_t j) const {
  if (j < 0)
    throw InvalidArgument("geometric_sum needs j >= 0");
  const std::int64_t wide = a_order_ * p_;
  auto qj = arith::powmod(1 + p_, static_cast<std::uint64_t>(j), wide);
  return arith::mod((qj - 1) / p_, a_order_);
}

ModularArithmetic::Coord ModularArithmetic::twisted_b_power(std::int64_t c, std::int64_t j) const {
  return reduce(j, arith::mulmod(c, geometric_sum(j), a_order_));
}

} // namespace engelkit
