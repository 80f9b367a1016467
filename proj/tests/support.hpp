#pragma once

#include <functional>
#include <memory>

#include "core/engines.hpp"
#include "engelkit/constructions.hpp"
#include "engelkit/group.hpp"
#include "engelkit/modular.hpp"

namespace testing {

// modular(p, n) whose collection rule has been tampered with.
inline engelkit::Group mutant_modular(std::int64_t p, int n,
                                      const std::function<void(engelkit::ModularArithmetic &)> &f) {
  engelkit::ModularArithmetic arith(p, n);
  f(arith);
  return engelkit::Group(std::make_shared<engelkit::detail::ModularEngine>(arith), "mutant");
}

// Independent oracle for b^j1 a^k1 * b^j2 a^k2: move a^k1 past b^j2 one b at
// a time using a^b = a^(1+p), all in plain integers.
inline std::pair<std::int64_t, std::int64_t> modular_oracle(std::int64_t p, int n,
                                                            std::pair<std::int64_t, std::int64_t> x,
                                                            std::pair<std::int64_t, std::int64_t> y) {
  std::int64_t pn = 1;
  for (int i = 0; i < n; ++i)
    pn *= p;
  const std::int64_t pn1 = pn / p;
  std::int64_t k = x.second % pn;
  for (std::int64_t step = 0; step < y.first; ++step)
    k = k * (1 + p) % pn;
  return {(x.first + y.first) % pn1, (k + y.second) % pn};
}

} // namespace testing
