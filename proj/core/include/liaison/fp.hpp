#pragma once

#include <cstdint>

#include "liaison/errors.hpp"

namespace liaison {

// Arithmetic in the prime field F_p, p an odd prime < 2^31.  Elements are
// stored as uint32_t in [0, p).  Barrett reduction keeps products cheap for
// the dense linear algebra in the oracle.
class PrimeField {
 public:
  PrimeField() : p_(0), magic_(0) {}
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  std::uint32_t reduce(std::uint64_t x) const {
    std::uint64_t q =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * magic_) >> 64);
    std::uint64_t r = x - q * p_;
    if (r >= p_) r -= p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    if (s >= p_) s -= p_;
    return s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;

  // Lift a signed integer into [0, p).
  std::uint32_t from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    return static_cast<std::uint32_t>(m);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
  std::uint64_t magic_;  // floor(2^64 / p)
};

bool is_prime_u32(std::uint32_t p);

}  // namespace liaison
