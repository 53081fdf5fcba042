#include "liaison/ring.hpp"

#include <stdexcept>

namespace liaison {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::DegenerateQuotient: return "DegenerateQuotient";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::EmptyScheme: return "EmptyScheme";
    case ErrorCode::NotEquidimensional: return "NotEquidimensional";
    case ErrorCode::NotGorenstein: return "NotGorenstein";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SelfLinkDegenerate: return "SelfLinkDegenerate";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::InconclusiveWindow: return "InconclusiveWindow";
    case ErrorCode::CostLimit: return "CostLimit";
    case ErrorCode::BadArgument: return "BadArgument";
  }
  return "UnknownError";
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2) fail(ErrorCode::BadArgument, "field characteristic must be >= 2");
  magic_ = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(1) << 64) / p);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t base = a % p_, acc = 1;
  while (e) {
    if (e & 1) acc = reduce(acc * base);
    base = reduce(base * base);
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  a %= p_;
  if (a == 0) fail(ErrorCode::BadArgument, "division by zero in prime field");
  // Extended Euclid on (a, p).
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<std::uint32_t>(t);
}

RingPtr make_ring(std::uint32_t p, int nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(p, std::move(names));
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> var_names) {
  if (!is_prime_u32(p))
    fail(ErrorCode::BadArgument, "characteristic must be a prime < 2^31");
  if (p >= (1u << 31))
    fail(ErrorCode::BadArgument, "characteristic must be < 2^31");
  if (var_names.empty())
    fail(ErrorCode::BadArgument, "ring needs at least one variable");
  for (size_t i = 0; i < var_names.size(); ++i)
    for (size_t j = i + 1; j < var_names.size(); ++j)
      if (var_names[i] == var_names[j])
        fail(ErrorCode::BadArgument, "duplicate variable name " + var_names[i]);
  auto r = std::make_shared<RingDescriptor>();
  r->field = PrimeField(p);
  r->nvars = static_cast<int>(var_names.size());
  r->var_names = std::move(var_names);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < r.nvars(); ++i)
    if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
  return r;
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace liaison
