#include "liaison/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace liaison {

Polynomial Polynomial::constant(const RingPtr& ring, long long v) {
  std::uint32_t c = ring->field.from_int(v);
  Polynomial f(ring);
  if (c) f.terms_.push_back({c, Monomial::one(ring->nvars)});
  return f;
}

Polynomial Polynomial::monomial(const RingPtr& ring, Monomial m,
                                long long coeff) {
  std::uint32_t c = ring->field.from_int(coeff);
  Polynomial f(ring);
  if (c) f.terms_.push_back({c, std::move(m)});
  return f;
}

Polynomial Polynomial::variable(const RingPtr& ring, int i) {
  if (i < 0 || i >= ring->nvars)
    fail(ErrorCode::BadArgument, "variable index out of range");
  return monomial(ring, Monomial::var(ring->nvars, i));
}

const Term& Polynomial::lt() const {
  if (terms_.empty()) fail(ErrorCode::ZeroModule, "leading term of zero");
  return terms_.front();
}
const Monomial& Polynomial::lm() const { return lt().m; }
std::uint32_t Polynomial::lc() const { return lt().c; }

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().m.degree();
  for (const Term& t : terms_)
    if (t.m.degree() != d) return false;
  return true;
}

Polynomial Polynomial::from_terms(const RingPtr& ring,
                                  std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grevlex_cmp(a.m, b.m) > 0;
  });
  Polynomial f(ring);
  const PrimeField& F = ring->field;
  for (auto& t : terms) {
    std::uint32_t c = t.c % F.characteristic();
    if (!f.terms_.empty() && f.terms_.back().m == t.m) {
      f.terms_.back().c = F.add(f.terms_.back().c, c);
      if (f.terms_.back().c == 0) f.terms_.pop_back();
    } else if (c) {
      f.terms_.push_back({c, std::move(t.m)});
    }
  }
  return f;
}

Polynomial merge_scaled(const Polynomial& a, std::uint32_t cb,
                        const Monomial* mb, const Polynomial& b) {
  const RingPtr& ring = a.ring_ ? a.ring_ : b.ring_;
  const PrimeField& F = ring->field;
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  const auto& ta = a.terms_;
  const auto& tb = b.terms_;
  auto bmono = [&](size_t k) { return mb ? tb[k].m * *mb : tb[k].m; };
  while (i < ta.size() && j < tb.size()) {
    Monomial mj = bmono(j);
    int cmp = grevlex_cmp(ta[i].m, mj);
    if (cmp > 0) {
      out.push_back(ta[i++]);
    } else if (cmp < 0) {
      std::uint32_t c = F.mul(cb, tb[j].c);
      if (c) out.push_back({c, std::move(mj)});
      ++j;
    } else {
      std::uint32_t c = F.add(ta[i].c, F.mul(cb, tb[j].c));
      if (c) out.push_back({c, std::move(mj)});
      ++i;
      ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) {
    std::uint32_t c = F.mul(cb, tb[j].c);
    if (c) out.push_back({c, bmono(j)});
  }
  Polynomial r(ring);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  return merge_scaled(*this, 1, nullptr, o);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  return merge_scaled(*this, ring_->field.characteristic() - 1, nullptr, o);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = ring_->field.neg(t.c);
  return r;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  c %= ring_->field.characteristic();
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = ring_->field.mul(t.c, c);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.m = t.m * m;
  return r;
}

Polynomial Polynomial::times_term(const Term& t) const {
  Polynomial r = times_monomial(t.m);
  for (auto& u : r.terms_) u.c = ring_->field.mul(u.c, t.c);
  return r;
}

Polynomial Polynomial::reduce_once(std::uint32_t c, const Monomial& m,
                                   const Polynomial& o) const {
  return merge_scaled(*this, ring_->field.neg(c), &m, o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  Polynomial acc(ring_);
  const Polynomial& big = terms_.size() >= o.terms_.size() ? *this : o;
  const Polynomial& small = terms_.size() >= o.terms_.size() ? o : *this;
  for (const Term& t : small.terms_) acc = merge_scaled(acc, t.c, &t.m, big);
  return acc;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field.inv(lc()));
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
  size_t n = std::min(a.terms().size(), b.terms().size());
  for (size_t i = 0; i < n; ++i) {
    int cmp = grevlex_cmp(a.terms()[i].m, b.terms()[i].m);
    if (cmp != 0) return cmp < 0;
    if (a.terms()[i].c != b.terms()[i].c)
      return a.terms()[i].c < b.terms()[i].c;
  }
  return a.terms().size() < b.terms().size();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorCode::ParseError,
         msg + " at position " + std::to_string(pos + 1));
  }
};

long long parse_integer(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  long long v = 0;
  while (c.pos < c.s.size() &&
         std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
    v = v * 10 + (c.s[c.pos] - '0');
    if (v > (1ll << 62)) c.error("integer literal too large");
    ++c.pos;
  }
  if (c.pos == start) c.error("expected integer");
  return v;
}

// Longest-match lookup of a variable name at the cursor; advances on success.
std::optional<int> parse_variable(const RingPtr& ring, Cursor& c) {
  c.skip_ws();
  int best = -1;
  size_t best_len = 0;
  for (int i = 0; i < ring->nvars; ++i) {
    const std::string& name = ring->var_names[i];
    if (name.size() > best_len && c.s.compare(c.pos, name.size(), name) == 0) {
      best = i;
      best_len = name.size();
    }
  }
  if (best < 0) return std::nullopt;
  c.pos += best_len;
  return best;
}

bool at_variable(const RingPtr& ring, Cursor& c) {
  c.skip_ws();
  for (int i = 0; i < ring->nvars; ++i) {
    const std::string& name = ring->var_names[i];
    if (c.s.compare(c.pos, name.size(), name) == 0) return true;
  }
  return false;
}

// factor := integer | variable ['^' integer]
// term   := factor {'*'? factor}
Polynomial parse_term(const RingPtr& ring, Cursor& c) {
  Monomial m = Monomial::one(ring->nvars);
  const PrimeField& F = ring->field;
  std::uint32_t coeff = 1;
  bool saw_factor = false;
  for (;;) {
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      coeff = F.mul(coeff, F.from_int(parse_integer(c)));
      saw_factor = true;
    } else {
      auto var = parse_variable(ring, c);
      if (!var) break;
      int power = 1;
      if (c.peek() == '^') {
        ++c.pos;
        long long e = parse_integer(c);
        if (e < 0 || e > 1000) c.error("exponent out of range");
        power = static_cast<int>(e);
      }
      m.e[*var] += power;
      saw_factor = true;
    }
    if (c.peek() == '*') {
      ++c.pos;
      char nx = c.peek();
      if (!std::isdigit(static_cast<unsigned char>(nx)) &&
          !at_variable(ring, c))
        c.error("expected factor after '*'");
      continue;
    }
    // Implicit products continue only at a variable name ("x0 x1" == x0*x1).
    if (!at_variable(ring, c)) break;
  }
  if (!saw_factor) c.error("expected term");
  return Polynomial::monomial(ring, std::move(m), 1).scaled(coeff);
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  Cursor c{text};
  if (c.done()) c.error("empty polynomial");
  Polynomial acc(ring);
  bool negate = false;
  if (c.peek() == '+') {
    ++c.pos;
  } else if (c.peek() == '-') {
    negate = true;
    ++c.pos;
  }
  for (;;) {
    Polynomial t = parse_term(ring, c);
    acc = negate ? acc - t : acc + t;
    if (c.done()) break;
    char ch = c.peek();
    if (ch == '+') {
      negate = false;
      ++c.pos;
    } else if (ch == '-') {
      negate = true;
      ++c.pos;
    } else {
      c.error(std::string("unexpected character '") + ch + "'");
    }
  }
  return acc;
}

std::string to_string(const RingPtr& ring, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < ring->nvars; ++i) {
    if (m.e[i] == 0) continue;
    if (!first) os << '*';
    os << ring->var_names[i];
    if (m.e[i] > 1) os << '^' << m.e[i];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : f.terms()) {
    if (!first) os << " + ";
    if (t.m.is_one()) {
      os << t.c;
    } else {
      if (t.c != 1) os << t.c << '*';
      os << to_string(f.ring(), t.m);
    }
    first = false;
  }
  return os.str();
}

}  // namespace liaison
