// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact arithmetic in GF(p^e) = GF(p)[x] / (modulus).
//
// An element is its coefficient vector over GF(p), lowest degree first.
// Internally the vector is packed into one integer whose base-p digits are
// the coefficients (digit i is the coefficient of x^i), so elements are
// cheap values and the packed integer doubles as a stable sort key.

#ifndef QTRANS_FIELD_HPP_
#define QTRANS_FIELD_HPP_

#include <array>
#include <map>
#include <mutex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtrans/errors.hpp"

namespace qtrans {

namespace detail {

using Poly = std::vector<unsigned>;  // coefficients mod p, lowest first

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b, coefficients mod p.
inline Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  poly_trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
      }
    }
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Trial division against every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Poly& modulus, unsigned p) {
  const std::size_t deg = modulus.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly divisor(d + 1, 0);
    divisor[d] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t rest = code;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      if (poly_mod(modulus, divisor, p).empty()) return false;
    }
  }
  return true;
}

inline char digit_char(unsigned d) {
  return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
}

inline std::optional<unsigned> char_digit(char c) {
  if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<unsigned>(c - 'a' + 10);
  return std::nullopt;
}

}  // namespace detail

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

class FieldSpec {
 public:
  using Value = std::uint64_t;
  static constexpr unsigned kMaxDegree = 64;

  // Builds GF(p^e). Without a modulus, the lexicographically least monic
  // irreducible polynomial of degree e is chosen, comparing coefficient
  // vectors lowest degree first (so e = 1 always yields x).
  static Field make(unsigned p, unsigned e,
                    std::optional<std::vector<unsigned>> modulus = {}) {
    if (!detail::is_prime(p)) {
      fail(ErrorCode::kNonPrimeCharacteristic,
           "characteristic " + std::to_string(p) + " is not prime");
    }
    if (p > 36) fail(ErrorCode::kOutOfRange, "characteristic above 36");
    if (e < 1) fail(ErrorCode::kOutOfRange, "field degree must be positive");
    Value order = 1;
    for (unsigned i = 0; i < e; ++i) {
      if (order > (std::uint64_t{1} << 62) / p) {
        fail(ErrorCode::kExtensionTooLarge,
             "GF(" + std::to_string(p) + "^" + std::to_string(e) +
                 ") does not fit in 62 bits");
      }
      order *= p;
    }
    detail::Poly poly;
    if (modulus) {
      poly = *modulus;
      if (poly.size() != e + 1 || poly.back() != 1) {
        fail(ErrorCode::kMalformedInput, "modulus must be monic of degree e");
      }
      for (unsigned c : poly) {
        if (c >= p) fail(ErrorCode::kMalformedInput, "modulus digit out of range");
      }
      if (e == 1 && poly[0] != 0) {
        fail(ErrorCode::kMalformedInput, "prime-field modulus must be x");
      }
      if (!detail::is_irreducible(poly, p)) {
        fail(ErrorCode::kReducibleModulus, "modulus is reducible");
      }
    } else {
      poly = least_irreducible(p, e, order);
    }
    return Field(new FieldSpec(p, e, std::move(poly), order));
  }

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  Value order() const { return order_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Value zero() const { return 0; }
  Value one() const { return 1; }
  // The class of x; generates the field over GF(p) when e > 1.
  Value generator() const { return e_ == 1 ? 1 : p_; }

  bool contains(Value a) const { return a < order_; }

  std::vector<unsigned> coeffs(Value a) const {
    std::vector<unsigned> out(e_);
    for (unsigned i = 0; i < e_; ++i) {
      out[i] = static_cast<unsigned>(a % p_);
      a /= p_;
    }
    return out;
  }

  Value from_coeffs(std::span<const unsigned> c) const {
    if (c.size() != e_) fail(ErrorCode::kDimensionMismatch, "coefficient count");
    Value v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] >= p_) fail(ErrorCode::kOutOfRange, "coefficient out of range");
      v = v * p_ + c[i];
    }
    return v;
  }

  // Embeds an integer into the prime subfield.
  Value from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Value>(r);
  }

  Value add(Value a, Value b) const {
    if (p_ == 2) return a ^ b;
    Value out = 0, scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }

  Value neg(Value a) const {
    if (p_ == 2) return a;
    Value out = 0, scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
      out += ((p_ - a % p_) % p_) * scale;
      a /= p_;
      scale *= p_;
    }
    return out;
  }

  Value sub(Value a, Value b) const { return add(a, neg(b)); }

  Value mul(Value a, Value b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return (a * b) % p_;
    if (p_ == 2) {
      Value r = 0;
      for (int bit = static_cast<int>(e_) - 1; bit >= 0; --bit) {
        r <<= 1;
        if ((r >> e_) & 1) r ^= mod_mask_;
        if ((b >> bit) & 1) r ^= a;
      }
      return r;
    }
    std::array<unsigned, 2 * kMaxDegree> prod{};
    std::array<unsigned, kMaxDegree> da{}, db{};
    unpack(a, da);
    unpack(b, db);
    for (unsigned i = 0; i < e_; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < e_; ++j) {
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      }
    }
    for (unsigned k = 2 * e_ - 1; k-- > e_;) {
      const unsigned lead = prod[k];
      if (lead == 0) continue;
      for (unsigned i = 0; i <= e_; ++i) {
        unsigned& slot = prod[k - e_ + i];
        slot = (slot + (p_ - lead) * modulus_[i]) % p_;
      }
    }
    Value out = 0;
    for (unsigned i = e_; i-- > 0;) out = out * p_ + prod[i];
    return out;
  }

  Value pow(Value a, std::uint64_t m) const {
    Value result = one();
    Value base = a;
    while (m > 0) {
      if (m & 1) result = mul(result, base);
      base = mul(base, base);
      m >>= 1;
    }
    return result;
  }

  Value inv(Value a) const {
    if (a == 0) fail(ErrorCode::kDivisionByZero, "inverse of zero");
    return pow(a, order_ - 2);
  }

  Value div(Value a, Value b) const { return mul(a, inv(b)); }

  // Little-endian coefficient digits, e.g. alpha + 1 in GF(4) is "11".
  std::string to_digits(Value a) const {
    std::string s(e_, '0');
    for (unsigned i = 0; i < e_; ++i) {
      s[i] = detail::digit_char(static_cast<unsigned>(a % p_));
      a /= p_;
    }
    return s;
  }

  Value parse_digits(std::string_view s) const {
    if (s.size() != e_) {
      fail(ErrorCode::kMalformedInput,
           "element '" + std::string(s) + "' must have " + std::to_string(e_) +
               " digits");
    }
    Value v = 0;
    for (std::size_t i = s.size(); i-- > 0;) {
      const auto d = detail::char_digit(s[i]);
      if (!d || *d >= p_) {
        fail(ErrorCode::kMalformedInput, "bad digit in '" + std::string(s) + "'");
      }
      v = v * p_ + *d;
    }
    return v;
  }

  std::string modulus_digits() const {
    std::string s;
    for (unsigned c : modulus_) s.push_back(detail::digit_char(c));
    return s;
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldSpec(unsigned p, unsigned e, detail::Poly modulus, Value order)
      : p_(p), e_(e), modulus_(std::move(modulus)), order_(order) {
    if (p_ == 2) {
      for (unsigned i = 0; i <= e_; ++i) {
        if (modulus_[i]) mod_mask_ |= Value{1} << i;
      }
    }
  }

  static detail::Poly least_irreducible(unsigned p, unsigned e, Value count) {
    detail::Poly poly(e + 1, 0);
    poly[e] = 1;
    // Walk the non-leading coefficients in lexicographic order with c_0
    // as the most significant position.
    for (Value code = 0; code < count; ++code) {
      Value rest = code;
      for (unsigned j = 0; j < e; ++j) {
        poly[e - 1 - j] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      if (detail::is_irreducible(poly, p)) return poly;
    }
    fail(ErrorCode::kInvariantViolation, "no irreducible polynomial found");
  }

  void unpack(Value a, std::array<unsigned, kMaxDegree>& out) const {
    for (unsigned i = 0; i < e_; ++i) {
      out[i] = static_cast<unsigned>(a % p_);
      a /= p_;
    }
  }

  unsigned p_;
  unsigned e_;
  std::vector<unsigned> modulus_;
  Value order_;
  Value mod_mask_ = 0;
};

inline bool same_field(const Field& a, const Field& b) {
  return a == b || (a && b && *a == *b);
}

// A field element bound to its field; arithmetic checks that both operands
// live in the same field.
struct FieldElement {
  Field field;
  FieldSpec::Value value = 0;

  static FieldElement from_coeffs(Field f, std::span<const unsigned> c) {
    const auto v = f->from_coeffs(c);
    return {std::move(f), v};
  }
  static FieldElement zero(Field f) { return {std::move(f), 0}; }
  static FieldElement one(Field f) { return {std::move(f), 1}; }

  std::vector<unsigned> coeffs() const { return field->coeffs(value); }
  std::string digits() const { return field->to_digits(value); }
  bool is_zero() const { return value == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_field(a.field, b.field) && a.value == b.value;
  }
};

enum class FieldOp { kAdd, kSub, kMul, kDiv };

inline FieldElement field_arith(FieldOp op, const FieldElement& a,
                                const FieldElement& b) {
  if (!same_field(a.field, b.field)) {
    fail(ErrorCode::kSpecMismatch, "operands from different fields");
  }
  const FieldSpec& f = *a.field;
  switch (op) {
    case FieldOp::kAdd: return {a.field, f.add(a.value, b.value)};
    case FieldOp::kSub: return {a.field, f.sub(a.value, b.value)};
    case FieldOp::kMul: return {a.field, f.mul(a.value, b.value)};
    case FieldOp::kDiv:
      if (b.value == 0) fail(ErrorCode::kDivisionByZero, "division by zero");
      return {a.field, f.div(a.value, b.value)};
  }
  fail(ErrorCode::kInvariantViolation, "unknown field op");
}

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return field_arith(FieldOp::kAdd, a, b);
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return field_arith(FieldOp::kSub, a, b);
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return field_arith(FieldOp::kMul, a, b);
}
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return field_arith(FieldOp::kDiv, a, b);
}

inline FieldElement field_pow(const FieldElement& a, std::uint64_t m) {
  return {a.field, a.field->pow(a.value, m)};
}

// Smallest prime-power decomposition q = p^e, or nullopt.
inline std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  unsigned p = 0;
  for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) {
    if (q > 36) return std::nullopt;
    return std::pair{static_cast<unsigned>(q), 1u};
  }
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::pair{p, e};
}

// GF(p^e) with the canonical modulus, memoized: the modulus search for large
// degrees is the slow part of field construction.
inline Field canonical_field(unsigned p, unsigned e) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, Field> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({p, e}); it != cache.end()) return it->second;
  }
  Field f = FieldSpec::make(p, e);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::pair{p, e}, std::move(f)).first->second;
}

// GF(q) with the canonical modulus.
inline Field field_of_order(std::uint64_t q) {
  const auto pe = prime_power(q);
  if (!pe) {
    fail(ErrorCode::kNonPrimeCharacteristic,
         std::to_string(q) + " is not a prime power");
  }
  return canonical_field(pe->first, pe->second);
}

}  // namespace qtrans

#endif  // QTRANS_FIELD_HPP_
