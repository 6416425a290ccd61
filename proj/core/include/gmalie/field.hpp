#pragma once

// Exact scalar fields: the rationals (GMP-backed) and prime fields GF(p)
// with p an odd prime. Both expose the same value-level API through a small
// field object, so algorithms are written once as templates over F.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gmalie/error.hpp"

namespace gmalie {

enum class FieldKind { Rationals, PrimeField };

/// Runtime descriptor of a scalar field; text form is "q" or "gf:<p>".
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

class Rationals {
 public:
  using value_type = mpq_class;

  FieldSpec spec() const { return {FieldKind::Rationals, 0}; }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long long v) const { return value_type(static_cast<long>(v)); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw Error("division by zero in Q");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  /// Accepts "n" or "n/d" with optional sign; the result is canonical.
  value_type parse(std::string_view text) const;
  /// Canonical text: "n" when the denominator is 1, else "n/d".
  std::string format(const value_type& a) const { return a.get_str(); }

  /// Small integers in [-4, 4], occasionally divided by a small positive
  /// integer. Only used by tests and randomized probes.
  template <class Rng>
  value_type random(Rng& rng) const {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    const long n = num(rng);
    const long d = den(rng);
    value_type v{mpz_class(n), mpz_class(d)};
    v.canonicalize();
    return v;
  }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

class PrimeField {
 public:
  using value_type = std::uint32_t;

  /// p must be an odd prime below 2^31 (characteristic 2 is rejected).
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  FieldSpec spec() const { return {FieldKind::PrimeField, p_}; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const;
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  /// Accepts integers (any sign, reduced mod p) and "n/d" with d invertible.
  value_type parse(std::string_view text) const;
  std::string format(value_type a) const { return std::to_string(a); }

  template <class Rng>
  value_type random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
    return dist(rng);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

template <class F>
using Vector = std::vector<typename F::value_type>;

template <class F>
void require_same_field(const F& a, const F& b) {
  if (!(a == b)) {
    throw FieldMismatchError("field mismatch: " + a.spec().to_string() + " vs " +
                             b.spec().to_string());
  }
}

}  // namespace gmalie
