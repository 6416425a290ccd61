#include "gmalie/field.hpp"

#include <charconv>

namespace gmalie {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw ParseError("invalid scalar '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

FieldSpec FieldSpec::parse(std::string_view text) {
  text = trim(text);
  if (text == "q" || text == "Q" || text == "rationals") return {FieldKind::Rationals, 0};
  std::string_view rest;
  if (text.starts_with("gf:")) {
    rest = text.substr(3);
  } else if (text.starts_with("GF:")) {
    rest = text.substr(3);
  } else {
    throw ParseError("unknown field descriptor '" + std::string(text) + "' (expected q or gf:<p>)");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
  if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
    throw ParseError("invalid prime in field descriptor '" + std::string(text) + "'");
  }
  if (p == 2) throw ParseError("characteristic 2 is not supported (scalars must be 2-torsionfree)");
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw ParseError("gf:" + std::to_string(p) + " is not an odd prime below 2^31");
  }
  return {FieldKind::PrimeField, static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::Rationals ? "q" : "gf:" + std::to_string(p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Rationals::value_type Rationals::parse(std::string_view text) const {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return value_type(parse_integer(s, text));
  mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
  mpz_class den = parse_integer(trim(s.substr(slash + 1)), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  value_type v(num, den);
  v.canonicalize();
  return v;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p == 2) throw Error("characteristic 2 is not supported (scalars must be 2-torsionfree)");
  if (p >= (1U << 31) || !is_prime(p)) {
    throw Error("GF(" + std::to_string(p) + "): modulus must be an odd prime below 2^31");
  }
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
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
  return static_cast<value_type>(t);
}

PrimeField::value_type PrimeField::parse(std::string_view text) const {
  std::string_view s = trim(text);
  auto reduce = [&](std::string_view part) {
    mpz_class v = parse_integer(trim(part), text);
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return static_cast<value_type>(r.get_ui());
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return reduce(s);
  value_type num = reduce(s.substr(0, slash));
  value_type den = reduce(s.substr(slash + 1));
  if (den == 0) throw ParseError("denominator not invertible mod p in '" + std::string(text) + "'");
  return mul(num, inv(den));
}

}  // namespace gmalie
