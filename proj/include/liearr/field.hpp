#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace liearr {

bool is_prime_u64(std::uint64_t n);

/// Coefficient field descriptor: the rationals or a prime field F_p with
/// p < 2^31. All arithmetic in the library is exact; there is no floating
/// point anywhere.
class Field {
 public:
  enum class Kind { Rationals, Prime };

  static Field rationals() { return Field(Kind::Rationals, 0); }

  static Field prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t(1) << 31) || !is_prime_u64(p))
      throw std::invalid_argument("characteristic must be a prime < 2^31, got " +
                                  std::to_string(p));
    return Field(Kind::Prime, p);
  }

  Kind kind() const { return kind_; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }
  std::string name() const {
    return kind_ == Kind::Rationals ? "Q" : "F" + std::to_string(p_);
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// Parses "q" / "Q" or "p:<prime>" / a bare numeral into a Field.
Field parse_field(const std::string& text);

/// Exact rational scalars, always in lowest terms with positive denominator
/// (mpq_class canonicalizes on construction and after every operation).
struct RationalField {
  using Elem = mpq_class;

  Field descriptor() const { return Field::rationals(); }
  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem from_mpz(const mpz_class& v) const { return Elem(v); }
  Elem from_mpq(const mpq_class& v) const { return v; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    return Elem(1) / a;
  }
  std::string str(const Elem& a) const { return a.get_str(); }
};

/// Residues mod p stored in [0, p). p < 2^31 keeps products inside 64 bits.
struct PrimeField {
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    Field::prime(prime);  // validates
  }

  std::uint64_t p;

  Field descriptor() const { return Field::prime(p); }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return static_cast<Elem>(r);
  }
  Elem from_mpz(const mpz_class& v) const {
    mpz_class r = v % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
  }
  Elem from_mpq(const mpq_class& v) const {
    Elem num = from_mpz(v.get_num());
    Elem den = from_mpz(v.get_den());
    return mul(num, inv(den));
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // p is prime: a^(p-2) mod p
    Elem result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  std::string str(Elem a) const { return std::to_string(a); }
};

}  // namespace liearr
