#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace skeinlab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Sentinels for orders of the zero function.
inline constexpr std::int64_t kOrdPlusInf = INT64_MAX;
inline constexpr std::int64_t kOrdMinusInf = INT64_MIN;

struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionByZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of Z[A, A^-1], sparse on the exponent. No zero coefficients are
// stored; the zero polynomial has an empty term map.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly from_int(Int c);
  static LaurentPoly term(std::int64_t exp, Int coeff);
  static LaurentPoly one() { return from_int(1); }
  static LaurentPoly var() { return term(1, 1); }    // A
  // A^4 + 1, the minimal polynomial of e^{i pi/4}; q = A^2 = i lives here.
  static LaurentPoly a4_plus_1();

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<std::int64_t, Int>& terms() const { return terms_; }

  std::int64_t min_exp() const;  // requires non-zero
  std::int64_t max_exp() const;  // requires non-zero
  Int coeff(std::int64_t exp) const;
  Int lowest_coeff() const;  // coefficient at min_exp

  void add_term(std::int64_t exp, const Int& coeff);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly shifted(std::int64_t k) const;  // multiply by A^k
  LaurentPoly pow(std::uint32_t n) const;
  // Substitute A -> A^-1.
  LaurentPoly mirrored() const;

  Int content() const;           // gcd of coefficients, >= 0 (0 for zero)
  LaurentPoly primitive() const; // divided by content (zero stays zero)

  // Exact division; throws std::domain_error if not divisible.
  LaurentPoly divexact(const LaurentPoly& d) const;
  bool divisible_by(const LaurentPoly& d) const;

  // Gcd over Q up to units, returned as a primitive polynomial in Z[A] with
  // min_exp 0 and positive lowest coefficient.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  std::complex<double> eval(std::complex<double> A) const;

  std::string to_string() const;

 private:
  std::map<std::int64_t, Int> terms_;
};

// Reduced fraction num/den over Z[A,A^-1]. Invariants after normalization:
// den != 0, gcd(num,den) is a unit over Q, den.min_exp == 0, den's lowest
// coefficient positive. Equality is structural.
class RationalFunc {
 public:
  RationalFunc() : num_(), den_(LaurentPoly::one()) {}
  RationalFunc(LaurentPoly num, LaurentPoly den);
  explicit RationalFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::one()) {}

  static RationalFunc from_int(Int c) { return RationalFunc(LaurentPoly::from_int(std::move(c))); }
  static RationalFunc term(std::int64_t exp, Int coeff) {
    return RationalFunc(LaurentPoly::term(exp, std::move(coeff)));
  }
  static RationalFunc one() { return from_int(1); }
  static RationalFunc zero() { return RationalFunc(); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RationalFunc operator-() const;
  RationalFunc operator+(const RationalFunc& o) const;
  RationalFunc operator-(const RationalFunc& o) const;
  RationalFunc operator*(const RationalFunc& o) const;
  RationalFunc operator/(const RationalFunc& o) const;  // throws DivisionByZero
  RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
  RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }
  bool operator==(const RationalFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunc& o) const { return !(*this == o); }

  RationalFunc pow(std::int64_t n) const;  // negative n inverts

  // ord_infty - ord_0; 0 for the zero function.
  std::int64_t breadth() const;
  std::int64_t ord_zero() const;   // kOrdPlusInf for 0
  std::int64_t ord_infty() const;  // kOrdMinusInf for 0
  // Multiplicity of (A^4+1) in num minus multiplicity in den; the order of
  // the function at q = A^2 = i. kOrdPlusInf for 0.
  std::int64_t ord_at_i() const;

  RationalFunc mirrored() const;  // A -> A^-1

  std::complex<double> eval(std::complex<double> A, double pole_tol = 1e-9) const;

  std::string to_string() const;
  static RationalFunc parse(const std::string& text);

 private:
  void reduce();
  LaurentPoly num_, den_;
};

// i^ipow * A^(half_exp/2): a fourth-root-of-unity tag times a monomial in
// sqrt(A). Framing phases for half-integer twists and gleams live here until
// the product resolves to an honest element of Z[A,A^-1].
struct PhaseMonomial {
  int ipow = 0;               // modulo 4
  std::int64_t half_exp = 0;  // exponent of A in half-units

  static PhaseMonomial identity() { return {}; }
  PhaseMonomial operator*(const PhaseMonomial& o) const {
    return {(ipow + o.ipow) & 3, half_exp + o.half_exp};
  }
  bool resolvable() const { return (ipow % 2) == 0 && (half_exp % 2) == 0; }
  // Throws std::domain_error on a dangling half-phase.
  RationalFunc to_rational() const;
};

}  // namespace skeinlab
