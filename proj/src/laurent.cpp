#include "skeinlab/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace skeinlab {

LaurentPoly LaurentPoly::from_int(Int c) {
  LaurentPoly p;
  if (c != 0) p.terms_[0] = std::move(c);
  return p;
}

LaurentPoly LaurentPoly::term(std::int64_t exp, Int coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exp] = std::move(coeff);
  return p;
}

LaurentPoly LaurentPoly::a4_plus_1() {
  LaurentPoly p;
  p.terms_[4] = 1;
  p.terms_[0] = 1;
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

std::int64_t LaurentPoly::min_exp() const { return terms_.begin()->first; }
std::int64_t LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

Int LaurentPoly::coeff(std::int64_t exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly::lowest_coeff() const { return terms_.begin()->second; }

void LaurentPoly::add_term(std::int64_t exp, const Int& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_[exp] = coeff;
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(std::uint32_t n) const {
  LaurentPoly r = one();
  LaurentPoly base = *this;
  while (n) {
    if (n & 1u) r = r * base;
    base = base * base;
    n >>= 1u;
  }
  return r;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? Int(-g) : g;
}

LaurentPoly LaurentPoly::primitive() const {
  if (is_zero()) return *this;
  Int c = content();
  LaurentPoly r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v / c;
  return r;
}

namespace {

// Dense representation over Z with exponent offset 0, used by gcd/division.
using Dense = std::vector<Int>;

Dense to_dense(const LaurentPoly& p) {
  Dense d;
  if (p.is_zero()) return d;
  std::int64_t lo = p.min_exp();
  d.assign(static_cast<size_t>(p.max_exp() - lo + 1), Int(0));
  for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(e - lo)] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d, std::int64_t lo) {
  LaurentPoly p;
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) p.add_term(lo + static_cast<std::int64_t>(i), d[i]);
  return p;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

Int dense_content(const Dense& d) {
  Int g = 0;
  for (const auto& c : d) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? Int(-g) : g;
}

void make_primitive(Dense& d) {
  Int c = dense_content(d);
  if (c == 0 || c == 1) return;
  for (auto& x : d) x /= c;
}

// Pseudo-remainder of a by b (b non-zero), for the primitive PRS.
Dense prem(Dense a, const Dense& b) {
  trim(a);
  const Int& lb = b.back();
  std::int64_t db = static_cast<std::int64_t>(b.size()) - 1;
  while (static_cast<std::int64_t>(a.size()) - 1 >= db && !a.empty()) {
    std::int64_t da = static_cast<std::int64_t>(a.size()) - 1;
    Int la = a.back();
    for (auto& x : a) x *= lb;
    for (std::int64_t i = 0; i <= db; ++i)
      a[static_cast<size_t>(da - db + i)] -= la * b[static_cast<size_t>(i)];
    trim(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  Int ca = dense_content(a), cb = dense_content(b);
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = prem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  Int cg = boost::multiprecision::gcd(ca, cb);
  for (auto& x : a) x *= cg;
  if (a.back() < 0)
    for (auto& x : a) x = -x;
  return a;
}

}  // namespace

LaurentPoly LaurentPoly::divexact(const LaurentPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return LaurentPoly();
  Dense a = to_dense(*this), b = to_dense(d);
  if (a.size() < b.size()) throw std::domain_error("not divisible");
  Dense q(a.size() - b.size() + 1, Int(0));
  for (std::int64_t i = static_cast<std::int64_t>(q.size()) - 1; i >= 0; --i) {
    Int num = a[static_cast<size_t>(i) + b.size() - 1];
    if (num == 0) continue;
    if (num % b.back() != 0) throw std::domain_error("not divisible");
    Int qi = num / b.back();
    q[static_cast<size_t>(i)] = qi;
    for (size_t j = 0; j < b.size(); ++j) a[static_cast<size_t>(i) + j] -= qi * b[j];
  }
  for (const auto& x : a)
    if (x != 0) throw std::domain_error("not divisible");
  return from_dense(q, min_exp() - d.min_exp());
}

bool LaurentPoly::divisible_by(const LaurentPoly& d) const {
  try {
    (void)divexact(d);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.is_zero() ? LaurentPoly() : b.shifted(-b.min_exp());
  if (b.is_zero()) return a.shifted(-a.min_exp());
  Dense g = dense_gcd(to_dense(a), to_dense(b));
  LaurentPoly r = from_dense(g, 0);
  if (!r.is_zero() && r.lowest_coeff() < 0) r = -r;
  return r;
}

std::complex<double> LaurentPoly::eval(std::complex<double> A) const {
  if (is_zero()) return {0.0, 0.0};
  // Horner over A starting from the top exponent, then shift by A^min_exp.
  std::complex<double> acc = 0.0;
  std::int64_t prev = max_exp();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (std::int64_t k = prev; k > it->first; --k) acc *= A;
    acc += static_cast<double>(it->second);
    prev = it->first;
  }
  std::complex<double> shift = 1.0;
  std::int64_t m = min_exp();
  std::complex<double> base = m >= 0 ? A : 1.0 / A;
  for (std::int64_t k = 0; k < (m >= 0 ? m : -m); ++k) shift *= base;
  return acc * shift;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Int c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::int64_t e = it->first;
    if (e == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "A";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

RationalFunc::RationalFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  reduce();
}

void RationalFunc::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  // Units A^k belong to the numerator; the denominator starts at exponent 0.
  std::int64_t sd = den_.min_exp();
  if (sd != 0) {
    den_ = den_.shifted(-sd);
    num_ = num_.shifted(-sd);
  }
  LaurentPoly g = LaurentPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  sd = den_.min_exp();
  if (sd != 0) {
    den_ = den_.shifted(-sd);
    num_ = num_.shifted(-sd);
  }
  if (den_.lowest_coeff() < 0) {
    den_ = -den_;
    num_ = -num_;
  }
}

RationalFunc RationalFunc::operator-() const {
  RationalFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
  return RationalFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunc RationalFunc::operator-(const RationalFunc& o) const {
  return RationalFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
  return RationalFunc(num_ * o.num_, den_ * o.den_);
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const {
  if (o.is_zero()) throw DivisionByZero("division by the zero function");
  return RationalFunc(num_ * o.den_, den_ * o.num_);
}

RationalFunc RationalFunc::pow(std::int64_t n) const {
  if (n == 0) return one();
  bool inv = n < 0;
  std::uint64_t m = inv ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  RationalFunc base = *this;
  if (inv) base = one() / base;
  RationalFunc r = one();
  while (m) {
    if (m & 1u) r = r * base;
    base = base * base;
    m >>= 1u;
  }
  return r;
}

std::int64_t RationalFunc::breadth() const {
  if (is_zero()) return 0;
  return (num_.max_exp() - den_.max_exp()) - (num_.min_exp() - den_.min_exp());
}

std::int64_t RationalFunc::ord_zero() const {
  if (is_zero()) return kOrdPlusInf;
  return num_.min_exp() - den_.min_exp();
}

std::int64_t RationalFunc::ord_infty() const {
  if (is_zero()) return kOrdMinusInf;
  return num_.max_exp() - den_.max_exp();
}

namespace {
std::int64_t a4p1_multiplicity(const LaurentPoly& p) {
  if (p.is_zero()) return 0;
  LaurentPoly t = p;
  const LaurentPoly f = LaurentPoly::a4_plus_1();
  std::int64_t k = 0;
  while (true) {
    try {
      t = t.divexact(f);
      ++k;
    } catch (const std::domain_error&) {
      break;
    }
  }
  return k;
}
}  // namespace

std::int64_t RationalFunc::ord_at_i() const {
  if (is_zero()) return kOrdPlusInf;
  return a4p1_multiplicity(num_) - a4p1_multiplicity(den_);
}

RationalFunc RationalFunc::mirrored() const { return RationalFunc(num_.mirrored(), den_.mirrored()); }

std::complex<double> RationalFunc::eval(std::complex<double> A, double pole_tol) const {
  std::complex<double> d = den_.eval(A);
  // Scale the guard with the denominator size so huge-coefficient cases are
  // still detected near a genuine root.
  double scale = 0.0;
  for (const auto& [e, c] : den_.terms()) scale += std::abs(static_cast<double>(c));
  if (std::abs(d) <= pole_tol * std::max(1.0, scale))
    throw PoleError("denominator vanishes at the evaluation point");
  return num_.eval(A) / d;
}

std::string RationalFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string(), d = den_.to_string();
  auto wrap = [](const std::string& s) {
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(n) + " / " + wrap(d);
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  Int parse_uint() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected an integer at position " + std::to_string(start));
    return Int(s.substr(start, i - start));
  }

  std::int64_t parse_exp() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i;
    } else if (peek() == '+') {
      ++i;
    }
    Int v = parse_uint();
    std::int64_t e = v.convert_to<std::int64_t>();
    return neg ? -e : e;
  }

  LaurentPoly parse_poly() {
    LaurentPoly p;
    bool expect_term = true;
    int sign = 1;
    while (true) {
      char c = peek();
      if (c == '\0' || c == ')' || c == '/') break;
      if (c == '+' || c == '-') {
        if (!expect_term) expect_term = true;
        sign = (c == '-') ? -sign : sign;
        ++i;
        continue;
      }
      Int coeff = 1;
      bool have_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = parse_uint();
        have_coeff = true;
      }
      std::int64_t exp = 0;
      skip_ws();
      if (i < s.size() && (s[i] == 'A' || s[i] == 'a')) {
        ++i;
        exp = 1;
        skip_ws();
        if (i < s.size() && s[i] == '^') {
          ++i;
          exp = parse_exp();
        }
      } else if (!have_coeff) {
        throw ParseError("expected a term at position " + std::to_string(i));
      }
      p.add_term(exp, sign * coeff);
      sign = 1;
      expect_term = false;
    }
    return p;
  }

  LaurentPoly parse_factor() {
    if (peek() == '(') {
      ++i;
      LaurentPoly p = parse_poly();
      if (peek() != ')') throw ParseError("missing ')'");
      ++i;
      return p;
    }
    return parse_poly();
  }
};

}  // namespace

RationalFunc RationalFunc::parse(const std::string& text) {
  Parser p(text);
  LaurentPoly num = p.parse_factor();
  if (p.peek() == '/') {
    ++p.i;
    LaurentPoly den = p.parse_factor();
    if (!p.eof()) throw ParseError("trailing input after denominator");
    return RationalFunc(num, den);
  }
  if (!p.eof()) throw ParseError("trailing input after polynomial");
  return RationalFunc(num);
}

RationalFunc PhaseMonomial::to_rational() const {
  if (!resolvable())
    throw std::domain_error("dangling half-phase: i^" + std::to_string(ipow) + " A^" +
                            std::to_string(half_exp) + "/2 is not an element of Z[A,A^-1]");
  Int sign = (ipow % 4 == 0) ? 1 : -1;
  return RationalFunc::term(half_exp / 2, sign);
}

}  // namespace skeinlab
