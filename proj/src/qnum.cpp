#include "skeinlab/qnum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <tuple>

namespace skeinlab {
namespace qnum {

bool is_admissible(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return false;
  return a <= b + c && b <= a + c && c <= a + b && (a + b + c) % 2 == 0;
}

bool is_q_admissible(int a, int b, int c, int r) {
  return is_admissible(a, b, c) && a + b + c <= 2 * (r - 2);
}

RationalFunc qint(int n) {
  if (n < 1) throw std::invalid_argument("qint requires n >= 1");
  // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n} with q = A^2.
  LaurentPoly p;
  for (int j = 0; j < n; ++j) p.add_term(2 * (n - 1 - 2 * j), 1);
  return RationalFunc(p);
}

namespace {

std::vector<RationalFunc>& qfact_cache() {
  static std::vector<RationalFunc> cache{RationalFunc::one(), RationalFunc::one()};
  return cache;
}
std::mutex qfact_mutex;

}  // namespace

RationalFunc qfact(int n) {
  if (n < 0) throw std::invalid_argument("qfact requires n >= 0");
  std::lock_guard<std::mutex> lock(qfact_mutex);
  auto& cache = qfact_cache();
  while (static_cast<int>(cache.size()) <= n)
    cache.push_back(cache.back() * qint(static_cast<int>(cache.size())));
  return cache[static_cast<size_t>(n)];
}

RationalFunc qmultinomial(const std::vector<int>& ms, const std::vector<int>& ns) {
  std::int64_t sm = std::accumulate(ms.begin(), ms.end(), std::int64_t{0});
  std::int64_t sn = std::accumulate(ns.begin(), ns.end(), std::int64_t{0});
  if (sm != sn) throw std::invalid_argument("qmultinomial: sum of tops != sum of bottoms");
  RationalFunc r = RationalFunc::one();
  for (int m : ms) r = r * qfact(m);
  for (int n : ns) r = r / qfact(n);
  return r;
}

RationalFunc circle(int n) {
  if (n < 0) throw std::invalid_argument("circle requires n >= 0");
  RationalFunc v = qint(n + 1);
  return (n % 2 == 0) ? v : -v;
}

RationalFunc theta(int a, int b, int c) {
  if (!is_admissible(a, b, c)) {
    std::ostringstream os;
    os << "theta: inadmissible triple (" << a << "," << b << "," << c << ")";
    throw AdmissibilityError(os.str());
  }
  int s = (a + b + c) / 2;
  RationalFunc v = qmultinomial({s + 1, s - c, s - a, s - b}, {a, b, c, 1});
  return (s % 2 == 0) ? v : -v;
}

namespace {

std::map<std::array<int, 6>, RationalFunc> tet_cache;
std::shared_mutex tet_mutex;

}  // namespace

RationalFunc tet(int a, int b, int c, int d, int e, int f) {
  const std::array<std::array<int, 3>, 4> triples = {{{a, b, c}, {a, e, f}, {b, d, f}, {c, d, e}}};
  for (const auto& t : triples) {
    if (!is_admissible(t[0], t[1], t[2])) {
      std::ostringstream os;
      os << "tet: inadmissible vertex triple (" << t[0] << "," << t[1] << "," << t[2] << ")";
      throw AdmissibilityError(os.str());
    }
  }
  const std::array<int, 6> key = {a, b, c, d, e, f};
  {
    std::shared_lock lock(tet_mutex);
    auto it = tet_cache.find(key);
    if (it != tet_cache.end()) return it->second;
  }

  const std::array<int, 4> tri = {(a + b + c) / 2, (a + e + f) / 2, (b + d + f) / 2,
                                  (c + d + e) / 2};
  const std::array<int, 3> sq = {(a + b + d + e) / 2, (a + c + d + f) / 2, (b + c + e + f) / 2};
  int zmin = *std::max_element(tri.begin(), tri.end());
  int zmax = *std::min_element(sq.begin(), sq.end());

  std::vector<int> tops;
  for (int i : sq)
    for (int j : tri) tops.push_back(i - j);
  RationalFunc front = qmultinomial(tops, {a, b, c, d, e, f});

  RationalFunc sum = RationalFunc::zero();
  for (int z = zmin; z <= zmax; ++z) {
    std::vector<int> bottoms;
    for (int j : tri) bottoms.push_back(z - j);
    for (int i : sq) bottoms.push_back(i - z);
    bottoms.push_back(1);
    RationalFunc term = qmultinomial({z + 1}, bottoms);
    sum = (z % 2 == 0) ? sum + term : sum - term;
  }
  RationalFunc result = front * sum;
  {
    std::unique_lock lock(tet_mutex);
    tet_cache.emplace(key, result);
  }
  return result;
}

RationalFunc sixj(int a, int b, int c, int d, int i, int j) {
  if (!is_admissible(a, d, i) || !is_admissible(b, c, i) || !is_admissible(a, b, j) ||
      !is_admissible(c, d, j))
    throw AdmissibilityError("sixj: required triples are not admissible");
  return circle(i) * tet(a, d, i, c, b, j) / (theta(a, d, i) * theta(c, b, i));
}

PhaseMonomial full_twist_phase(int n, std::int64_t two_k) {
  if (n < 0) throw std::invalid_argument("full_twist_phase requires n >= 0");
  // One positive half twist contributes i^n A^{n(n+2)/2}; two_k/2 full twists
  // are two_k half twists.
  std::int64_t nn2 = static_cast<std::int64_t>(n) * (n + 2);
  PhaseMonomial ph;
  ph.ipow = static_cast<int>(((static_cast<std::int64_t>(n) * two_k) % 4 + 4) % 4);
  ph.half_exp = nn2 * two_k;
  return ph;
}

std::array<int, 3> angles(int a, int b, int c) {
  if (!is_admissible(a, b, c)) throw AdmissibilityError("angles: inadmissible triple");
  return {(a + b - c) / 2, (b + c - a) / 2, (c + a - b) / 2};
}

bool is_red(int a, int b, int c) {
  auto ang = angles(a, b, c);
  int odd = 0;
  for (int x : ang) odd += x % 2 != 0;
  return odd >= 2;
}

std::int64_t ord_i_qint(int n) {
  if (n < 1) throw std::invalid_argument("ord_i_qint requires n >= 1");
  return n % 2 == 0 ? 1 : 0;
}

std::int64_t ord_i_qfact(int n) {
  if (n < 0) throw std::invalid_argument("ord_i_qfact requires n >= 0");
  return n / 2;
}

std::int64_t ord_i_multinomial(const std::vector<int>& ms, const std::vector<int>& ns) {
  std::int64_t sm = std::accumulate(ms.begin(), ms.end(), std::int64_t{0});
  std::int64_t sn = std::accumulate(ns.begin(), ns.end(), std::int64_t{0});
  if (sm != sn) throw std::invalid_argument("ord_i_multinomial: sum mismatch");
  auto odd_count = [](const std::vector<int>& v) {
    std::int64_t k = 0;
    for (int x : v) k += x % 2 != 0;
    return k;
  };
  return odd_count(ns) / 2 - odd_count(ms) / 2;
}

}  // namespace qnum
}  // namespace skeinlab
