#include "skeinlab/tl.hpp"

#include <mutex>
#include <stack>

namespace skeinlab {
namespace tl {

namespace {

RationalFunc loop_value() { return RationalFunc::parse("-A^2 - A^-2"); }

}  // namespace

PlanarMatching::PlanarMatching(std::vector<int> mate) : mate_(std::move(mate)) {
  int total = static_cast<int>(mate_.size());
  if (total == 0 || total % 2 != 0) throw std::invalid_argument("matching needs 2n points");
  int n = total / 2;
  for (int p = 0; p < total; ++p) {
    int q = mate_[static_cast<size_t>(p)];
    if (q < 0 || q >= total || q == p || mate_[static_cast<size_t>(q)] != p)
      throw std::invalid_argument("matching is not an involution without fixed points");
  }
  // Non-crossing check: balanced nesting in the circular order.
  std::vector<int> order;
  for (int i = 0; i < n; ++i) order.push_back(i);
  for (int i = 2 * n - 1; i >= n; --i) order.push_back(i);
  std::vector<int> pos(static_cast<size_t>(total));
  for (int i = 0; i < total; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
  std::stack<int> st;
  for (int i = 0; i < total; ++i) {
    int p = order[static_cast<size_t>(i)];
    int q = mate_[static_cast<size_t>(p)];
    if (pos[static_cast<size_t>(q)] > i) {
      st.push(p);
    } else {
      if (st.empty() || st.top() != q) throw std::invalid_argument("matching crosses itself");
      st.pop();
    }
  }
}

PlanarMatching PlanarMatching::identity(int n) {
  std::vector<int> m(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    m[static_cast<size_t>(i)] = n + i;
    m[static_cast<size_t>(n + i)] = i;
  }
  return PlanarMatching(std::move(m));
}

TLElement TLElement::identity(int n) {
  TLElement x(n);
  x.add(PlanarMatching::identity(n), RationalFunc::one());
  return x;
}

TLElement TLElement::gen_e(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("gen_e: index out of range");
  std::vector<int> m(static_cast<size_t>(2 * n));
  for (int p = 0; p < n; ++p) {
    m[static_cast<size_t>(p)] = n + p;
    m[static_cast<size_t>(n + p)] = p;
  }
  int a = i - 1, b = i;  // 0-based adjacent pair
  m[static_cast<size_t>(a)] = b;
  m[static_cast<size_t>(b)] = a;
  m[static_cast<size_t>(n + a)] = n + b;
  m[static_cast<size_t>(n + b)] = n + a;
  TLElement x(n);
  x.add(PlanarMatching(std::move(m)), RationalFunc::one());
  return x;
}

void TLElement::add(const PlanarMatching& m, const RationalFunc& c) {
  if (m.arity() != arity_) throw ArityMismatch("TLElement::add arity mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement TLElement::operator+(const TLElement& o) const {
  if (arity_ != o.arity_) throw ArityMismatch("TL addition arity mismatch");
  TLElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, c);
  return r;
}

TLElement TLElement::operator-(const TLElement& o) const {
  if (arity_ != o.arity_) throw ArityMismatch("TL subtraction arity mismatch");
  TLElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, -c);
  return r;
}

TLElement TLElement::scaled(const RationalFunc& c) const {
  TLElement r(arity_);
  for (const auto& [m, v] : terms_) r.add(m, v * c);
  return r;
}

namespace {

// Multiply two basis matchings: x stacked on top of y, x's bottom glued to
// y's top. Product ports: x's top (0..n-1) and y's bottom (n..2n-1). Returns
// the product matching and the number of closed loops removed.
std::pair<PlanarMatching, int> compose(const PlanarMatching& x, const PlanarMatching& y) {
  const int n = x.arity();
  std::vector<int> m(static_cast<size_t>(2 * n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);  // interface points on open paths

  // Walk from a product port through the interface to the partner port.
  auto other_end = [&](int port) {
    int side = port < n ? 0 : 1;  // 0: apply x's matching next, 1: apply y's
    int pt = port;
    while (true) {
      if (side == 0) {
        int q = x.mate(pt);
        if (q < n) return q;  // x top: a product port
        used[static_cast<size_t>(q - n)] = true;
        side = 1;
        pt = q - n;  // continue from y's top point
      } else {
        int q = y.mate(pt);
        if (q >= n) return q;  // y bottom: a product port
        used[static_cast<size_t>(q)] = true;
        side = 0;
        pt = n + q;  // continue from x's bottom point
      }
    }
  };

  for (int p = 0; p < 2 * n; ++p) {
    if (m[static_cast<size_t>(p)] != -1) continue;
    int q = other_end(p);
    m[static_cast<size_t>(p)] = q;
    m[static_cast<size_t>(q)] = p;
  }

  // Remaining interface points lie on closed loops.
  int loops = 0;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (used[static_cast<size_t>(i)] || seen[static_cast<size_t>(i)]) continue;
    ++loops;
    int cur = i;
    while (!seen[static_cast<size_t>(cur)]) {
      seen[static_cast<size_t>(cur)] = true;
      int q = y.mate(cur);  // stays in y's top on a closed loop
      seen[static_cast<size_t>(q)] = true;
      cur = x.mate(n + q) - n;
    }
  }
  return {PlanarMatching(std::move(m)), loops};
}

}  // namespace

TLElement tl_mul(const TLElement& x, const TLElement& y) {
  if (x.arity() != y.arity()) throw ArityMismatch("tl_mul arity mismatch");
  TLElement r(x.arity());
  const RationalFunc d = loop_value();
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      auto [m, loops] = compose(mx, my);
      r.add(m, cx * cy * d.pow(loops));
    }
  }
  return r;
}

namespace {

// Inclusion TL_n -> TL_{n+1} by a straight strand on the right.
TLElement include(const TLElement& x) {
  int n = x.arity();
  TLElement r(n + 1);
  for (const auto& [m, c] : x.terms()) {
    std::vector<int> mm(static_cast<size_t>(2 * (n + 1)));
    auto newpt = [&](int p) { return p < n ? p : p + 1; };
    for (int p = 0; p < 2 * n; ++p) mm[static_cast<size_t>(newpt(p))] = newpt(m.mate(p));
    mm[static_cast<size_t>(n)] = 2 * n + 1;
    mm[static_cast<size_t>(2 * n + 1)] = n;
    r.add(PlanarMatching(std::move(mm)), c);
  }
  return r;
}

std::vector<TLElement> jw_cache;
std::mutex jw_mutex;

}  // namespace

int& projector_cap() {
  static int cap = 8;
  return cap;
}

const TLElement& jones_wenzl(int n) {
  if (n < 1) throw std::invalid_argument("jones_wenzl requires n >= 1");
  if (n > projector_cap())
    throw std::invalid_argument("projector arity " + std::to_string(n) +
                                " exceeds the configured cap " + std::to_string(projector_cap()));
  std::lock_guard<std::mutex> lock(jw_mutex);
  if (jw_cache.empty()) jw_cache.push_back(TLElement::identity(1));  // f^(1)
  while (static_cast<int>(jw_cache.size()) < n) {
    int m = static_cast<int>(jw_cache.size());  // building f^(m+1)
    const TLElement inc = include(jw_cache.back());
    // circle(k) = closure of f^(k)
    RationalFunc circ_m_1 = m >= 2 ? trace_closure(jw_cache[static_cast<size_t>(m - 2)])
                                   : RationalFunc::one();
    RationalFunc circ_m = trace_closure(jw_cache.back());
    TLElement em = TLElement::gen_e(m + 1, m);
    TLElement corr = tl_mul(tl_mul(inc, em), inc).scaled(circ_m_1 / circ_m);
    jw_cache.push_back(inc - corr);
  }
  return jw_cache[static_cast<size_t>(n - 1)];
}

RationalFunc trace_closure(const TLElement& x) {
  int n = x.arity();
  const RationalFunc d = loop_value();
  RationalFunc total = RationalFunc::zero();
  for (const auto& [m, c] : x.terms()) {
    // Close top i to bottom i; count loops of the resulting union.
    std::vector<bool> seen(static_cast<size_t>(2 * n), false);
    int loops = 0;
    for (int p = 0; p < 2 * n; ++p) {
      if (seen[static_cast<size_t>(p)]) continue;
      ++loops;
      int cur = p;
      while (!seen[static_cast<size_t>(cur)]) {
        seen[static_cast<size_t>(cur)] = true;
        int q = m.mate(cur);
        seen[static_cast<size_t>(q)] = true;
        cur = q < n ? q + n : q - n;  // closure arc
      }
    }
    total += c * d.pow(loops);
  }
  return total;
}

RationalFunc annulus_parallel_cores(int k) {
  if (k < 0) throw std::invalid_argument("annulus_parallel_cores requires k >= 0");
  // Expand x^k in the Chebyshev basis y_n; multiplication by x sends
  // y_n -> y_{n+1} + y_{n-1} (and y_0 -> y_1). Only the y_0 coefficient
  // survives in S^1 x S^2.
  std::vector<Int> coeff(static_cast<size_t>(k + 1), Int(0));
  coeff[0] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<Int> next(coeff.size(), Int(0));
    for (size_t i = 0; i < coeff.size(); ++i) {
      if (coeff[i] == 0) continue;
      if (i + 1 < next.size()) next[i + 1] += coeff[i];
      if (i >= 1) next[i - 1] += coeff[i];
    }
    coeff = std::move(next);
  }
  return RationalFunc(LaurentPoly::from_int(coeff[0]));
}

std::vector<Int> colored_core_expand(int n) {
  if (n < 0) throw std::invalid_argument("colored_core_expand requires n >= 0");
  std::vector<Int> prev = {1};     // y_0
  if (n == 0) return prev;
  std::vector<Int> cur = {0, 1};   // y_1 = x
  for (int m = 1; m < n; ++m) {
    std::vector<Int> next(cur.size() + 1, Int(0));
    for (size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];  // x * y_m
    for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace tl
}  // namespace skeinlab
