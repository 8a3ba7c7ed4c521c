#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {
namespace qnum {

struct AdmissibilityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Triangle inequalities and even sum.
bool is_admissible(int a, int b, int c);
// Additionally a+b+c <= 2(r-2).
bool is_q_admissible(int a, int b, int c, int r);

// [n] = (q^n - q^-n)/(q - q^-1) at q = A^2, as a symmetric Laurent
// polynomial in A.
RationalFunc qint(int n);
// [n]! = [2][3]...[n], with [0]! = [1]! = 1.
RationalFunc qfact(int n);
// prod [m_i]! / prod [n_j]!; requires sum m = sum n.
RationalFunc qmultinomial(const std::vector<int>& ms, const std::vector<int>& ns);

// Unknot colored n: (-1)^n [n+1].
RationalFunc circle(int n);
// Theta graph colored (a,b,c); requires admissibility.
RationalFunc theta(int a, int b, int c);
// Tetrahedral network with vertex triples (a,b,c), (a,e,f), (b,d,f), (c,d,e).
RationalFunc tet(int a, int b, int c, int d, int e, int f);
// Recoupling coefficient {a b i; c d j} = circle(i) tet(a,d,i,c,b,j) /
// (theta(a,d,i) theta(c,b,i)).
RationalFunc sixj(int a, int b, int c, int d, int i, int j);

// k (in full twists, half-integers allowed as two_k/2) positive twists on an
// edge colored n multiply the skein by i^(2nk) A^(nk(n+2)). Returned as a
// tagged monomial; it resolves to +-A^m exactly when n*two_k is even.
PhaseMonomial full_twist_phase(int n, std::int64_t two_k);

// The three integers (a+b-c)/2, (b+c-a)/2, (c+a-b)/2.
std::array<int, 3> angles(int a, int b, int c);
// At least two odd angles.
bool is_red(int a, int b, int c);

// Closed forms for orders at q = A^2 = i.
std::int64_t ord_i_qint(int n);          // 0 if n odd, 1 if n even
std::int64_t ord_i_qfact(int n);         // floor(n/2)
std::int64_t ord_i_multinomial(const std::vector<int>& ms, const std::vector<int>& ns);

}  // namespace qnum
}  // namespace skeinlab
