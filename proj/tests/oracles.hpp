#pragma once

// Test-only oracles, independent of the library's grading and rule machinery.

#include <bit>
#include <map>
#include <stdexcept>

#include "khoss/cube.hpp"

namespace oracle {

// Laurent polynomials with integer coefficients.
using Laurent = std::map<int, long long>;

inline Laurent lmono(int e, long long c) { return Laurent{{e, c}}; }

inline Laurent ladd(const Laurent& a, const Laurent& b) {
  Laurent out = a;
  for (auto [e, c] : b) {
    out[e] += c;
    if (out[e] == 0) out.erase(e);
  }
  return out;
}

inline Laurent lmul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (auto [e1, c1] : a)
    for (auto [e2, c2] : b) out[e1 + e2] += c1 * c2;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Laurent lpow(const Laurent& a, int n) {
  Laurent out = lmono(0, 1);
  for (int i = 0; i < n; ++i) out = lmul(out, a);
  return out;
}

// Kauffman bracket state sum in the variable A, over the same resolutions:
// the 0-smoothing is the A-smoothing. Each state contributes
// A^(#0 - #1) (-A^2 - A^-2)^circles; the unnormalized Jones polynomial is
// (-A)^(-3w) times the sum, written in q via A^2 = -q^-1.
inline Laurent unnormalized_jones(const khoss::LinkDiagram& d,
                                  const khoss::ResolutionTable& rt) {
  using namespace khoss;
  int n = d.n();
  Laurent delta = ladd(lmono(2, -1), lmono(-2, -1));  // -A^2 - A^-2
  Laurent bracket;
  for (uint32_t I = 0; I < (uint32_t(1) << n); ++I) {
    int ones = std::popcount(I);
    int sigma = (n - ones) - ones;
    Laurent term = lmul(lmono(sigma, 1), lpow(delta, rt.get(I).circle_count()));
    bracket = ladd(bracket, term);
  }
  int w = d.writhe();
  Laurent writhe_factor = lmono(-3 * w, (w % 2 == 0) ? 1 : -1);  // (-A)^(-3w)
  Laurent f = lmul(writhe_factor, bracket);
  Laurent out;
  for (auto [e, c] : f) {
    if (e % 2 != 0) throw std::runtime_error("odd exponent in bracket");
    int half = e / 2;  // A^(2k) = (-1)^k q^(-k)
    out[-half] += (half % 2 == 0) ? c : -c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Graded Euler characteristic of the generator basis.
inline Laurent euler_characteristic(const khoss::Basis& basis) {
  Laurent out;
  for (int i = 0; i < basis.size(); ++i) {
    const auto& g = basis.gen(i);
    out[g.q] += (g.h % 2 == 0) ? 1 : -1;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace oracle
