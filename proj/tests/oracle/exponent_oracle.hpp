// Copyright 2026 The rsscred Authors.
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

#pragma once

// Independent integer-arithmetic oracle for the exponent-tracking mock
// backend. Uses arbitrary-precision integers and shares no code with the
// library's modular arithmetic: every value here is a discrete logarithm,
// and every protocol step is recomputed directly on those logarithms.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace rsscred::oracle {

using Int = boost::multiprecision::cpp_int;

inline const Int& order() {
  static const Int p = (Int(1) << 61) - 1;
  return p;
}

inline Int mod(const Int& v) {
  Int r = v % order();
  if (r < 0) r += order();
  return r;
}

inline Int pow_mod(Int base, unsigned exp) {
  Int out = 1;
  base = mod(base);
  for (unsigned k = 0; k < exp; ++k) out = mod(out * base);
  return out;
}

inline std::uint64_t u64(const Int& v) { return mod(v).convert_to<std::uint64_t>(); }

// Logarithms of an RSS key pair's public elements for secrets (x, y) and
// base logarithms (g1, g2).
struct KeyLogs {
  Int x, y, g1, g2;
  unsigned n;

  Int y1(unsigned i) const { return mod(g1 * pow_mod(y, i)); }
  Int y2(unsigned i) const { return mod(g2 * pow_mod(y, i)); }
  Int x2() const { return mod(g2 * x); }
};

struct SigLogs {
  Int s1, s2, s3, st;
};

// Fresh signature with first-component logarithm `s1`.
inline SigLogs sign(const KeyLogs& k, const Int& s1, const std::vector<Int>& m) {
  Int e = k.x;
  for (unsigned i = 1; i <= k.n; ++i) e += pow_mod(k.y, i) * m[i - 1];
  return {mod(s1), mod(s1 * e), 0, 0};
}

// Derivation with randomizers (r, t) and commitments c (one per retained
// index, same order as `kept`).
inline SigLogs derive(const KeyLogs& k, const SigLogs& fresh,
                      const std::vector<Int>& m,
                      const std::vector<unsigned>& kept, const Int& r,
                      const Int& t, const std::vector<Int>& c) {
  std::vector<unsigned> dropped;
  for (unsigned j = 1; j <= k.n; ++j) {
    bool in = false;
    for (auto i : kept) in = in || i == j;
    if (!in) dropped.push_back(j);
  }
  SigLogs out;
  out.s1 = mod(fresh.s1 * r);
  out.s2 = mod(fresh.s2 * r + out.s1 * t);
  Int st = t;
  for (auto j : dropped) st += pow_mod(k.y, j) * m[j - 1];
  out.st = mod(k.g2 * st);
  Int s3 = 0;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    const unsigned i = kept[a];
    Int inner = t * pow_mod(k.y, k.n + 1 - i);
    for (auto j : dropped) inner += m[j - 1] * pow_mod(k.y, k.n + 1 - i + j);
    s3 += c[a] * inner;
  }
  out.s3 = mod(k.g1 * s3);
  return out;
}

// First verification equation as an identity on GT logarithms:
// s1 * (X' + s~ + sum m_i Y'_i) == s2 * g2.
inline bool equation1(const KeyLogs& k, const SigLogs& s,
                      const std::map<unsigned, Int>& disclosed) {
  Int agg = k.x2() + s.st;
  for (const auto& [i, m] : disclosed) agg += k.y2(i) * m;
  return mod(s.s1 * mod(agg)) == mod(s.s2 * k.g2);
}

// Second equation: s3 * g2 == (sum c_i Y_{n+1-i}) * s~.
inline bool equation2(const KeyLogs& k, const SigLogs& s,
                      const std::vector<unsigned>& kept,
                      const std::vector<Int>& c) {
  Int comb = 0;
  for (std::size_t a = 0; a < kept.size(); ++a) comb += c[a] * k.y1(k.n + 1 - kept[a]);
  return mod(s.s3 * k.g2) == mod(mod(comb) * s.st);
}

}  // namespace rsscred::oracle
