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

// Redactable signatures with constant-size signatures and linear-size
// public keys, built from a modified Pointcheval-Sanders scheme.
//
// Keys for message length n, secrets (x, y):
//   Y_i  = g1 * y^i   for i in [1, n] and [n+2, 2n]  (index n+1 is absent)
//   Y'_i = g2 * y^i   for i in [1, n]
//   X'   = g2 * x
//
// A fresh signature is (s1, s1*(x + sum_i y^i m_i), 0, 0). Anyone holding
// the public key derives a signature on a retained index set I by
//   s1' = s1*r,  s2' = s2*r + s1'*t,
//   s~' = g2*t + sum_{j not in I} m_j Y'_j,
//   c_i = H(s1' | s2' | s~' | I | i)                         for i in I
//   s3' = sum_{i in I} c_i (t Y_{n+1-i} + sum_{j not in I} m_j Y_{n+1-i+j}).
// Verification checks
//   e(s1, X' + s~ + sum_{i in I} m_i Y'_i) == e(s2, g2)
//   e(s3, g2)                            == e(sum_{i in I} c_i Y_{n+1-i}, s~).
// Because j != i, the missing Y_{n+1} is never needed; it is the element a
// forger would need to fake the second equation.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rsscred/backend.hpp"
#include "rsscred/errors.hpp"
#include "rsscred/wire.hpp"

namespace rsscred::rss {

inline constexpr std::string_view kDefaultHashId = "rsscred/rss/c/v1";

// Retained positions I, 1-based, sorted ascending, non-empty, within [1, n].
class IndexSet {
 public:
  // Throws InvalidParameter on an empty set, duplicates, or an index
  // outside [1, n].
  static IndexSet of(std::vector<std::uint32_t> indices, std::uint32_t n) {
    if (n == 0) throw InvalidParameter("index set: message length is zero");
    if (indices.empty()) throw InvalidParameter("index set is empty");
    std::ranges::sort(indices);
    if (std::ranges::adjacent_find(indices) != indices.end()) {
      throw InvalidParameter("index set contains duplicates");
    }
    if (indices.front() < 1 || indices.back() > n) {
      throw InvalidParameter("index outside [1, " + std::to_string(n) + "]");
    }
    return IndexSet(std::move(indices), n);
  }

  static IndexSet all(std::uint32_t n) {
    std::vector<std::uint32_t> v(n);
    for (std::uint32_t i = 0; i < n; ++i) v[i] = i + 1;
    return of(std::move(v), n);
  }

  std::span<const std::uint32_t> indices() const { return indices_; }
  std::uint32_t message_length() const { return n_; }
  std::size_t size() const { return indices_.size(); }
  bool contains(std::uint32_t i) const {
    return std::ranges::binary_search(indices_, i);
  }

  // [1, n] \ I, ascending.
  std::vector<std::uint32_t> complement() const {
    std::vector<std::uint32_t> out;
    out.reserve(n_ - indices_.size());
    for (std::uint32_t i = 1; i <= n_; ++i) {
      if (!contains(i)) out.push_back(i);
    }
    return out;
  }

  bool operator==(const IndexSet&) const = default;

 private:
  IndexSet(std::vector<std::uint32_t> indices, std::uint32_t n)
      : indices_(std::move(indices)), n_(n) {}

  std::vector<std::uint32_t> indices_;
  std::uint32_t n_;
};

template <PairingBackend B>
struct SecretKey {
  typename B::Scalar x;
  typename B::Scalar y;
  std::uint32_t n = 0;

  bool operator==(const SecretKey&) const = default;
};

template <PairingBackend B>
struct PublicKey {
  std::string hash_id;
  typename B::G1 g1;
  typename B::G2 g2;
  // Y_1..Y_n followed by Y_{n+2}..Y_{2n}: 2n-1 entries.
  std::vector<typename B::G1> y_g1;
  typename B::G2 x_g2;
  // Y'_1..Y'_n.
  std::vector<typename B::G2> y_g2;
  std::uint32_t n = 0;

  // Y_i for i in [1, n] or [n+2, 2n].
  const typename B::G1& y1(std::uint32_t i) const {
    if (i == 0 || i == n + 1 || i > 2 * n) {
      throw InternalError("G1 key index " + std::to_string(i) +
                          " is not published for n = " + std::to_string(n));
    }
    return y_g1[i <= n ? i - 1 : i - 2];
  }

  // Y'_i for i in [1, n].
  const typename B::G2& y2(std::uint32_t i) const {
    if (i == 0 || i > n) {
      throw InternalError("G2 key index " + std::to_string(i) + " out of range");
    }
    return y_g2[i - 1];
  }

  bool operator==(const PublicKey&) const = default;
};

template <PairingBackend B>
struct Signature {
  typename B::G1 sigma1;
  typename B::G1 sigma2;
  typename B::G1 sigma3;
  typename B::G2 sigma_tilde;
  // Message length of the key that produced it.
  std::uint32_t n = 0;

  // Issuer-produced signatures carry identity third and fourth components.
  bool is_fresh() const {
    return sigma3.is_identity() && sigma_tilde.is_identity();
  }

  bool operator==(const Signature&) const = default;
};

template <PairingBackend B>
struct KeyPair {
  SecretKey<B> sk;
  PublicKey<B> pk;
};

// Retained scalars keyed by their 1-based position.
template <PairingBackend B>
using Disclosure = std::map<std::uint32_t, typename B::Scalar>;

// --- key generation -----------------------------------------------------------

// Key pair for explicitly chosen secrets and bases.
template <PairingBackend B>
KeyPair<B> keygen_from(const typename B::Scalar& x, const typename B::Scalar& y,
                       const typename B::G1& g1, const typename B::G2& g2,
                       std::uint32_t n,
                       std::string hash_id = std::string(kDefaultHashId)) {
  if (n == 0) throw InvalidParameter("rss keygen: message length must be >= 1");
  if (y.is_zero()) throw InvalidParameter("rss keygen: y must be non-zero");
  if (g1.is_identity() || g2.is_identity()) {
    throw InvalidParameter("rss keygen: identity base element");
  }
  KeyPair<B> kp;
  kp.sk = {x, y, n};

  auto& pk = kp.pk;
  pk.hash_id = std::move(hash_id);
  pk.g1 = g1;
  pk.g2 = g2;
  pk.x_g2 = g2 * x;
  pk.n = n;
  pk.y_g1.reserve(2 * n - 1);
  pk.y_g2.reserve(n);

  auto power = y;  // y^i
  for (std::uint32_t i = 1; i <= 2 * n; ++i, power = power * y) {
    if (i == n + 1) continue;
    pk.y_g1.push_back(g1 * power);
    if (i <= n) pk.y_g2.push_back(g2 * power);
  }
  return kp;
}

template <PairingBackend B>
KeyPair<B> keygen(std::uint32_t n, RandomSource& rng) {
  if (n == 0) throw InvalidParameter("rss keygen: message length must be >= 1");
  const auto g1 = B::G1::generator() * random_nonzero_scalar<B>(rng);
  const auto g2 = B::G2::generator() * random_nonzero_scalar<B>(rng);
  const auto x = random_scalar<B>(rng);
  const auto y = random_nonzero_scalar<B>(rng);
  return keygen_from<B>(x, y, g1, g2, n);
}

// --- signing --------------------------------------------------------------------

template <PairingBackend B>
Signature<B> sign_with_base(const SecretKey<B>& sk,
                            std::span<const typename B::Scalar> messages,
                            const typename B::G1& sigma1) {
  if (messages.size() != sk.n) {
    throw InvalidParameter("rss sign: expected " + std::to_string(sk.n) +
                           " messages, got " + std::to_string(messages.size()));
  }
  auto exponent = sk.x;
  auto power = sk.y;
  for (const auto& m : messages) {
    exponent = exponent + power * m;
    power = power * sk.y;
  }
  return {sigma1, sigma1 * exponent, B::G1::identity(), B::G2::identity(),
          sk.n};
}

template <PairingBackend B>
Signature<B> sign(const SecretKey<B>& sk,
                  std::span<const typename B::Scalar> messages,
                  RandomSource& rng) {
  if (messages.size() != sk.n) {
    throw InvalidParameter("rss sign: expected " + std::to_string(sk.n) +
                           " messages, got " + std::to_string(messages.size()));
  }
  typename B::G1 sigma1;
  do {
    sigma1 = B::G1::generator() * random_scalar<B>(rng);
  } while (sigma1.is_identity());
  return sign_with_base<B>(sk, messages, sigma1);
}

// --- index commitments ----------------------------------------------------------

// c_i for every i in I, in the order of I.indices().
//
// Hash input: enc(s1) | enc(s2) | enc(s~) | u32 |I| | u32 i_1 .. u32 i_k |
// u32 i, under the public key's hash_id as domain tag.
template <PairingBackend B>
std::vector<typename B::Scalar> index_commitments(
    const PublicKey<B>& pk, const typename B::G1& sigma1,
    const typename B::G1& sigma2, const typename B::G2& sigma_tilde,
    const IndexSet& retained) {
  ByteWriter prefix;
  wire::put(prefix, sigma1);
  wire::put(prefix, sigma2);
  wire::put(prefix, sigma_tilde);
  prefix.u32(static_cast<std::uint32_t>(retained.size()));
  for (auto i : retained.indices()) prefix.u32(i);

  std::vector<typename B::Scalar> out;
  out.reserve(retained.size());
  Bytes payload = prefix.bytes();
  const std::size_t base_len = payload.size();
  for (auto i : retained.indices()) {
    payload.resize(base_len);
    ByteWriter tail;
    tail.u32(i);
    payload.insert(payload.end(), tail.bytes().begin(), tail.bytes().end());
    out.push_back(hash_to_scalar<B>(pk.hash_id, payload));
  }
  return out;
}

// --- derivation -----------------------------------------------------------------

// Derivation with caller-chosen randomizers; r must be non-zero.
template <PairingBackend B>
Signature<B> derive_with(const PublicKey<B>& pk, const Signature<B>& sig,
                         std::span<const typename B::Scalar> messages,
                         const IndexSet& retained, const typename B::Scalar& r,
                         const typename B::Scalar& t) {
  const std::uint32_t n = pk.n;
  if (messages.size() != n) {
    throw InvalidParameter("rss derive: expected " + std::to_string(n) +
                           " messages, got " + std::to_string(messages.size()));
  }
  if (retained.message_length() != n) {
    throw InvalidParameter("rss derive: index set built for a different n");
  }
  if (sig.n != n) {
    throw InvalidParameter("rss derive: signature length does not match key");
  }
  if (!sig.is_fresh()) {
    throw InvalidParameter("rss derive: input must be a fresh signature");
  }
  if (sig.sigma1.is_identity()) {
    throw InvalidParameter("rss derive: signature has identity first component");
  }
  if (r.is_zero()) throw InvalidParameter("rss derive: r must be non-zero");

  const auto redacted = retained.complement();

  Signature<B> out;
  out.n = n;
  out.sigma1 = sig.sigma1 * r;
  out.sigma2 = sig.sigma2 * r + out.sigma1 * t;
  out.sigma_tilde = pk.g2 * t;
  for (auto j : redacted) {
    out.sigma_tilde = out.sigma_tilde + pk.y2(j) * messages[j - 1];
  }

  const auto c = index_commitments<B>(pk, out.sigma1, out.sigma2,
                                      out.sigma_tilde, retained);

  // Collect the scalar on each Y_k first so that s3' costs at most 2n-1
  // multiplications: coeff[k] = sum of c_i*t (k = n+1-i) and c_i*m_j
  // (k = n+1-i+j).
  std::vector<typename B::Scalar> coeff(2 * n + 1, B::Scalar::zero());
  const auto idx = retained.indices();
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const std::uint32_t i = idx[a];
    coeff[n + 1 - i] = coeff[n + 1 - i] + c[a] * t;
    for (auto j : redacted) {
      const std::uint32_t k = n + 1 - i + j;
      if (k == n + 1) {
        throw InternalError("rss derive: reached the unpublished index n+1");
      }
      coeff[k] = coeff[k] + c[a] * messages[j - 1];
    }
  }
  out.sigma3 = B::G1::identity();
  for (std::uint32_t k = 1; k <= 2 * n; ++k) {
    if (k == n + 1 || coeff[k].is_zero()) continue;
    out.sigma3 = out.sigma3 + pk.y1(k) * coeff[k];
  }
  return out;
}

// Holder-side derivation of a signature on the retained positions. Needs
// only the issuer's public key.
template <PairingBackend B>
Signature<B> derive(const PublicKey<B>& pk, const Signature<B>& sig,
                    std::span<const typename B::Scalar> messages,
                    const IndexSet& retained, RandomSource& rng) {
  const auto r = random_nonzero_scalar<B>(rng);
  const auto t = random_nonzero_scalar<B>(rng);
  return derive_with<B>(pk, sig, messages, retained, r, t);
}

// --- verification ---------------------------------------------------------------

// Accepts fresh signatures (disclosing every position) and derived ones.
// Throws InvalidParameter when `disclosed` is empty or names a position
// outside [1, n].
template <PairingBackend B>
bool verify(const PublicKey<B>& pk, const Signature<B>& sig,
            const Disclosure<B>& disclosed) {
  std::vector<std::uint32_t> idx;
  idx.reserve(disclosed.size());
  for (const auto& [i, m] : disclosed) idx.push_back(i);
  const auto retained = IndexSet::of(std::move(idx), pk.n);

  if (sig.n != pk.n) return false;
  if (sig.sigma1.is_identity()) return false;

  auto aggregate = pk.x_g2 + sig.sigma_tilde;
  for (const auto& [i, m] : disclosed) aggregate = aggregate + pk.y2(i) * m;
  if (!(B::pairing(sig.sigma1, aggregate) == B::pairing(sig.sigma2, pk.g2))) {
    return false;
  }

  // With s~ = 0 the second equation reads e(s3, g2) = 1.
  if (sig.sigma_tilde.is_identity()) return sig.sigma3.is_identity();

  const auto c = index_commitments<B>(pk, sig.sigma1, sig.sigma2,
                                      sig.sigma_tilde, retained);
  auto combined = B::G1::identity();
  const auto indices = retained.indices();
  for (std::size_t a = 0; a < indices.size(); ++a) {
    combined = combined + pk.y1(pk.n + 1 - indices[a]) * c[a];
  }
  return B::pairing(sig.sigma3, pk.g2) == B::pairing(combined, sig.sigma_tilde);
}

}  // namespace rsscred::rss
