#!/usr/bin/env python3
# Copyright 2026 The rsscred Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Recomputes the frozen test vectors from first principles.

Uses only hashlib and the `cryptography` ChaCha20 primitive, nothing from
the C++ library. The printed values are pasted into the tests.
"""

import hashlib
import struct

from cryptography.hazmat.primitives.ciphers import Cipher, algorithms

MOCK_P = 2**61 - 1
BLS_R = 0x73EDA753299D7D483339D80809A1D80553BDA402FFFE5BFEFFFFFFFF00000001


def hash_to_scalar(tag: bytes, payload: bytes, p: int) -> int:
    counter = 0
    while True:
        d = hashlib.sha512(
            struct.pack(">I", len(tag)) + tag + struct.pack(">I", counter) + payload
        ).digest()
        v = int.from_bytes(d, "big") % p
        if v:
            return v
        counter += 1


class Seeded:
    def __init__(self, seed: int):
        self.key = hashlib.blake2b(
            struct.pack(">Q", seed), key=b"rsscred seeded rng", digest_size=32
        ).digest()
        self.buf = b""
        self.counter = 0

    def take(self, k: int) -> bytes:
        while len(self.buf) < k:
            nonce = struct.pack("<I", self.counter) + bytes(12)
            enc = Cipher(algorithms.ChaCha20(self.key, nonce), mode=None).encryptor()
            self.buf += enc.update(bytes(64))
            self.counter += 1
        out, self.buf = self.buf[:k], self.buf[k:]
        return out

    def scalar(self, p: int) -> int:
        return int.from_bytes(self.take(64), "big") % p

    def nonzero(self, p: int) -> int:
        while True:
            v = self.scalar(p)
            if v:
                return v


def main() -> None:
    attr = b"name\x00Alice Example"
    print("attr name mock", hex(hash_to_scalar(b"attr", attr, MOCK_P)))
    print("attr name bls ", "%064x" % hash_to_scalar(b"attr", attr, BLS_R))
    print("attr country mock",
          hex(hash_to_scalar(b"attr", b"address.country\x00United Kingdom", MOCK_P)))
    print("empty mock", hex(hash_to_scalar(b"", b"", MOCK_P)))

    print("seed 7 first 16 bytes", Seeded(7).take(16).hex())
    s = Seeded(7)
    print("seed 7 scalars mock", [hex(s.scalar(MOCK_P)) for _ in range(3)])

    # Mock rss keygen under seed 42 with n = 3: g1, g2 nonzero, x, y nonzero.
    s = Seeded(42)
    g1, g2 = s.nonzero(MOCK_P), s.nonzero(MOCK_P)
    x, y = s.scalar(MOCK_P), s.nonzero(MOCK_P)
    print("rss keygen seed 42 g1 g2 x y", hex(g1), hex(g2), hex(x), hex(y))
    n = 3
    ys = [g1 * pow(y, i, MOCK_P) % MOCK_P for i in list(range(1, n + 1)) + list(range(n + 2, 2 * n + 1))]
    print("  Y", [hex(v) for v in ys])
    print("  X'", hex(g2 * x % MOCK_P))


if __name__ == "__main__":
    main()
