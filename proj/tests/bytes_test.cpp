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


#include "rsscred/bytes.hpp"

#include <gtest/gtest.h>

#include "rsscred/errors.hpp"

namespace rsscred {
namespace {

TEST(HexTest, RoundTrip) {
  const Bytes b = {0x00, 0x01, 0xab, 0xff};
  EXPECT_EQ(to_hex(b), "0001abff");
  EXPECT_EQ(from_hex("0001ABff"), b);
  EXPECT_TRUE(from_hex("").empty());
}

TEST(HexTest, RejectsOddLengthAndJunk) {
  EXPECT_THROW(from_hex("abc"), DecodeError);
  EXPECT_THROW(from_hex("zz"), DecodeError);
}

TEST(Base64Test, KnownVectors) {
  EXPECT_EQ(to_base64(as_bytes("")), "");
  EXPECT_EQ(to_base64(as_bytes("f")), "Zg==");
  EXPECT_EQ(to_base64(as_bytes("foobar")), "Zm9vYmFy");
  const auto back = from_base64("Zm9vYg==");
  EXPECT_EQ(std::string(back.begin(), back.end()), "foob");
}

TEST(Base64Test, RejectsGarbage) {
  EXPECT_THROW(from_base64("@@@"), DecodeError);
}

TEST(ByteWriterTest, BigEndianIntegers) {
  ByteWriter w;
  w.u8(0x01);
  w.u16(0x0203);
  w.u32(0x04050607);
  w.raw("xy");
  EXPECT_EQ(to_hex(w.bytes()), "0102030405060778" "79");
}

TEST(ByteReaderTest, ReadsBackAndDetectsTruncation) {
  const Bytes b = from_hex("0102030405060708");
  ByteReader r(b);
  EXPECT_EQ(r.u8(), 0x01);
  EXPECT_EQ(r.u16(), 0x0203);
  EXPECT_EQ(r.u32(), 0x04050607u);
  EXPECT_EQ(r.remaining(), 1u);
  EXPECT_THROW(r.expect_end(), DecodeError);
  EXPECT_THROW(r.u16(), DecodeError);
  EXPECT_EQ(r.u8(), 0x08);
  EXPECT_NO_THROW(r.expect_end());
}

}  // namespace
}  // namespace rsscred
