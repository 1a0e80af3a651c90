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

#include "saes32/sbox.hpp"

#include <stdexcept>

#include "saes32/gf256.hpp"

namespace saes32 {
namespace {

// 8x8 bit matrix as row masks; output bit i = parity(row[i] & x)
using BitMatrix = std::array<uint8_t, 8>;

uint8_t mat_apply(const BitMatrix& m, uint8_t x) {
  uint8_t r = 0;
  for (int i = 0; i < 8; i++) {
    r |= static_cast<uint8_t>(__builtin_parity(m[i] & x) << i);
  }
  return r;
}

BitMatrix mat_invert(const BitMatrix& m) {
  // Gauss-Jordan on [m | I], rows as 16-bit (low 8 = m row, high 8 = identity)
  std::array<uint16_t, 8> a;
  for (int i = 0; i < 8; i++) a[i] = static_cast<uint16_t>(m[i] | (1u << (8 + i)));
  int row = 0;
  for (int col = 0; col < 8; col++) {
    int pivot = -1;
    for (int k = row; k < 8; k++) {
      if ((a[k] >> col) & 1) {
        pivot = k;
        break;
      }
    }
    if (pivot < 0) throw std::logic_error("sbox affine matrix is singular");
    std::swap(a[row], a[pivot]);
    for (int k = 0; k < 8; k++) {
      if (k != row && ((a[k] >> col) & 1)) a[k] ^= a[row];
    }
    row++;
  }
  BitMatrix inv{};
  for (int i = 0; i < 8; i++) {
    int col = __builtin_ctz(a[i] & 0xFF);
    inv[col] = static_cast<uint8_t>(a[i] >> 8);
  }
  return inv;
}

uint8_t rotl8(uint8_t x, int n) {
  return static_cast<uint8_t>((x << n) | (x >> (8 - n)));
}

// AES output affine: bit i of M*x = x_i ^ x_{i+4} ^ x_{i+5} ^ x_{i+6} ^ x_{i+7}
BitMatrix aes_affine_matrix() {
  BitMatrix m{};
  for (int i = 0; i < 8; i++) {
    m[i] = static_cast<uint8_t>((1 << i) | (1 << ((i + 4) % 8)) | (1 << ((i + 5) % 8)) |
                                (1 << ((i + 6) % 8)) | (1 << ((i + 7) % 8)));
  }
  return m;
}
constexpr uint8_t kAesAffineConst = 0x63;

// SM4 affine (same matrix and constant on input and output): the matrix is the
// bit-rotation circulant generated by 0xA7.
BitMatrix sm4_affine_matrix() {
  BitMatrix m{};
  for (int i = 0; i < 8; i++) m[i] = rotl8(0xA7, i);
  return m;
}
constexpr uint8_t kSm4AffineConst = 0xD3;

SBoxTable build_aes() {
  const BitMatrix m = aes_affine_matrix();
  SBoxTable t;
  t.kind = SboxKind::aes;
  for (int x = 0; x < 256; x++) {
    t.entries[x] = mat_apply(m, gf256_inv(static_cast<uint8_t>(x), FieldPoly::aes)) ^
                   kAesAffineConst;
  }
  return t;
}

SBoxTable build_aes_inv() {
  const BitMatrix minv = mat_invert(aes_affine_matrix());
  SBoxTable t;
  t.kind = SboxKind::aes_inv;
  for (int x = 0; x < 256; x++) {
    t.entries[x] =
        gf256_inv(mat_apply(minv, static_cast<uint8_t>(x ^ kAesAffineConst)), FieldPoly::aes);
  }
  return t;
}

SBoxTable build_sm4() {
  const BitMatrix m = sm4_affine_matrix();
  SBoxTable t;
  t.kind = SboxKind::sm4;
  for (int x = 0; x < 256; x++) {
    const uint8_t inner = mat_apply(m, static_cast<uint8_t>(x)) ^ kSm4AffineConst;
    t.entries[x] = mat_apply(m, gf256_inv(inner, FieldPoly::sm4)) ^ kSm4AffineConst;
  }
  return t;
}

}  // namespace

const SBoxTable& aes_sbox() {
  static const SBoxTable t = build_aes();
  return t;
}

const SBoxTable& aes_inv_sbox() {
  static const SBoxTable t = build_aes_inv();
  return t;
}

const SBoxTable& sm4_sbox() {
  static const SBoxTable t = build_sm4();
  return t;
}

const SBoxTable& sbox_for(SboxKind kind) {
  switch (kind) {
    case SboxKind::aes: return aes_sbox();
    case SboxKind::aes_inv: return aes_inv_sbox();
    case SboxKind::sm4: return sm4_sbox();
  }
  throw std::invalid_argument("sbox_for: bad kind");
}

}  // namespace saes32
