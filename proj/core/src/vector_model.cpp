#include "parseword/vector_model.hpp"

#include <vector>

namespace parseword {

namespace {

// Nonzero signed vectors encode as axis*2 + (sign bit), zero as 6.
constexpr int kZero = 6;

constexpr int cross_code(int a, int b) {
  if (a == kZero || b == kZero) return kZero;
  int axis_a = a >> 1, sign_a = a & 1;
  int axis_b = b >> 1, sign_b = b & 1;
  if (axis_a == axis_b) return kZero;
  int axis_c = 3 - axis_a - axis_b;
  // i x j = k and cyclic shifts are positive; the reversed order flips sign.
  int base_negative = ((axis_b - axis_a + 3) % 3) == 1 ? 0 : 1;
  int sign_c = sign_a ^ sign_b ^ base_negative;
  return axis_c * 2 + sign_c;
}

constexpr std::array<std::array<std::uint8_t, 7>, 7> make_cross_table() {
  std::array<std::array<std::uint8_t, 7>, 7> table{};
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          static_cast<std::uint8_t>(cross_code(a, b));
    }
  }
  return table;
}

constexpr auto kCrossTable = make_cross_table();

// Quaternions encode as base*2 + (sign bit), base 0 = scalar 1, 1..3 = i, j, k.
constexpr int qmul_code(int a, int b) {
  int base_a = a >> 1, sign_a = a & 1;
  int base_b = b >> 1, sign_b = b & 1;
  int sign = sign_a ^ sign_b;
  if (base_a == 0) return base_b * 2 + sign;
  if (base_b == 0) return base_a * 2 + sign;
  if (base_a == base_b) return 0 * 2 + (sign ^ 1);  // q*q = -1, q*(-q) = 1
  int base_c = 6 - base_a - base_b;
  int base_negative = ((base_b - base_a + 3) % 3) == 1 ? 0 : 1;
  return base_c * 2 + (sign ^ base_negative);
}

constexpr std::array<std::array<std::uint8_t, 8>, 8> make_qmul_table() {
  std::array<std::array<std::uint8_t, 8>, 8> table{};
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          static_cast<std::uint8_t>(qmul_code(a, b));
    }
  }
  return table;
}

constexpr auto kQmulTable = make_qmul_table();

}  // namespace

SignedVector cross(SignedVector a, SignedVector b) {
  return static_cast<SignedVector>(
      kCrossTable[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
}

Quaternion qmul(Quaternion a, Quaternion b) {
  return static_cast<Quaternion>(
      kQmulTable[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
}

Quaternion phi(SignedVector v) {
  if (v == SignedVector::zero) throw ZeroInput("phi is undefined on the zero vector");
  // axis 0..2 -> base 1..3, sign preserved
  int code = static_cast<int>(v);
  return static_cast<Quaternion>(((code >> 1) + 1) * 2 + (code & 1));
}

SignedVector phi_inverse(Quaternion q) {
  int code = static_cast<int>(q);
  if ((code >> 1) == 0) throw BadParams("phi_inverse is undefined on +-1");
  return static_cast<SignedVector>(((code >> 1) - 1) * 2 + (code & 1));
}

KleinElement sigma(Quaternion q) {
  return static_cast<KleinElement>(static_cast<int>(q) >> 1);
}

KleinElement klein_mul(KleinElement a, KleinElement b) {
  // V is Z2 x Z2; with e = 0 the product is xor.
  return static_cast<KleinElement>(static_cast<int>(a) ^ static_cast<int>(b));
}

char tau(SignedVector v) {
  if (v == SignedVector::zero) throw ZeroInput("tau is undefined on the zero vector");
  return static_cast<char>('0' + (static_cast<int>(v) >> 1));
}

std::string to_string(SignedVector v) {
  static const char* names[] = {"+i", "-i", "+j", "-j", "+k", "-k", "0"};
  return names[static_cast<std::size_t>(v)];
}

std::string to_string(Quaternion q) {
  static const char* names[] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return names[static_cast<std::size_t>(q)];
}

SignedVector evaluate_bracketing(const Tree& t, std::span<const SignedVector> vs) {
  if (static_cast<int>(vs.size()) != t.leaf_count()) {
    throw LengthMismatch("tuple size differs from leaf count");
  }
  std::size_t count = t.vertex_count();
  std::vector<SignedVector> value(count);
  std::size_t leaf_rank = vs.size();
  for (std::size_t v = count; v-- > 0;) {
    if (t.is_leaf(v)) {
      value[v] = vs[--leaf_rank];
    } else {
      value[v] = cross(value[v + 1], value[t.right_child(v)]);
    }
  }
  return value[0];
}

Quaternion quaternion_product(std::span<const SignedVector> vs) {
  Quaternion acc = Quaternion::one;
  for (SignedVector v : vs) acc = qmul(acc, phi(v));
  return acc;
}

std::uint64_t count_nonzero_tuples(const Tree& t1, const Tree& t2) {
  std::uint64_t count = 0;
  for_each_nonzero_tuple(t1, t2, [&](std::span<const SignedVector>) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace parseword
