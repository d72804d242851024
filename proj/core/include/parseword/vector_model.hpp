#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "parseword/errors.hpp"
#include "parseword/tree.hpp"

namespace parseword {

// Cross-product model: evaluating a tuple of signed unit vectors under a
// tree's bracketing yields a nonzero vector exactly when the letterwise
// axis word (tau) is a parse word of the tree. The nonzero value itself is
// bracketing-independent because the evaluation can be emulated in the
// quaternion group, where the product is associative.

/// Signed unit vector along a coordinate axis, or the zero vector.
enum class SignedVector : std::uint8_t {
  plus_i = 0,
  minus_i = 1,
  plus_j = 2,
  minus_j = 3,
  plus_k = 4,
  minus_k = 5,
  zero = 6,
};

/// Element of the order-8 quaternion group {±1, ±i, ±j, ±k}.
enum class Quaternion : std::uint8_t {
  one = 0,
  minus_one = 1,
  i = 2,
  minus_i = 3,
  j = 4,
  minus_j = 5,
  k = 6,
  minus_k = 7,
};

/// Klein four-group V = {e, 0, 1, 2}: the quaternion group modulo {1, -1}.
enum class KleinElement : std::uint8_t {
  e = 0,
  letter0 = 1,
  letter1 = 2,
  letter2 = 3,
};

/// Table-driven cross product; zero is absorbing and parallel inputs vanish.
SignedVector cross(SignedVector a, SignedVector b);

/// Quaternion group product.
Quaternion qmul(Quaternion a, Quaternion b);

/// Embedding of the signed unit vectors into the quaternion group
/// (+i-hat -> i, ...). Throws ZeroInput on the zero vector.
Quaternion phi(SignedVector v);
/// Inverse of phi; throws BadParams on +-1 (no preimage).
SignedVector phi_inverse(Quaternion q);

/// Quotient map onto the Klein four-group (sign forgotten).
KleinElement sigma(Quaternion q);
KleinElement klein_mul(KleinElement a, KleinElement b);

/// Axis letter of a nonzero signed vector: +-i-hat -> '0', +-j-hat -> '1',
/// +-k-hat -> '2'. Throws ZeroInput.
char tau(SignedVector v);

std::string to_string(SignedVector v);
std::string to_string(Quaternion q);

/// Folds the cross product over the tree's bracketing of the tuple.
/// Throws LengthMismatch when the tuple size differs from the leaf count.
SignedVector evaluate_bracketing(const Tree& t, std::span<const SignedVector> vs);

/// Associative product of phi-images. Throws ZeroInput if any entry is zero.
Quaternion quaternion_product(std::span<const SignedVector> vs);

/// Number of tuples in {i-hat, j-hat, k-hat}^n whose evaluations under both
/// trees are nonzero. Deliberately independent of the grammar module: this is
/// the oracle for the parse-word count (6x the class count).
std::uint64_t count_nonzero_tuples(const Tree& t1, const Tree& t2);

/// Visits each tuple in {i-hat, j-hat, k-hat}^n that evaluates to nonzero
/// vectors under both trees. The visitor returns false to stop early.
template <typename Visitor>
void for_each_nonzero_tuple(const Tree& t1, const Tree& t2, Visitor&& visit) {
  if (t1.leaf_count() != t2.leaf_count()) {
    throw LengthMismatch("trees have different leaf counts");
  }
  int n = t1.leaf_count();
  std::vector<SignedVector> tuple(static_cast<std::size_t>(n), SignedVector::plus_i);
  while (true) {
    if (evaluate_bracketing(t1, tuple) != SignedVector::zero &&
        evaluate_bracketing(t2, tuple) != SignedVector::zero) {
      if (!visit(std::span<const SignedVector>(tuple))) return;
    }
    int pos = n - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == SignedVector::plus_k) {
      tuple[static_cast<std::size_t>(pos)] = SignedVector::plus_i;
      --pos;
    }
    if (pos < 0) return;
    auto& slot = tuple[static_cast<std::size_t>(pos)];
    slot = slot == SignedVector::plus_i ? SignedVector::plus_j : SignedVector::plus_k;
  }
}

}  // namespace parseword
