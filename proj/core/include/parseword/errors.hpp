#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parseword {

/// Out-of-range or inconsistent arguments (bad family parameters, malformed
/// words, invalid reduction sites, ...).
struct BadParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A word/tuple length does not match the tree's leaf count, or two paired
/// trees have different leaf counts.
struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A leaf or vertex index outside the valid range.
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Leaf-duplication requested on the 1-leaf tree (the root has no sibling).
struct RootLeaf : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// encode_path applied to a tree that has three or more vertices on a level.
struct NotAPathTree : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An operation restricted to pairs of path trees received something else.
struct NotPathTrees : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Word too short for the requested predicate family.
struct TooShort : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The zero vector fed to an operation defined only on signed unit vectors.
struct ZeroInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// verify/conjecture got a claim id that is not in the registry.
struct UnknownClaim : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A campaign's estimated work exceeds the configured budget.
struct RangeTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed tree or word literal; `offset` is the byte position of the
/// first offending character.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t offset_)
      : std::runtime_error(what + " (at byte " + std::to_string(offset_) + ")"),
        offset(offset_) {}
  std::size_t offset;
};

}  // namespace parseword
