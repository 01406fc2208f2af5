#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace entroq {

/// The three physical readings of a flat 4x4 matrix index.
enum class Coding { two_qubit, spin_three_half, triplet_singlet };

/// Bijection between flat basis indices 1..4 and physical labels.
///
/// Flat position k always plays the role of the k-th two-qubit pair
/// (+1/2 +1/2), (+1/2 -1/2), (-1/2 +1/2), (-1/2 -1/2); the coding records
/// which physical label sits at that position:
///   two_qubit       (1/2,1/2), (1/2,-1/2), (-1/2,1/2), (-1/2,-1/2)
///   spin_three_half 3/2, 1/2, -1/2, -3/2
///   triplet_singlet (1,1), (1,0), (1,-1), (0,0)
struct IndexCoding {
  Coding kind;
  std::array<std::string, 4> labels;  // flat index 0..3 -> physical label

  static IndexCoding make(Coding kind);
  /// Parse "two_qubit" / "spin_three_half" / "triplet_singlet";
  /// throws UnknownLabel otherwise.
  static IndexCoding from_name(std::string_view name);

  std::string_view name() const;
  const std::string& label(int flat) const;
  /// Inverse lookup; throws BadLabels when the label is not part of
  /// the coding.
  int flat_index(std::string_view label) const;
};

/// Basis relabeling: images is a rearrangement of {0, .., n-1}.
struct Permutation {
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }
  static Permutation identity(int n);
  /// All n! permutations in lexicographic order over the image lists;
  /// the position in this list is the permutation's stable id.
  static std::vector<Permutation> all(int n);
};

}  // namespace entroq
