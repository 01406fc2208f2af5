#include "entroq/codings.hpp"

#include <algorithm>
#include <numeric>

#include "entroq/errors.hpp"

namespace entroq {

IndexCoding IndexCoding::make(Coding kind) {
  switch (kind) {
    case Coding::two_qubit:
      return {kind, {"(1/2,1/2)", "(1/2,-1/2)", "(-1/2,1/2)", "(-1/2,-1/2)"}};
    case Coding::spin_three_half:
      return {kind, {"3/2", "1/2", "-1/2", "-3/2"}};
    case Coding::triplet_singlet:
      return {kind, {"(1,1)", "(1,0)", "(1,-1)", "(0,0)"}};
  }
  throw UnknownLabel("unknown coding kind");
}

IndexCoding IndexCoding::from_name(std::string_view name) {
  if (name == "two_qubit") return make(Coding::two_qubit);
  if (name == "spin_three_half") return make(Coding::spin_three_half);
  if (name == "triplet_singlet") return make(Coding::triplet_singlet);
  throw UnknownLabel("unknown coding '" + std::string(name) + "'");
}

std::string_view IndexCoding::name() const {
  switch (kind) {
    case Coding::two_qubit:
      return "two_qubit";
    case Coding::spin_three_half:
      return "spin_three_half";
    case Coding::triplet_singlet:
      return "triplet_singlet";
  }
  return "unknown";
}

const std::string& IndexCoding::label(int flat) const {
  if (flat < 0 || flat >= 4) throw BadLabels("flat index out of range");
  return labels[static_cast<std::size_t>(flat)];
}

int IndexCoding::flat_index(std::string_view label) const {
  for (int k = 0; k < 4; ++k) {
    if (labels[static_cast<std::size_t>(k)] == label) return k;
  }
  throw BadLabels("label '" + std::string(label) + "' not in coding " + std::string(name()));
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(static_cast<std::size_t>(n));
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<Permutation> out;
  Permutation p = identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  return out;
}

}  // namespace entroq
