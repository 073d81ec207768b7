#include "gemkit/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gemkit {

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

CyclicPermutation CyclicPermutation::canonical(std::vector<Color> sequence) {
  const int d = static_cast<int>(sequence.size()) - 1;
  if (d < 1) throw GemError(Errc::InvalidDimension, "cyclic permutation needs at least 2 colors");
  std::vector<Color> sorted = sequence;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i <= d; ++i) {
    if (sorted[i] != i) throw GemError(Errc::InvalidColor, "sequence is not a permutation of 0..d");
  }
  const auto pos = std::find(sequence.begin(), sequence.end(), d);
  std::rotate(sequence.begin(), pos + 1, sequence.end());
  if (d >= 2 && sequence.front() > sequence[d - 1]) {
    std::reverse(sequence.begin(), sequence.begin() + d);
  }
  CyclicPermutation out;
  out.order_ = std::move(sequence);
  return out;
}

Color CyclicPermutation::at(long long i) const {
  const auto n = static_cast<long long>(order_.size());
  return order_[static_cast<std::size_t>(((i % n) + n) % n)];
}

std::string CyclicPermutation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) os << ',';
    os << order_[i];
  }
  os << ')';
  return os.str();
}

std::vector<CyclicPermutation> enumerate_cyclic_permutations(int d) {
  if (d < 1) throw GemError(Errc::InvalidDimension, "dimension " + std::to_string(d));
  std::vector<Color> head(static_cast<std::size_t>(d));
  std::iota(head.begin(), head.end(), 0);
  std::vector<CyclicPermutation> out;
  do {
    if (d >= 2 && head.front() > head.back()) continue;
    std::vector<Color> seq = head;
    seq.push_back(d);
    out.push_back(CyclicPermutation::canonical(std::move(seq)));
  } while (std::next_permutation(head.begin(), head.end()));
  return out;
}

}  // namespace gemkit
