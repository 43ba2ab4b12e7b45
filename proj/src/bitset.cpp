#include "ucc/bitset.hpp"

#include "ucc/error.hpp"

namespace ucc {

std::string_view toString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ConstraintConflict: return "ConstraintConflict";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::EmptyMemberSet: return "EmptyMemberSet";
    case ErrorKind::IsolatedVertexPresent: return "IsolatedVertexPresent";
    case ErrorKind::Overlap: return "Overlap";
    case ErrorKind::Undercover: return "Undercover";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::CommonSetTooLarge: return "CommonSetTooLarge";
    case ErrorKind::NotTwoLayered: return "NotTwoLayered";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Bitset::Bitset(std::size_t width) : width_(static_cast<std::uint32_t>(width)) {
  if (width > kMaxBits)
    throw Error(ErrorKind::CapacityExceeded,
                "bitset width " + std::to_string(width) + " exceeds " + std::to_string(kMaxBits));
}

Bitset Bitset::full(std::size_t width) {
  Bitset b(width);
  std::size_t w = 0;
  for (; (w + 1) * kWordBits <= width; ++w) b.words_[w] = ~std::uint64_t{0};
  if (std::size_t rest = width % kWordBits; rest != 0) b.words_[w] = (std::uint64_t{1} << rest) - 1;
  return b;
}

Bitset Bitset::fromIndices(std::size_t width, const std::vector<std::size_t>& indices) {
  Bitset b(width);
  for (auto i : indices) {
    if (i >= width)
      throw Error(ErrorKind::IndexOutOfRange,
                  "index " + std::to_string(i) + " outside width " + std::to_string(width));
    b.set(i);
  }
  return b;
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  forEach([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::string Bitset::toString() const {
  std::string s = "{";
  bool firstItem = true;
  forEach([&](std::size_t i) {
    if (!firstItem) s += ',';
    s += std::to_string(i);
    firstItem = false;
  });
  return s + "}";
}

std::size_t Bitset::hash() const {
  // splitmix-style finalizer over the words
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ width_;
  for (std::size_t w = 0; w < usedWords(); ++w) {
    std::uint64_t z = words_[w] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace ucc
