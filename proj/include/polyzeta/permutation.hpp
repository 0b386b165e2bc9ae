#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace polyzeta {

/// Permutation of {1,...,r} in one-line notation: images()[j-1] = σ(j).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t r);
  /// Accepts "id" (needs r) or comma-separated one-line images such as "2,1".
  static Permutation parse(std::string_view text, std::size_t r);
  /// Every permutation of {1,...,r} in lexicographic order.
  static std::vector<Permutation> all(std::size_t r);

  std::size_t size() const { return images_.size(); }
  int operator()(int j) const { return images_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  bool is_identity() const;

  /// "id" for the identity, one-line images otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace polyzeta
