#include "polyzeta/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "polyzeta/error.hpp"

namespace polyzeta {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
      fail(ErrorKind::InvalidSpec, "not a permutation: " + to_string());
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t r) {
  std::vector<int> v(r);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text, std::size_t r) {
  if (text == "id") return identity(r);
  std::vector<int> v;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidSpec, "malformed permutation '" + std::string(text) + "'");
    }
  }
  if (v.size() != r)
    fail(ErrorKind::InvalidSpec, "permutation '" + std::string(text) + "' has wrong length");
  return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(std::size_t r) {
  std::vector<int> v(r);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) inv[images_[j] - 1] = static_cast<int>(j + 1);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (images_[j] != static_cast<int>(j + 1)) return false;
  return true;
}

std::string Permutation::to_string() const {
  if (!images_.empty() && is_identity()) return "id";
  std::string s;
  for (std::size_t j = 0; j < images_.size(); ++j)
    s += (j ? "," : "") + std::to_string(images_[j]);
  return s;
}

}  // namespace polyzeta
