#include "comaxg/permutation.hpp"

#include <sstream>

#include "comaxg/error.hpp"

namespace comaxg {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw BadParameter("permutation images are not a bijection");
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::uint32_t point : cycle) {
      if (point >= degree) {
        throw BadParameter("cycle point " + std::to_string(point) + " outside degree " +
                           std::to_string(degree));
      }
      if (used[point]) {
        throw BadParameter("point " + std::to_string(point) + " repeated in cycles");
      }
      used[point] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw BadParameter("permutation degrees differ");
  std::vector<std::uint32_t> images(degree());
  for (std::size_t i = 0; i < degree(); ++i) images[i] = next.images_[images_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> images(degree());
  for (std::size_t i = 0; i < degree(); ++i) images[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_even() const {
  std::vector<bool> visited(degree(), false);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < degree(); ++start) {
    if (visited[start]) continue;
    std::size_t length = 0;
    for (std::size_t p = start; !visited[p]; p = images_[p]) {
      visited[p] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> visited(degree(), false);
  bool any = false;
  for (std::size_t start = 0; start < degree(); ++start) {
    if (visited[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    bool first = true;
    for (std::size_t p = start; !visited[p]; p = images_[p]) {
      visited[p] = true;
      if (!first) out << ' ';
      out << p;
      first = false;
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

}  // namespace comaxg
