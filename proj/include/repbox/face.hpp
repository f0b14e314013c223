#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace repbox {

using Label = int;

/// A finite set of vertex labels kept in sorted order without duplicates.
/// The default-constructed face is the empty face.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<Label> labels);
  explicit Face(std::vector<Label> labels);

  [[nodiscard]] std::span<const Label> members() const { return members_; }
  [[nodiscard]] const std::vector<Label>& labels() const { return members_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] bool contains(Label v) const;
  [[nodiscard]] bool is_subset_of(const Face& other) const;

  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }

  /// Lexicographic order on the sorted label sequences.
  friend std::strong_ordering operator<=>(const Face& a, const Face& b) = default;
  friend bool operator==(const Face& a, const Face& b) = default;

 private:
  std::vector<Label> members_;
};

[[nodiscard]] Face face_union(const Face& a, const Face& b);
[[nodiscard]] Face face_intersection(const Face& a, const Face& b);
[[nodiscard]] Face face_difference(const Face& a, const Face& b);

/// "{1,2,3}"
[[nodiscard]] std::string to_string(const Face& f);
std::ostream& operator<<(std::ostream& os, const Face& f);

/// Sorts a family canonically and removes duplicates.
void canonicalize(std::vector<Face>& family);

/// Inclusion-minimal members of a family, in canonical order.
[[nodiscard]] std::vector<Face> minimal_elements(std::vector<Face> family);

/// Inclusion-maximal members of a family, in canonical order.
[[nodiscard]] std::vector<Face> maximal_elements(std::vector<Face> family);

[[nodiscard]] bool is_antichain(std::span<const Face> family);

/// Labels first..last inclusive, as a sorted vertex list.
[[nodiscard]] std::vector<Label> label_range(Label first, Label last);

}  // namespace repbox
