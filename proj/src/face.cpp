#include "repbox/face.hpp"

#include <algorithm>
#include <sstream>

namespace repbox {

Face::Face(std::initializer_list<Label> labels) : Face(std::vector<Label>(labels)) {}

Face::Face(std::vector<Label> labels) : members_(std::move(labels)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Face::contains(Label v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

Face face_union(const Face& a, const Face& b) {
  std::vector<Label> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Face(std::move(out));
}

Face face_intersection(const Face& a, const Face& b) {
  std::vector<Label> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Face(std::move(out));
}

Face face_difference(const Face& a, const Face& b) {
  std::vector<Label> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Face(std::move(out));
}

std::string to_string(const Face& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Face& f) {
  os << '{';
  bool first = true;
  for (Label v : f) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

void canonicalize(std::vector<Face>& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::vector<Face> minimal_elements(std::vector<Face> family) {
  canonicalize(family);
  std::vector<Face> out;
  for (const Face& f : family) {
    bool dominated = std::any_of(family.begin(), family.end(), [&](const Face& g) {
      return g != f && g.is_subset_of(f);
    });
    if (!dominated) out.push_back(f);
  }
  return out;
}

std::vector<Face> maximal_elements(std::vector<Face> family) {
  canonicalize(family);
  std::vector<Face> out;
  for (const Face& f : family) {
    bool dominated = std::any_of(family.begin(), family.end(), [&](const Face& g) {
      return g != f && f.is_subset_of(g);
    });
    if (!dominated) out.push_back(f);
  }
  return out;
}

bool is_antichain(std::span<const Face> family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j)
      if (i != j && family[i].is_subset_of(family[j])) return false;
  return true;
}

std::vector<Label> label_range(Label first, Label last) {
  std::vector<Label> out;
  for (Label v = first; v <= last; ++v) out.push_back(v);
  return out;
}

}  // namespace repbox
