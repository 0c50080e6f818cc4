#include "cwsphere/subset.hpp"

namespace cwsphere {

Subset Subset::of(std::initializer_list<int> elements) {
  std::uint32_t bits = 0;
  for (int i : elements) bits |= 1u << (i - 1);
  return Subset(bits);
}

Subset Subset::of(const std::vector<int>& elements) {
  std::uint32_t bits = 0;
  for (int i : elements) bits |= 1u << (i - 1);
  return Subset(bits);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for_each_element(*this, [&](int i) { out.push_back(i); });
  return out;
}

std::string Subset::to_string() const {
  std::string s = "{";
  bool first_elem = true;
  for_each_element(*this, [&](int i) {
    if (!first_elem) s += ',';
    s += std::to_string(i);
    first_elem = false;
  });
  s += '}';
  return s;
}

}  // namespace cwsphere
