#include "ikc/index.hpp"

#include <algorithm>

namespace ikc {

Index Index::cons(value_type i) const {
  std::vector<value_type> out;
  out.reserve(v_.size() + 1);
  out.push_back(i);
  out.insert(out.end(), v_.begin(), v_.end());
  return Index(std::move(out));
}

Index Index::drop(std::size_t n) const {
  if (n >= v_.size()) return Index();
  return Index(std::vector<value_type>(v_.begin() + n, v_.end()));
}

Index Index::take(std::size_t n) const {
  n = std::min(n, v_.size());
  return Index(std::vector<value_type>(v_.begin(), v_.begin() + n));
}

Index concat(const Index& l, const Index& k) {
  std::vector<Index::value_type> out(l.entries());
  out.insert(out.end(), k.entries().begin(), k.entries().end());
  return Index(std::move(out));
}

bool prefix_leq(const Index& l, const Index& k) {
  if (l.size() > k.size()) return false;
  return std::equal(l.entries().begin(), l.entries().end(), k.entries().begin());
}

std::string to_string(const Index& l) {
  std::string s = "[";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(l[i]);
  }
  return s + "]";
}

std::size_t IndexHash::operator()(const Index& l) const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ l.size();
  for (auto x : l.entries()) h = (h ^ x) * 0x100000001b3ull;
  return h;
}

}  // namespace ikc
