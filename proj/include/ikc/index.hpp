#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace ikc {

// A finite sequence of naturals. Terms and types carry one as their degree.
class Index {
 public:
  using value_type = std::uint32_t;

  Index() = default;
  Index(std::initializer_list<value_type> xs) : v_(xs) {}
  explicit Index(std::vector<value_type> xs) : v_(std::move(xs)) {}

  const std::vector<value_type>& entries() const { return v_; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  value_type front() const { return v_.front(); }
  value_type operator[](std::size_t i) const { return v_[i]; }

  // i :: this
  Index cons(value_type i) const;
  // this with the first n entries removed
  Index drop(std::size_t n) const;
  Index take(std::size_t n) const;

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  std::vector<value_type> v_;
};

Index concat(const Index& l, const Index& k);
// l ⪯ k: k = l :: r for some r
bool prefix_leq(const Index& l, const Index& k);
std::string to_string(const Index& l);

struct IndexHash {
  std::size_t operator()(const Index& l) const;
};

}  // namespace ikc
