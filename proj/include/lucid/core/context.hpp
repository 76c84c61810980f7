#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lucid {

// Index along one dimension. Arithmetic is overflow-checked: a result that
// does not fit in 64 bits raises TagOverflow.
struct Tag {
  std::int64_t value = 0;

  constexpr Tag() = default;
  constexpr explicit Tag(std::int64_t v) : value(v) {}

  friend constexpr auto operator<=>(Tag, Tag) = default;

  friend Tag operator+(Tag a, Tag b);
  friend Tag operator-(Tag a, Tag b);
  friend Tag operator*(Tag a, Tag b);
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// The point of evaluation: a finite map from dimension name to tag. Bindings
// are kept sorted by dimension name, so two contexts with the same bindings
// compare and hash equal regardless of how they were built.
class Context {
 public:
  using Binding = std::pair<std::string, Tag>;

  Context() = default;
  Context(std::initializer_list<Binding> bindings);

  // Functional update: a copy with `dim` bound to `tag`.
  [[nodiscard]] Context override(std::string_view dim, Tag tag) const;

  // Throws UnboundDimension when `dim` has no binding.
  Tag query(std::string_view dim) const;

  bool has(std::string_view dim) const;
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::vector<Binding>& bindings() const { return bindings_; }

  std::size_t hash() const;
  std::string str() const;  // {d:2, e:0}

  friend bool operator==(const Context&, const Context&) = default;

 private:
  std::vector<Binding> bindings_;
};

struct ContextHash {
  std::size_t operator()(const Context& c) const { return c.hash(); }
};

}  // namespace lucid
