#include "lucid/core/context.hpp"

#include <algorithm>
#include <functional>

#include "lucid/core/error.hpp"

namespace lucid {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    fail(ErrorCode::TagOverflow, std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    fail(ErrorCode::TagOverflow, std::to_string(a) + " - " + std::to_string(b));
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    fail(ErrorCode::TagOverflow, std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

Tag operator+(Tag a, Tag b) { return Tag{checked_add(a.value, b.value)}; }
Tag operator-(Tag a, Tag b) { return Tag{checked_sub(a.value, b.value)}; }
Tag operator*(Tag a, Tag b) { return Tag{checked_mul(a.value, b.value)}; }

Context::Context(std::initializer_list<Binding> bindings) {
  for (const auto& [dim, tag] : bindings) *this = override(dim, tag);
}

Context Context::override(std::string_view dim, Tag tag) const {
  Context out;
  out.bindings_.reserve(bindings_.size() + 1);
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), dim,
                             [](const Binding& b, std::string_view d) { return b.first < d; });
  out.bindings_.assign(bindings_.begin(), it);
  out.bindings_.emplace_back(std::string(dim), tag);
  if (it != bindings_.end() && it->first == dim) ++it;
  out.bindings_.insert(out.bindings_.end(), it, bindings_.end());
  return out;
}

Tag Context::query(std::string_view dim) const {
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), dim,
                             [](const Binding& b, std::string_view d) { return b.first < d; });
  if (it == bindings_.end() || it->first != dim) {
    fail(ErrorCode::UnboundDimension, std::string(dim));
  }
  return it->second;
}

bool Context::has(std::string_view dim) const {
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), dim,
                             [](const Binding& b, std::string_view d) { return b.first < d; });
  return it != bindings_.end() && it->first == dim;
}

std::size_t Context::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [dim, tag] : bindings_) {
    h ^= std::hash<std::string>{}(dim) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::int64_t>{}(tag.value) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Context::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [dim, tag] : bindings_) {
    if (!first) out += ", ";
    first = false;
    out += dim + ":" + std::to_string(tag.value);
  }
  return out + "}";
}

}  // namespace lucid
