#include "lucid/eduction/warehouse.hpp"

#include <algorithm>

namespace lucid {

std::size_t Warehouse::KeyHash::operator()(const Key& k) const {
  return std::hash<std::string>{}(k.id) * 31 + k.ctx.hash();
}

std::optional<Value> Warehouse::get(const std::string& id, const Context& ctx) {
  std::lock_guard lock(mu_);
  auto it = map_.find(Key{id, ctx});
  if (it == map_.end()) {
    ++stats_.misses;
    return std::nullopt;
  }
  ++stats_.hits;
  order_.splice(order_.begin(), order_, it->second.pos);
  return it->second.value;
}

void Warehouse::put(const std::string& id, const Context& ctx, Value v) {
  std::lock_guard lock(mu_);
  if (capacity_ == 0) return;
  ++stats_.puts;
  Key key{id, ctx};
  if (auto it = map_.find(key); it != map_.end()) {
    it->second.value = std::move(v);
    order_.splice(order_.begin(), order_, it->second.pos);
    return;
  }
  order_.push_front(key);
  map_.emplace(std::move(key), Slot{std::move(v), order_.begin()});
  gc_locked();
}

bool Warehouse::contains(const std::string& id, const Context& ctx) const {
  std::lock_guard lock(mu_);
  return map_.count(Key{id, ctx}) > 0;
}

std::size_t Warehouse::gc_locked() {
  std::size_t evicted = 0;
  while (map_.size() > capacity_) {
    map_.erase(order_.back());
    order_.pop_back();
    ++evicted;
  }
  stats_.evictions += evicted;
  return evicted;
}

std::size_t Warehouse::gc() {
  std::lock_guard lock(mu_);
  return gc_locked();
}

std::size_t Warehouse::evict_all() {
  std::lock_guard lock(mu_);
  std::size_t n = map_.size();
  map_.clear();
  order_.clear();
  stats_.evictions += n;
  return n;
}

void Warehouse::set_capacity(std::size_t capacity) {
  std::lock_guard lock(mu_);
  capacity_ = capacity;
}

std::size_t Warehouse::capacity() const {
  std::lock_guard lock(mu_);
  return capacity_;
}

std::size_t Warehouse::size() const {
  std::lock_guard lock(mu_);
  return map_.size();
}

WarehouseStats Warehouse::stats() const {
  std::lock_guard lock(mu_);
  return stats_;
}

std::vector<std::pair<std::string, std::string>> Warehouse::keys() const {
  std::lock_guard lock(mu_);
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [k, _] : map_) out.emplace_back(k.id, k.ctx.str());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lucid
