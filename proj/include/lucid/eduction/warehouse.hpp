#pragma once

#include <cstdint>
#include <limits>
#include <list>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lucid/core/context.hpp"
#include "lucid/core/value.hpp"

namespace lucid {

struct WarehouseStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t puts = 0;
  std::uint64_t evictions = 0;

  friend bool operator==(const WarehouseStats&, const WarehouseStats&) = default;
};

// Values of computed demands keyed by (identifier, context), evicted in
// least-recently-used order once more than `capacity` are held. Capacity 0
// turns the cache off. Safe for concurrent use.
class Warehouse {
 public:
  static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

  explicit Warehouse(std::size_t capacity = kUnbounded) : capacity_(capacity) {}

  std::optional<Value> get(const std::string& id, const Context& ctx);
  void put(const std::string& id, const Context& ctx, Value v);
  bool contains(const std::string& id, const Context& ctx) const;

  // Evicts least-recently-used entries until at most `capacity` remain.
  std::size_t gc();
  std::size_t evict_all();

  void set_capacity(std::size_t capacity);
  std::size_t capacity() const;
  std::size_t size() const;
  WarehouseStats stats() const;

  // Every key held, sorted; for comparing the contents of two warehouses.
  std::vector<std::pair<std::string, std::string>> keys() const;

 private:
  struct Key {
    std::string id;
    Context ctx;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  using Order = std::list<Key>;
  struct Slot {
    Value value;
    Order::iterator pos;
  };

  std::size_t gc_locked();

  mutable std::mutex mu_;
  std::size_t capacity_;
  Order order_;  // most recently used first
  std::unordered_map<Key, Slot, KeyHash> map_;
  WarehouseStats stats_;
};

}  // namespace lucid
