#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lucid/core/context.hpp"
#include "lucid/core/value.hpp"
#include "lucid/host/registry.hpp"

namespace lucid {

struct Demand {
  enum class Kind { Intensional, Functional };
  Kind kind = Kind::Functional;
  // Intensional: the identifier. Functional: the stRef name, `Class.method`
  // for a method (receiver first among the args) or `Class` for a
  // constructor.
  std::string name;
  std::vector<Value> args;
  Context context;
  std::uint64_t id = 0;
};

struct FunctionalResult {
  Value value;
  std::vector<std::string> output;  // lines the host code printed
};

// The worker side of a functional demand: runs it against the registry.
FunctionalResult execute_functional(const HostRegistry& registry, const Demand& dm);

enum class Liveness { Alive, Unresponsive, Dead };
std::string_view to_string(Liveness l);

struct WorkerStat {
  Liveness liveness = Liveness::Alive;
  std::uint64_t demandsServed = 0;
  std::chrono::nanoseconds totalResponse{0};

  double mean_response_ms() const;
};

using WorkerStats = std::map<std::string, WorkerStat>;

// Carries a functional demand to some worker and its result back.
class CommunicationProcedure {
 public:
  virtual ~CommunicationProcedure() = default;
  virtual std::string name() const = 0;
  virtual FunctionalResult execute(const Demand& dm) = 0;
  virtual WorkerStats stats() const = 0;
};

// Runs demands in the calling thread.
class NullCP : public CommunicationProcedure {
 public:
  explicit NullCP(std::shared_ptr<const HostRegistry> registry) : registry_(std::move(registry)) {}

  std::string name() const override { return "null"; }
  FunctionalResult execute(const Demand& dm) override;
  WorkerStats stats() const override;

 private:
  std::shared_ptr<const HostRegistry> registry_;
  mutable std::mutex mu_;
  WorkerStat stat_;
};

// Numbers demands, keeps each in the pending queue until it has been
// computed, and hands it to the communication procedure.
class Dispatcher {
 public:
  explicit Dispatcher(std::shared_ptr<CommunicationProcedure> cp) : cp_(std::move(cp)) {}

  FunctionalResult dispatch(Demand dm);
  std::uint64_t next_id() { return ++seq_; }

  std::size_t pending() const;
  std::vector<Demand> pending_demands() const;
  std::uint64_t dispatched() const { return dispatched_; }
  CommunicationProcedure& cp() { return *cp_; }

 private:
  std::shared_ptr<CommunicationProcedure> cp_;
  std::atomic<std::uint64_t> seq_{0};
  std::atomic<std::uint64_t> dispatched_{0};
  mutable std::mutex mu_;
  std::map<std::uint64_t, Demand> pending_;
};

}  // namespace lucid
