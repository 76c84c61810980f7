#include "lucid/eduction/dispatch.hpp"

#include "lucid/core/error.hpp"

namespace lucid {

FunctionalResult execute_functional(const HostRegistry& registry, const Demand& dm) {
  BufferIO io;
  FunctionalResult out;
  if (auto dot = dm.name.find('.'); dot != std::string::npos) {
    if (dm.args.empty()) fail(ErrorCode::ArityMismatch, dm.name + " needs a receiver");
    std::vector<Value> rest(dm.args.begin() + 1, dm.args.end());
    out.value = registry.method_call(dm.args[0], dm.name.substr(dot + 1), rest, io, &dm.context).first;
  } else if (registry.is_record(dm.name)) {
    out.value = registry.construct(dm.name, dm.args, io, &dm.context);
  } else {
    out.value = registry.call(dm.name, dm.args, io, &dm.context);
  }
  out.output = io.take();
  return out;
}

std::string_view to_string(Liveness l) {
  switch (l) {
    case Liveness::Alive: return "alive";
    case Liveness::Unresponsive: return "unresponsive";
    case Liveness::Dead: return "dead";
  }
  return "?";
}

double WorkerStat::mean_response_ms() const {
  if (demandsServed == 0) return 0.0;
  return std::chrono::duration<double, std::milli>(totalResponse).count() / static_cast<double>(demandsServed);
}

FunctionalResult NullCP::execute(const Demand& dm) {
  auto start = std::chrono::steady_clock::now();
  FunctionalResult r = execute_functional(*registry_, dm);
  std::lock_guard lock(mu_);
  ++stat_.demandsServed;
  stat_.totalResponse += std::chrono::steady_clock::now() - start;
  return r;
}

WorkerStats NullCP::stats() const {
  std::lock_guard lock(mu_);
  return {{"local", stat_}};
}

FunctionalResult Dispatcher::dispatch(Demand dm) {
  if (dm.id == 0) dm.id = next_id();
  {
    std::lock_guard lock(mu_);
    pending_.emplace(dm.id, dm);
  }
  FunctionalResult r = cp_->execute(dm);
  std::lock_guard lock(mu_);
  pending_.erase(dm.id);
  ++dispatched_;
  return r;
}

std::size_t Dispatcher::pending() const {
  std::lock_guard lock(mu_);
  return pending_.size();
}

std::vector<Demand> Dispatcher::pending_demands() const {
  std::lock_guard lock(mu_);
  std::vector<Demand> out;
  for (const auto& [_, d] : pending_) out.push_back(d);
  return out;
}

}  // namespace lucid
