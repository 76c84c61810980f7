#include "lucid/eduction/runner.hpp"

#include <pthread.h>

#include <exception>
#include <thread>

#include "lucid/eduction/socket_cp.hpp"

namespace lucid {

namespace {

struct StackJob {
  const std::function<void()>* fn;
  std::exception_ptr error;
};

void* stack_entry(void* arg) {
  auto* job = static_cast<StackJob*>(arg);
  try {
    (*job->fn)();
  } catch (...) {
    job->error = std::current_exception();
  }
  return nullptr;
}

AstResult run_one(const EductionProgram& prog, int index, Warehouse& wh, Dispatcher& dispatcher,
                  const RunOptions& opts) {
  AstResult r;
  r.astIndex = index;
  BufferIO io;
  Evaluator ev(prog, index, wh, dispatcher, io, {opts.depthLimit});
  try {
    run_on_large_stack([&] { r.value = ev.run(); });
  } catch (const Error& e) {
    r.error = e;
  } catch (const std::exception& e) {
    r.error = Error(ErrorCode::HostError, e.what());
  }
  r.output = io.take();
  r.ruleApplications = ev.rule_applications();
  return r;
}

}  // namespace

void run_on_large_stack(const std::function<void()>& fn, std::size_t bytes) {
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, bytes);
  StackJob job{&fn, nullptr};
  pthread_t th;
  int rc = pthread_create(&th, &attr, stack_entry, &job);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    fn();  // no thread to be had; use the current stack
    return;
  }
  pthread_join(th, nullptr);
  if (job.error) std::rethrow_exception(job.error);
}

std::shared_ptr<CommunicationProcedure> make_cp(CpKind kind, std::shared_ptr<const HostRegistry> registry,
                                                unsigned workers) {
  if (kind == CpKind::Socket) return SocketCP::spawn(std::move(registry), workers);
  return std::make_shared<NullCP>(std::move(registry));
}

bool RunReport::ok() const {
  for (const auto& r : results) {
    if (r.error) return false;
  }
  return true;
}

std::string RunReport::text() const {
  std::string out;
  for (const auto& r : results) {
    for (const auto& line : r.output) out += line + "\n";
    out += std::to_string(r.astIndex) + ": ";
    if (r.error) {
      out += "error: " + std::string(r.error->what());
    } else {
      out += r.value->render();
    }
    out += "\n";
  }
  return out;
}

RunReport run(const EductionProgram& prog, const RunOptions& opts) {
  Warehouse wh(opts.warehouseCapacity);
  auto cp = make_cp(opts.cpKind.value_or(prog.cpKind), prog.registry, opts.socketWorkers);
  return run(prog, wh, cp, opts);
}

RunReport run(const EductionProgram& prog, Warehouse& wh, std::shared_ptr<CommunicationProcedure> cp,
              const RunOptions& opts) {
  Dispatcher dispatcher(cp);
  RunReport report;
  const int n = static_cast<int>(prog.asts.size());
  report.results.resize(static_cast<std::size_t>(n));
  if (opts.concurrent && n > 1) {
    std::vector<std::thread> threads;
    for (int i = 0; i < n; ++i) {
      threads.emplace_back([&, i] { report.results[static_cast<std::size_t>(i)] = run_one(prog, i, wh, dispatcher, opts); });
    }
    for (auto& t : threads) t.join();
  } else {
    for (int i = 0; i < n; ++i) report.results[static_cast<std::size_t>(i)] = run_one(prog, i, wh, dispatcher, opts);
  }
  for (const auto& r : report.results) report.ruleApplications += r.ruleApplications;
  report.warehouse = wh.stats();
  report.workers = cp->stats();
  return report;
}

}  // namespace lucid
