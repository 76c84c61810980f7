#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "lucid/eduction/dispatch.hpp"

namespace lucid {

// Frames on the wire: a 4-byte big-endian payload length, then a JSON
// payload. Requests are {demandId, stName, args, context}; responses are
// {demandId, status: "ok", value, output} or {demandId, status: "error",
// code, message}.
std::string encode_request(const Demand& dm);
Demand decode_request(std::string_view payload);

// A worker listening on a loopback port, executing each functional demand
// it receives against its registry.
class WorkerServer {
 public:
  explicit WorkerServer(std::shared_ptr<const HostRegistry> registry);
  ~WorkerServer();
  WorkerServer(const WorkerServer&) = delete;
  WorkerServer& operator=(const WorkerServer&) = delete;

  std::uint16_t port() const { return port_; }
  std::uint64_t served() const { return served_; }
  void stop();

 private:
  void accept_loop();
  void serve(int fd);

  std::shared_ptr<const HostRegistry> registry_;
  int listen_fd_ = -1;
  std::uint16_t port_ = 0;
  std::atomic<bool> stopping_{false};
  std::atomic<std::uint64_t> served_{0};
  std::thread acceptor_;
  std::mutex mu_;
  std::vector<int> conns_;
  std::vector<std::thread> threads_;
};

struct SocketOptions {
  int retries = 2;  // extra attempts on one worker before it is declared dead
  std::chrono::milliseconds timeout{10000};
};

// Sends functional demands round-robin to loopback workers. A worker that
// fails `retries + 1` times in a row is dead and its demand moves to the
// next live worker; WorkerDead when none is left.
class SocketCP : public CommunicationProcedure {
 public:
  // Starts `workers` in-process servers and connects to them.
  static std::shared_ptr<SocketCP> spawn(std::shared_ptr<const HostRegistry> registry, unsigned workers = 2,
                                         SocketOptions opts = {});
  // Connects to servers already listening. CommunicationError(open) when a
  // port refuses.
  static std::shared_ptr<SocketCP> connect(const std::vector<std::uint16_t>& ports, SocketOptions opts = {});

  ~SocketCP() override;

  std::string name() const override { return "socket"; }
  FunctionalResult execute(const Demand& dm) override;
  WorkerStats stats() const override;

  // The servers started by spawn(), for tests that kill one.
  std::vector<std::shared_ptr<WorkerServer>>& servers() { return servers_; }

 private:
  struct Worker {
    std::string id;
    std::uint16_t port = 0;
    int fd = -1;
    std::mutex mu;
    WorkerStat stat;
  };

  explicit SocketCP(SocketOptions opts) : opts_(opts) {}
  FunctionalResult attempt(Worker& w, const Demand& dm);

  SocketOptions opts_;
  std::vector<std::shared_ptr<WorkerServer>> servers_;
  std::vector<std::unique_ptr<Worker>> workers_;
  std::atomic<std::size_t> next_{0};
};

}  // namespace lucid
