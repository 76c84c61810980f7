#include "lucid/eduction/socket_cp.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "lucid/core/error.hpp"
#include "lucid/semantics/codec.hpp"

namespace lucid {

namespace {

constexpr std::uint32_t kMaxFrame = 64u << 20;

[[noreturn]] void comm_fail(std::string_view phase, const std::string& cause) {
  fail(ErrorCode::CommunicationError, std::string(phase) + ": " + cause);
}

std::string errno_text() { return std::strerror(errno); }

bool write_all(int fd, const char* data, std::size_t n) {
  while (n > 0) {
    ssize_t w = ::send(fd, data, n, MSG_NOSIGNAL);
    if (w < 0 && errno == EINTR) continue;
    if (w <= 0) return false;
    data += w;
    n -= static_cast<std::size_t>(w);
  }
  return true;
}

bool read_all(int fd, char* data, std::size_t n) {
  while (n > 0) {
    ssize_t r = ::recv(fd, data, n, 0);
    if (r < 0 && errno == EINTR) continue;
    if (r <= 0) return false;
    data += r;
    n -= static_cast<std::size_t>(r);
  }
  return true;
}

bool send_frame(int fd, const std::string& payload) {
  std::uint32_t len = htonl(static_cast<std::uint32_t>(payload.size()));
  char header[4];
  std::memcpy(header, &len, 4);
  return write_all(fd, header, 4) && write_all(fd, payload.data(), payload.size());
}

// nullopt on a closed or broken connection.
std::optional<std::string> recv_frame(int fd) {
  char header[4];
  if (!read_all(fd, header, 4)) return std::nullopt;
  std::uint32_t len;
  std::memcpy(&len, header, 4);
  len = ntohl(len);
  if (len > kMaxFrame) return std::nullopt;
  std::string payload(len, '\0');
  if (!read_all(fd, payload.data(), len)) return std::nullopt;
  return payload;
}

int connect_loopback(std::uint16_t port, std::chrono::milliseconds timeout) {
  int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) comm_fail("open", errno_text());
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  if (::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) {
    int err = errno;
    ::close(fd);
    errno = err;
    return -1;
  }
  timeval tv{};
  tv.tv_sec = static_cast<long>(timeout.count() / 1000);
  tv.tv_usec = static_cast<long>((timeout.count() % 1000) * 1000);
  ::setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
  int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
  return fd;
}

std::string response_for(const HostRegistry& registry, std::string_view payload) {
  Json resp;
  std::uint64_t id = 0;
  try {
    Demand dm = decode_request(payload);
    id = dm.id;
    FunctionalResult r = execute_functional(registry, dm);
    resp = {{"demandId", id}, {"status", "ok"}, {"value", encode_value(r.value)}, {"output", r.output}};
  } catch (const Error& e) {
    resp = {{"demandId", id}, {"status", "error"}, {"code", to_string(e.code())}, {"message", e.message()}};
  } catch (const std::exception& e) {
    resp = {{"demandId", id}, {"status", "error"}, {"code", "HostError"}, {"message", e.what()}};
  }
  return resp.dump();
}

}  // namespace

std::string encode_request(const Demand& dm) {
  Json args = Json::array();
  for (const auto& a : dm.args) args.push_back(encode_value(a));
  Json j = {{"demandId", dm.id}, {"stName", dm.name}, {"args", args}, {"context", encode_context(dm.context)}};
  return j.dump();
}

Demand decode_request(std::string_view payload) {
  Json j;
  try {
    j = Json::parse(payload);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::FormatError, std::string("request: ") + e.what());
  }
  if (!j.is_object() || !j.contains("demandId") || !j.contains("stName") || !j.contains("args") ||
      !j.contains("context") || !j["args"].is_array() || !j["stName"].is_string() ||
      !j["demandId"].is_number_unsigned()) {
    fail(ErrorCode::FormatError, "request: missing or malformed fields");
  }
  Demand dm;
  dm.kind = Demand::Kind::Functional;
  dm.id = j["demandId"].get<std::uint64_t>();
  dm.name = j["stName"].get<std::string>();
  for (const auto& a : j["args"]) dm.args.push_back(decode_value(a));
  dm.context = decode_context(j["context"]);
  return dm;
}

WorkerServer::WorkerServer(std::shared_ptr<const HostRegistry> registry) : registry_(std::move(registry)) {
  listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (listen_fd_ < 0) comm_fail("open", errno_text());
  int one = 1;
  ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = 0;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  socklen_t len = sizeof addr;
  if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 || ::listen(listen_fd_, 16) != 0 ||
      ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len) != 0) {
    std::string cause = errno_text();
    ::close(listen_fd_);
    comm_fail("open", cause);
  }
  port_ = ntohs(addr.sin_port);
  acceptor_ = std::thread([this] { accept_loop(); });
}

WorkerServer::~WorkerServer() { stop(); }

void WorkerServer::stop() {
  if (stopping_.exchange(true)) return;
  ::shutdown(listen_fd_, SHUT_RDWR);
  ::close(listen_fd_);
  {
    std::lock_guard lock(mu_);
    for (int fd : conns_) ::shutdown(fd, SHUT_RDWR);
  }
  if (acceptor_.joinable()) acceptor_.join();
  std::vector<std::thread> threads;
  {
    std::lock_guard lock(mu_);
    threads.swap(threads_);
  }
  for (auto& t : threads) t.join();
}

void WorkerServer::accept_loop() {
  while (!stopping_) {
    int fd = ::accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) {
      if (errno == EINTR) continue;
      return;
    }
    std::lock_guard lock(mu_);
    if (stopping_) {
      ::close(fd);
      return;
    }
    conns_.push_back(fd);
    threads_.emplace_back([this, fd] { serve(fd); });
  }
}

void WorkerServer::serve(int fd) {
  while (!stopping_) {
    auto payload = recv_frame(fd);
    if (!payload) break;
    std::string resp = response_for(*registry_, *payload);
    ++served_;
    if (!send_frame(fd, resp)) break;
  }
  std::lock_guard lock(mu_);
  std::erase(conns_, fd);
  ::close(fd);
}

std::shared_ptr<SocketCP> SocketCP::spawn(std::shared_ptr<const HostRegistry> registry, unsigned workers,
                                          SocketOptions opts) {
  std::vector<std::shared_ptr<WorkerServer>> servers;
  std::vector<std::uint16_t> ports;
  for (unsigned i = 0; i < std::max(1u, workers); ++i) {
    servers.push_back(std::make_shared<WorkerServer>(registry));
    ports.push_back(servers.back()->port());
  }
  auto cp = connect(ports, opts);
  cp->servers_ = std::move(servers);
  return cp;
}

std::shared_ptr<SocketCP> SocketCP::connect(const std::vector<std::uint16_t>& ports, SocketOptions opts) {
  std::shared_ptr<SocketCP> cp(new SocketCP(opts));
  for (std::size_t i = 0; i < ports.size(); ++i) {
    auto w = std::make_unique<Worker>();
    w->id = "worker-" + std::to_string(i);
    w->port = ports[i];
    w->fd = connect_loopback(ports[i], opts.timeout);
    if (w->fd < 0) {
      comm_fail("open", (errno == ECONNREFUSED ? std::string("connection refused") : errno_text()) +
                            " (127.0.0.1:" + std::to_string(ports[i]) + ")");
    }
    cp->workers_.push_back(std::move(w));
  }
  if (cp->workers_.empty()) comm_fail("open", "no workers");
  return cp;
}

SocketCP::~SocketCP() {
  for (auto& w : workers_) {
    if (w->fd >= 0) ::close(w->fd);
  }
  for (auto& s : servers_) s->stop();
}

FunctionalResult SocketCP::attempt(Worker& w, const Demand& dm) {
  if (w.fd < 0) {
    w.fd = connect_loopback(w.port, opts_.timeout);
    if (w.fd < 0) comm_fail("open", errno == ECONNREFUSED ? "connection refused" : errno_text());
  }
  if (!send_frame(w.fd, encode_request(dm))) comm_fail("send", errno_text());
  auto payload = recv_frame(w.fd);
  if (!payload) comm_fail("receive", "connection closed");
  Json j;
  try {
    j = Json::parse(*payload);
  } catch (const nlohmann::json::exception&) {
    comm_fail("receive", "malformed response");
  }
  if (!j.is_object() || !j.contains("demandId") || j["demandId"] != dm.id) {
    comm_fail("receive", "response does not answer demand " + std::to_string(dm.id));
  }
  if (j.value("status", "") == "ok") {
    FunctionalResult r;
    r.value = decode_value(j.at("value"));
    r.output = j.value("output", std::vector<std::string>{});
    return r;
  }
  auto code = error_code_from(j.value("code", "HostError"));
  // A failure inside the host code is the program's, not the transport's.
  throw Error(code.value_or(ErrorCode::HostError), j.value("message", ""));
}

FunctionalResult SocketCP::execute(const Demand& dm) {
  std::string lastDead;
  for (std::size_t tried = 0; tried < workers_.size(); ++tried) {
    Worker& w = *workers_[next_++ % workers_.size()];
    std::lock_guard lock(w.mu);
    if (w.stat.liveness == Liveness::Dead) continue;
    for (int a = 0; a <= opts_.retries; ++a) {
      auto start = std::chrono::steady_clock::now();
      try {
        FunctionalResult r = attempt(w, dm);
        w.stat.liveness = Liveness::Alive;
        ++w.stat.demandsServed;
        w.stat.totalResponse += std::chrono::steady_clock::now() - start;
        return r;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CommunicationError) {
          ++w.stat.demandsServed;
          w.stat.totalResponse += std::chrono::steady_clock::now() - start;
          throw;
        }
        if (w.fd >= 0) ::close(w.fd);
        w.fd = -1;
        w.stat.liveness = Liveness::Unresponsive;
      }
    }
    w.stat.liveness = Liveness::Dead;
    lastDead = w.id;
  }
  fail(ErrorCode::WorkerDead, (lastDead.empty() ? std::string("all workers") : lastDead) +
                                  " stopped answering demand " + std::to_string(dm.id));
}

WorkerStats SocketCP::stats() const {
  WorkerStats out;
  for (const auto& w : workers_) {
    std::lock_guard lock(w->mu);
    out[w->id] = w->stat;
  }
  return out;
}

}  // namespace lucid
