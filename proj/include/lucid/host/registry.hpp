#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "lucid/core/context.hpp"
#include "lucid/core/types.hpp"
#include "lucid/core/value.hpp"
#include "lucid/host/format_tag.hpp"

namespace lucid {

// Where host code writes its output lines.
class HostIO {
 public:
  virtual ~HostIO() = default;
  virtual void print(std::string_view line) = 0;
};

// Collects lines in memory. Safe to share between threads.
class BufferIO : public HostIO {
 public:
  void print(std::string_view line) override;
  std::vector<std::string> take();
  std::vector<std::string> lines() const;

 private:
  mutable std::mutex mu_;
  std::vector<std::string> lines_;
};

using HostBody = std::function<Value(std::span<const Value> args, HostIO& io)>;

struct HostFunction {
  std::string name;
  std::vector<HostType> params;
  HostType ret;
  bool immutable = false;
  HostBody body;
  FormatTag tag = FormatTag::native();

  std::string signature() const;  // (int,int)->int
};

// A method receives the receiver record and returns its result together
// with the receiver as it is after the call.
using MethodBody =
    std::function<std::pair<Value, Value>(const Value& self, std::span<const Value> args, HostIO& io)>;

struct HostMethod {
  std::string name;
  std::vector<HostType> params;
  HostType ret;
  bool immutable = false;
  MethodBody body;

  std::string signature() const;
};

struct HostRecordType {
  std::string className;
  std::vector<std::pair<std::string, HostType>> fields;  // declaration order
  std::map<std::string, HostMethod> methods;
  std::vector<HostType> ctorParams;
  HostBody ctor;
  bool ctorImmutable = true;
};

// Does a host type accept (parameter direction) or produce (return
// direction) a value of the given Lucid type? Arrays compare element-wise,
// records by class name; other names outside the table raise
// UnknownHostType unless they name a registered record.
bool host_matches(const HostType& host, const GipsyType& lucid, Direction dir,
                  const std::function<bool(const std::string&)>& isRecord);

class HostRegistry {
 public:
  HostRegistry() = default;
  HostRegistry(const HostRegistry&) = delete;
  HostRegistry& operator=(const HostRegistry&) = delete;

  // The standard set: math, the corpus helpers and the Car/Nat42 records.
  static std::shared_ptr<HostRegistry> with_builtins();

  void register_function(HostFunction fn);
  void register_record(HostRecordType rt);

  const HostFunction* find(std::string_view name) const;
  const HostRecordType* find_record(std::string_view name) const;
  std::vector<std::string> function_names() const;
  std::vector<std::string> record_names() const;

  // Applies the boundary table to each argument, runs the body and checks
  // the result; void comes back as Bool true. A dimension argument is
  // turned into its tag in `ctx`.
  Value call(std::string_view name, std::span<const Value> args, HostIO& io, const Context* ctx = nullptr) const;

  Value construct(std::string_view className, std::span<const Value> args, HostIO& io,
                  const Context* ctx = nullptr) const;
  Value field_get(const Value& obj, std::string_view field) const;
  std::pair<Value, Value> method_call(const Value& obj, std::string_view method, std::span<const Value> args,
                                      HostIO& io, const Context* ctx = nullptr) const;

  bool is_record(const std::string& name) const { return find_record(name) != nullptr; }

 private:
  std::map<std::string, HostFunction, std::less<>> functions_;
  std::map<std::string, HostRecordType, std::less<>> records_;
};

// Converts Lucid arguments for a host call, raising BoundaryTypeError for
// the first argument the table rejects.
std::vector<Value> to_host_args(std::string_view name, const std::vector<HostType>& params,
                                std::span<const Value> args, const Context* ctx);

// Host bodies in the built-in catalog, by name, for binding manifests.
const HostFunction* catalog_function(std::string_view name);

}  // namespace lucid
