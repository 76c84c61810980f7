#include "lucid/host/registry.hpp"

#include <climits>

#include "lucid/core/error.hpp"

namespace lucid {

void BufferIO::print(std::string_view line) {
  std::lock_guard lock(mu_);
  lines_.emplace_back(line);
}

std::vector<std::string> BufferIO::take() {
  std::lock_guard lock(mu_);
  return std::exchange(lines_, {});
}

std::vector<std::string> BufferIO::lines() const {
  std::lock_guard lock(mu_);
  return lines_;
}

namespace {

std::string signature_of(const std::vector<HostType>& params, const HostType& ret) {
  std::string s = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += params[i].str();
  }
  return s + ")->" + ret.str();
}

[[noreturn]] void boundary(std::string_view fn, std::size_t index, const std::string& why) {
  fail(ErrorCode::BoundaryTypeError,
       "argument " + std::to_string(index) + " of " + std::string(fn) + ": " + why);
}

Value checked_result(std::string_view name, const HostType& ret, Value result) {
  if (ret.is_void()) return Value::boolean(true);
  GipsyType want = lucid_type_of_return(ret);
  if (ret.name == "char" && !ret.array && result.kind() == ValueKind::Str &&
      result.as_string().size() != 1) {
    fail(ErrorCode::HostError, std::string(name) + ": char result must be one character");
  }
  if (!conforms(result, want)) {
    fail(ErrorCode::HostError, std::string(name) + " returned " + result.type().str() + ", declared " + ret.str());
  }
  return result;
}

template <typename F>
auto guarded(std::string_view name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::HostError) throw;
    fail(ErrorCode::HostError, std::string(name) + ": " + e.what());
  } catch (const std::exception& e) {
    fail(ErrorCode::HostError, std::string(name) + ": " + e.what());
  }
}

}  // namespace

std::string HostFunction::signature() const { return signature_of(params, ret); }
std::string HostMethod::signature() const { return signature_of(params, ret); }

bool host_matches(const HostType& host, const GipsyType& lucid, Direction dir,
                  const std::function<bool(const std::string&)>& isRecord) {
  if (host.array) {
    if (lucid.kind() != TypeKind::Array) return false;
    return host_matches(HostType{host.name, false}, lucid.element(), dir, isRecord);
  }
  if (lucid.kind() == TypeKind::Array) return false;
  if (!host.is_builtin()) {
    if (!isRecord || !isRecord(host.name)) fail(ErrorCode::UnknownHostType, host.name);
    return lucid.kind() == TypeKind::Record && lucid.className() == host.name;
  }
  return type_match(host.name, lucid, dir);
}

std::vector<Value> to_host_args(std::string_view name, const std::vector<HostType>& params,
                                std::span<const Value> args, const Context* ctx) {
  if (params.size() != args.size()) {
    fail(ErrorCode::ArityMismatch, std::string(name) + " takes " + std::to_string(params.size()) +
                                       " argument(s), got " + std::to_string(args.size()));
  }
  std::vector<Value> out;
  out.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    const HostType& p = params[i];
    const Value& a = args[i];
    if (p.array || !p.is_builtin()) {
      bool ok;
      if (p.array) {
        ok = a.kind() == ValueKind::Arr &&
             host_matches(p, a.type(), Direction::Parameter, [](const std::string&) { return true; });
      } else {
        ok = a.kind() == ValueKind::Rec && a.as_record().className == p.name;
      }
      if (!ok) boundary(name, i, p.str() + " expected, got " + a.type().str());
      out.push_back(a);
      continue;
    }
    if (!type_match(p.name, a.type(), Direction::Parameter)) {
      boundary(name, i, p.str() + " expected, got " + a.type().str() + " " + a.render());
    }
    if (a.kind() == ValueKind::Dim) {
      if (!ctx) boundary(name, i, "dimension " + a.as_dim() + " has no context to take a tag from");
      out.push_back(Value::integer(ctx->query(a.as_dim()).value));
    } else {
      out.push_back(a);
    }
    if (p.name == "int") {
      auto v = out.back().as_int();
      if (v < INT32_MIN || v > INT32_MAX) boundary(name, i, std::to_string(v) + " does not fit a host int");
    }
  }
  return out;
}

void HostRegistry::register_function(HostFunction fn) {
  if (functions_.count(fn.name) || records_.count(fn.name)) {
    fail(ErrorCode::DuplicateRegistration, fn.name);
  }
  std::string name = fn.name;
  functions_.emplace(std::move(name), std::move(fn));
}

void HostRegistry::register_record(HostRecordType rt) {
  if (functions_.count(rt.className) || records_.count(rt.className)) {
    fail(ErrorCode::DuplicateRegistration, rt.className);
  }
  for (auto& [name, m] : rt.methods) m.name = name;
  std::string name = rt.className;
  records_.emplace(std::move(name), std::move(rt));
}

const HostFunction* HostRegistry::find(std::string_view name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : &it->second;
}

const HostRecordType* HostRegistry::find_record(std::string_view name) const {
  auto it = records_.find(name);
  return it == records_.end() ? nullptr : &it->second;
}

std::vector<std::string> HostRegistry::function_names() const {
  std::vector<std::string> out;
  for (const auto& [n, f] : functions_) out.push_back(n);
  return out;
}

std::vector<std::string> HostRegistry::record_names() const {
  std::vector<std::string> out;
  for (const auto& [n, r] : records_) out.push_back(n);
  return out;
}

Value HostRegistry::call(std::string_view name, std::span<const Value> args, HostIO& io, const Context* ctx) const {
  const HostFunction* fn = find(name);
  if (!fn) fail(ErrorCode::UnresolvedFunction, std::string(name));
  auto host = to_host_args(name, fn->params, args, ctx);
  Value result = guarded(name, [&] { return fn->body(host, io); });
  return checked_result(name, fn->ret, std::move(result));
}

Value HostRegistry::construct(std::string_view className, std::span<const Value> args, HostIO& io,
                              const Context* ctx) const {
  const HostRecordType* rt = find_record(className);
  if (!rt) fail(ErrorCode::UnresolvedType, std::string(className));
  auto host = to_host_args(className, rt->ctorParams, args, ctx);
  Value v = guarded(className, [&] { return rt->ctor(host, io); });
  if (v.kind() != ValueKind::Rec || v.as_record().className != rt->className ||
      v.as_record().fields.size() != rt->fields.size()) {
    fail(ErrorCode::HostError, std::string(className) + ": constructor built a malformed record");
  }
  return v;
}

Value HostRegistry::field_get(const Value& obj, std::string_view field) const {
  const auto& rec = obj.as_record();
  auto it = rec.fields.find(std::string(field));
  if (it == rec.fields.end()) fail(ErrorCode::UnknownField, rec.className + "." + std::string(field));
  return it->second;
}

std::pair<Value, Value> HostRegistry::method_call(const Value& obj, std::string_view method,
                                                  std::span<const Value> args, HostIO& io,
                                                  const Context* ctx) const {
  const auto& rec = obj.as_record();
  const HostRecordType* rt = find_record(rec.className);
  if (!rt) fail(ErrorCode::UnresolvedType, rec.className);
  auto it = rt->methods.find(std::string(method));
  if (it == rt->methods.end()) fail(ErrorCode::UnknownMethod, rec.className + "." + std::string(method));
  const HostMethod& m = it->second;
  std::string qualified = rec.className + "." + m.name;
  auto host = to_host_args(qualified, m.params, args, ctx);
  auto [result, self] = guarded(qualified, [&] { return m.body(obj, host, io); });
  if (self.kind() != ValueKind::Rec || self.as_record().className != rec.className) {
    fail(ErrorCode::HostError, qualified + ": receiver changed type");
  }
  return {checked_result(qualified, m.ret, std::move(result)), std::move(self)};
}

}  // namespace lucid
