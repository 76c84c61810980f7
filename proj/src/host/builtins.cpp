#include <cmath>
#include <mutex>
#include <numbers>
#include <random>

#include "lucid/core/error.hpp"
#include "lucid/host/registry.hpp"

namespace lucid {

namespace {

HostType ht(const char* name) { return HostType::parse(name); }

HostFunction fn(const char* name, std::vector<HostType> params, const char* ret, bool immutable, HostBody body) {
  HostFunction f;
  f.name = name;
  f.params = std::move(params);
  f.ret = ht(ret);
  f.immutable = immutable;
  f.body = std::move(body);
  return f;
}

std::int64_t get_n(std::int64_t n) {
  std::int64_t v = 42;
  for (std::int64_t i = 1; i <= n; ++i) v += 1;
  return v;
}

// Corpus programs only need repeatable randomness.
int random_fork_state() {
  static std::mutex mu;
  static std::mt19937 rng(20050302);
  std::lock_guard lock(mu);
  return std::uniform_int_distribution<int>(1, 2)(rng);
}

std::vector<HostFunction> default_functions() {
  std::vector<HostFunction> out;
  out.push_back(fn("sin", {ht("double")}, "double", true,
                   [](std::span<const Value> a, HostIO&) { return Value::real(std::sin(a[0].as_double())); }));
  out.push_back(fn("pi", {}, "double", true,
                   [](std::span<const Value>, HostIO&) { return Value::real(std::numbers::pi); }));
  out.push_back(fn("getN", {ht("int")}, "int", true,
                   [](std::span<const Value> a, HostIO&) { return Value::integer(get_n(a[0].as_int())); }));
  out.push_back(fn("get42", {}, "int", true, [](std::span<const Value>, HostIO&) { return Value::integer(42); }));
  out.push_back(fn("merge", {ht("int"), ht("int")}, "int", true, [](std::span<const Value> a, HostIO&) {
    return Value::integer(std::min(a[0].as_int(), a[1].as_int()));
  }));
  out.push_back(fn("printLine", {ht("String")}, "void", false, [](std::span<const Value> a, HostIO& io) {
    io.print(a[0].as_string());
    return Value::boolean(true);
  }));
  out.push_back(fn("getIninitalRandomState", {}, "int", false,
                   [](std::span<const Value>, HostIO&) { return Value::integer(random_fork_state()); }));
  out.push_back(fn("chew", {ht("int")}, "boolean", false, [](std::span<const Value> a, HostIO& io) {
    auto i = std::to_string(a[0].as_int());
    io.print("Philo " + i + " is chewing smth tasty now.");
    io.print("Philo " + i + " finished chewing.");
    return Value::boolean(true);
  }));
  out.push_back(fn("brainstormIdea", {ht("int")}, "boolean", false, [](std::span<const Value> a, HostIO& io) {
    auto i = std::to_string(a[0].as_int());
    io.print("Philo " + i + " is heavily thinking now.");
    io.print("Philo " + i + " finished thinking.");
    return Value::boolean(true);
  }));
  return out;
}

std::vector<HostFunction> catalog_only() {
  std::vector<HostFunction> out;
  out.push_back(fn("cos", {ht("double")}, "double", true,
                   [](std::span<const Value> a, HostIO&) { return Value::real(std::cos(a[0].as_double())); }));
  out.push_back(fn("sqrt", {ht("double")}, "double", true,
                   [](std::span<const Value> a, HostIO&) { return Value::real(std::sqrt(a[0].as_double())); }));
  return out;
}

Value car(std::int64_t x, float speed, float speeddrop, float fuel, float drain) {
  return Value::record("Car", {{"x", Value::integer(x)},
                               {"speed", Value::single(speed)},
                               {"speeddrop", Value::single(speeddrop)},
                               {"fuel", Value::single(fuel)},
                               {"fueldrainrate", Value::single(drain)}});
}

HostRecordType car_type() {
  HostRecordType rt;
  rt.className = "Car";
  rt.fields = {{"x", ht("int")},
               {"speed", ht("float")},
               {"speeddrop", ht("float")},
               {"fuel", ht("float")},
               {"fueldrainrate", ht("float")}};
  rt.ctor = [](std::span<const Value>, HostIO&) { return car(0, 100.0f, 0.1f, 40.5f, 0.018f); };

  HostMethod move;
  move.params = {ht("int")};
  move.ret = ht("Car");
  move.immutable = true;
  move.body = [](const Value& self, std::span<const Value> a, HostIO&) {
    const auto& f = self.as_record().fields;
    std::int64_t x = f.at("x").as_int();
    float speed = f.at("speed").as_float();
    float drop = f.at("speeddrop").as_float();
    float fuel = f.at("fuel").as_float();
    float drain = f.at("fueldrainrate").as_float();
    auto steps = static_cast<std::int32_t>(a[0].as_int());
    if (fuel > 0) {
      fuel = fuel - drain * speed * static_cast<float>(steps);
      x += steps;
    } else if (speed > 0) {
      x += steps;
      speed = speed - drop * static_cast<float>(steps);
    }
    Value next = car(x, speed, drop, fuel, drain);
    return std::pair{next, next};
  };
  rt.methods["move"] = std::move(move);

  HostMethod print;
  print.ret = ht("void");
  print.body = [](const Value& self, std::span<const Value>, HostIO& io) {
    const auto& f = self.as_record().fields;
    io.print("Speed: " + f.at("speed").render() + ", fuel: " + f.at("fuel").render() +
             ", drain: " + f.at("fueldrainrate").render() + ", x: " + f.at("x").render() +
             ", speeddrop: " + f.at("speeddrop").render());
    return std::pair{Value::boolean(true), self};
  };
  rt.methods["printCarState"] = std::move(print);
  return rt;
}

HostRecordType nat42_type() {
  HostRecordType rt;
  rt.className = "Nat42";
  rt.fields = {{"n", ht("int")}};
  rt.ctor = [](std::span<const Value>, HostIO&) { return Value::record("Nat42", {{"n", Value::integer(42)}}); };

  HostMethod inc;
  inc.ret = ht("Nat42");
  inc.immutable = true;
  inc.body = [](const Value& self, std::span<const Value>, HostIO&) {
    Value next = Value::record("Nat42", {{"n", Value::integer(checked_add(self.as_record().fields.at("n").as_int(), 1))}});
    return std::pair{next, next};
  };
  rt.methods["inc"] = std::move(inc);

  HostMethod print;
  print.ret = ht("void");
  print.body = [](const Value& self, std::span<const Value>, HostIO& io) {
    io.print("n = " + self.as_record().fields.at("n").render());
    return std::pair{Value::boolean(true), self};
  };
  rt.methods["print"] = std::move(print);
  return rt;
}

}  // namespace

std::shared_ptr<HostRegistry> HostRegistry::with_builtins() {
  auto reg = std::make_shared<HostRegistry>();
  for (auto& f : default_functions()) reg->register_function(std::move(f));
  reg->register_record(car_type());
  reg->register_record(nat42_type());
  return reg;
}

const HostFunction* catalog_function(std::string_view name) {
  static const std::vector<HostFunction> catalog = [] {
    auto all = default_functions();
    for (auto& f : catalog_only()) all.push_back(std::move(f));
    return all;
  }();
  for (const auto& f : catalog) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

}  // namespace lucid
