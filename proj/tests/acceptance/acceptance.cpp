// Acceptance run: one PASS/FAIL line per criterion. The corpus directory is
// the first argument (a scratch copy; regression writes current/ into it).
#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "lucid/cli/cli.hpp"
#include "lucid/cli/detail.hpp"
#include "lucid/eduction/dispatch.hpp"
#include "lucid/eduction/evaluator.hpp"
#include "lucid/eduction/runner.hpp"
#include "lucid/eduction/socket_cp.hpp"
#include "lucid/frontend/parser.hpp"
#include "lucid/frontend/printer.hpp"
#include "lucid/frontend/segments.hpp"
#include "lucid/semantics/compiler.hpp"
#include "lucid/semantics/serialize.hpp"

using namespace lucid;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

fs::path g_corpus;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

EductionProgram compile_src(const std::string& src, std::optional<Dialect> d = std::nullopt,
                            std::shared_ptr<const HostRegistry> reg = HostRegistry::with_builtins(),
                            const fs::path& base = ".") {
  CompileOptions o;
  o.dialect = d;
  o.baseDir = base;
  return compile(src, std::move(reg), o).program;
}

EductionProgram compile_file(const fs::path& p, std::shared_ptr<const HostRegistry> reg = HostRegistry::with_builtins()) {
  std::optional<Dialect> d;
  if (p.parent_path().filename() == "gipl") d = Dialect::Gipl;
  return compile_src(read_text(p), d, std::move(reg), p.parent_path());
}

Value value_of(const RunReport& r) {
  if (r.results.at(0).error) throw *r.results[0].error;
  return *r.results[0].value;
}

std::vector<fs::path> corpus_programs() {
  std::vector<fs::path> out;
  for (const char* suite : {"gipl", "indexical", "jlucid", "objective", "gipsy"}) {
    for (const auto& e : fs::directory_iterator(g_corpus / suite)) {
      if (e.path().extension() == ".ipl") out.push_back(e.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Random single-dimension programs and the naive expansion oracle.

struct Ex;
using ExP = std::shared_ptr<const Ex>;

struct Ex {
  enum K { Lit, Hash, Ref, Add, Sub, First, Next, Prev, Fby, Wvr, Asa, Upon, Lt, Le, Eq, Ne, True, False } k;
  std::int64_t n = 0;
  ExP a, b;
};

ExP mk(Ex::K k, ExP a = nullptr, ExP b = nullptr, std::int64_t n = 0) {
  return std::make_shared<const Ex>(Ex{k, n, std::move(a), std::move(b)});
}

struct Gen {
  std::mt19937_64 rng;
  bool allowRef;
  bool streamOps;  // wvr and asa, which may diverge
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  ExP cond(int depth) {
    int c = pick(10);
    if (c == 0) return mk(Ex::True);
    if (c == 1) return mk(Ex::False);
    static const Ex::K cmp[] = {Ex::Lt, Ex::Le, Ex::Eq, Ex::Ne};
    return mk(cmp[pick(4)], num(depth - 1), num(depth - 1));
  }

  ExP leaf() {
    int c = pick(allowRef ? 5 : 4);
    if (c < 2) return mk(Ex::Lit, nullptr, nullptr, pick(10));
    if (c < 4) return mk(Ex::Hash);
    return mk(Ex::Ref);
  }

  ExP num(int depth) {
    if (depth <= 0 || pick(5) == 0) return leaf();
    std::vector<Ex::K> ks = {Ex::Add, Ex::Sub, Ex::First, Ex::Next, Ex::Prev, Ex::Fby, Ex::Upon};
    if (streamOps) {
      ks.push_back(Ex::Wvr);
      ks.push_back(Ex::Asa);
    }
    Ex::K k = ks[pick(static_cast<int>(ks.size()))];
    switch (k) {
      case Ex::First:
      case Ex::Next:
      case Ex::Prev:
        return mk(k, num(depth - 1));
      case Ex::Wvr:
      case Ex::Asa:
      case Ex::Upon:
        return mk(k, num(depth - 1), cond(depth - 1));
      default:
        return mk(k, num(depth - 1), num(depth - 1));
    }
  }
};

std::string show(const ExP& e) {
  switch (e->k) {
    case Ex::Lit: return std::to_string(e->n);
    case Ex::Hash: return "#.d";
    case Ex::Ref: return "R";
    case Ex::Add: return "(" + show(e->a) + " + " + show(e->b) + ")";
    case Ex::Sub: return "(" + show(e->a) + " - " + show(e->b) + ")";
    case Ex::First: return "(first.d " + show(e->a) + ")";
    case Ex::Next: return "(next.d " + show(e->a) + ")";
    case Ex::Prev: return "(prev.d " + show(e->a) + ")";
    case Ex::Fby: return "(" + show(e->a) + " fby.d " + show(e->b) + ")";
    case Ex::Wvr: return "(" + show(e->a) + " wvr.d " + show(e->b) + ")";
    case Ex::Asa: return "(" + show(e->a) + " asa.d " + show(e->b) + ")";
    case Ex::Upon: return "(" + show(e->a) + " upon.d " + show(e->b) + ")";
    case Ex::Lt: return "(" + show(e->a) + " < " + show(e->b) + ")";
    case Ex::Le: return "(" + show(e->a) + " <= " + show(e->b) + ")";
    case Ex::Eq: return "(" + show(e->a) + " == " + show(e->b) + ")";
    case Ex::Ne: return "(" + show(e->a) + " != " + show(e->b) + ")";
    case Ex::True: return "true";
    case Ex::False: return "false";
  }
  return "?";
}

struct Discard {};

// Streams as plain functions of the tag, expanded without any caching.
struct Oracle {
  ExP root;
  long budget;

  void step() {
    if (--budget < 0) throw Discard{};
  }
  static std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw Discard{};
    return r;
  }
  static std::int64_t sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw Discard{};
    return r;
  }

  bool truth(const ExP& c, std::int64_t t) {
    step();
    switch (c->k) {
      case Ex::True: return true;
      case Ex::False: return false;
      case Ex::Lt: return num(c->a, t) < num(c->b, t);
      case Ex::Le: return num(c->a, t) <= num(c->b, t);
      case Ex::Eq: return num(c->a, t) == num(c->b, t);
      case Ex::Ne: return num(c->a, t) != num(c->b, t);
      default: throw std::logic_error("not a condition");
    }
  }
  // First tag at or after t where the condition holds.
  std::int64_t upto(const ExP& c, std::int64_t t) {
    while (!truth(c, t)) t = add(t, 1);
    return t;
  }
  std::int64_t whenever(const ExP& c, std::int64_t t) {
    step();
    return t <= 0 ? upto(c, t) : upto(c, add(whenever(c, sub(t, 1)), 1));
  }
  std::int64_t count_upon(const ExP& c, std::int64_t t) {
    step();
    if (t <= 0) return 0;
    std::int64_t w = count_upon(c, sub(t, 1));
    return truth(c, sub(t, 1)) ? add(w, 1) : w;
  }
  std::int64_t num(const ExP& e, std::int64_t t) {
    step();
    switch (e->k) {
      case Ex::Lit: return e->n;
      case Ex::Hash: return t;
      case Ex::Ref: return num(root, t);
      case Ex::Add: return add(num(e->a, t), num(e->b, t));
      case Ex::Sub: return sub(num(e->a, t), num(e->b, t));
      case Ex::First: return num(e->a, 0);
      case Ex::Next: return num(e->a, add(t, 1));
      case Ex::Prev: return num(e->a, sub(t, 1));
      case Ex::Fby: return t <= 0 ? num(e->a, t) : num(e->b, sub(t, 1));
      case Ex::Wvr: return num(e->a, whenever(e->b, t));
      case Ex::Asa: return num(e->a, upto(e->b, 0));
      case Ex::Upon: return num(e->a, count_upon(e->b, t));
      default: throw std::logic_error("not a number");
    }
  }
};

// ---------------------------------------------------------------------------

struct Result {
  bool pass;
  std::string detail;
};

Result c1_natural_numbers() {
  std::ostringstream d;
  bool ok = true;
  for (const char* rel : {"indexical/nat1.ipl", "gipl/nat2.ipl"}) {
    auto t0 = Clock::now();
    Value v = value_of(run(compile_file(g_corpus / rel)));
    double s = seconds_since(t0);
    ok = ok && v == Value::integer(44) && s < 1.0;
    d << rel << " = " << v.render() << " in " << s << " s; ";
  }
  return {ok, d.str() + "want 44, < 1 s each"};
}

Result c2_oracle_equivalence() {
  auto t0 = Clock::now();
  Gen gen{std::mt19937_64(20240917), true, true};
  int accepted = 0, discarded = 0, mismatches = 0;
  std::string firstBad;
  while (accepted < 200 && accepted + discarded < 20000) {
    ExP e = gen.num(1 + gen.pick(4));
    std::vector<std::int64_t> want;
    try {
      for (int t = 0; t <= 7; ++t) {
        Oracle o{e, 20000};
        want.push_back(o.num(e, t));
      }
    } catch (const Discard&) {
      ++discarded;
      continue;
    }
    ++accepted;
    for (int t = 0; t <= 7; ++t) {
      std::string src = "R @.d " + std::to_string(t) + " where dimension d; R = " + show(e) + "; end";
      std::string got;
      try {
        got = value_of(run(compile_src(src, Dialect::Indexical))).render();
      } catch (const Error& err) {
        got = err.diagnostic("program");
      }
      if (got != std::to_string(want[t])) {
        if (mismatches++ == 0) firstBad = src + " gave " + got + ", oracle " + std::to_string(want[t]);
        break;
      }
    }
  }
  double s = seconds_since(t0);
  std::ostringstream d;
  d << accepted << " programs x 8 tags, " << discarded << " divergent discarded, " << mismatches << " mismatches, "
    << s << " s (< 60 s)";
  if (!firstBad.empty()) d << "; first: " << firstBad;
  return {accepted == 200 && mismatches == 0 && s < 60.0, d.str()};
}

std::vector<Value> stream_at(const std::string& expr, const std::string& defs) {
  std::string items;
  for (int t = 0; t <= 15; ++t) items += (t ? ", " : "") + ("(" + expr + ") @.d " + std::to_string(t));
  Value v = value_of(run(compile_src("[" + items + "] where dimension d; " + defs + " end", Dialect::JLucid)));
  return v.as_array().items;
}

Result c3_operator_laws() {
  Gen gen{std::mt19937_64(7), false, false};
  int broken = 0;
  std::string firstBad;
  for (int i = 0; i < 50; ++i) {
    int m = 2 + gen.pick(3);
    std::string defs = "X = " + show(gen.num(3)) + "; Y = " + show(gen.num(3)) + "; C = #.d % " +
                       std::to_string(m) + " == " + std::to_string(gen.pick(m)) + ";";
    bool ok = stream_at("next.d (X fby.d Y)", defs) == stream_at("Y", defs) &&
              stream_at("first.d (X fby.d Y)", defs) == stream_at("first.d X", defs);
    auto asa = stream_at("X asa.d C", defs);
    auto first = stream_at("first.d (X wvr.d C)", defs);
    ok = ok && std::all_of(asa.begin(), asa.end(), [&](const Value& v) { return v == asa[0]; }) && asa == first;
    if (!ok && broken++ == 0) firstBad = defs;
  }
  return {broken == 0, "50 pairs x 16 tags, " + std::to_string(broken) + " violations" +
                           (firstBad.empty() ? "" : "; first: " + firstBad)};
}

Result c4_hamming() {
  std::vector<std::int64_t> want;
  for (std::int64_t a = 1; a <= 1000; a *= 2)
    for (std::int64_t b = a; b <= 1000; b *= 3)
      for (std::int64_t c = b; c <= 1000; c *= 5) want.push_back(c);
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  want.resize(10);

  std::string src = read_text(g_corpus / "indexical" / "hamming.ipl");
  auto at = src.find("H @.d 9");
  if (at == std::string::npos) return {false, "hamming.ipl does not start with H @.d 9"};
  auto t0 = Clock::now();
  std::vector<std::int64_t> got;
  for (int t = 0; t <= 9; ++t) {
    std::string s = src;
    s.replace(at, 7, "H @.d " + std::to_string(t));
    got.push_back(value_of(run(compile_src(s))).as_int());
  }
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << "got";
  for (auto g : got) d << " " << g;
  d << "; oracle";
  for (auto w : want) d << " " << w;
  d << "; " << secs << " s (< 5 s)";
  return {got == want && secs < 5.0, d.str()};
}

struct Counted {
  std::shared_ptr<HostRegistry> reg = HostRegistry::with_builtins();
  std::shared_ptr<std::atomic<int>> tick = std::make_shared<std::atomic<int>>(0);
  std::shared_ptr<std::atomic<int>> tock = std::make_shared<std::atomic<int>>(0);
  Counted() {
    for (auto [name, counter, immutable] : {std::tuple{"tick", tick, false}, std::tuple{"tock", tock, true}}) {
      HostFunction f;
      f.name = name;
      f.params = {HostType::parse("int")};
      f.ret = HostType::parse("int");
      f.immutable = immutable;
      f.body = [counter](std::span<const Value> a, HostIO&) {
        ++*counter;
        return a[0];
      };
      reg->register_function(std::move(f));
    }
  }
};

Result c5_warehouse() {
  std::ostringstream d;
  bool ok = true;
  for (const char* rel : {"indexical/nat1.ipl", "gipl/nat2.ipl"}) {
    EductionProgram p = compile_file(g_corpus / rel);
    std::set<std::string> texts;
    std::map<std::size_t, std::uint64_t> rules;
    for (std::size_t cap : {std::size_t{0}, std::size_t{4}, Warehouse::kUnbounded}) {
      RunOptions o;
      o.warehouseCapacity = cap;
      texts.insert(run(p, o).text());
      // Rule applications over two demands of the same tree.
      Warehouse wh(cap);
      Dispatcher disp(make_cp(CpKind::Null, p.registry));
      BufferIO io;
      Evaluator ev(p, 0, wh, disp, io);
      ev.run();
      ev.run();
      rules[cap] = ev.rule_applications();
    }
    bool fewer = rules[Warehouse::kUnbounded] < rules[0];
    ok = ok && texts.size() == 1 && fewer;
    d << rel << ": " << texts.size() << " distinct result(s), rules cap0=" << rules[0]
      << " cap4=" << rules[4] << " unbounded=" << rules[Warehouse::kUnbounded] << "; ";
  }
  Counted c;
  const std::string body = "A @.d 0 + A @.d 0 where dimension d; A = ";
  std::string tick = value_of(run(compile_src("#funcdecl\nint tick(int);\n#INDEXICALLUCID\n" + body + "tick(7); end",
                                              std::nullopt, c.reg)))
                         .render();
  std::string tock = value_of(run(compile_src(
                                  "#funcdecl\nimmutable int tock(int);\n#INDEXICALLUCID\n" + body + "tock(7); end",
                                  std::nullopt, c.reg)))
                         .render();
  ok = ok && tick == "14" && tock == "14" && *c.tick == 2 && *c.tock == 1;
  d << "mutable executed " << *c.tick << "x (want 2), immutable " << *c.tock << "x (want 1)";
  return {ok, d.str()};
}

Result c6_type_matrix() {
  // The boundary table, written out: host type -> Lucid kinds it pairs with.
  const std::map<std::string, std::set<std::string>> returns = {
      {"int", {"int"}},       {"byte", {"int"}},      {"long", {"int"}},
      {"float", {"float"}},   {"double", {"double"}}, {"boolean", {"bool"}},
      {"char", {"string"}},   {"String", {"string"}}, {"void", {"bool", "void"}}};
  const std::map<std::string, std::set<std::string>> params = {
      {"String", {"string"}}, {"float", {"float"}},           {"double", {"double"}},
      {"int", {"int", "dimension"}}, {"boolean", {"bool"}}};
  const std::map<std::string, Value> hostSample = {
      {"int", Value::integer(3)},   {"byte", Value::integer(3)},   {"long", Value::integer(3)},
      {"float", Value::single(1.5f)}, {"double", Value::real(2.5)}, {"boolean", Value::boolean(true)},
      {"char", Value::string("c")}, {"String", Value::string("s")}, {"void", Value::integer(0)}};
  const std::vector<std::pair<std::string, std::string>> lucidArg = {
      {"int", "3"}, {"float", "float_one()"}, {"double", "2.5"}, {"bool", "true"}, {"string", "\"s\""},
      {"dimension", "d"}};

  auto reg = HostRegistry::with_builtins();
  for (const auto& [h, v] : hostSample) {
    HostFunction f;
    f.name = "r_" + h;
    f.ret = HostType::parse(h);
    f.body = [v](std::span<const Value>, HostIO&) { return v; };
    reg->register_function(std::move(f));
  }
  for (const auto& [h, kinds] : params) {
    HostFunction f;
    f.name = "p_" + h;
    f.params = {HostType::parse(h)};
    f.ret = HostType::parse("void");
    f.body = [](std::span<const Value>, HostIO&) { return Value::boolean(true); };
    reg->register_function(std::move(f));
  }
  HostFunction one;
  one.name = "float_one";
  one.ret = HostType::parse("float");
  one.body = [](std::span<const Value>, HostIO&) { return Value::single(1.0f); };
  reg->register_function(std::move(one));

  int cells = 0, wrong = 0;
  std::string firstBad;
  auto note = [&](bool good, const std::string& what) {
    ++cells;
    if (!good && wrong++ == 0) firstBad = what;
  };
  auto outcome = [&](const std::string& src) -> std::pair<std::optional<Value>, std::optional<ErrorCode>> {
    try {
      return {value_of(run(compile_src(src, std::nullopt, reg))), std::nullopt};
    } catch (const Error& e) {
      return {std::nullopt, e.code()};
    }
  };

  // Return direction: a prototype declares the Lucid kind, linking checks it.
  for (const auto& [h, kinds] : returns) {
    for (const char* l : {"int", "float", "double", "bool", "string", "void"}) {
      auto [v, err] = outcome("#funcdecl\n" + std::string(l) + " r_" + h + "();\n#JLUCID\nr_" + h + "()\n");
      bool accept = kinds.count(l) > 0;
      Value expect = h == "void" ? Value::boolean(true) : hostSample.at(h);
      bool good = accept ? (v && *v == expect) : (err == ErrorCode::SignatureMismatch);
      note(good, "return " + h + " as " + l);
    }
  }
  // Parameter direction, at link time and at call time.
  for (const auto& [h, kinds] : params) {
    for (const auto& [l, arg] : lucidArg) {
      bool accept = kinds.count(l) > 0;
      if (l != "dimension") {
        auto [v, err] = outcome("#funcdecl\nvoid p_" + h + "(" + l + ");\n#JLUCID\n1\n");
        note(accept ? v.has_value() : err == ErrorCode::SignatureMismatch, "declared " + l + " for " + h);
      }
      // Called without a prototype check: the boundary decides.
      std::string call = "#NATIVE\np_" + h + " : (" + h + ") -> void\nfloat_one : () -> float\n#JLUCID\np_" + h + "(" +
                         arg + ") @.d 4 where dimension d; end\n";
      auto [v, err] = outcome(call);
      bool good = accept ? (v && *v == Value::boolean(true)) : (err == ErrorCode::BoundaryTypeError);
      note(good, "passed " + l + " to " + h);
    }
  }
  return {wrong == 0, std::to_string(cells) + " cells, " + std::to_string(wrong) + " wrong" +
                          (firstBad.empty() ? "" : "; first: " + firstBad)};
}

Result c7_round_trip() {
  int compared = 0, differ = 0, skipped = 0;
  std::string firstBad;
  for (const auto& p : corpus_programs()) {
    EductionProgram prog;
    try {
      prog = compile_file(p);
    } catch (const Error&) {
      ++skipped;  // compile-error cases have nothing to run
      continue;
    }
    std::string direct = run(prog).text();
    std::string loaded = run(deserialize(serialize(prog), HostRegistry::with_builtins())).text();
    ++compared;
    if (direct != loaded && differ++ == 0) firstBad = p.filename().string();
  }
  return {differ == 0 && compared > 0, std::to_string(compared) + " programs compared, " + std::to_string(differ) +
                                          " differ, " + std::to_string(skipped) + " compile-error cases" +
                                          (firstBad.empty() ? "" : "; first: " + firstBad)};
}

Result c8_transports() {
  std::ostringstream d;
  bool ok = true;
  for (const char* rel : {"indexical/hamming.ipl", "jlucid/fft_decl.ipl"}) {
    EductionProgram p = compile_file(g_corpus / rel);
    RunReport null = run(p);
    RunOptions o;
    o.cpKind = CpKind::Socket;
    RunReport sock = run(p, o);
    bool same = null.ok() && null.text() == sock.text() && null.warehouse.hits == sock.warehouse.hits &&
                null.warehouse.misses == sock.warehouse.misses;
    ok = ok && same;
    d << rel << ": " << (same ? "same" : "different") << " (hits " << null.warehouse.hits << "/"
      << sock.warehouse.hits << ", misses " << null.warehouse.misses << "/" << sock.warehouse.misses << "); ";
  }
  return {ok, d.str()};
}

Result c9_objects() {
  RunReport nat = run(compile_file(g_corpus / "objective" / "nat42.ipl"));
  bool natOk = nat.ok() && nat.results[0].output == std::vector<std::string>{"n = 44"} &&
               *nat.results[0].value == Value::boolean(true);

  RunReport car = run(compile_file(g_corpus / "objective" / "car.ipl"));
  bool carRuns = car.ok() && *car.results[0].value == Value::boolean(true);

  std::string items;
  for (int t = 0; t <= 15; ++t) items += (t ? ", " : "") + ("(C @.time " + std::to_string(t) + ").fuel");
  std::string src = "#typedecl\nCar;\n#OBJECTIVELUCID\n[" + items +
                    "]\nwhere\n    dimension time;\n    C = Car() fby.time S;\n    S = C.move(#time);\nend;\n";
  std::vector<Value> fuel = value_of(run(compile_src(src))).as_array().items;
  bool monotone = fuel.size() == 16;
  for (std::size_t i = 1; i < fuel.size(); ++i) monotone = monotone && fuel[i].as_float() <= fuel[i - 1].as_float();
  std::ostringstream d;
  d << "Nat42 printed \"" << (nat.results[0].output.empty() ? "" : nat.results[0].output[0]) << "\" value "
    << (nat.results[0].value ? nat.results[0].value->render() : "error") << "; Car at tag 15 "
    << (carRuns ? "completed" : "failed") << "; fuel " << fuel.front().render() << " .. " << fuel.back().render()
    << (monotone ? " non-increasing" : " NOT monotone");
  return {natOk && carRuns && monotone, d.str()};
}

Result c10_parse_coverage() {
  std::ostringstream d;
  bool ok = true;
  for (const char* rel : {"jlucid/prefix_sum_gipl.ipl", "jlucid/prefix_sum_indexical.ipl", "jlucid/dining.ipl",
                          "jlucid/fft.ipl", "indexical/life.ipl"}) {
    int segs = 0;
    bool good = true;
    try {
      SegmentedProgram sp = parse_segments(read_text(g_corpus / rel));
      for (const auto& s : sp.segments) {
        auto dialect = dialect_for_language(s.langId);
        if (!dialect) continue;
        NodePtr a = parse(s.body, *dialect, s.startLine);
        NodePtr b = parse(print(*a), *dialect);
        good = good && structural_equal(*a, *b) && print(*b) == print(*a);
        ++segs;
      }
    } catch (const Error& e) {
      good = false;
      d << e.diagnostic(rel) << " ";
    }
    good = good && segs > 0;
    ok = ok && good;
    d << fs::path(rel).stem().string() << (good ? " ok" : " FAILED") << "; ";
  }
  return {ok, d.str()};
}

Result c11_regression() {
  auto pass_set = [](const char* mode, int& code, int& failed) {
    std::vector<std::string> args = {"regression", "--all", mode, "--debug", "--directory", g_corpus.string()};
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    code = regression_main(static_cast<int>(argv.size()), argv.data(), out, err);
    std::set<std::string> passed;
    std::istringstream lines(out.str());
    failed = 0;
    for (std::string l; std::getline(lines, l);) {
      if (l.rfind("PASS ", 0) == 0) passed.insert(l.substr(5));
      if (l.rfind("FAIL ", 0) == 0) ++failed;
    }
    return passed;
  };
  int seqCode, parCode, seqFail, parFail;
  auto seq = pass_set("--sequential", seqCode, seqFail);
  auto par = pass_set("--parallel", parCode, parFail);
  bool ok = seqCode == 0 && parCode == 0 && seq == par && !seq.empty() && seqFail == 0 && parFail == 0;
  return {ok, "sequential " + std::to_string(seq.size()) + " passed / " + std::to_string(seqFail) +
                  " failed, parallel " + std::to_string(par.size()) + " passed / " + std::to_string(parFail) +
                  " failed, pass sets " + (seq == par ? "identical" : "differ")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance CORPUS_DIR\n";
    return 2;
  }
  g_corpus = argv[1];
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"natural numbers", c1_natural_numbers},
      {"translator oracle equivalence", c2_oracle_equivalence},
      {"operator laws", c3_operator_laws},
      {"hamming", c4_hamming},
      {"warehouse transparency and benefit", c5_warehouse},
      {"type-boundary matrix", c6_type_matrix},
      {"GEER round trip", c7_round_trip},
      {"transport transparency", c8_transports},
      {"Objective Lucid", c9_objects},
      {"corpus parse coverage", c10_parse_coverage},
      {"regression harness", c11_regression},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r{false, ""};
    try {
      run_on_large_stack([&] { r = criteria[i].second(); });
    } catch (const std::exception& e) {
      r = {false, std::string("threw: ") + e.what()};
    }
    failed += !r.pass;
    std::cout << "criterion " << i + 1 << ": " << (r.pass ? "PASS" : "FAIL") << ": " << criteria[i].first << ": "
              << r.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
