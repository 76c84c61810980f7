#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "lucid/core/ast.hpp"

namespace lucid {

// Hands out helper-stream names of the form hint__n that never collide with
// a name the program already uses or with an earlier helper.
class RewriteEnv {
 public:
  RewriteEnv() = default;
  explicit RewriteEnv(std::set<std::string> taken) : taken_(std::move(taken)) {}

  std::string fresh_id(std::string_view hint);
  void reserve(const std::string& name) { taken_.insert(name); }
  bool taken(const std::string& name) const { return taken_.count(name) > 0; }

 private:
  std::set<std::string> taken_;
  std::map<std::string, int, std::less<>> counters_;
};

// Every identifier, declared name, formal and dimension name in the tree.
std::set<std::string> names_in(const Node& root);

bool has_dialect_ops(const Node& root);

struct TranslateReport {
  // Set when undecorated operators were found with no dimension in scope
  // and a dimension had to be introduced for them.
  std::string implicitDimension;
};

// Rewrites first/next/prev/fby/wvr/asa/upon into @ and #. The input is not
// modified. Undecorated operators take the only dimension declared in the
// enclosing where clauses; AmbiguousDimension if there are several. iseod
// is Unsupported.
NodePtr translate(const Node& root, TranslateReport* report = nullptr);

}  // namespace lucid
