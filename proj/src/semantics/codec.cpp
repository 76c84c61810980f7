#include "lucid/semantics/codec.hpp"

#include <charconv>
#include <cstdlib>

#include "lucid/core/error.hpp"

namespace lucid {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::FormatError, what); }

const Json& at(const Json& j, std::size_t i) {
  if (!j.is_array() || j.size() <= i) bad("expected an array with at least " + std::to_string(i + 1) + " items");
  return j[i];
}

const std::string& str(const Json& j) {
  if (!j.is_string()) bad("expected a string, found " + j.dump());
  return j.get_ref<const std::string&>();
}

std::int64_t integer(const Json& j) {
  if (!j.is_number_integer()) bad("expected an integer, found " + j.dump());
  return j.get<std::int64_t>();
}

double parse_real(const std::string& text) {
  char* end = nullptr;
  double d = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0') bad("malformed number '" + text + "'");
  return d;
}

NodeKind node_kind_from(const std::string& name) {
  for (int k = 0; k <= static_cast<int>(NodeKind::FieldDecl); ++k) {
    if (to_string(static_cast<NodeKind>(k)) == name) return static_cast<NodeKind>(k);
  }
  bad("unknown node kind '" + name + "'");
}

bool is_unary(Op op) { return op <= Op::Iseod; }

Op op_from(const std::string& symbol, bool unary) {
  for (int k = 0; k <= static_cast<int>(Op::Upon); ++k) {
    Op op = static_cast<Op>(k);
    if (is_unary(op) == unary && op_symbol(op) == symbol) return op;
  }
  bad("unknown operator '" + symbol + "'");
}

Json strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

std::vector<std::string> strings_from(const Json& j) {
  if (!j.is_array()) bad("expected a list of names");
  std::vector<std::string> out;
  for (const auto& s : j) out.push_back(str(s));
  return out;
}

Json nodes(const std::vector<NodePtr>& v) {
  Json a = Json::array();
  for (const auto& n : v) a.push_back(encode_node(*n));
  return a;
}

std::vector<NodePtr> nodes_from(const Json& j) {
  if (!j.is_array()) bad("expected a list of nodes");
  std::vector<NodePtr> out;
  for (const auto& n : j) out.push_back(decode_node(n));
  return out;
}

// Exact child count for fixed-shape nodes, lower bound (negated) otherwise.
int expected_kids(NodeKind k) {
  switch (k) {
    case NodeKind::Id:
    case NodeKind::Literal:
    case NodeKind::DimensionDecl:
    case NodeKind::NestedWhereDecl:
      return 0;
    case NodeKind::If:
    case NodeKind::At:
      return 3;
    case NodeKind::ContextAt:
    case NodeKind::BinOp:
      return 2;
    case NodeKind::Call:
    case NodeKind::Index:
    case NodeKind::DotCall:
      return -1;
    case NodeKind::ArrayLit:
    case NodeKind::Embed:
      return 0x7fff;
    default:
      return 1;
  }
}

}  // namespace

Json encode_value(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Int: return Json::array({"int", v.as_int()});
    case ValueKind::Float: return Json::array({"float", format_float(v.as_float())});
    case ValueKind::Double: return Json::array({"double", format_double(v.as_double())});
    case ValueKind::Bool: return Json::array({"bool", v.as_bool()});
    case ValueKind::Str: return Json::array({"string", v.as_string()});
    case ValueKind::Dim: return Json::array({"dim", v.as_dim()});
    case ValueKind::HostFn: return Json::array({"hostfn", v.as_host_fn()});
    case ValueKind::Arr: {
      Json items = Json::array();
      for (const auto& item : v.as_array().items) items.push_back(encode_value(item));
      return Json::array({"array", v.as_array().element.str(), items});
    }
    case ValueKind::Rec: {
      Json fields = Json::object();
      for (const auto& [name, f] : v.as_record().fields) fields[name] = encode_value(f);
      return Json::array({"record", v.as_record().className, fields});
    }
  }
  bad("unencodable value");
}

Value decode_value(const Json& j) {
  const std::string& tag = str(at(j, 0));
  const Json& body = at(j, 1);
  if (tag == "int") return Value::integer(integer(body));
  if (tag == "float") return Value::single(static_cast<float>(parse_real(str(body))));
  if (tag == "double") return Value::real(parse_real(str(body)));
  if (tag == "bool") {
    if (!body.is_boolean()) bad("expected true or false, found " + body.dump());
    return Value::boolean(body.get<bool>());
  }
  if (tag == "string") return Value::string(str(body));
  if (tag == "dim") return Value::dim(str(body));
  if (tag == "hostfn") return Value::host_fn(str(body));
  if (tag == "array") {
    const Json& items = at(j, 2);
    if (!items.is_array()) bad("array items must be a list");
    std::vector<Value> out;
    for (const auto& item : items) out.push_back(decode_value(item));
    return Value::array(GipsyType::parse(str(body)), std::move(out));
  }
  if (tag == "record") {
    const Json& fields = at(j, 2);
    if (!fields.is_object()) bad("record fields must be an object");
    std::map<std::string, Value> out;
    for (const auto& [name, f] : fields.items()) out.emplace(name, decode_value(f));
    return Value::record(str(body), std::move(out));
  }
  bad("unknown value tag '" + tag + "'");
}

Json encode_context(const Context& c) {
  Json a = Json::array();
  for (const auto& [dim, tag] : c.bindings()) a.push_back(Json::array({dim, tag.value}));
  return a;
}

Context decode_context(const Json& j) {
  if (!j.is_array()) bad("a context must be a list of [dimension, tag] pairs");
  Context c;
  for (const auto& b : j) c = c.override(str(at(b, 0)), Tag{integer(at(b, 1))});
  return c;
}

Json encode_node(const Node& n) {
  Json attrs = Json::object();
  if (!n.name.empty()) attrs["name"] = n.name;
  if (!n.text.empty() || n.kind == NodeKind::Embed) attrs["text"] = n.text;
  if (n.kind == NodeKind::UnOp || n.kind == NodeKind::BinOp) attrs["op"] = op_symbol(n.op);
  if (!n.opDim.empty()) attrs["opDim"] = n.opDim;
  if (n.kind == NodeKind::Literal) attrs["literal"] = encode_value(n.literal);
  if (!n.names.empty()) attrs["names"] = strings(n.names);
  if (!n.dims.empty()) attrs["dims"] = strings(n.dims);
  if (n.implicitWhere) attrs["implicit"] = true;
  if (n.scope >= 0) attrs["scope"] = n.scope;
  return Json::array({to_string(n.kind), n.pos.line, n.pos.col, attrs, nodes(n.kids), nodes(n.decls), nodes(n.subs)});
}

NodePtr decode_node(const Json& j) {
  if (!j.is_array() || j.size() != 7) bad("a node must be a list of 7 items, found " + j.dump().substr(0, 60));
  auto n = make_node(node_kind_from(str(j[0])),
                     SourcePos{static_cast<int>(integer(j[1])), static_cast<int>(integer(j[2]))});
  const Json& attrs = j[3];
  if (!attrs.is_object()) bad("node attributes must be an object");
  for (const auto& [key, v] : attrs.items()) {
    if (key == "name") n->name = str(v);
    else if (key == "text") n->text = str(v);
    else if (key == "op") n->op = op_from(str(v), n->kind == NodeKind::UnOp);
    else if (key == "opDim") n->opDim = str(v);
    else if (key == "literal") n->literal = decode_value(v);
    else if (key == "names") n->names = strings_from(v);
    else if (key == "dims") n->dims = strings_from(v);
    else if (key == "implicit") n->implicitWhere = v.is_boolean() && v.get<bool>();
    else if (key == "scope") n->scope = static_cast<int>(integer(v));
    else bad("unknown node attribute '" + key + "'");
  }
  n->kids = nodes_from(j[4]);
  n->decls = nodes_from(j[5]);
  n->subs = nodes_from(j[6]);
  int want = expected_kids(n->kind);
  int got = static_cast<int>(n->kids.size());
  if (want == 0x7fff ? false : want < 0 ? got < -want : got != want) {
    bad(std::string(to_string(n->kind)) + " node with " + std::to_string(got) + " children");
  }
  return n;
}

}  // namespace lucid
