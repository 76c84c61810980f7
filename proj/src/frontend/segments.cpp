#include "lucid/frontend/segments.hpp"

#include <algorithm>
#include <set>

#include "lucid/core/text.hpp"

namespace lucid {

std::string Prototype::signature() const {
  std::string s = "(";
  for (std::size_t i = 0; i < paramTypes.size(); ++i) {
    if (i) s += ",";
    s += paramTypes[i].str();
  }
  return s + ")->" + returnType.str();
}

bool SegmentFilter::allows(std::string_view langId) const {
  auto has = [&](const std::vector<std::string>& v) {
    return std::find(v.begin(), v.end(), langId) != v.end();
  };
  if (!valid.empty()) return has(valid);
  return !has(invalid);
}

bool is_segment_marker(std::string_view line) {
  line = trim(line);
  if (line == "#funcdecl" || line == "#typedecl") return true;
  if (line.size() < 2 || line[0] != '#') return false;
  return std::all_of(line.begin() + 1, line.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
}

namespace {

// `type`, `type[]` or `type name`, as found in a parameter list.
GipsyType param_type(std::string_view text, SourcePos pos) {
  text = trim(text);
  bool array = false;
  auto close = text.find(']');
  if (close != std::string_view::npos) {
    auto open = text.find('[');
    if (open == std::string_view::npos || !trim(text.substr(open + 1, close - open - 1)).empty()) {
      fail(ErrorCode::SyntaxError, "malformed array type '" + std::string(text) + "'", pos);
    }
    array = true;
    text = std::string_view(text.data(), open);
  }
  auto space = text.find_first_of(" \t\r\n");
  std::string_view type = trim(text.substr(0, space));
  if (space != std::string_view::npos) {
    auto rest = trim(text.substr(space));
    if (!rest.empty() && !is_identifier(rest)) {
      fail(ErrorCode::SyntaxError, "malformed parameter '" + std::string(text) + "'", pos);
    }
  }
  if (!is_identifier(type)) fail(ErrorCode::SyntaxError, "expected a type, got '" + std::string(type) + "'", pos);
  if (type == "void") fail(ErrorCode::SyntaxError, "void is not a parameter type", pos);
  return prototype_type(type, array);
}

EmbedBinding parse_binding(std::string_view text, SourcePos pos) {
  EmbedBinding b;
  text = trim(text);
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    auto head = trim(text.substr(0, colon));
    if (!head.empty() && head[0] == '#') head.remove_prefix(1);
    if (!head.empty() && std::all_of(head.begin(), head.end(), [](char c) { return c >= 'A' && c <= 'Z'; }) &&
        text.substr(colon + 1, 2) != "//") {
      b.langId = std::string(head);
      text = trim(text.substr(colon + 1));
    }
  }
  if (!text.empty() && text[0] == '"') {
    auto close = text.find('"', 1);
    if (close == std::string_view::npos) fail(ErrorCode::SyntaxError, "unterminated URI", pos);
    b.uri = std::string(text.substr(1, close - 1));
    text = trim(text.substr(close + 1));
    if (!text.empty()) {
      if (text[0] != ':' || !is_identifier(trim(text.substr(1)))) {
        fail(ErrorCode::SyntaxError, "malformed binding after URI", pos);
      }
      b.remoteName = std::string(trim(text.substr(1)));
    }
  } else {
    auto last = text.rfind(':');
    if (last != std::string_view::npos && is_identifier(trim(text.substr(last + 1)))) {
      b.remoteName = std::string(trim(text.substr(last + 1)));
      text = trim(text.substr(0, last));
    }
    b.uri = std::string(text);
  }
  if (b.uri.empty()) fail(ErrorCode::SyntaxError, "missing URI in binding", pos);
  return b;
}

struct Line {
  std::string_view text;
  int number;
};

std::vector<Line> lines_of(std::string_view source) {
  std::vector<Line> out;
  int n = 1;
  for (auto l : split(source, '\n')) out.push_back({l, n++});
  if (!out.empty() && out.back().text.empty() && !source.empty()) out.pop_back();
  return out;
}

// Splits declaration text into `;`-terminated items with their positions.
std::vector<std::pair<std::string, SourcePos>> statements(std::string_view body, int startLine) {
  std::string clean = strip_comments(body);
  std::vector<std::pair<std::string, SourcePos>> out;
  std::string current;
  SourcePos start;
  int line = startLine;
  int col = 1;
  for (char c : clean) {
    if (c == ';') {
      if (!trim(current).empty()) out.emplace_back(std::string(trim(current)), start);
      current.clear();
      start = {};
    } else {
      if (!start.known() && !std::isspace(static_cast<unsigned char>(c))) start = {line, col};
      current += c;
    }
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  if (!trim(current).empty()) {
    fail(ErrorCode::SyntaxError, "declaration not terminated by ';'", start);
  }
  return out;
}

}  // namespace

Prototype parse_prototype(std::string_view text, SourcePos pos) {
  text = trim(text);
  if (!text.empty() && text.back() == ';') text = trim(text.substr(0, text.size() - 1));
  Prototype p;
  p.pos = pos;
  auto open = text.find('(');
  auto close = text.find(')', open == std::string_view::npos ? 0 : open);
  if (open == std::string_view::npos || close == std::string_view::npos) {
    fail(ErrorCode::SyntaxError, "expected '(' parameter list ')' in prototype", pos);
  }
  // Head: [immutable] TYPE [[]] ID
  std::string head(trim(text.substr(0, open)));
  bool array = false;
  if (auto b = head.find('['); b != std::string::npos) {
    auto e = head.find(']', b);
    if (e == std::string::npos || !trim(std::string_view(head).substr(b + 1, e - b - 1)).empty()) {
      fail(ErrorCode::SyntaxError, "malformed return type", pos);
    }
    array = true;
    head = head.substr(0, b) + " " + head.substr(e + 1);
  }
  std::vector<std::string> words;
  for (auto w : split(head, ' ')) {
    for (auto v : split(w, '\t')) {
      for (auto x : split(v, '\n')) {
        if (!trim(x).empty()) words.emplace_back(trim(x));
      }
    }
  }
  if (!words.empty() && words[0] == "immutable") {
    p.immutable = true;
    words.erase(words.begin());
  }
  if (words.size() != 2 || !is_identifier(words[0]) || !is_identifier(words[1])) {
    fail(ErrorCode::SyntaxError, "expected '[immutable] type name(...)', got '" + std::string(text) + "'", pos);
  }
  p.returnType = prototype_type(words[0], array);
  p.name = words[1];
  auto params = trim(text.substr(open + 1, close - open - 1));
  if (!params.empty()) {
    for (auto item : split(params, ',')) p.paramTypes.push_back(param_type(item, pos));
  }
  auto rest = trim(text.substr(close + 1));
  if (!rest.empty()) {
    if (rest[0] != ':') fail(ErrorCode::SyntaxError, "unexpected text after prototype: '" + std::string(rest) + "'", pos);
    p.embed = parse_binding(rest.substr(1), pos);
  }
  return p;
}

SegmentedProgram parse_segments(std::string_view source, std::string_view defaultLang,
                                const SegmentFilter& filter) {
  SegmentedProgram prog;
  auto lines = lines_of(source);

  struct Section {
    std::string marker;
    int markerLine;
    std::string body;
  };
  std::vector<Section> sections;
  std::string preamble;
  int preambleEnd = 0;
  for (const auto& l : lines) {
    if (is_segment_marker(l.text)) {
      sections.push_back({std::string(trim(l.text).substr(1)), l.number, {}});
    } else if (sections.empty()) {
      preamble += std::string(l.text) + "\n";
      preambleEnd = l.number;
    } else {
      sections.back().body += std::string(l.text) + "\n";
    }
  }

  if (sections.empty()) {
    std::string lang(defaultLang);
    if (!filter.allows(lang)) fail(ErrorCode::InvalidSegment, "segment language " + lang + " is not allowed");
    prog.segments.push_back({lang, std::string(source), 1});
    return prog;
  }
  if (!trim(strip_comments(preamble)).empty()) {
    int line = 1;
    for (const auto& l : lines) {
      if (l.number > preambleEnd) break;
      if (!trim(strip_comments(l.text)).empty()) {
        line = l.number;
        break;
      }
    }
    fail(ErrorCode::SyntaxError, "text before the first segment marker", {line, 1});
  }
  prog.preamble = preamble;

  std::set<std::string> declared;
  for (auto& s : sections) {
    int start = s.markerLine + 1;
    if (s.marker == "funcdecl") {
      for (auto& [text, pos] : statements(s.body, start)) {
        auto p = parse_prototype(text, pos);
        if (!declared.insert(p.name).second) {
          fail(ErrorCode::DuplicatePrototype, "function '" + p.name + "' is declared more than once", pos);
        }
        prog.funcDecls.push_back(std::move(p));
      }
      prog.declSections.push_back({s.marker, s.body, start});
    } else if (s.marker == "typedecl") {
      for (auto& [text, pos] : statements(s.body, start)) {
        for (auto name : split(text, ',')) {
          name = trim(name);
          if (!is_identifier(name)) {
            fail(ErrorCode::SyntaxError, "expected a type name, got '" + std::string(name) + "'", pos);
          }
          if (std::find(prog.typeDecls.begin(), prog.typeDecls.end(), name) == prog.typeDecls.end()) {
            prog.typeDecls.emplace_back(name);
          }
        }
      }
      prog.declSections.push_back({s.marker, s.body, start});
    } else {
      if (!filter.allows(s.marker)) {
        fail(ErrorCode::InvalidSegment, "segment language " + s.marker + " is not allowed", {s.markerLine, 1});
      }
      prog.segments.push_back({s.marker, s.body, start});
    }
  }
  return prog;
}

std::string reassemble(const SegmentedProgram& prog) {
  std::vector<const Segment*> all;
  for (const auto& s : prog.segments) all.push_back(&s);
  for (const auto& s : prog.declSections) all.push_back(&s);
  std::sort(all.begin(), all.end(), [](const Segment* a, const Segment* b) { return a->startLine < b->startLine; });
  std::string out = prog.preamble;
  for (const auto* s : all) out += "#" + s->langId + "\n" + s->body;
  return out;
}

Dictionary build_stub_dictionary(const SegmentedProgram& prog) {
  Dictionary d;
  for (const auto& p : prog.funcDecls) {
    if (d.find_local(Dictionary::kGlobal, p.name)) {
      fail(ErrorCode::DuplicatePrototype, "function '" + p.name + "' is declared more than once", p.pos);
    }
    d.define(Dictionary::kGlobal, p.name,
             {EntryKind::FreeFun, p.signature(), nullptr, -1, static_cast<int>(p.paramTypes.size())});
  }
  for (const auto& t : prog.typeDecls) {
    if (d.find_local(Dictionary::kGlobal, t)) {
      fail(ErrorCode::DuplicateDefinition, "'" + t + "' is declared as both a function and a type");
    }
    d.define(Dictionary::kGlobal, t, {EntryKind::Class, t, nullptr});
  }
  return d;
}

}  // namespace lucid
