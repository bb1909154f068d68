#include "xml_dom.hpp"

#include <expat.h>

#include <memory>

namespace idpl::xml {
namespace {

struct Builder {
  XML_Parser parser = nullptr;
  std::vector<Element> stack;
  std::optional<Element> root;

  static void on_start(void* user, const XML_Char* name, const XML_Char** attrs) {
    auto* self = static_cast<Builder*>(user);
    Element e;
    e.name = name;
    e.line = static_cast<int>(XML_GetCurrentLineNumber(self->parser));
    e.column = static_cast<int>(XML_GetCurrentColumnNumber(self->parser)) + 1;
    for (int i = 0; attrs[i]; i += 2) e.attributes.emplace_back(attrs[i], attrs[i + 1]);
    self->stack.push_back(std::move(e));
  }

  static void on_end(void* user, const XML_Char*) {
    auto* self = static_cast<Builder*>(user);
    Element done = std::move(self->stack.back());
    self->stack.pop_back();
    if (self->stack.empty()) {
      self->root = std::move(done);
    } else {
      self->stack.back().children.push_back(std::move(done));
    }
  }

  static void on_text(void* user, const XML_Char* s, int len) {
    auto* self = static_cast<Builder*>(user);
    if (!self->stack.empty()) self->stack.back().text.append(s, static_cast<std::size_t>(len));
  }
};

struct ParserDeleter {
  void operator()(XML_Parser p) const { XML_ParserFree(p); }
};

}  // namespace

const std::string* Element::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

ParseResult parse(std::string_view document) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, ParserDeleter> parser(
      XML_ParserCreate("UTF-8"));
  Builder b;
  b.parser = parser.get();
  XML_SetUserData(parser.get(), &b);
  XML_SetElementHandler(parser.get(), &Builder::on_start, &Builder::on_end);
  XML_SetCharacterDataHandler(parser.get(), &Builder::on_text);

  ParseResult result;
  if (XML_Parse(parser.get(), document.data(), static_cast<int>(document.size()), XML_TRUE) ==
      XML_STATUS_ERROR) {
    Diagnostic d = make_error("MALFORMED_XML", XML_ErrorString(XML_GetErrorCode(parser.get())));
    d.line = static_cast<int>(XML_GetCurrentLineNumber(parser.get()));
    d.column = static_cast<int>(XML_GetCurrentColumnNumber(parser.get())) + 1;
    result.error = std::move(d);
    return result;
  }
  result.root = std::move(b.root);
  return result;
}

std::string trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && ws(s[b])) ++b;
  while (e > b && ws(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string escape_text(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_attribute(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace idpl::xml
