#include "seqmatch/extractor.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "java_lexer.hpp"
#include "seqmatch/kernels.hpp"

namespace seqmatch {

namespace {

using java::Token;
using java::TokenKind;

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

bool starts_upper(std::string_view s) { return !s.empty() && s.front() >= 'A' && s.front() <= 'Z'; }
bool starts_lower(std::string_view s) { return !s.empty() && s.front() >= 'a' && s.front() <= 'z'; }

bool is_type_keyword(std::string_view s) {
  return s == "class" || s == "interface" || s == "enum" || s == "record";
}

struct ClassContext {
  std::string name;
  const ClassContext* outer = nullptr;
  std::map<std::string, std::string> fields;
  std::set<std::string> type_params;

  const std::string* field_type(const std::string& var) const {
    for (const ClassContext* c = this; c; c = c->outer)
      if (auto it = c->fields.find(var); it != c->fields.end()) return &it->second;
    return nullptr;
  }
  bool is_type_param(const std::string& name_) const {
    for (const ClassContext* c = this; c; c = c->outer)
      if (c->type_params.contains(name_)) return true;
    return false;
  }
};

struct Declaration {
  std::string name;
  std::string type;  // raw type chain, no generics or array dims
  std::size_t next = 0;
};

class FileParser {
 public:
  FileParser(const SourceFile& file, const JdkCatalog& catalog)
      : file_(file), src_(file.text), catalog_(catalog), toks_(java::tokenize(file.text)) {}

  Extraction run() {
    if (std::string error; !match_brackets(error)) {
      out_.diagnostics.push_back(file_.repo_id + "/" + file_.rel_path + ": " + error);
      return std::move(out_);
    }
    parse_imports();
    scan_types(0, toks_.size(), nullptr);
    return std::move(out_);
  }

 private:
  const Token& tok(std::size_t i) const {
    static const Token kEnd{TokenKind::Punct, "", 0, 0, false};
    return i < toks_.size() ? toks_[i] : kEnd;
  }

  bool match_brackets(std::string& error) {
    match_.assign(toks_.size(), kNone);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < toks_.size(); ++i) {
      const Token& t = toks_[i];
      if (t.kind != TokenKind::Punct) continue;
      if (t.is("(") || t.is("{") || t.is("[")) {
        stack.push_back(i);
      } else if (t.is(")") || t.is("}") || t.is("]")) {
        const char open = t.is(")") ? '(' : t.is("}") ? '{' : '[';
        if (stack.empty() || toks_[stack.back()].text.front() != open) {
          error = "unbalanced '" + std::string(t.text) + "' at line " + std::to_string(t.line);
          return false;
        }
        match_[stack.back()] = i;
        match_[i] = stack.back();
        stack.pop_back();
      }
    }
    if (!stack.empty()) {
      error = "unclosed '" + std::string(toks_[stack.back()].text) + "' opened at line " +
              std::to_string(toks_[stack.back()].line);
      return false;
    }
    return true;
  }

  // Reads "a.b.C" starting at i; returns the joined chain and the index of its last token.
  std::pair<std::string, std::size_t> read_chain(std::size_t i) const {
    std::string chain(tok(i).text);
    std::size_t last = i;
    while (tok(last + 1).is(".") && tok(last + 2).ident() && !java::is_keyword(tok(last + 2).text)) {
      chain += ".";
      chain += tok(last + 2).text;
      last += 2;
    }
    return {chain, last};
  }

  void parse_imports() {
    for (std::size_t i = 0; i < toks_.size(); ++i) {
      if (!toks_[i].is("import")) continue;
      std::size_t j = i + 1;
      const bool is_static = tok(j).is("static");
      if (is_static) ++j;
      if (!tok(j).ident()) continue;
      auto [chain, last] = read_chain(j);
      const bool wildcard = tok(last + 1).is(".") && tok(last + 2).is("*");
      const auto dot = chain.rfind('.');
      if (dot == std::string::npos) continue;
      if (is_static) {
        if (!wildcard) imports_.static_members[chain.substr(dot + 1)] = chain.substr(0, dot);
      } else if (wildcard) {
        imports_.on_demand.push_back(chain);
      } else {
        imports_.single[chain.substr(dot + 1)] = chain;
      }
    }
  }

  // i at '<'. Returns the index just past the matching '>' when the group only
  // holds type syntax, otherwise kNone.
  std::size_t skip_generic(std::size_t i, std::size_t end) const {
    int depth = 0;
    for (std::size_t j = i; j < end; ++j) {
      const Token& t = toks_[j];
      if (t.is("<")) {
        ++depth;
      } else if (t.is(">")) {
        if (--depth == 0) return j + 1;
      } else if (t.ident()) {
        if (java::is_keyword(t.text) && !java::is_primitive(t.text) && !t.is("extends") && !t.is("super"))
          return kNone;
      } else if (!(t.is(".") || t.is(",") || t.is("?") || t.is("[") || t.is("]") || t.is("&") || t.is("@"))) {
        return kNone;
      }
    }
    return kNone;
  }

  // i at '>'. Index of the '<' opening a well-formed generic group that ends at i.
  std::size_t generic_open_before(std::size_t i, std::size_t begin) const {
    int depth = 0;
    for (std::size_t j = i + 1; j-- > begin;) {
      const Token& t = toks_[j];
      if (t.is(">")) ++depth;
      else if (t.is("<")) {
        if (--depth == 0) return skip_generic(j, i + 1) == i + 1 ? j : kNone;
      } else if (!(t.ident() || t.is(".") || t.is(",") || t.is("?") || t.is("[") || t.is("]") || t.is("&"))) {
        return kNone;
      }
    }
    return kNone;
  }

  // Type parameter names declared in the group starting at '<' (index i).
  void collect_type_params(std::size_t i, std::size_t end, std::set<std::string>& out) const {
    const std::size_t close = skip_generic(i, end);
    if (close == kNone) return;
    int depth = 0;
    for (std::size_t j = i; j < close; ++j) {
      if (toks_[j].is("<")) ++depth;
      else if (toks_[j].is(">")) --depth;
      else if (depth == 1 && toks_[j].ident() && !java::is_keyword(toks_[j].text) &&
               (toks_[j - 1].is("<") || toks_[j - 1].is(",")))
        out.insert(std::string(toks_[j].text));
    }
  }

  // "Type name" followed by = ; , : or ) starting at i.
  std::optional<Declaration> try_declaration(std::size_t i, std::size_t end) const {
    const Token& t = tok(i);
    if (!t.ident() || (i > 0 && (toks_[i - 1].is(".") || toks_[i - 1].is("new") || toks_[i - 1].is("@"))))
      return std::nullopt;
    if (java::is_keyword(t.text) && !java::is_primitive(t.text)) return std::nullopt;
    auto [chain, last] = read_chain(i);
    const bool typed = java::is_primitive(t.text) || t.is("var") || starts_upper(t.text) ||
                       (chain.find('.') != std::string::npos && starts_upper(tok(last).text));
    if (!typed || t.is("void")) return std::nullopt;
    std::size_t j = last + 1;
    if (tok(j).is("<")) {
      j = skip_generic(j, end);
      if (j == kNone) return std::nullopt;
    }
    while (tok(j).is("[") && tok(j + 1).is("]")) j += 2;
    if (tok(j).is("...")) ++j;
    const Token& name = tok(j);
    if (!name.ident() || java::is_keyword(name.text) || j >= end) return std::nullopt;
    const Token& term = tok(j + 1);
    if (!(term.is("=") || term.is(";") || term.is(",") || term.is(":") || term.is(")"))) return std::nullopt;

    Declaration decl{std::string(name.text), chain, j + 1};
    if (t.is("var")) {
      if (!(term.is("=") && tok(j + 2).is("new") && tok(j + 3).ident())) return std::nullopt;
      decl.type = read_chain(j + 3).first;
    }
    return decl;
  }

  // Start of the type header at i ("class Foo ... {"); returns the '{' index or kNone.
  std::size_t type_body_open(std::size_t i, std::size_t end, ClassContext& child) const {
    if (!is_type_keyword(toks_[i].text) || (i > 0 && toks_[i - 1].is("."))) return kNone;
    const Token& name = tok(i + 1);
    if (!name.ident() || java::is_keyword(name.text)) return kNone;
    if (toks_[i].is("record") && !(tok(i + 2).is("(") || tok(i + 2).is("<"))) return kNone;
    child.name = std::string(name.text);
    if (tok(i + 2).is("<")) collect_type_params(i + 2, end, child.type_params);
    for (std::size_t j = i + 2; j < end; ++j) {
      const Token& t = toks_[j];
      if (t.is("{")) return j;
      if (t.is(";") || t.is("}") || t.is("=")) return kNone;
      if (t.is("(") || t.is("[")) j = match_[j];
    }
    return kNone;
  }

  // '{' at i opening an anonymous class body: returns the instantiated type chain.
  std::optional<std::string> anonymous_type(std::size_t i) const {
    if (i == 0 || !toks_[i - 1].is(")")) return std::nullopt;
    std::size_t j = match_[i - 1];
    if (j == 0) return std::nullopt;
    --j;
    if (toks_[j].is(">")) {
      const std::size_t open = generic_open_before(j, 0);
      if (open == kNone || open == 0) return std::nullopt;
      j = open - 1;
    }
    if (!toks_[j].ident()) return std::nullopt;
    std::size_t root = j;
    while (root >= 2 && toks_[root - 1].is(".") && toks_[root - 2].ident()) root -= 2;
    if (root == 0 || !toks_[root - 1].is("new")) return std::nullopt;
    return read_chain(root).first;
  }

  void collect_fields(std::size_t begin, std::size_t end, ClassContext& ctx) const {
    for (std::size_t i = begin; i < end; ++i) {
      const Token& t = toks_[i];
      if (t.is("{") || t.is("(") || t.is("[")) {
        i = match_[i];
        continue;
      }
      if (auto decl = try_declaration(i, end)) ctx.fields.emplace(decl->name, decl->type);
    }
  }

  // Finds type declarations at any depth of [begin, end) outside method bodies.
  void scan_types(std::size_t begin, std::size_t end, const ClassContext* outer) {
    for (std::size_t i = begin; i < end; ++i) {
      ClassContext child;
      child.outer = outer;
      const std::size_t open = type_body_open(i, end, child);
      if (open == kNone) continue;
      parse_type_body(open + 1, match_[open], child);
      i = match_[open];
    }
  }

  bool looks_like_method(std::size_t i, std::size_t decl_start, const ClassContext& ctx) const {
    const std::string_view name = toks_[i].text;
    if (java::is_keyword(name)) return false;
    for (std::size_t k = decl_start; k < i; ++k) {
      const Token& t = toks_[k];
      if (t.is("=") || t.is("new") || t.is("->") || t.is("return")) return false;
    }
    if (i == decl_start) return name == ctx.name;
    const Token& prev = toks_[i - 1];
    if (prev.ident()) {
      if (java::is_primitive(prev.text)) return true;
      if (java::is_modifier(prev.text)) return name == ctx.name;
      return !java::is_keyword(prev.text);
    }
    if (prev.is("]")) return true;
    if (prev.is(">")) {
      const std::size_t open = generic_open_before(i - 1, decl_start);
      if (open == kNone) return false;
      if (open == decl_start) return true;
      const Token& before = toks_[open - 1];
      return before.ident() || before.is(")");  // ")" closes an annotation argument list
    }
    if (prev.is(")")) {
      // "@Annotation(...) Foo()" constructor
      return name == ctx.name;
    }
    return false;
  }

  void parse_type_body(std::size_t begin, std::size_t end, ClassContext& ctx) {
    collect_fields(begin, end, ctx);
    std::size_t decl_start = begin;
    std::size_t i = begin;
    while (i < end) {
      const Token& t = toks_[i];
      if (t.is(";") || t.is(",")) {
        decl_start = ++i;
        continue;
      }
      if (t.is("{")) {
        ClassContext block;
        block.outer = &ctx;
        block.name = ctx.name;
        parse_type_body(i + 1, match_[i], block);
        decl_start = i = match_[i] + 1;
        continue;
      }
      if (t.is("(") || t.is("[")) {
        i = match_[i] + 1;
        continue;
      }
      if (is_type_keyword(t.text)) {
        ClassContext child;
        child.outer = &ctx;
        const std::size_t open = type_body_open(i, end, child);
        if (open != kNone) {
          parse_type_body(open + 1, match_[open], child);
          decl_start = i = match_[open] + 1;
          continue;
        }
      }
      if (t.ident() && tok(i + 1).is("(") && looks_like_method(i, decl_start, ctx)) {
        const std::size_t rparen = match_[i + 1];
        std::size_t j = rparen + 1;
        while (j < end && !toks_[j].is("{") && !toks_[j].is(";") && !toks_[j].is("}")) {
          if (toks_[j].is("(") || toks_[j].is("[")) j = match_[j];
          ++j;
        }
        if (j < end && toks_[j].is("{")) {
          emit_method(decl_start, i, i + 1, j, ctx);
          decl_start = i = match_[j] + 1;
          continue;
        }
        i = j;
        continue;
      }
      ++i;
    }
  }

  std::string join_tokens(std::size_t begin, std::size_t end) const {
    std::string out;
    for (std::size_t k = begin; k < end; ++k) {
      const Token& t = toks_[k];
      if (!out.empty()) {
        const Token& prev = toks_[k - 1];
        const bool wordy = (prev.ident() || prev.is("?")) && (t.ident() || t.is("?"));
        if (prev.is(",") || wordy || t.is("&") || prev.is("&")) out.push_back(' ');
      }
      out.append(t.text);
    }
    return out;
  }

  struct Param {
    std::string type_text;
    std::string raw_type;
    std::string name;
  };

  std::vector<Param> parse_params(std::size_t begin, std::size_t end) const {
    std::vector<Param> params;
    std::size_t start = begin;
    int angle = 0;
    for (std::size_t k = begin; k <= end; ++k) {
      if (k < end) {
        const Token& t = toks_[k];
        if (t.is("<")) ++angle;
        else if (t.is(">")) --angle;
        else if (t.is("(") || t.is("[") || t.is("{")) k = match_[k];
        if (!(t.is(",") && angle == 0)) continue;
      }
      // [start, k) is one parameter: annotations, modifiers, type, name
      std::size_t a = start;
      while (a < k) {
        if (toks_[a].is("@") && a + 1 < k) {
          a = read_chain(a + 1).second + 1;
          if (a < k && toks_[a].is("(")) a = match_[a] + 1;
        } else if (toks_[a].is("final")) {
          ++a;
        } else {
          break;
        }
      }
      if (k > a + 1) {
        std::size_t type_end = k - 1;  // name token excluded
        while (type_end > a && toks_[type_end].is("]") && toks_[type_end - 1].is("[")) {
          // "String args[]" dims after the name
          if (type_end >= 2 && toks_[type_end - 2].ident()) {
            type_end -= 2;
          } else {
            break;
          }
        }
        if (type_end > a && toks_[type_end].ident()) {
          params.push_back({join_tokens(a, type_end), read_chain(a).first, std::string(toks_[type_end].text)});
        }
      }
      start = k + 1;
    }
    return params;
  }

  std::optional<std::string> resolve_variable(const std::string& var,
                                              const std::map<std::string, std::string>& locals,
                                              const ClassContext& ctx) const {
    if (auto it = locals.find(var); it != locals.end()) return it->second;
    if (const auto* field = ctx.field_type(var)) return *field;
    return std::nullopt;
  }

  // Receiver ending at token r; "" when unknown.
  std::string receiver_type(std::size_t r, const std::map<std::string, std::string>& locals,
                            const ClassContext& ctx) const {
    const Token& t = toks_[r];
    if (t.kind == TokenKind::String) return "String";
    if (!t.ident()) return "";
    std::size_t root = r;
    while (root >= 2 && toks_[root - 1].is(".") && toks_[root - 2].ident()) root -= 2;
    std::vector<std::string> segs;
    for (std::size_t k = root; k <= r; k += 2) segs.emplace_back(toks_[k].text);

    if (segs.size() == 1) {
      const auto& s = segs[0];
      if (s == "this") return ctx.name;
      if (s == "super") return "";
      if (auto type = resolve_variable(s, locals, ctx)) return *type;
      if (starts_upper(s)) return s;
      return "";
    }
    if (segs[0] == "this" && segs.size() == 2) {
      if (const auto* field = ctx.field_type(segs[1])) return *field;
      return "";
    }
    if (resolve_variable(segs[0], locals, ctx) || segs[0] == "this" || segs[0] == "super") return "";
    std::string joined = segs[0];
    for (std::size_t k = 1; k < segs.size(); ++k) joined += "." + segs[k];
    if (starts_upper(segs[0])) return joined;
    if (starts_lower(segs[0]) &&
        std::any_of(segs.begin() + 1, segs.end(), [](const std::string& s) { return starts_upper(s); }))
      return joined;
    return "";
  }

  bool skip_type(const std::string& type, const ClassContext& ctx, const std::set<std::string>& method_params) const {
    return type.empty() || java::is_primitive(type) || type == "var" || method_params.contains(type) ||
           ctx.is_type_param(type);
  }

  std::vector<ApiReference> collect_apis(std::size_t lbrace, const std::vector<Param>& params,
                                         const std::string& return_type,
                                         const std::set<std::string>& method_type_params,
                                         const ClassContext& ctx) const {
    std::vector<ApiReference> refs;
    std::map<std::string, std::string> locals;
    const std::size_t rbrace = match_[lbrace];

    for (const auto& p : params) {
      locals[p.name] = p.raw_type;
      if (!skip_type(p.raw_type, ctx, method_type_params)) refs.push_back({p.raw_type, ""});
    }

    std::vector<std::size_t> foreign_until;  // closing braces of lambda / nested class bodies
    std::vector<std::size_t> pending_returns;
    for (std::size_t k = lbrace + 1; k < rbrace; ++k) {
      while (!foreign_until.empty() && k > foreign_until.back()) foreign_until.pop_back();
      while (!pending_returns.empty() && pending_returns.back() == k) {
        pending_returns.pop_back();
        refs.push_back({return_type, ""});
      }
      const Token& t = toks_[k];

      if (t.is("{")) {
        if (toks_[k - 1].is("->") || anonymous_type(k)) foreign_until.push_back(match_[k]);
        continue;
      }
      if (is_type_keyword(t.text)) {
        ClassContext scratch;
        const std::size_t open = type_body_open(k, rbrace, scratch);
        if (open != kNone) foreign_until.push_back(match_[open]);
      }
      if (t.is("return") && foreign_until.empty() && !tok(k + 1).is(";") &&
          !skip_type(return_type, ctx, method_type_params)) {
        std::size_t j = k + 1;
        while (j < rbrace && !toks_[j].is(";")) {
          if (toks_[j].is("(") || toks_[j].is("[") || toks_[j].is("{")) j = match_[j];
          ++j;
        }
        if (j < rbrace) pending_returns.insert(pending_returns.begin(), j);
        std::sort(pending_returns.begin(), pending_returns.end(), std::greater<>());
      }
      if (auto decl = try_declaration(k, rbrace)) locals[decl->name] = decl->type;

      if (t.is("new") && tok(k + 1).ident()) {
        auto [chain, last] = read_chain(k + 1);
        std::size_t j = last + 1;
        if (tok(j).is("<")) j = skip_generic(j, rbrace);
        if (j != kNone && tok(j).is("(") && !skip_type(chain, ctx, method_type_params)) refs.push_back({chain, ""});
        continue;
      }
      if (t.is("::") && k > 0) {
        const Token& rhs = tok(k + 1);
        const std::string lhs = receiver_type(k - 1, locals, ctx);
        if (rhs.is("new")) {
          if (!lhs.empty()) refs.push_back({lhs, ""});
        } else if (rhs.ident()) {
          refs.push_back({lhs, std::string(rhs.text)});
        }
        continue;
      }
      if (!t.ident() || !tok(k + 1).is("(") || java::is_keyword(t.text)) continue;

      const Token& prev = toks_[k - 1];
      if (prev.is("new") || prev.is("@") || prev.is("::")) continue;
      if (prev.is(".")) {
        refs.push_back({receiver_type(k - 2, locals, ctx), std::string(t.text)});
        continue;
      }
      if (prev.ident() && (!java::is_keyword(prev.text) || java::is_primitive(prev.text))) continue;
      if (prev.is("]")) continue;
      if (prev.is(">") && generic_open_before(k - 1, lbrace) != kNone) continue;

      const std::string member(t.text);
      if (auto it = imports_.static_members.find(member); it != imports_.static_members.end()) {
        refs.push_back({it->second, member});
      } else {
        refs.push_back({ctx.name, member});
      }
    }
    while (!pending_returns.empty()) {
      pending_returns.pop_back();
      refs.push_back({return_type, ""});
    }
    return refs;
  }

  void emit_method(std::size_t decl_start, std::size_t name_i, std::size_t lparen, std::size_t lbrace,
                   const ClassContext& ctx) {
    const std::size_t rparen = match_[lparen];
    const std::size_t rbrace = match_[lbrace];

    std::set<std::string> method_type_params;
    std::size_t k = decl_start;
    while (k < name_i) {
      const Token& t = toks_[k];
      if (t.is("@") && k + 1 < name_i && !tok(k + 1).is("interface")) {
        k = read_chain(k + 1).second + 1;
        if (k < name_i && toks_[k].is("(")) k = match_[k] + 1;
      } else if (t.ident() && java::is_modifier(t.text)) {
        ++k;
      } else if (t.is("<")) {
        collect_type_params(k, name_i, method_type_params);
        const std::size_t close = skip_generic(k, name_i);
        k = close == kNone ? k + 1 : close;
      } else {
        break;
      }
    }
    const bool constructor = k == name_i;

    MethodRecord record;
    record.name = std::string(toks_[name_i].text);
    record.name_lower = kernels::lowered(record.name);
    const auto params = parse_params(lparen + 1, rparen);
    for (const auto& p : params) record.param_types.push_back(p.type_text);
    record.return_type = constructor ? "" : join_tokens(k, name_i);
    const std::size_t start = toks_[decl_start].offset;
    record.body_text = std::string(src_.substr(start, toks_[rbrace].offset + 1 - start));
    record.content_hash = content_hash(record.body_text);
    record.has_javadoc = toks_[decl_start].doc_before;
    record.method_key = file_.repo_id + "#" + file_.rel_path + "#" + std::to_string(toks_[decl_start].line);

    std::string raw_return;
    if (!constructor) raw_return = read_chain(k).first;
    const auto refs = collect_apis(lbrace, params, raw_return, method_type_params, ctx);
    record.api_sequence = qualify_apis(refs, imports_, catalog_);

    if (keys_.insert(record.method_key).second) {
      out_.records.push_back(std::move(record));
    } else {
      out_.diagnostics.push_back(file_.repo_id + "/" + file_.rel_path + ": second method '" + record.name +
                                 "' starting on line " + std::to_string(toks_[decl_start].line) +
                                 " dropped (duplicate method_key)");
    }

    // Named local classes and anonymous classes inside the body.
    for (std::size_t b = lbrace + 1; b < rbrace; ++b) {
      if (toks_[b].is("{")) {
        if (anonymous_type(b)) {
          ClassContext child;
          child.outer = &ctx;
          child.name = ctx.name;
          parse_type_body(b + 1, match_[b], child);
          b = match_[b];
        }
        continue;
      }
      if (is_type_keyword(toks_[b].text)) {
        ClassContext child;
        child.outer = &ctx;
        const std::size_t open = type_body_open(b, rbrace, child);
        if (open != kNone) {
          parse_type_body(open + 1, match_[open], child);
          b = match_[open];
        }
      }
    }
  }

  const SourceFile& file_;
  std::string_view src_;
  const JdkCatalog& catalog_;
  std::vector<Token> toks_;
  std::vector<std::size_t> match_;
  ImportTable imports_;
  Extraction out_;
  std::set<std::string> keys_;
};

}  // namespace

std::string simple_name_of(std::string_view qualified) {
  std::string_view body = qualified;
  if (body.ends_with("()")) body.remove_suffix(2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (starts_upper(body.substr(pos))) return std::string(body.substr(pos));
    const auto dot = body.find('.', pos);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  const auto dot = body.rfind('.');
  return std::string(dot == std::string_view::npos ? body : body.substr(dot + 1));
}

ApiToken ApiToken::from_qualified(std::string qualified) {
  ApiToken token;
  token.simple = simple_name_of(qualified);
  token.is_jdk = is_jdk_qualified(qualified);
  token.qualified = std::move(qualified);
  return token;
}

double MethodRecord::jdk_ratio() const {
  if (api_sequence.empty()) return 0.0;
  const auto jdk = std::count_if(api_sequence.begin(), api_sequence.end(), [](const ApiToken& t) { return t.is_jdk; });
  return static_cast<double>(jdk) / static_cast<double>(api_sequence.size());
}

std::vector<ApiToken> qualify_apis(std::span<const ApiReference> references, const ImportTable& imports,
                                   const JdkCatalog& catalog) {
  std::vector<ApiToken> tokens;
  tokens.reserve(references.size());
  for (const auto& ref : references) {
    std::string base;
    if (!ref.type.empty()) {
      const std::string first = ref.type.substr(0, ref.type.find('.'));
      if (first.size() != ref.type.size() && starts_lower(first)) {
        base = ref.type;
      } else if (auto it = imports.single.find(first); it != imports.single.end()) {
        base = it->second + ref.type.substr(first.size());
      } else {
        for (const auto& package : imports.on_demand) {
          if (auto hit = catalog.qualify_in_package(package, ref.type)) {
            base = *hit;
            break;
          }
        }
        if (base.empty()) base = catalog.qualify_implicit(ref.type).value_or(ref.type);
      }
    }
    std::string qualified;
    if (ref.member.empty()) qualified = base;
    else if (base.empty()) qualified = ref.member + "()";
    else qualified = base + "." + ref.member + "()";
    tokens.push_back(ApiToken::from_qualified(std::move(qualified)));
  }
  return tokens;
}

Extraction extract_methods(const SourceFile& file, const JdkCatalog& catalog) {
  return FileParser(file, catalog).run();
}

MethodKeyParts split_method_key(std::string_view key) {
  MethodKeyParts parts;
  const auto last = key.rfind('#');
  if (last == std::string_view::npos) {
    parts.repo = std::string(key);
    return parts;
  }
  const auto middle = key.rfind('#', last == 0 ? 0 : last - 1);
  parts.line = static_cast<std::size_t>(std::strtoull(std::string(key.substr(last + 1)).c_str(), nullptr, 10));
  if (middle == std::string_view::npos || middle == last) {
    parts.repo = std::string(key.substr(0, last));
    return parts;
  }
  parts.repo = std::string(key.substr(0, middle));
  parts.path = std::string(key.substr(middle + 1, last - middle - 1));
  return parts;
}

void to_json(nlohmann::json& j, const ApiToken& token) {
  j = nlohmann::json{{"qualified", token.qualified}, {"simple", token.simple}, {"is_jdk", token.is_jdk}};
}

void from_json(const nlohmann::json& j, ApiToken& token) {
  j.at("qualified").get_to(token.qualified);
  j.at("simple").get_to(token.simple);
  j.at("is_jdk").get_to(token.is_jdk);
}

void to_json(nlohmann::json& j, const MethodRecord& r) {
  j = nlohmann::json::parse(to_json_line(r));
}

void from_json(const nlohmann::json& j, MethodRecord& r) {
  j.at("method_key").get_to(r.method_key);
  j.at("name").get_to(r.name);
  j.at("name_lower").get_to(r.name_lower);
  j.at("param_types").get_to(r.param_types);
  j.at("return_type").get_to(r.return_type);
  j.at("body_text").get_to(r.body_text);
  j.at("api_sequence").get_to(r.api_sequence);
  j.at("content_hash").get_to(r.content_hash);
  j.at("has_javadoc").get_to(r.has_javadoc);
}

std::string to_json_line(const MethodRecord& r) {
  nlohmann::ordered_json api = nlohmann::ordered_json::array();
  for (const auto& t : r.api_sequence) {
    api.push_back({{"qualified", t.qualified}, {"simple", t.simple}, {"is_jdk", t.is_jdk}});
  }
  nlohmann::ordered_json j;
  j["method_key"] = r.method_key;
  j["name"] = r.name;
  j["name_lower"] = r.name_lower;
  j["param_types"] = r.param_types;
  j["return_type"] = r.return_type;
  j["body_text"] = r.body_text;
  j["api_sequence"] = std::move(api);
  j["content_hash"] = r.content_hash;
  j["has_javadoc"] = r.has_javadoc;
  return j.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace);
}

}  // namespace seqmatch
