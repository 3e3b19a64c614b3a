#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqmatch/corpus.hpp"
#include "seqmatch/lexicons.hpp"

namespace seqmatch {

// One API use inside a method, qualified as far as the file's imports and the
// JDK catalog allow. `simple` is the qualified name without its package prefix
// and without the trailing "()": "java.lang.StringBuilder.append()" ->
// "StringBuilder.append".
struct ApiToken {
  std::string qualified;
  std::string simple;
  bool is_jdk = false;

  static ApiToken from_qualified(std::string qualified);
  friend bool operator==(const ApiToken&, const ApiToken&) = default;
};

std::string simple_name_of(std::string_view qualified);

struct MethodRecord {
  std::string method_key;  // repo_id#rel_path#start_line
  std::string name;
  std::string name_lower;
  std::vector<std::string> param_types;
  std::string return_type;  // empty for constructors
  std::string body_text;
  std::vector<ApiToken> api_sequence;
  std::string content_hash;
  bool has_javadoc = false;

  double jdk_ratio() const;
  friend bool operator==(const MethodRecord&, const MethodRecord&) = default;
};

void to_json(nlohmann::json& j, const ApiToken& token);
void from_json(const nlohmann::json& j, ApiToken& token);
void to_json(nlohmann::json& j, const MethodRecord& record);
void from_json(const nlohmann::json& j, MethodRecord& record);
// Single-line JSON with fields in declaration order (one methods.jsonl line, no newline).
std::string to_json_line(const MethodRecord& record);

struct MethodKeyParts {
  std::string repo;
  std::string path;
  std::size_t line = 0;
};
MethodKeyParts split_method_key(std::string_view key);

// A type or call reference as written in a method, before qualification.
// `type` may be empty (receiver unknown) or already dotted ("java.util.List",
// "System.out"). `member` is empty for plain type references.
struct ApiReference {
  std::string type;
  std::string member;
};

struct ImportTable {
  std::map<std::string, std::string> single;         // "File" -> "java.io.File"
  std::vector<std::string> on_demand;                // "java.io" from "import java.io.*;"
  std::map<std::string, std::string> static_members; // "max" -> "java.lang.Math"
};

// Qualification priority per reference: explicit import, on-demand import (if
// the catalog lists the type in that package), implicit java.lang, passthrough.
std::vector<ApiToken> qualify_apis(std::span<const ApiReference> references, const ImportTable& imports,
                                   const JdkCatalog& catalog);

// MD5 (lowercase hex) of the source with whitespace runs collapsed to one space
// and the ends trimmed.
std::string content_hash(std::string_view body_source);
std::string md5_hex(std::string_view bytes);

struct Extraction {
  std::vector<MethodRecord> records;
  std::vector<std::string> diagnostics;
};

// Every method or constructor with a body, including methods of nested,
// local and anonymous classes, in source order. A file whose bracket
// structure cannot be recovered yields no records and one diagnostic.
Extraction extract_methods(const SourceFile& file, const JdkCatalog& catalog);

}  // namespace seqmatch
