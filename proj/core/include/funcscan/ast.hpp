#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "funcscan/error.hpp"

namespace funcscan {

/// Grammar node kinds. Leaf kinds (name, number, string, bool, none) carry
/// the token's literal text; all other kinds are structural.
enum class NodeKind {
  kModule,
  kFuncDef,
  kParams,
  kIfStmt,
  kForStmt,
  kWhileStmt,
  kReturnStmt,
  kAssign,
  kAugAssign,
  kExprStmt,
  kCall,
  kAttribute,
  kSubscript,
  kBinOp,
  kUnaryOp,
  kCompare,
  kName,
  kNumber,
  kString,
  kBool,
  kNone,
  kListLit,
  kDictLit,
  kTupleLit,
  kImportStmt,
  kRaiseStmt,
  kTryStmt,
  kWithStmt,
  kPassStmt,
};

std::string_view to_string(NodeKind kind);
std::optional<NodeKind> node_kind_from_string(std::string_view name);

struct AstNode {
  NodeKind kind;
  std::vector<AstNode> children;
  std::optional<std::string> token;  // present on leaves only
  int line = 0;    // 1-based position of the node's first token, 0 if unknown
  int column = 0;

  bool is_leaf() const { return token.has_value(); }
};

/// Structural equality; positions are ignored.
bool same_tree(const AstNode& a, const AstNode& b);

/// Leaves in left-to-right source order.
std::vector<const AstNode*> collect_leaves(const AstNode& tree);

/// String leaf lexemes longer than this many characters are replaced by a
/// "str:len=N" token so that huge payload blobs hash stably.
inline constexpr std::size_t kMaxStringLeafLength = 64;

/// Parses one function ("def ..." with an indentation-based body, already
/// normalized) into its func_def root. Every value-bearing source token
/// (names, numbers, strings, True/False/None) appears as exactly one leaf in
/// source order. Syntax outside the grammar subset raises ParseError with
/// the offending position; callers skip such records with a report.
AstNode parse_function(std::string_view normalized_source);

/// JSON tree format used for pre-parsed AST ingestion and test fixtures:
/// leaves are {"kind": ..., "token": ...}, internal nodes
/// {"kind": ..., "children": [...]}.
nlohmann::json ast_to_json(const AstNode& tree);
AstNode ast_from_json(const nlohmann::json& value);

}  // namespace funcscan
