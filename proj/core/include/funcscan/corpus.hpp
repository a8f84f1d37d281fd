#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "funcscan/attack.hpp"

namespace funcscan {

enum class Label { kBenign, kInjected };

std::string to_string(Label label);

/// One function implementation. `normalized_source` is always the
/// deterministic output of normalize_source(source).
struct FunctionRecord {
  std::string id;
  std::string function_name;
  std::string source;
  std::string normalized_source;
  std::string origin;
  Label label = Label::kBenign;
  std::optional<AttackType> attack_type;
  // Set when a distributed payload had to fall back to prologue placement.
  bool placement_fallback = false;

  bool operator==(const FunctionRecord&) const = default;
};

/// Immutable after construction; safe to share across concurrent readers.
struct CorpusIndex {
  std::vector<FunctionRecord> records;
  // function_name -> record ids, in record order.
  std::map<std::string, std::vector<std::string>> by_type;

  bool operator==(const CorpusIndex&) const = default;

  const FunctionRecord* find(std::string_view id) const;
  std::size_t size() const { return records.size(); }
};

/// Builds the by_type buckets from a record list.
CorpusIndex make_index(std::vector<FunctionRecord> records);

struct SkippedLine {
  std::size_t line = 0;
  std::string reason;

  bool operator==(const SkippedLine&) const = default;
};

struct LoadResult {
  CorpusIndex index;
  std::vector<SkippedLine> skipped;
};

enum class CorpusFormat { kJsonl };

/// Normalizes source text: line endings to LF, tabs outside string literals
/// expanded to 4 spaces, #-comments outside string literals removed, and
/// trailing whitespace stripped per line. String literals (including
/// docstrings and triple-quoted strings) pass through untouched, so the
/// semantic token sequence is unchanged. Idempotent.
///
/// Throws Error on invalid UTF-8. Comment-/whitespace-only input yields an
/// empty string; the caller decides whether to skip such records.
std::string normalize_source(std::string_view source);

/// Loads a JSONL corpus: one object per line with fields
///   {name, source, origin?, id?, label?, attack_type?, placement_fallback?}
/// Records default to benign; ids default to "<line-number>:<name>".
/// Malformed lines are skipped and reported, and when `write_skip_report`
/// is set a "<path>.skipped" JSONL file is written beside the input
/// whenever at least one line was skipped.
///
/// Throws Error on I/O failure or when no valid record was found.
LoadResult load_corpus(const std::filesystem::path& path,
                       CorpusFormat format = CorpusFormat::kJsonl,
                       bool write_skip_report = true);

/// Re-serializes a corpus in the load format (labels and attack types are
/// preserved, so an injected corpus round-trips).
void save_corpus(const CorpusIndex& index, const std::filesystem::path& path);

void write_skipped_report(const std::filesystem::path& corpus_path,
                          const std::vector<SkippedLine>& skipped);

/// Top-k function types by implementation count, ties broken by name.
std::vector<std::pair<std::string, std::size_t>> top_k_function_types(
    const CorpusIndex& index, std::size_t k);

/// Records beyond the first sharing (function_name, normalized_source).
/// Duplicates are kept in the corpus; this count is surfaced in reports.
std::size_t count_duplicate_records(const CorpusIndex& index);

}  // namespace funcscan
