#include "funcscan/corpus.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "funcscan/error.hpp"
#include "funcscan/io.hpp"

namespace funcscan {

std::string to_string(Label label) {
  return label == Label::kBenign ? "benign" : "injected";
}

std::string to_string(AttackType type) {
  switch (type) {
    case AttackType::kExecObfuscated: return "exec_obfuscated";
    case AttackType::kExecPlainScript: return "exec_plain_script";
    case AttackType::kOsSystemObfuscated: return "os_system_obfuscated";
    case AttackType::kRootFileLoader: return "root_file_loader";
    case AttackType::kSplitPayloadConcat: return "split_payload_concat";
  }
  return "unknown";
}

std::optional<AttackType> attack_type_from_string(std::string_view name) {
  for (AttackType type : kAllAttackTypes) {
    if (to_string(type) == name) return type;
  }
  return std::nullopt;
}

const FunctionRecord* CorpusIndex::find(std::string_view id) const {
  for (const auto& record : records) {
    if (record.id == id) return &record;
  }
  return nullptr;
}

CorpusIndex make_index(std::vector<FunctionRecord> records) {
  CorpusIndex index;
  index.records = std::move(records);
  for (const auto& record : index.records) {
    index.by_type[record.function_name].push_back(record.id);
  }
  return index;
}

namespace {

void rstrip(std::string& line) {
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) {
    line.pop_back();
  }
}

}  // namespace

std::string normalize_source(std::string_view source) {
  if (!is_valid_utf8(source)) throw Error("source is not valid UTF-8");

  std::string out;
  out.reserve(source.size());
  std::string line;
  bool in_string = false;
  bool triple = false;
  char quote = 0;

  auto flush_line = [&](bool add_newline) {
    // Trailing whitespace inside a triple-quoted string is string content.
    if (!(in_string && triple)) rstrip(line);
    out += line;
    if (add_newline) out += '\n';
    line.clear();
  };

  std::size_t i = 0;
  const std::size_t n = source.size();
  while (i < n) {
    const char c = source[i];
    if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < n && source[i + 1] == '\n') {
        i += 2;
      } else {
        ++i;
      }
      // A single-quoted string cannot span lines unless the line ends with
      // a continuation backslash; reset the state so stray quotes in noisy
      // records do not swallow the rest of the file.
      if (in_string && !triple && (line.empty() || line.back() != '\\')) {
        in_string = false;
      }
      flush_line(true);
      continue;
    }
    if (in_string) {
      if (c == '\\' && i + 1 < n && source[i + 1] != '\r' &&
          source[i + 1] != '\n') {
        line += c;
        line += source[i + 1];
        i += 2;
        continue;
      }
      if (c == quote) {
        if (triple) {
          if (i + 2 < n && source[i + 1] == quote && source[i + 2] == quote) {
            line.append(3, quote);
            i += 3;
            in_string = false;
            triple = false;
            continue;
          }
          line += c;
          ++i;
          continue;
        }
        line += c;
        ++i;
        in_string = false;
        continue;
      }
      line += c;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < n && source[i] != '\r' && source[i] != '\n') ++i;
      continue;
    }
    if (c == '\'' || c == '"') {
      if (i + 2 < n && source[i + 1] == c && source[i + 2] == c) {
        line.append(3, c);
        i += 3;
        in_string = true;
        triple = true;
        quote = c;
      } else {
        line += c;
        ++i;
        in_string = true;
        triple = false;
        quote = c;
      }
      continue;
    }
    if (c == '\t') {
      line.append(4, ' ');
      ++i;
      continue;
    }
    line += c;
    ++i;
  }
  if (!line.empty()) flush_line(false);

  if (out.find_first_not_of(" \n") == std::string::npos) return "";
  return out;
}

namespace {

struct ParsedLine {
  FunctionRecord record;
  std::string error;  // non-empty on failure
};

ParsedLine parse_corpus_line(std::size_t lineno, std::string_view text) {
  ParsedLine result;
  json obj = json::parse(text, nullptr, false);
  if (obj.is_discarded()) {
    result.error = "invalid JSON";
    return result;
  }
  if (!obj.is_object()) {
    result.error = "not a JSON object";
    return result;
  }
  if (!obj.contains("name") || !obj["name"].is_string() ||
      obj["name"].get<std::string>().empty()) {
    result.error = "missing or invalid 'name'";
    return result;
  }
  if (!obj.contains("source") || !obj["source"].is_string()) {
    result.error = "missing or invalid 'source'";
    return result;
  }
  FunctionRecord& record = result.record;
  record.function_name = obj["name"].get<std::string>();
  record.source = obj["source"].get<std::string>();
  if (obj.contains("origin")) {
    if (!obj["origin"].is_string()) {
      result.error = "invalid 'origin'";
      return result;
    }
    record.origin = obj["origin"].get<std::string>();
  }
  if (obj.contains("id")) {
    if (!obj["id"].is_string() || obj["id"].get<std::string>().empty()) {
      result.error = "invalid 'id'";
      return result;
    }
    record.id = obj["id"].get<std::string>();
  } else {
    record.id = std::to_string(lineno) + ":" + record.function_name;
  }
  if (obj.contains("label")) {
    const auto label = obj["label"].get<std::string>();
    if (label == "benign") {
      record.label = Label::kBenign;
    } else if (label == "injected") {
      record.label = Label::kInjected;
    } else {
      result.error = "invalid 'label'";
      return result;
    }
  }
  if (obj.contains("attack_type")) {
    auto type = attack_type_from_string(obj["attack_type"].get<std::string>());
    if (!type) {
      result.error = "invalid 'attack_type'";
      return result;
    }
    record.attack_type = type;
  }
  if ((record.label == Label::kInjected) != record.attack_type.has_value()) {
    result.error = "label and attack_type are inconsistent";
    return result;
  }
  if (obj.contains("placement_fallback")) {
    if (!obj["placement_fallback"].is_boolean()) {
      result.error = "invalid 'placement_fallback'";
      return result;
    }
    record.placement_fallback = obj["placement_fallback"].get<bool>();
  }
  try {
    record.normalized_source = normalize_source(record.source);
  } catch (const Error& e) {
    result.error = e.what();
    return result;
  }
  return result;
}

}  // namespace

LoadResult load_corpus(const std::filesystem::path& path, CorpusFormat format,
                       bool write_skip_report) {
  (void)format;  // kJsonl is the only format
  LoadResult result;
  std::vector<FunctionRecord> records;
  std::unordered_set<std::string> seen_ids;

  for_each_line(path, [&](std::size_t lineno, std::string_view text) {
    ParsedLine parsed = parse_corpus_line(lineno, text);
    if (!parsed.error.empty()) {
      result.skipped.push_back({lineno, parsed.error});
      return;
    }
    if (!seen_ids.insert(parsed.record.id).second) {
      result.skipped.push_back({lineno, "duplicate id '" + parsed.record.id + "'"});
      return;
    }
    records.push_back(std::move(parsed.record));
  });

  if (records.empty()) throw Error("no records in corpus: " + path.string());
  result.index = make_index(std::move(records));

  if (write_skip_report && !result.skipped.empty()) {
    write_skipped_report(path, result.skipped);
  }
  return result;
}

void write_skipped_report(const std::filesystem::path& corpus_path,
                          const std::vector<SkippedLine>& skipped) {
  auto report_path = corpus_path;
  report_path += ".skipped";
  std::vector<json> rows;
  rows.reserve(skipped.size());
  for (const auto& entry : skipped) {
    rows.push_back({{"line", entry.line}, {"reason", entry.reason}});
  }
  write_jsonl(report_path, rows);
}

void save_corpus(const CorpusIndex& index, const std::filesystem::path& path) {
  std::vector<json> rows;
  rows.reserve(index.records.size());
  for (const auto& record : index.records) {
    json row = {{"id", record.id},
                {"name", record.function_name},
                {"source", record.source}};
    if (!record.origin.empty()) row["origin"] = record.origin;
    if (record.label == Label::kInjected) {
      row["label"] = to_string(record.label);
      row["attack_type"] = to_string(*record.attack_type);
    }
    if (record.placement_fallback) row["placement_fallback"] = true;
    rows.push_back(std::move(row));
  }
  write_jsonl(path, rows);
}

std::vector<std::pair<std::string, std::size_t>> top_k_function_types(
    const CorpusIndex& index, std::size_t k) {
  if (k < 1) throw Error("top_k_function_types: k must be >= 1");
  std::vector<std::pair<std::string, std::size_t>> counts;
  counts.reserve(index.by_type.size());
  for (const auto& [name, ids] : index.by_type) {
    counts.emplace_back(name, ids.size());
  }
  std::sort(counts.begin(), counts.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (counts.size() > k) counts.resize(k);
  return counts;
}

std::size_t count_duplicate_records(const CorpusIndex& index) {
  std::unordered_set<std::string> seen;
  std::size_t duplicates = 0;
  for (const auto& record : index.records) {
    std::string key = record.function_name;
    key += '\0';
    key += record.normalized_source;
    if (!seen.insert(std::move(key)).second) ++duplicates;
  }
  return duplicates;
}

}  // namespace funcscan
