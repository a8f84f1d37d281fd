#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace funcscan {

/// The five simulated injection shapes. Payload bodies are inert structural
/// mimics; see inject.hpp.
enum class AttackType {
  kExecObfuscated,      // one-liner exec of a base64 blob
  kExecPlainScript,     // multi-line plain script body
  kOsSystemObfuscated,  // the same blob passed to os.system
  kRootFileLoader,      // Popen on a file at the program root
  kSplitPayloadConcat,  // blob split into fragments, concatenated and run
};

inline constexpr std::array<AttackType, 5> kAllAttackTypes = {
    AttackType::kExecObfuscated,      AttackType::kExecPlainScript,
    AttackType::kOsSystemObfuscated,  AttackType::kRootFileLoader,
    AttackType::kSplitPayloadConcat,
};

std::string to_string(AttackType type);
std::optional<AttackType> attack_type_from_string(std::string_view name);

}  // namespace funcscan
