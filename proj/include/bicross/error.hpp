#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicross {

enum class ErrorCode {
    MalformedInput,
    UnsupportedLanguage,
    EmptyCorpus,
    CorruptStore,
    UnknownDocument,
    EmptyQuery,
    InvalidArgument,
    MissingExpansions,
    MissingTranslation,
    ProviderUnavailable,
    DimensionMismatch,
    EmptyBatch,
    ZeroVector,
    CacheCorrupt,
    OutOfRangeScore,
    EmptyScores,
    NonFiniteScore,
    MissingStageScore,
    DocSetMismatch,
    EmptyGrid,
    NoQrels,
    InvariantViolation,
    MalformedRow,
    DuplicateDoc,
    InvalidConfig,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit path) can branch on the kind, not the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace bicross
