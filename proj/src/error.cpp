#include "bicross/error.hpp"

namespace bicross {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::UnsupportedLanguage: return "UnsupportedLanguage";
        case ErrorCode::EmptyCorpus: return "EmptyCorpus";
        case ErrorCode::CorruptStore: return "CorruptStore";
        case ErrorCode::UnknownDocument: return "UnknownDocument";
        case ErrorCode::EmptyQuery: return "EmptyQuery";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::MissingExpansions: return "MissingExpansions";
        case ErrorCode::MissingTranslation: return "MissingTranslation";
        case ErrorCode::ProviderUnavailable: return "ProviderUnavailable";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::EmptyBatch: return "EmptyBatch";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::CacheCorrupt: return "CacheCorrupt";
        case ErrorCode::OutOfRangeScore: return "OutOfRangeScore";
        case ErrorCode::EmptyScores: return "EmptyScores";
        case ErrorCode::NonFiniteScore: return "NonFiniteScore";
        case ErrorCode::MissingStageScore: return "MissingStageScore";
        case ErrorCode::DocSetMismatch: return "DocSetMismatch";
        case ErrorCode::EmptyGrid: return "EmptyGrid";
        case ErrorCode::NoQrels: return "NoQrels";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::MalformedRow: return "MalformedRow";
        case ErrorCode::DuplicateDoc: return "DuplicateDoc";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace bicross
