// Copyright 2026 The hfaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hfaug/error.hpp"

namespace hfaug {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnbalancedBrackets: return "UnbalancedBrackets";
    case ErrorCode::EmptyNode: return "EmptyNode";
    case ErrorCode::TrailingInput: return "TrailingInput";
    case ErrorCode::MalformedTree: return "MalformedTree";
    case ErrorCode::BadHeadRules: return "BadHeadRules";
    case ErrorCode::UnresolvedHead: return "UnresolvedHead";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::EmptySentence: return "EmptySentence";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyQueryVocab: return "EmptyQueryVocab";
    case ErrorCode::BadEmbeddingFile: return "BadEmbeddingFile";
    case ErrorCode::EmptyPairList: return "EmptyPairList";
    case ErrorCode::TooFewRanks: return "TooFewRanks";
    case ErrorCode::UnsortedBoundaries: return "UnsortedBoundaries";
    case ErrorCode::EmptyRealCorpus: return "EmptyRealCorpus";
    case ErrorCode::SampleTooLarge: return "SampleTooLarge";
    case ErrorCode::BadCorpusLine: return "BadCorpusLine";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace hfaug
