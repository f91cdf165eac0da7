// Copyright 2026 The bubblelat Authors
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

#include "bubble/error.hpp"

namespace bubble {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kDuplicateLetter: return "DuplicateLetter";
    case Errc::kOutOfAlphabet: return "OutOfAlphabet";
    case Errc::kNotIncreasing: return "NotIncreasing";
    case Errc::kUnrealizable: return "Unrealizable";
    case Errc::kParse: return "ParseError";
    case Errc::kCapExceeded: return "CapExceeded";
    case Errc::kInvalidPoset: return "InvalidPoset";
    case Errc::kNotALattice: return "NotALattice";
    case Errc::kNotACover: return "NotACover";
    case Errc::kNotJoinSemidistributive: return "NotJoinSemidistributive";
    case Errc::kKappaMissing: return "KappaMissing";
    case Errc::kSizeMismatch: return "SizeMismatch";
    case Errc::kNotExtremal: return "NotExtremal";
    case Errc::kWrongFamily: return "WrongFamily";
    case Errc::kIo: return "IoError";
    case Errc::kNotATriword: return "NotATriword";
  }
  return "Unknown";
}

}  // namespace bubble
