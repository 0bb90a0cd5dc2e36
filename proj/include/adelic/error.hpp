// Copyright 2026 The adelic-volumes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace adelic {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kOutOfDomain,
  kEmptyDomain,
  kUnboundedBelow,
  kInvalidPotential,
  kInvalidPlace,
  kInvalidPolynomial,
  kDegreeBound,
  kNonToricBaseCondition,
  kEmptyPolytope,
  kNotEffectiveInput,
  kUnboundedPerturbation,
  kNotBig,
  kNotNef,
  kNotRelativelyNef,
  kIrrationalCrossing,
  kUnknownSuite,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kEmptyDomain: return "EmptyDomain";
    case ErrorCode::kUnboundedBelow: return "UnboundedBelow";
    case ErrorCode::kInvalidPotential: return "InvalidPotential";
    case ErrorCode::kInvalidPlace: return "InvalidPlace";
    case ErrorCode::kInvalidPolynomial: return "InvalidPolynomial";
    case ErrorCode::kDegreeBound: return "DegreeBound";
    case ErrorCode::kNonToricBaseCondition: return "NonToricBaseCondition";
    case ErrorCode::kEmptyPolytope: return "EmptyPolytope";
    case ErrorCode::kNotEffectiveInput: return "NotEffectiveInput";
    case ErrorCode::kUnboundedPerturbation: return "UnboundedPerturbation";
    case ErrorCode::kNotBig: return "NotBig";
    case ErrorCode::kNotNef: return "NotNef";
    case ErrorCode::kNotRelativelyNef: return "NotRelativelyNef";
    case ErrorCode::kIrrationalCrossing: return "IrrationalCrossing";
    case ErrorCode::kUnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace adelic
