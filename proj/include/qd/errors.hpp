// Copyright 2026 The qdiscord Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define QD_DEFINE_ERROR(NAME)          \
  struct NAME : Error {                \
    using Error::Error;                \
  }

QD_DEFINE_ERROR(DimensionMismatch);
QD_DEFINE_ERROR(NotHermitian);
QD_DEFINE_ERROR(NotPositive);
QD_DEFINE_ERROR(TraceNotOne);
QD_DEFINE_ERROR(LabelCollision);
QD_DEFINE_ERROR(UnknownLabel);
QD_DEFINE_ERROR(EmptyKeepSet);
QD_DEFINE_ERROR(LabelOverlap);
QD_DEFINE_ERROR(BadRank);
QD_DEFINE_ERROR(IncompleteInstrument);
QD_DEFINE_ERROR(NotUnitary);
QD_DEFINE_ERROR(NotProjective);
QD_DEFINE_ERROR(BadOutcomeCount);
QD_DEFINE_ERROR(InternalIdentityViolation);
QD_DEFINE_ERROR(ExpressionDisagreement);
QD_DEFINE_ERROR(UnsupportedDim);
QD_DEFINE_ERROR(BadFamilyParam);
QD_DEFINE_ERROR(ParseError);

#undef QD_DEFINE_ERROR

}  // namespace qd
