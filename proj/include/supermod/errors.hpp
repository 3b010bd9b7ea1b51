// Copyright 2026 The supermod Authors.
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

#ifndef SUPERMOD_ERRORS_HPP_
#define SUPERMOD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace supermod {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define SUPERMOD_DEFINE_ERROR(Name)                       \
  struct Name : Error {                                   \
    explicit Name(const std::string& msg = #Name)         \
        : Error(msg) {}                                   \
  }

SUPERMOD_DEFINE_ERROR(GroundSetOutOfRange);
SUPERMOD_DEFINE_ERROR(ElementOutOfRange);
SUPERMOD_DEFINE_ERROR(MismatchedGroundSet);
SUPERMOD_DEFINE_ERROR(ModularInput);
SUPERMOD_DEFINE_ERROR(NotSupermodular);
SUPERMOD_DEFINE_ERROR(UnsortedInput);
SUPERMOD_DEFINE_ERROR(NotAPermutation);
SUPERMOD_DEFINE_ERROR(NotInImage);
SUPERMOD_DEFINE_ERROR(NotPointed);
SUPERMOD_DEFINE_ERROR(DimensionMismatch);
SUPERMOD_DEFINE_ERROR(Infeasible);
SUPERMOD_DEFINE_ERROR(ZeroVector);
SUPERMOD_DEFINE_ERROR(Unbalanced);
SUPERMOD_DEFINE_ERROR(SingularSystem);
SUPERMOD_DEFINE_ERROR(EmptyAntichain);
SUPERMOD_DEFINE_ERROR(NotNondecreasing);
SUPERMOD_DEFINE_ERROR(HasLoop);
SUPERMOD_DEFINE_ERROR(NotSimple);
SUPERMOD_DEFINE_ERROR(NotZeroOne);
SUPERMOD_DEFINE_ERROR(InadmissibleSubset);
SUPERMOD_DEFINE_ERROR(ParamOutOfRange);
SUPERMOD_DEFINE_ERROR(ParseError);

#undef SUPERMOD_DEFINE_ERROR

}  // namespace supermod

#endif  // SUPERMOD_ERRORS_HPP_
