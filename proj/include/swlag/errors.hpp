// Copyright 2026 The swlag Authors
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

#ifndef SWLAG_ERRORS_HPP
#define SWLAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace swlag {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SWLAG_DEFINE_ERROR(Name)    \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  }

SWLAG_DEFINE_ERROR(DomainError);
SWLAG_DEFINE_ERROR(BranchCutError);
SWLAG_DEFINE_ERROR(SingularPointError);
SWLAG_DEFINE_ERROR(PhaseUndefined);
SWLAG_DEFINE_ERROR(AngleUndefined);
SWLAG_DEFINE_ERROR(QuadratureError);
SWLAG_DEFINE_ERROR(UnwrapError);
SWLAG_DEFINE_ERROR(ResolutionError);
SWLAG_DEFINE_ERROR(AliasError);
SWLAG_DEFINE_ERROR(FitError);
SWLAG_DEFINE_ERROR(ParameterWarning);
SWLAG_DEFINE_ERROR(ConfigError);

#undef SWLAG_DEFINE_ERROR

}  // namespace swlag

#endif  // SWLAG_ERRORS_HPP
