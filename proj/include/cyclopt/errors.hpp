// Copyright 2026 The cyclopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CYCLOPT_ERRORS_HPP
#define CYCLOPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclopt {

// Every error raised by the library derives from Error. The CLI maps the
// concrete type onto its exit code.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Parameter outside the documented domain.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

// Exponent coset collides with C_1 or C_s.
class CosetOverlap : public Error {
  public:
    using Error::Error;
};

// Defining polynomial is reducible or its root is not a generator.
class NotPrimitive : public Error {
  public:
    using Error::Error;
};

// Enumeration, table or scan size guard exceeded.
class LimitExceeded : public Error {
  public:
    using Error::Error;
};

// An exact-arithmetic consistency check failed. Indicates a bug.
class InternalError : public Error {
  public:
    using Error::Error;
};

}  // namespace cyclopt

#endif  // CYCLOPT_ERRORS_HPP
