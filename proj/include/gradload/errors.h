// Copyright 2026 The gradload Authors
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

#ifndef GRADLOAD_ERRORS_H
#define GRADLOAD_ERRORS_H

#include <stdexcept>

namespace gradload {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Bad argument or inconsistent input data.
class ValidationError : public Error {
   public:
    using Error::Error;
};

class ZeroVectorError : public Error {
   public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
   public:
    using Error::Error;
};

/// The start state has no weight on the amplification target.
class NoOverlapError : public Error {
   public:
    using Error::Error;
};

class OutOfRangeError : public Error {
   public:
    using Error::Error;
};

/// Gate-level simulation would exceed the wire cap.
class CapExceededError : public Error {
   public:
    using Error::Error;
};

/// The precision precondition of the runtime bounds does not hold.
class BoundInvalidError : public Error {
   public:
    using Error::Error;
};

}  // namespace gradload

#endif
