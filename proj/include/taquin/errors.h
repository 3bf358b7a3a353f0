// Copyright 2026 The Authors.
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

#ifndef TAQUIN_ERRORS_H_
#define TAQUIN_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taquin {

// Base class of every domain error raised by the library. `name()` is the
// stable identifier printed by the command-line tool.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define TAQUIN_DEFINE_ERROR(Type)                                 \
  class Type : public Error {                                     \
   public:                                                        \
    explicit Type(const std::string& what) : Error(#Type, what) {} \
  }

TAQUIN_DEFINE_ERROR(MonotonicityViolation);
TAQUIN_DEFINE_ERROR(IllegalCorner);
TAQUIN_DEFINE_ERROR(EmptyTableau);
TAQUIN_DEFINE_ERROR(NotPlanar);
TAQUIN_DEFINE_ERROR(SizeLimitExceeded);
TAQUIN_DEFINE_ERROR(NotACover);
TAQUIN_DEFINE_ERROR(BoxNotInDiagram);
TAQUIN_DEFINE_ERROR(ZeroFrequency);
TAQUIN_DEFINE_ERROR(ExpectedTooSmall);
TAQUIN_DEFINE_ERROR(TooFewCells);
TAQUIN_DEFINE_ERROR(ParseError);

#undef TAQUIN_DEFINE_ERROR

// Raised by tableau validation; `position()` is the 1-based index of the
// first path prefix that is not a valid diagram.
class InvalidPrefix : public Error {
 public:
  explicit InvalidPrefix(std::size_t position)
      : Error("InvalidPrefix",
              "prefix of length " + std::to_string(position) +
                  " is not a diagram"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace taquin

#endif  // TAQUIN_ERRORS_H_
