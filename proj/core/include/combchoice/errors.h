// Copyright 2026 The combchoice Authors.
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

#ifndef COMBCHOICE_ERRORS_H_
#define COMBCHOICE_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace combchoice {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unknown labels, bundles outside the ground set, bad files.
class InputError : public Error {
 public:
  using Error::Error;
};

// Requested work exceeds a documented size cap.
class ScaleError : public Error {
 public:
  using Error::Error;
};

// A result that a proven theorem guarantees failed to materialize. Never
// expected; always a defect.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Acyclicity precondition violated. `cycle` lists carrier indices c0..ck with
// c0 R c1 R ... R ck R c0, rotated so the smallest index comes first.
class CycleError : public Error {
 public:
  CycleError(std::string what, std::vector<int> cycle)
      : Error(std::move(what)), cycle_(std::move(cycle)) {}
  const std::vector<int>& cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

class NotPathIndependent : public Error {
 public:
  using Error::Error;
};

class NotBooleanLattice : public Error {
 public:
  using Error::Error;
};

class NotDecisive : public Error {
 public:
  using Error::Error;
};

}  // namespace combchoice

#endif  // COMBCHOICE_ERRORS_H_
