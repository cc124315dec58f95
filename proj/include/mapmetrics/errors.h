/* Copyright 2026 The MapMetrics Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MAPMETRICS_ERRORS_H_
#define MAPMETRICS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mapmetrics {

// Malformed caller data: non-finite coordinates, dimension mismatch,
// confidences outside [0, 1], schema violations.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An operation was called on the wrong kind of object, e.g. a cyclic shift of
// an open polyline.
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// A brute-force oracle refused an input larger than its enumeration guard.
class SizeGuardError : public std::length_error {
 public:
  explicit SizeGuardError(const std::string& what) : std::length_error(what) {}
};

// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mapmetrics

#endif  // MAPMETRICS_ERRORS_H_
