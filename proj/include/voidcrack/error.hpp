// Copyright 2026 the voidcrack authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace voidcrack {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Physical or dimensionless parameters outside their admissible range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Evaluation requested at a point where the quantity is undefined
/// (zero separation of a log-singular kernel, a grid node, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Inconsistent combination of otherwise valid inputs.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

class SolverError : public Error {
public:
    SolverError(const std::string& what, std::size_t pivot_index)
        : Error(what), pivot_index_(pivot_index) {}

    std::size_t pivot_index() const noexcept { return pivot_index_; }

private:
    std::size_t pivot_index_;
};

}  // namespace voidcrack
