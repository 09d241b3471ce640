// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcs {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Input is malformed or references undeclared symbols.
class InvalidInput : public Error {
  public:
    using Error::Error;
};

// Query is outside the decidable fragment (EG / EU).
class Undecidable : public Error {
  public:
    using Error::Error;
};

// A configured cap (pool size, enumeration count) was exceeded.
class ResourceLimit : public Error {
  public:
    using Error::Error;
};

class ParseError : public InvalidInput {
  public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : InvalidInput(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace gcs
