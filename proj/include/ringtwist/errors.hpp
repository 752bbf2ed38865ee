/*
   Copyright 2026 The ringtwist Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RINGTWIST_ERRORS_HPP
#define RINGTWIST_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ringtwist {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class InvalidField : public Error {
   public:
    using Error::Error;
};
class BoundExceeded : public Error {
   public:
    using Error::Error;
};
class FieldMismatch : public Error {
   public:
    FieldMismatch() : Error("operands belong to different fields") {}
    using Error::Error;
};
class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};
class ZeroMap : public Error {
   public:
    ZeroMap() : Error("the zero map has no injectivity certificate") {}
};
class DimensionMismatch : public Error {
   public:
    using Error::Error;
};
class IndexError : public Error {
   public:
    using Error::Error;
};
class NotAssociative : public Error {
   public:
    using Error::Error;
};
class NotCommutative : public Error {
   public:
    using Error::Error;
};
class NoUnit : public Error {
   public:
    using Error::Error;
};
class InvalidPresentation : public Error {
   public:
    using Error::Error;
};
class NotUnimodular : public Error {
   public:
    using Error::Error;
};
class NotAHomomorphism : public Error {
   public:
    using Error::Error;
};
class CenterTooSmall : public Error {
   public:
    using Error::Error;
};

/// One directed constraint n[to] - n[from] = offset coming from a tensor term.
struct TwistConstraint {
    std::size_t from = 0;
    std::size_t to = 0;
    long offset = 0;
};

/// The coordinate offsets cannot be solved; `cycle` closes with a nonzero sum.
class Inconsistent : public Error {
   public:
    Inconsistent(std::string what, std::vector<TwistConstraint> cycle)
        : Error(std::move(what)), cycle_(std::move(cycle)) {}
    const std::vector<TwistConstraint>& cycle() const noexcept { return cycle_; }

   private:
    std::vector<TwistConstraint> cycle_;
};

/// The semisimple quotient has a factor that is a proper extension of the
/// working field. `minimal_polynomial` is ascending and monic.
class NotSplit : public Error {
   public:
    NotSplit(std::string what, std::vector<std::vector<unsigned>> minimal_polynomial)
        : Error(std::move(what)), minpoly_(std::move(minimal_polynomial)) {}
    const std::vector<std::vector<unsigned>>& minimal_polynomial() const noexcept { return minpoly_; }

   private:
    std::vector<std::vector<unsigned>> minpoly_;
};

class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace ringtwist

#endif
