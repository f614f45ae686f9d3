// Copyright 2026 The Scriptogen Authors
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

#include <stdexcept>
#include <string>

namespace scriptogen {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numeric argument lies outside its mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class MissingGlyphError : public Error {
public:
    explicit MissingGlyphError(char letter)
        : Error(std::string("no glyph for character '") + letter + "'"), letter_(letter) {}
    char letter() const noexcept { return letter_; }

private:
    char letter_;
};

/// The requested maturity E retains fewer than five points of some glyph.
class InfeasibleMaturityError : public Error {
public:
    using Error::Error;
};

class LegibilityError : public Error {
public:
    LegibilityError(char letter, const std::string& what) : Error(what), letter_(letter) {}
    char letter() const noexcept { return letter_; }

private:
    char letter_;
};

class DegenerateSegmentError : public Error {
public:
    using Error::Error;
};

/// Malformed glyph library, trajectory file, or config.
class FormatError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    IoError(const std::string& path, const std::string& what)
        : Error(what + ": " + path), path_(path) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace scriptogen
