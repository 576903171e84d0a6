// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <stdexcept>
#include <string>

namespace hfret {

// Exit-code classes used by the CLI:
//   ConfigError -> 2, DataError -> 3, NumericError -> 4.
// Contract violations (dimension mismatches etc.) derive from
// std::invalid_argument and map to 2 when they reach the CLI.

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class DataError : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    using Error::Error;
};

// -- data / io ---------------------------------------------------------

class FileNotFound : public DataError {
public:
    using DataError::DataError;
};

class MalformedImage : public DataError {
public:
    using DataError::DataError;
};

class EmptyDataset : public DataError {
public:
    using DataError::DataError;
};

class ModelLoadError : public DataError {
public:
    using DataError::DataError;
};

class IoError : public DataError {
public:
    using DataError::DataError;
};

class PatchTooLarge : public DataError {
public:
    using DataError::DataError;
};

class EmptyPatchSet : public DataError {
public:
    using DataError::DataError;
};

class TooFewDescriptors : public DataError {
public:
    using DataError::DataError;
};

class DegenerateLabels : public DataError {
public:
    using DataError::DataError;
};

// -- contract ----------------------------------------------------------

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class RankTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class KTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class TooManyFolds : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// -- numeric -----------------------------------------------------------

class NonFiniteObjective : public NumericError {
public:
    using NumericError::NumericError;
};

} // namespace hfret
