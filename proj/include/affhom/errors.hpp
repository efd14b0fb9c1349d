#pragma once

#include <stdexcept>
#include <string>

namespace affhom {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

// An approximate operand could not be told apart from zero.
class UncertainZero : public Error {
public:
    explicit UncertainZero(const std::string& what = "approximate value indistinguishable from zero")
        : Error(what) {}
};

class UndecidableAtPrecision : public Error {
public:
    explicit UndecidableAtPrecision(const std::string& what) : Error("undecidable at precision: " + what) {}
};

class AbelianGroup : public Error {
public:
    AbelianGroup() : Error("all generators commute; a non-abelian group is required") {}
};

class WordCapExceeded : public Error {
public:
    explicit WordCapExceeded(const std::string& what) : Error(what) {}
};

class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public InputError {
public:
    DimensionMismatch() : InputError("dimension mismatch") {}
};

} // namespace affhom
