#pragma once

#include <stdexcept>
#include <string>

namespace tropsa {

enum class ErrorKind {
    InvalidInput,      // malformed document or curve
    Precondition,      // operation called outside its domain
    EdgeContracted,    // affine map sends an edge or leg direction to zero
    SearchCapExceeded, // bounded search ran out of budget
    Internal           // invariant violated; indicates a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw Error(ErrorKind::Internal, what);
}

} // namespace tropsa
