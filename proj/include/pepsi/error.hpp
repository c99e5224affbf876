#pragma once

#include <stdexcept>
#include <string>

namespace pepsi {

/// Error categories mirrored one-to-one by the C API status codes.
enum class Errc {
    invalid_argument = 1,
    parse = 2,
    crypto = 3,
    stale_epoch = 4,
    state = 5,
    io = 6,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pepsi
