#ifndef CONSERVA_ERRORS_HPP
#define CONSERVA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conserva {

enum class ErrorCode {
    invalid_argument,
    unknown_algebra,
    parse,
    dimension_mismatch,
    io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace conserva

#endif
