#pragma once

#include <stdexcept>
#include <string>

namespace fie {

// Error categories, mirrored one-to-one by the C API status codes.
enum class Errc {
    argument = 1,     // bad value, arity, or range
    dimension = 2,    // vector length mismatch
    parse = 3,        // malformed rule-set or observation text
    capacity = 4,     // more rules than data paths / ROM slots
    unsupported = 5,  // rule shape the chip cannot hold (k != 1)
    protocol = 6,     // clocking the chip outside its cycle protocol
    io = 7,           // file system failure
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Parse failures always carry the 1-based input line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error(Errc::parse, "line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace fie
