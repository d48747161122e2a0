#pragma once

#include <stdexcept>
#include <string>

namespace uniw {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid ids or parameters supplied by the caller.
struct input_error : error {
    using error::error;
};

// Graph lies outside the class an operation supports
// (disconnected, multicyclic, not unicyclic, ...).
struct class_error : error {
    using error::error;
};

// A transformation rule's precondition does not hold for the given branches.
struct rule_error : error {
    using error::error;
};

// Malformed serialized graph input.
struct parse_error : error {
    enum class kind {
        bad_length,
        trailing_bits,
        char_out_of_range,
        bad_token,
        self_loop,
        duplicate_edge,
        vertex_out_of_range,
    };
    parse_error(kind k, const std::string& msg) : error(msg), what_kind(k) {}
    kind what_kind;
};

} // namespace uniw
