#pragma once

#include <stdexcept>
#include <string>

namespace cqw {

enum class errc {
    self_loop,
    duplicate_edge,
    disconnected_graph,
    bad_vertex,
    not_bijective,
    not_unitary,
    zero_entry,
    not_two_regular,
    dimension_mismatch,
    unknown_vertex,
    unsupported_format,
    inconsistent_system,
    parse_error,
    io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace cqw
