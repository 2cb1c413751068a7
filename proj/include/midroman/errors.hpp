#pragma once

#include <stdexcept>
#include <string>

namespace midroman {

// Thrown by the text parsers. The kind tells the failure modes apart so
// tools and tests do not have to match on message text.
class parse_error : public std::runtime_error {
public:
    enum class kind {
        malformed,
        index_out_of_range,
        self_loop,
        duplicate_edge,
        bad_character,
        truncated,
        empty_input,
        unsupported,
    };

    parse_error(kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    kind which() const noexcept { return kind_; }

private:
    kind kind_;
};

// Thrown when a solve would exceed the configured element budget.
class size_guard_error : public std::runtime_error {
public:
    explicit size_guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace midroman
