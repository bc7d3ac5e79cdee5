#pragma once

#include <stdexcept>
#include <string>

namespace coalign {

// Parse failure in one of the structured text formats; message carries
// the line number and field.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Internal invariant; a throw here means a bug or corrupt input data,
// never a legitimate domain outcome.
inline void require(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

inline void check_arg(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace detail
}  // namespace coalign
