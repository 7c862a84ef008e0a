#pragma once

#include <stdexcept>
#include <string>

namespace sextic {

/* Failure categories map one-to-one onto CLI exit codes:
 *   parse_error        -> 2
 *   verification_error -> 3  (declared point not singular, type mismatch, ...)
 *   unsupported_germ   -> 4  (degenerate boundary, outside the catalog, ...)
 *   cap_exceeded       -> 5  (jet truncation / certification cap hit)
 */

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& m) : std::runtime_error(m) {}
};

struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& m) : std::runtime_error(m) {}
};

struct unsupported_germ : std::runtime_error {
    explicit unsupported_germ(const std::string& m) : std::runtime_error(m) {}
};

struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& m) : std::runtime_error(m) {}
};

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const parse_error*>(&e)) return 2;
    if (dynamic_cast<const verification_error*>(&e)) return 3;
    if (dynamic_cast<const unsupported_germ*>(&e)) return 4;
    if (dynamic_cast<const cap_exceeded*>(&e)) return 5;
    return 1;
}

} // namespace sextic
