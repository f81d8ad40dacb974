#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgk {

struct ParseError : std::runtime_error {
    std::size_t line;  // 1-based; 0 when not line oriented

    ParseError(std::size_t line_, const std::string& what_)
        : std::runtime_error(line_ ? "line " + std::to_string(line_) + ": " + what_
                                   : what_),
          line(line_) {}
};

}  // namespace qgk
