#ifndef CTTQE_SPAN_HPP
#define CTTQE_SPAN_HPP

#include <cstddef>
#include <string>

namespace cttqe {

/// Source location attached to parsed syntax and diagnostics.
struct SourceSpan {
  std::string file;
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  std::size_t length = 0;

  std::string to_string() const {
    std::string out = file.empty() ? std::string("<input>") : file;
    out += ":" + std::to_string(line) + ":" + std::to_string(column);
    return out;
  }
};

}  // namespace cttqe

#endif
