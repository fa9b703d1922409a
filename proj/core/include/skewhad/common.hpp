#ifndef SKEWHAD_COMMON_HPP
#define SKEWHAD_COMMON_HPP

#include <stdexcept>
#include <string>

namespace skewhad {

/// Points, matrix rows and columns are 1-based everywhere in the public
/// interface. Internal bit positions are 0-based and never leak out.
using Point = int;

/// Largest accepted matrix/scheme order. Keeps every Gram accumulator and
/// intersection number well inside 64-bit integer range.
inline constexpr int kMaxOrder = 32767;

/// Thrown by the text-format readers on malformed input.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace skewhad

#endif
