#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lucid {

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
bool is_identifier(std::string_view s);

// Blanks out // and /* */ comments, keeping newlines so line numbers hold.
// Quoted strings are left alone.
std::string strip_comments(std::string_view text);

}  // namespace lucid
