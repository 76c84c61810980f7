#pragma once

#include <filesystem>
#include <string>

namespace lucid {

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace lucid
