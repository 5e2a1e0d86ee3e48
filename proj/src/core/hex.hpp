#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sbe {

std::string to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_hex(const std::string& hex);  // throws Err::Parse

}  // namespace sbe
