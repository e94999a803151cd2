/*
 * Copyright (c) 2026, the manetaddr authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#include "manetaddr/addressing.hpp"

#include <charconv>

namespace manetaddr {

namespace {

// Parses up to 4 dot-separated octets; throws on anything else.
std::vector<std::uint8_t> parse_octets(std::string_view text,
                                       std::size_t expected_min,
                                       std::size_t expected_max) {
  std::vector<std::uint8_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string_view part = text.substr(
        pos, dot == std::string_view::npos ? std::string_view::npos
                                           : dot - pos);
    if (part.empty() || part.size() > 3)
      throw AddressingError(AddressingError::Kind::ParseError,
                            "bad octet in '" + std::string(text) + "'");
    unsigned value = 0;
    auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || value > 255)
      throw AddressingError(AddressingError::Kind::ParseError,
                            "bad octet in '" + std::string(text) + "'");
    out.push_back(static_cast<std::uint8_t>(value));
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
    if (pos == text.size())
      throw AddressingError(AddressingError::Kind::ParseError,
                            "trailing dot in '" + std::string(text) + "'");
  }
  if (out.size() < expected_min || out.size() > expected_max)
    throw AddressingError(AddressingError::Kind::ParseError,
                          "wrong octet count in '" + std::string(text) + "'");
  return out;
}

}  // namespace

std::string Address::str() const {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (i) s += '.';
    s += std::to_string(octets[static_cast<std::size_t>(i)]);
  }
  return s;
}

Address Address::parse(std::string_view text) {
  auto octets = parse_octets(text, 4, 4);
  Address a;
  for (int i = 0; i < 4; ++i) a.octets[static_cast<std::size_t>(i)] = octets[static_cast<std::size_t>(i)];
  return a;
}

std::string NetworkPrefix::str() const {
  std::string s;
  for (int i = 0; i < length; ++i) {
    if (i) s += '.';
    s += std::to_string(octets[static_cast<std::size_t>(i)]);
  }
  return s;
}

NetworkPrefix NetworkPrefix::parse(std::string_view text) {
  auto octets = parse_octets(text, 1, 3);
  NetworkPrefix p;
  p.length = static_cast<std::uint8_t>(octets.size());
  for (std::size_t i = 0; i < octets.size(); ++i) p.octets[i] = octets[i];
  return p;
}

bool starts_with(const Address& addr, const NetworkPrefix& prefix) {
  for (int i = 0; i < prefix.length; ++i)
    if (addr.octets[static_cast<std::size_t>(i)] !=
        prefix.octets[static_cast<std::size_t>(i)])
      return false;
  return true;
}

Level level_of(const Address& addr, const NetworkPrefix& prefix) {
  if (!starts_with(addr, prefix))
    throw AddressingError(AddressingError::Kind::PrefixMismatch,
                          addr.str() + " does not start with " + prefix.str());
  int level = 0;
  for (int i = 3; i >= prefix.length; --i) {
    if (addr.octets[static_cast<std::size_t>(i)] != 0) break;
    ++level;
  }
  return level;
}

Address supreme_address(const NetworkPrefix& prefix) {
  Address a;
  for (int i = 0; i < prefix.length; ++i)
    a.octets[static_cast<std::size_t>(i)] = prefix.octets[static_cast<std::size_t>(i)];
  return a;
}

bool is_supreme_address(const Address& addr, const NetworkPrefix& prefix) {
  return starts_with(addr, prefix) &&
         level_of(addr, prefix) == prefix.max_level();
}

Address cluster_head_of(const Address& addr, const NetworkPrefix& prefix) {
  Level level = level_of(addr, prefix);
  if (level == prefix.max_level())
    throw AddressingError(AddressingError::Kind::IsSupreme,
                          addr.str() + " is the supreme address");
  Address head = addr;
  head.octets[static_cast<std::size_t>(3 - level)] = 0;
  return head;
}

int pool_octet_index(const Address& head, const NetworkPrefix& prefix) {
  Level level = level_of(head, prefix);
  if (level == 0)
    throw AddressingError(AddressingError::Kind::LevelZero,
                          head.str() + " is a level-0 address and owns no pool");
  return 4 - level;
}

Address pool_address(const Address& head, const NetworkPrefix& prefix,
                     std::uint8_t suffix) {
  int index = pool_octet_index(head, prefix);
  Address child = head;
  child.octets[static_cast<std::size_t>(index)] = suffix;
  return child;
}

std::vector<Address> pool_of(const Address& head, const NetworkPrefix& prefix) {
  int index = pool_octet_index(head, prefix);
  std::vector<Address> out;
  out.reserve(kPoolCapacity);
  for (int suffix = 1; suffix <= 255; ++suffix) {
    Address child = head;
    child.octets[static_cast<std::size_t>(index)] =
        static_cast<std::uint8_t>(suffix);
    out.push_back(child);
  }
  return out;
}

std::uint8_t suffix_in_pool(const Address& addr, const NetworkPrefix& prefix) {
  Level level = level_of(addr, prefix);
  if (level == prefix.max_level())
    throw AddressingError(AddressingError::Kind::IsSupreme,
                          addr.str() + " is the supreme address");
  return addr.octets[static_cast<std::size_t>(3 - level)];
}

Address offset_address(const Address& addr, int offset, Level merge_level) {
  if (offset == 0) return addr;
  if (merge_level < 0 || merge_level > 2)
    throw AddressingError(AddressingError::Kind::LengthMismatch,
                          "merge level out of range");
  std::size_t index = static_cast<std::size_t>(4 - 1 - merge_level);
  int octet = addr.octets[index];
  if (octet == 0)
    throw AddressingError(AddressingError::Kind::PrefixMismatch,
                          addr.str() + " has no cluster at the merge level");
  if (octet + offset > 255 || octet + offset < 1)
    throw AddressingError(AddressingError::Kind::OctetOverflow,
                          addr.str() + " offset by " + std::to_string(offset) +
                              " overflows");
  Address out = addr;
  out.octets[index] = static_cast<std::uint8_t>(octet + offset);
  return out;
}

Address reprefix(const Address& addr, const NetworkPrefix& old_p,
                 const NetworkPrefix& new_p) {
  if (old_p.length != new_p.length)
    throw AddressingError(AddressingError::Kind::LengthMismatch,
                          "prefix lengths differ");
  if (!starts_with(addr, old_p))
    throw AddressingError(AddressingError::Kind::PrefixMismatch,
                          addr.str() + " does not start with " + old_p.str());
  Address out = addr;
  for (int i = 0; i < new_p.length; ++i)
    out.octets[static_cast<std::size_t>(i)] =
        new_p.octets[static_cast<std::size_t>(i)];
  return out;
}

std::uint32_t suffix_space_size(const NetworkPrefix& prefix) {
  return static_cast<std::uint32_t>(1u) << (8 * (4 - prefix.length));
}

}  // namespace manetaddr
