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

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace manetaddr {

/// Error raised by address arithmetic and parsing.
class AddressingError : public std::runtime_error {
 public:
  enum class Kind {
    PrefixMismatch,
    IsSupreme,
    LevelZero,
    OctetOverflow,
    LengthMismatch,
    ParseError,
  };

  AddressingError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A 4-octet address in dotted-decimal order (leftmost octet first).
/// Addresses are plain values; they carry no reference to the network
/// prefix they were allocated under, since merges and partitions change
/// the prefix underneath existing addresses.
struct Address {
  std::array<std::uint8_t, 4> octets{};

  auto operator<=>(const Address&) const = default;

  std::string str() const;

  /// Parses strict dotted-decimal form, e.g. "10.1.23.4".
  /// Throws AddressingError{ParseError} on malformed or out-of-range input.
  static Address parse(std::string_view text);
};

/// The fixed leading octets of a network plus its opaque identifier.
/// `length` is the prefix length in whole octets (1..=3, default 2).
struct NetworkPrefix {
  std::array<std::uint8_t, 3> octets{};
  std::uint8_t length{2};
  std::uint64_t netid{0};

  int max_level() const { return 4 - static_cast<int>(length); }

  bool same_octets(const NetworkPrefix& other) const {
    if (length != other.length) return false;
    for (int i = 0; i < length; ++i)
      if (octets[static_cast<std::size_t>(i)] !=
          other.octets[static_cast<std::size_t>(i)])
        return false;
    return true;
  }

  bool operator==(const NetworkPrefix& other) const {
    return same_octets(other) && netid == other.netid;
  }

  /// Dotted form of the prefix octets only, e.g. "10.1".
  std::string str() const;

  /// Parses "10.1" style text; the octet count gives the length.
  /// netid is left zero.
  static NetworkPrefix parse(std::string_view text);
};

using Level = int;

/// True if `addr` begins with the prefix octets.
bool starts_with(const Address& addr, const NetworkPrefix& prefix);

/// Level of an address: the count of consecutive zero octets scanning
/// right to left, stopping before the prefix octets.
/// Throws PrefixMismatch if `addr` does not start with `prefix`.
Level level_of(const Address& addr, const NetworkPrefix& prefix);

/// The all-zero-suffix address under `prefix` (held by the supreme node).
Address supreme_address(const NetworkPrefix& prefix);

bool is_supreme_address(const Address& addr, const NetworkPrefix& prefix);

/// The level-(k+1) address owning `addr`'s pool: `addr` with its pool
/// position octet zeroed. Throws IsSupreme for the supreme address.
Address cluster_head_of(const Address& addr, const NetworkPrefix& prefix);

/// Index (0..3) of the octet a head hands out to its children, i.e. the
/// first zero octet of the head address. Throws LevelZero for level-0.
int pool_octet_index(const Address& head, const NetworkPrefix& prefix);

/// Child address of `head` with the given pool-position suffix (1..=255).
Address pool_address(const Address& head, const NetworkPrefix& prefix,
                     std::uint8_t suffix);

/// All 255 child addresses of `head`, lowest suffix first.
/// Throws LevelZero if head is at level 0.
std::vector<Address> pool_of(const Address& head, const NetworkPrefix& prefix);

/// Pool-position suffix of a non-supreme address (the value of the octet
/// its cluster head assigned). Throws IsSupreme for the supreme address.
std::uint8_t suffix_in_pool(const Address& addr, const NetworkPrefix& prefix);

/// Adds `offset` to the single octet that encodes membership of a
/// merge-level cluster (octet index 4 - 1 - merge_level). All other
/// octets are untouched. A zero offset is the identity. Throws
/// OctetOverflow if the result would exceed 255, PrefixMismatch if the
/// octet is zero (the node does not belong to a merge-level cluster).
Address offset_address(const Address& addr, int offset, Level merge_level);

/// Replaces the prefix octets of `addr` (which must start with `old_p`)
/// with `new_p`'s octets; suffix octets are unchanged.
Address reprefix(const Address& addr, const NetworkPrefix& old_p,
                 const NetworkPrefix& new_p);

/// Number of distinct suffixes under the prefix, 256^(4-p).
/// For the default /16 prefix this is 65536.
std::uint32_t suffix_space_size(const NetworkPrefix& prefix);

/// Children a single head can manage.
inline constexpr int kPoolCapacity = 255;

}  // namespace manetaddr
