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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "manetaddr/addressing.hpp"
#include "manetaddr/types.hpp"

namespace manetaddr {

class TableError : public std::runtime_error {
 public:
  enum class Kind {
    NoFreeAddress,
    DuplicateNodeId,
    UnknownNode,
    NotAllocated,
    DecodeError,
  };

  TableError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct TableEntry {
  std::uint8_t suffix{};  // pool-position octet, 1..=255
  NodeId node_id{};
  Tick last_seen{};

  bool operator==(const TableEntry&) const = default;
};

/// The address table a cluster head keeps for its pool. Exactly one node
/// (the head) mutates a table; subordinates hold restored read-only
/// copies. Suffixes and node ids are each unique within a table, and the
/// version counter increases on every mutation so a subordinate can tell
/// stale syncs apart.
class AddressTable {
 public:
  AddressTable() = default;
  explicit AddressTable(Address head_addr) : head_addr_(head_addr) {}

  /// Allocates the lowest unoccupied suffix in 1..=255 for `node_id`.
  /// Throws NoFreeAddress when all 255 suffixes are taken, DuplicateNodeId
  /// if the node already holds an entry.
  std::uint8_t allocate_next_free(NodeId node_id, Tick now);

  enum class ClaimResult { Committed, AlreadyOurs, Conflict };

  /// Commits a specific suffix for `node_id`. AlreadyOurs when the entry
  /// exists with the same id (idempotent retry), Conflict when the suffix
  /// is held by another node.
  ClaimResult claim(std::uint8_t suffix, NodeId node_id, Tick now);

  /// Refreshes the liveness timestamp of `node_id` to max(last_seen, now).
  /// Throws UnknownNode.
  void mark_alive(NodeId node_id, Tick now);

  /// Inserts or repairs the entry for `suffix` from a liveness report:
  /// a fresh report wins over whatever the table believed. Any stale entry
  /// for the same node under a different suffix is dropped.
  void upsert_from_alive(std::uint8_t suffix, NodeId node_id, Tick now);

  /// Entries with now - last_seen > threshold. Does not delete; deletion
  /// happens only after the probe round.
  std::vector<TableEntry> collect_stale(Tick now, Tick threshold) const;

  /// Removes the entry at `suffix`, making it allocatable again.
  /// Throws NotAllocated.
  void release(std::uint8_t suffix);

  /// Bumps every entry's last_seen to `now` (used when a restored copy is
  /// adopted by a new head).
  void touch_all(Tick now);

  std::optional<std::uint8_t> suffix_of(NodeId node_id) const;
  std::optional<NodeId> node_at(std::uint8_t suffix) const;
  std::optional<Tick> last_seen_at(std::uint8_t suffix) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool full() const { return entries_.size() >= kPoolCapacity; }
  std::optional<std::uint8_t> lowest_free() const;

  std::uint64_t version() const { return version_; }
  const Address& head_addr() const { return head_addr_; }
  void set_head_addr(Address addr) { head_addr_ = addr; }

  /// Entries in ascending suffix order.
  std::vector<TableEntry> entries() const;

  /// Canonical snapshot: head address (4 bytes), version (8 bytes BE),
  /// entry count (1 byte), then per entry suffix (1 byte), node id
  /// (8 bytes BE), last_seen (8 bytes BE) in ascending suffix order.
  std::vector<std::uint8_t> snapshot() const;

  /// Inverse of snapshot. Throws DecodeError on malformed input.
  static AddressTable restore(std::span<const std::uint8_t> bytes);

  /// Human-readable dump, one "suffix node_id last_seen" line per entry.
  std::string dump() const;

  bool operator==(const AddressTable& other) const {
    return head_addr_ == other.head_addr_ && version_ == other.version_ &&
           entries_ == other.entries_;
  }

 private:
  Address head_addr_{};
  std::map<std::uint8_t, TableEntry> entries_;  // keyed by suffix
  std::uint64_t version_{0};
};

}  // namespace manetaddr
