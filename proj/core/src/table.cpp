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

#include "manetaddr/table.hpp"

#include <algorithm>

namespace manetaddr {

namespace {

void put_u64_be(std::vector<std::uint8_t>& out, std::uint64_t value) {
  for (int shift = 56; shift >= 0; shift -= 8)
    out.push_back(static_cast<std::uint8_t>((value >> shift) & 0xff));
}

std::uint64_t get_u64_be(std::span<const std::uint8_t> in, std::size_t at) {
  std::uint64_t value = 0;
  for (int i = 0; i < 8; ++i) value = (value << 8) | in[at + static_cast<std::size_t>(i)];
  return value;
}

}  // namespace

std::uint8_t AddressTable::allocate_next_free(NodeId node_id, Tick now) {
  if (suffix_of(node_id))
    throw TableError(TableError::Kind::DuplicateNodeId,
                     "node already holds a suffix");
  auto free = lowest_free();
  if (!free)
    throw TableError(TableError::Kind::NoFreeAddress, "pool exhausted");
  entries_[*free] = TableEntry{*free, node_id, now};
  ++version_;
  return *free;
}

AddressTable::ClaimResult AddressTable::claim(std::uint8_t suffix,
                                              NodeId node_id, Tick now) {
  auto it = entries_.find(suffix);
  if (it != entries_.end()) {
    if (it->second.node_id == node_id) {
      it->second.last_seen = std::max(it->second.last_seen, now);
      ++version_;
      return ClaimResult::AlreadyOurs;
    }
    return ClaimResult::Conflict;
  }
  if (suffix_of(node_id)) return ClaimResult::Conflict;
  entries_[suffix] = TableEntry{suffix, node_id, now};
  ++version_;
  return ClaimResult::Committed;
}

void AddressTable::mark_alive(NodeId node_id, Tick now) {
  for (auto& [suffix, entry] : entries_) {
    if (entry.node_id == node_id) {
      entry.last_seen = std::max(entry.last_seen, now);
      ++version_;
      return;
    }
  }
  throw TableError(TableError::Kind::UnknownNode, "node not in table");
}

void AddressTable::upsert_from_alive(std::uint8_t suffix, NodeId node_id,
                                     Tick now) {
  // A node reporting from a new suffix invalidates its old entry.
  auto old_suffix = suffix_of(node_id);
  if (old_suffix && *old_suffix != suffix) entries_.erase(*old_suffix);
  entries_[suffix] = TableEntry{suffix, node_id, now};
  ++version_;
}

std::vector<TableEntry> AddressTable::collect_stale(Tick now,
                                                    Tick threshold) const {
  std::vector<TableEntry> stale;
  for (const auto& [suffix, entry] : entries_)
    if (now - entry.last_seen > threshold) stale.push_back(entry);
  return stale;
}

void AddressTable::release(std::uint8_t suffix) {
  auto it = entries_.find(suffix);
  if (it == entries_.end())
    throw TableError(TableError::Kind::NotAllocated, "suffix not allocated");
  entries_.erase(it);
  ++version_;
}

void AddressTable::touch_all(Tick now) {
  for (auto& [suffix, entry] : entries_)
    entry.last_seen = std::max(entry.last_seen, now);
  ++version_;
}

std::optional<std::uint8_t> AddressTable::suffix_of(NodeId node_id) const {
  for (const auto& [suffix, entry] : entries_)
    if (entry.node_id == node_id) return suffix;
  return std::nullopt;
}

std::optional<NodeId> AddressTable::node_at(std::uint8_t suffix) const {
  auto it = entries_.find(suffix);
  if (it == entries_.end()) return std::nullopt;
  return it->second.node_id;
}

std::optional<Tick> AddressTable::last_seen_at(std::uint8_t suffix) const {
  auto it = entries_.find(suffix);
  if (it == entries_.end()) return std::nullopt;
  return it->second.last_seen;
}

std::optional<std::uint8_t> AddressTable::lowest_free() const {
  std::uint8_t candidate = 1;
  for (const auto& [suffix, entry] : entries_) {
    if (suffix != candidate) break;
    if (candidate == 255) return std::nullopt;
    ++candidate;
  }
  return candidate;
}

std::vector<TableEntry> AddressTable::entries() const {
  std::vector<TableEntry> out;
  out.reserve(entries_.size());
  for (const auto& [suffix, entry] : entries_) out.push_back(entry);
  return out;
}

std::vector<std::uint8_t> AddressTable::snapshot() const {
  std::vector<std::uint8_t> out;
  out.reserve(13 + 17 * entries_.size());
  for (int i = 0; i < 4; ++i) out.push_back(head_addr_.octets[static_cast<std::size_t>(i)]);
  put_u64_be(out, version_);
  out.push_back(static_cast<std::uint8_t>(entries_.size()));
  for (const auto& [suffix, entry] : entries_) {
    out.push_back(suffix);
    put_u64_be(out, entry.node_id);
    put_u64_be(out, static_cast<std::uint64_t>(entry.last_seen));
  }
  return out;
}

AddressTable AddressTable::restore(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 13)
    throw TableError(TableError::Kind::DecodeError, "snapshot too short");
  AddressTable table;
  for (int i = 0; i < 4; ++i) table.head_addr_.octets[static_cast<std::size_t>(i)] = bytes[static_cast<std::size_t>(i)];
  table.version_ = get_u64_be(bytes, 4);
  std::size_t count = bytes[12];
  if (bytes.size() != 13 + 17 * count)
    throw TableError(TableError::Kind::DecodeError, "snapshot length mismatch");
  std::size_t at = 13;
  std::uint8_t prev_suffix = 0;
  for (std::size_t i = 0; i < count; ++i) {
    TableEntry entry;
    entry.suffix = bytes[at];
    entry.node_id = get_u64_be(bytes, at + 1);
    entry.last_seen = static_cast<Tick>(get_u64_be(bytes, at + 9));
    if (entry.suffix == 0 || (i > 0 && entry.suffix <= prev_suffix))
      throw TableError(TableError::Kind::DecodeError, "suffix order corrupt");
    prev_suffix = entry.suffix;
    table.entries_[entry.suffix] = entry;
    at += 17;
  }
  return table;
}

std::string AddressTable::dump() const {
  std::string out;
  for (const auto& [suffix, entry] : entries_) {
    out += std::to_string(suffix);
    out += ' ';
    out += std::to_string(entry.node_id);
    out += ' ';
    out += std::to_string(entry.last_seen);
    out += '\n';
  }
  return out;
}

}  // namespace manetaddr
