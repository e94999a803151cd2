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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "manetaddr/addressing.hpp"
#include "manetaddr/types.hpp"

namespace manetaddr {

// The closed set of protocol wire messages. Field sets are plumbing around
// the protocol's named exchanges; every message additionally carries its
// sender in the envelope.

struct JoinNetworkRequest {
  NodeId requestor_id{};
};

struct JoinReply {
  Address responder_addr{};
  Level responder_level{};
  NetworkPrefix prefix{};  // carries the netid
};

struct AddressRequest {
  NodeId requestor_id{};
};

struct HeadAddressQuery {
  NodeId requestor_id{};
  Address origin{};  // the allocator the offer must come back to
};

struct AddressOffer {
  Address addr{};
  NodeId requestor_id{};
};

struct AddressAccept {
  Address addr{};
  NodeId requestor_id{};
};

struct AllocationAck {
  Address addr{};
  NodeId requestor_id{};
};

struct ProcessComplete {
  Address addr{};
  NodeId requestor_id{};
};

struct JoinComplete {
  Address addr{};
  NetworkPrefix prefix{};
};

struct AliveUpdate {
  Address sender_addr{};
  NodeId sender_id{};
  bool is_head{false};
  std::uint16_t table_size{0};  // heads report pool occupancy
};

struct ProbeNode {
  Address target_addr{};
};

struct ProbeReply {
  Address addr{};
  NodeId id{};
};

struct DepartureNotice {
  Address leaver_addr{};
};

struct DeallocateRequest {
  Address leaver_addr{};
};

struct DeallocateConfirm {
  Address leaver_addr{};
};

struct TableSync {
  std::vector<std::uint8_t> snapshot;
  bool final_handover{false};  // set on the sync preceding a head departure
};

struct BecomeHead {
  Address head_addr{};
};

struct FindAddress {
  NodeId target_id{};
  std::uint64_t query_id{};
  Address origin_addr{};
  Level visited_level{};  // level of the sender when it forwarded the query
};

struct FindAddressReply {
  NodeId target_id{};
  Address current_addr{};
  std::uint64_t query_id{};
  Address origin_addr{};
};

struct FindAddressFail {
  NodeId target_id{};
  std::uint64_t query_id{};
  Address origin_addr{};
};

struct ChangeAddressRequest {
  NodeId node_id{};
};

struct SupremeAnnounce {
  NetworkPrefix new_prefix{};  // carries the new netid
  std::uint64_t old_netid{};
  Level claim_level{};
  NodeId claim_id{};
  bool commit{false};  // false: candidacy claim, true: apply re-prefix
  std::uint64_t flood_id{};
};

struct MergeProbe {
  enum class Stage { Report, Summary, Adjacency };
  Stage stage{Stage::Report};
  std::uint64_t netid{};        // network the probe describes
  NetworkPrefix prefix{};
  Address supreme_addr{};
  NodeId supreme_id{};
  std::uint16_t n_children{};   // occupied level-(k-1) suffixes
  bool shrink_exhausted{false};
  Address head_a{};             // adjacency reports: the observed pair
  Address head_b{};
};

struct MergeDirective {
  struct Offset {
    int n{};
  };
  struct Reprefix {
    NetworkPrefix new_prefix{};  // carries the new netid
  };
  struct IncreaseK {
    NetworkPrefix new_prefix{};  // one octet shorter, carries the new netid
    std::uint8_t net_index{};    // octet this network writes into the freed slot
    Address new_supreme_addr{};
  };
  struct Shrink {
    Address into_head{};
  };
  struct Rejoin {};

  std::variant<Offset, Reprefix, IncreaseK, Shrink, Rejoin> kind;
  std::uint64_t target_netid{};  // network that must apply the directive
  std::uint64_t flood_id{};      // nonzero when flooded
};

using Message =
    std::variant<JoinNetworkRequest, JoinReply, AddressRequest,
                 HeadAddressQuery, AddressOffer, AddressAccept, AllocationAck,
                 ProcessComplete, JoinComplete, AliveUpdate, ProbeNode,
                 ProbeReply, DepartureNotice, DeallocateRequest,
                 DeallocateConfirm, TableSync, BecomeHead, FindAddress,
                 FindAddressReply, FindAddressFail, ChangeAddressRequest,
                 SupremeAnnounce, MergeProbe, MergeDirective>;

struct Envelope {
  NodeId src_id{};
  std::optional<Address> src_addr;  // absent while the sender is unconfigured
  Message msg;
};

/// Stable message kind name as it appears in traces.
std::string kind_name(const Message& msg);

/// One-line payload summary for traces; stable field order.
std::string payload_summary(const Message& msg);

}  // namespace manetaddr
