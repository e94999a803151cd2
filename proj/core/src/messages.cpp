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

#include "manetaddr/messages.hpp"

namespace manetaddr {

namespace {

std::string hex_netid(std::uint64_t netid) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "0x%llx",
                static_cast<unsigned long long>(netid));
  return buf;
}

struct KindNameVisitor {
  std::string operator()(const JoinNetworkRequest&) const { return "JoinNetworkRequest"; }
  std::string operator()(const JoinReply&) const { return "JoinReply"; }
  std::string operator()(const AddressRequest&) const { return "AddressRequest"; }
  std::string operator()(const HeadAddressQuery&) const { return "HeadAddressQuery"; }
  std::string operator()(const AddressOffer&) const { return "AddressOffer"; }
  std::string operator()(const AddressAccept&) const { return "AddressAccept"; }
  std::string operator()(const AllocationAck&) const { return "AllocationAck"; }
  std::string operator()(const ProcessComplete&) const { return "ProcessComplete"; }
  std::string operator()(const JoinComplete&) const { return "JoinComplete"; }
  std::string operator()(const AliveUpdate&) const { return "AliveUpdate"; }
  std::string operator()(const ProbeNode&) const { return "ProbeNode"; }
  std::string operator()(const ProbeReply&) const { return "ProbeReply"; }
  std::string operator()(const DepartureNotice&) const { return "DepartureNotice"; }
  std::string operator()(const DeallocateRequest&) const { return "DeallocateRequest"; }
  std::string operator()(const DeallocateConfirm&) const { return "DeallocateConfirm"; }
  std::string operator()(const TableSync&) const { return "TableSync"; }
  std::string operator()(const BecomeHead&) const { return "BecomeHead"; }
  std::string operator()(const FindAddress&) const { return "FindAddress"; }
  std::string operator()(const FindAddressReply&) const { return "FindAddressReply"; }
  std::string operator()(const FindAddressFail&) const { return "FindAddressFail"; }
  std::string operator()(const ChangeAddressRequest&) const { return "ChangeAddressRequest"; }
  std::string operator()(const SupremeAnnounce&) const { return "SupremeAnnounce"; }
  std::string operator()(const MergeProbe&) const { return "MergeProbe"; }
  std::string operator()(const MergeDirective&) const { return "MergeDirective"; }
};

struct SummaryVisitor {
  std::string operator()(const JoinNetworkRequest& m) const {
    return "requestor=" + std::to_string(m.requestor_id);
  }
  std::string operator()(const JoinReply& m) const {
    return m.responder_addr.str() + " level=" + std::to_string(m.responder_level) +
           " netid=" + hex_netid(m.prefix.netid);
  }
  std::string operator()(const AddressRequest& m) const {
    return "requestor=" + std::to_string(m.requestor_id);
  }
  std::string operator()(const HeadAddressQuery& m) const {
    return "requestor=" + std::to_string(m.requestor_id) + " origin=" + m.origin.str();
  }
  std::string operator()(const AddressOffer& m) const {
    return m.addr.str() + " requestor=" + std::to_string(m.requestor_id);
  }
  std::string operator()(const AddressAccept& m) const {
    return m.addr.str() + " requestor=" + std::to_string(m.requestor_id);
  }
  std::string operator()(const AllocationAck& m) const {
    return m.addr.str() + " requestor=" + std::to_string(m.requestor_id);
  }
  std::string operator()(const ProcessComplete& m) const {
    return m.addr.str() + " requestor=" + std::to_string(m.requestor_id);
  }
  std::string operator()(const JoinComplete& m) const {
    return m.addr.str() + " netid=" + hex_netid(m.prefix.netid);
  }
  std::string operator()(const AliveUpdate& m) const {
    std::string s = m.sender_addr.str() + " id=" + std::to_string(m.sender_id);
    if (m.is_head) s += " n=" + std::to_string(m.table_size);
    return s;
  }
  std::string operator()(const ProbeNode& m) const { return m.target_addr.str(); }
  std::string operator()(const ProbeReply& m) const {
    return m.addr.str() + " id=" + std::to_string(m.id);
  }
  std::string operator()(const DepartureNotice& m) const { return m.leaver_addr.str(); }
  std::string operator()(const DeallocateRequest& m) const { return m.leaver_addr.str(); }
  std::string operator()(const DeallocateConfirm& m) const { return m.leaver_addr.str(); }
  std::string operator()(const TableSync& m) const {
    return "bytes=" + std::to_string(m.snapshot.size()) +
           (m.final_handover ? " final" : "");
  }
  std::string operator()(const BecomeHead& m) const { return m.head_addr.str(); }
  std::string operator()(const FindAddress& m) const {
    return "target=" + std::to_string(m.target_id) + " q=" + std::to_string(m.query_id) +
           " origin=" + m.origin_addr.str();
  }
  std::string operator()(const FindAddressReply& m) const {
    return "target=" + std::to_string(m.target_id) + " at=" + m.current_addr.str() +
           " q=" + std::to_string(m.query_id);
  }
  std::string operator()(const FindAddressFail& m) const {
    return "target=" + std::to_string(m.target_id) + " q=" + std::to_string(m.query_id);
  }
  std::string operator()(const ChangeAddressRequest& m) const {
    return "node=" + std::to_string(m.node_id);
  }
  std::string operator()(const SupremeAnnounce& m) const {
    return std::string(m.commit ? "commit" : "claim") + " prefix=" + m.new_prefix.str() +
           " netid=" + hex_netid(m.new_prefix.netid) +
           " level=" + std::to_string(m.claim_level) +
           " id=" + std::to_string(m.claim_id);
  }
  std::string operator()(const MergeProbe& m) const {
    switch (m.stage) {
      case MergeProbe::Stage::Report:
        return "report netid=" + hex_netid(m.netid) + " supreme=" + m.supreme_addr.str();
      case MergeProbe::Stage::Summary:
        return "summary netid=" + hex_netid(m.netid) + " n=" + std::to_string(m.n_children) +
               (m.shrink_exhausted ? " exhausted" : "");
      case MergeProbe::Stage::Adjacency:
        return "adjacency " + m.head_a.str() + "~" + m.head_b.str();
    }
    return "";
  }
  std::string operator()(const MergeDirective& m) const {
    struct V {
      std::string operator()(const MergeDirective::Offset& k) const {
        return "offset n=" + std::to_string(k.n);
      }
      std::string operator()(const MergeDirective::Reprefix& k) const {
        return "reprefix " + k.new_prefix.str() + " netid=" + hex_netid(k.new_prefix.netid);
      }
      std::string operator()(const MergeDirective::IncreaseK& k) const {
        return "increase-k " + k.new_prefix.str() + " index=" + std::to_string(k.net_index);
      }
      std::string operator()(const MergeDirective::Shrink& k) const {
        return "shrink into=" + k.into_head.str();
      }
      std::string operator()(const MergeDirective::Rejoin&) const { return "rejoin"; }
    };
    return std::visit(V{}, m.kind) + " target=" + hex_netid(m.target_netid);
  }
};

}  // namespace

std::string kind_name(const Message& msg) { return std::visit(KindNameVisitor{}, msg); }

std::string payload_summary(const Message& msg) { return std::visit(SummaryVisitor{}, msg); }

}  // namespace manetaddr
