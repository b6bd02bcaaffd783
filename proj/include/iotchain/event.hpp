/*
   Copyright 2026 The iotchain Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <iotchain/bytes.hpp>
#include <iotchain/serialize.hpp>

namespace iotchain {

inline constexpr size_t kMaxIndexedAttributes = 3;

inline constexpr std::string_view kAttrOpcode = "opcode";
inline constexpr std::string_view kAttrUri = "uri";

enum class EventName : uint8_t {
    kOperation = 0,
    kAuthorizationRequest = 1,
};

inline std::string_view event_name_str(EventName name) {
    switch (name) {
        case EventName::kOperation:
            return "Operation";
        case EventName::kAuthorizationRequest:
            return "AuthorizationRequest";
    }
    return "?";
}

struct IndexedAttribute {
    std::string name;
    Bytes value;

    bool operator==(const IndexedAttribute&) const = default;
};

// A named record emitted by contract execution. Up to three attributes are
// indexed and filterable by watchers; everything else rides in `data`.
struct Event {
    Address contract;
    EventName name{EventName::kOperation};
    std::vector<IndexedAttribute> indexed;
    Bytes data;

    bool operator==(const Event&) const = default;

    // Operation(OPCode, URIResource): attribute values equal the invoking
    // call's parameters.
    static Event operation(const Address& contract, uint8_t opcode, const Hash32& uri) {
        Event ev;
        ev.contract = contract;
        ev.name = EventName::kOperation;
        ev.indexed.push_back({std::string{kAttrOpcode}, Bytes{opcode}});
        ev.indexed.push_back({std::string{kAttrUri}, Bytes{uri.bytes.begin(), uri.bytes.end()}});
        return ev;
    }

    // AuthorizationRequest(OPCode, URIResource) with the requester address as
    // non-indexed data, for privileged clients to inspect.
    static Event authorization_request(const Address& contract, uint8_t opcode, const Hash32& uri,
                                       const Address& requester) {
        Event ev = operation(contract, opcode, uri);
        ev.name = EventName::kAuthorizationRequest;
        ev.data.assign(requester.bytes.begin(), requester.bytes.end());
        return ev;
    }

    [[nodiscard]] const Bytes* indexed_value(std::string_view attr_name) const {
        for (const auto& attr : indexed) {
            if (attr.name == attr_name) {
                return &attr.value;
            }
        }
        return nullptr;
    }

    void encode(Writer& w) const {
        w.put_address(contract);
        w.put_u8(static_cast<uint8_t>(name));
        w.put_u8(static_cast<uint8_t>(indexed.size()));
        for (const auto& attr : indexed) {
            w.put_string(attr.name);
            w.put_sized(BytesView{attr.value});
        }
        w.put_sized(BytesView{data});
    }

    static Event decode(Reader& r) {
        Event ev;
        ev.contract = r.get_address();
        const uint8_t name = r.get_u8();
        if (name > static_cast<uint8_t>(EventName::kAuthorizationRequest)) {
            throw DecodeError("unknown event name");
        }
        ev.name = static_cast<EventName>(name);
        const uint8_t count = r.get_u8();
        if (count > kMaxIndexedAttributes) {
            throw DecodeError("too many indexed attributes");
        }
        for (uint8_t i = 0; i < count; ++i) {
            IndexedAttribute attr;
            attr.name = r.get_string();
            attr.value = r.get_sized();
            ev.indexed.push_back(std::move(attr));
        }
        ev.data = r.get_sized();
        return ev;
    }
};

// Line-delimited export record: (height, tx index, name, indexed attrs hex, data).
inline std::string event_export_line(uint64_t height, uint32_t tx_index, const Event& ev) {
    std::ostringstream out;
    out << "height=" << height << " tx=" << tx_index << " name=" << event_name_str(ev.name)
        << " indexed=";
    for (size_t i = 0; i < ev.indexed.size(); ++i) {
        if (i > 0) {
            out << ';';
        }
        out << ev.indexed[i].name << ':' << to_hex(BytesView{ev.indexed[i].value});
    }
    out << " data=" << (ev.data.empty() ? "-" : to_hex(BytesView{ev.data}));
    return out.str();
}

}  // namespace iotchain
