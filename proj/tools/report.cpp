#include "report.hpp"

#include <cstdio>
#include <stdexcept>

#include "qcw/errors.hpp"

namespace qcw {

namespace {

void append_escaped(std::string& out, const std::string& s) {
    out.push_back('"');
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out.push_back('"');
}

void append_double(std::string& out, double value) {
    if (value == 0.0) {
        value = 0.0;  // collapse -0 so reparsing cannot change the text
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    out += buf;
}

bool all_primitive(const Json& array) {
    for (const Json& item : array) {
        if (item.is_object() || item.is_array()) {
            return false;
        }
    }
    return true;
}

void dump_value(const Json& value, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner_pad(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (value.type()) {
        case Json::value_t::object: {
            if (value.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = value.begin(); it != value.end(); ++it) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out += inner_pad;
                append_escaped(out, it.key());
                out += ": ";
                dump_value(it.value(), out, indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (value.empty()) {
                out += "[]";
                return;
            }
            if (all_primitive(value)) {
                out += "[";
                bool first = true;
                for (const Json& item : value) {
                    if (!first) {
                        out += ", ";
                    }
                    first = false;
                    dump_value(item, out, indent);
                }
                out += "]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const Json& item : value) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out += inner_pad;
                dump_value(item, out, indent + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case Json::value_t::string:
            append_escaped(out, value.get_ref<const std::string&>());
            return;
        case Json::value_t::boolean:
            out += value.get<bool>() ? "true" : "false";
            return;
        case Json::value_t::number_integer:
            out += std::to_string(value.get<std::int64_t>());
            return;
        case Json::value_t::number_unsigned:
            out += std::to_string(value.get<std::uint64_t>());
            return;
        case Json::value_t::number_float:
            append_double(out, value.get<double>());
            return;
        case Json::value_t::null:
            out += "null";
            return;
        default:
            throw std::logic_error("unsupported value type in report document");
    }
}

}  // namespace

std::string dump_report(const Json& document) {
    std::string out;
    dump_value(document, out, 0);
    out.push_back('\n');
    return out;
}

Json parse_report(std::string_view text) {
    Json document = Json::parse(text, nullptr, false);
    if (document.is_discarded()) {
        throw parse_error("malformed report document");
    }
    return document;
}

namespace {

Json amplitude_pairs(const StateVector& state) {
    Json pairs = Json::array();
    for (const Amplitude& a : state.amps()) {
        pairs.push_back(Json::array({a.real(), a.imag()}));
    }
    return pairs;
}

}  // namespace

Json trace_document(const WorldTrace& world_trace, const InformationAudit& audit,
                    int format_version) {
    Json document;
    document["format_version"] = format_version;

    Json steps = Json::array();
    for (const WorldStep& step : world_trace.per_step) {
        Json worlds = Json::array();
        for (const World& world : step.decomposition.worlds) {
            Json w;
            w["label"] = world.label;
            w["weight"] = world.weight;
            w["relative_state"] = amplitude_pairs(world.relative_state);
            worlds.push_back(std::move(w));
        }
        Json s;
        s["step_index"] = step.step_index;
        s["stage"] = std::string(to_string(step.stage));
        s["description"] = step.description;
        s["world_count"] = step.world_count();
        s["residual"] = step.decomposition.residual;
        s["worlds"] = std::move(worlds);
        steps.push_back(std::move(s));
    }
    document["steps"] = std::move(steps);

    // Only count-changing events are reported; stable transitions would just
    // repeat the step list.
    Json events = Json::array();
    for (const WorldEvent& event : world_trace.events) {
        if (event.kind == EventKind::kStable) {
            continue;
        }
        Json e;
        e["step_index"] = event.step_index;
        e["kind"] = std::string(to_string(event.kind));
        e["count_before"] = event.count_before;
        e["count_after"] = event.count_after;
        events.push_back(std::move(e));
    }
    document["events"] = std::move(events);

    Json audit_block;
    audit_block["worlds_max"] = audit.worlds_max;
    audit_block["bits_per_world"] = audit.bits_per_world;
    audit_block["classical_bits_to_describe"] = audit.classical_bits_to_describe;
    audit_block["retrievable_bits"] = audit.retrievable_bits;
    document["audit"] = std::move(audit_block);
    return document;
}

std::string serialize_trace(const WorldTrace& world_trace, const InformationAudit& audit,
                            int format_version) {
    return dump_report(trace_document(world_trace, audit, format_version));
}

}  // namespace qcw
