#pragma once

#include <json.hpp>

#include "babi/bounds.hpp"
#include "babi/graph.hpp"
#include "babi/search.hpp"

namespace babi {

inline nlohmann::json certificate_json(const Certificate& c) {
    nlohmann::json j;
    j["schema"] = 1;
    j["order"] = c.order;
    nlohmann::json degs = nlohmann::json::object();
    for (auto [d, n] : c.degrees) degs[std::to_string(d)] = n;
    j["degrees"] = degs;
    if (c.girth)
        j["girth"] = *c.girth;
    else
        j["girth"] = "acyclic";
    j["balanced"] = c.balanced;
    if (c.census)
        j["census"] = {{"fat", c.census->fat},
                       {"thin", c.census->thin},
                       {"mixed", c.census->mixed}};
    else
        j["census"] = nullptr;
    j["connected"] = c.connected;
    j["provenance"] = c.provenance;
    j["params"] = {{"r", c.params.r}, {"s", c.params.s}, {"g", c.params.g}};
    return j;
}

inline nlohmann::json bound_json(const BoundResult& b) {
    const char* kind = b.kind == BoundResult::Kind::lower   ? "lower"
                       : b.kind == BoundResult::Kind::exact ? "exact"
                                                            : "upper";
    return {{"value", b.value}, {"kind", kind}, {"source", b.source}};
}

inline nlohmann::json outcome_json(const SearchOutcome& o, const std::string& witness_g6) {
    nlohmann::json j;
    j["schema"] = 1;
    if (o.min_order)
        j["min_order"] = *o.min_order;
    else
        j["min_order"] = nullptr;
    j["witness"] = o.witness ? nlohmann::json(witness_g6) : nlohmann::json(nullptr);
    j["nodes"] = o.nodes;
    j["exhaustive"] = o.exhaustive;
    return j;
}

}  // namespace babi
