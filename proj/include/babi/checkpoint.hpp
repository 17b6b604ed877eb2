#pragma once

#include <fstream>
#include <mutex>
#include <set>
#include <string>

#include <json.hpp>

#include "babi/graph6.hpp"
#include "babi/search.hpp"

namespace babi {

// Checkpointed variant of exhaustive_min.  The checkpoint is a JSON file
//
//   { "schema": 1, "r": .., "s": .., "g": .., "v_max": .., "mode": "..",
//     "v": <order being enumerated>, "completed": [subtree indices],
//     "witnesses": ["<graph6>", ...] }
//
// written after every finished subtree; resuming skips completed subtrees of
// the recorded order.  A checkpoint only matches a run with identical
// parameters.
inline SearchOutcome exhaustive_min_checkpointed(const SearchSpec& spec,
                                                 const std::string& ckpt_path,
                                                 bool resume) {
    using nlohmann::json;
    const bool find_first = spec.mode == SearchSpec::Mode::find_first;
    const char* mode_name = find_first ? "find-first" : "prove-min";

    int resume_v = -1;
    std::set<int> done_roots;
    std::vector<Graph> preloaded;
    if (resume && !ckpt_path.empty()) {
        std::ifstream in(ckpt_path);
        if (in) {
            json j = json::parse(in);
            if (j.value("schema", 0) != 1 || j["r"] != spec.params.r ||
                j["s"] != spec.params.s || j["g"] != spec.params.g ||
                j["v_max"] != spec.v_max || j["mode"] != mode_name)
                throw std::invalid_argument("checkpoint does not match this search");
            resume_v = j["v"];
            for (int i : j["completed"]) done_roots.insert(i);
            for (const std::string& g6 : j["witnesses"]) preloaded.push_back(graph6_decode(g6));
        }
    }

    SearchOutcome out;
    std::atomic<long long> nodes{0};
    std::atomic<bool> exhausted{false};
    search_detail::Budget bud{
        spec.node_limit,
        std::chrono::steady_clock::now() +
            std::chrono::microseconds(
                spec.time_limit_s > 0 ? static_cast<long long>(spec.time_limit_s * 1e6)
                                      : 0),
        spec.time_limit_s > 0, &nodes, &exhausted};

    for (int v = search_detail::first_admissible_order(spec.params); v <= spec.v_max;
         ++v) {
        if (!search_detail::admissible_order(v, spec.params)) continue;
        if (resume_v >= 0 && v < resume_v) continue;  // earlier orders proven empty

        std::mutex mu;
        std::set<int> completed = (v == resume_v) ? done_roots : std::set<int>{};
        std::vector<std::string> witness_g6;
        for (const auto& g : preloaded)
            if (g.order() == v) witness_g6.push_back(graph6_encode(g));
        auto save = [&](int root, const std::vector<Graph>& found) {
            if (ckpt_path.empty()) return;
            std::scoped_lock lock(mu);
            completed.insert(root);
            for (const auto& g : found) witness_g6.push_back(graph6_encode(g));
            json j{{"schema", 1},        {"r", spec.params.r},   {"s", spec.params.s},
                   {"g", spec.params.g}, {"v_max", spec.v_max},  {"mode", mode_name},
                   {"v", v}};
            j["completed"] = completed;
            j["witnesses"] = witness_g6;
            std::ofstream(ckpt_path) << j.dump() << "\n";
        };
        std::set<int> skip = (v == resume_v) ? done_roots : std::set<int>{};
        std::vector<Graph> pre;
        for (const auto& g : preloaded)
            if (g.order() == v) pre.push_back(g);
        auto res = search_detail::enumerate_order(v, spec, bud, find_first,
                                                  skip.empty() ? nullptr : &skip, save,
                                                  pre.empty() ? nullptr : &pre);
        out.nodes += res.nodes;
        if (!res.found.empty()) {
            out.min_order = v;
            out.witness = res.found.front();
            out.exhaustive = out.exhaustive && !res.exhausted_budget;
            return out;
        }
        if (res.exhausted_budget) {
            out.exhaustive = false;
            return out;
        }
    }
    return out;
}

}  // namespace babi
