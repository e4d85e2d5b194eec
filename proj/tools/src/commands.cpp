// Copyright 2026 The bisect-order Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "bisect_order/baselines.hpp"
#include "bisect_order/codecs.hpp"
#include "bisect_order/config.hpp"
#include "bisect_order/error.hpp"
#include "bisect_order/graph.hpp"
#include "bisect_order/permutation.hpp"
#include "bisect_order/reorder.hpp"
#include "bisect_order/report.hpp"
#include "bisect_order/snapshot.hpp"

#ifndef BISECT_ORDER_VERSION
#define BISECT_ORDER_VERSION "unknown"
#endif

namespace bisect_order::cli {

namespace {

using json = nlohmann::json;

constexpr const char* kTool = "bisect-order";

std::ifstream open_in(const std::string& path)
{
    require_readable(path);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open input file: " + path);
    return in;
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot open output file: " + path);
    return out;
}

void close_out(std::ofstream& out, const std::string& path)
{
    out.flush();
    if (!out)
        throw Error("write failed: " + path);
}

void write_json(const std::string& path, const json& j)
{
    auto out = open_out(path);
    out << j.dump(2) << '\n';
    close_out(out, path);
}

std::string manifest_path(const std::string& artifact) { return artifact + ".manifest.json"; }
std::string labels_path(const std::string& snapshot) { return snapshot + ".labels"; }

/// Snapshot plus its label sidecar when one exists.
BipartiteGraph load_snapshot(const std::string& path)
{
    auto in = open_in(path);
    BipartiteGraph g = read_snapshot(in);
    const std::string lp = labels_path(path);
    if (std::filesystem::exists(lp)) {
        std::ifstream lin(lp);
        g.set_data_labels(read_labels(lin));
    }
    return g;
}

/// The manifest convert wrote next to a snapshot, or null.
json snapshot_manifest(const std::string& snapshot)
{
    const std::string mp = manifest_path(snapshot);
    if (!std::filesystem::exists(mp))
        return nullptr;
    std::ifstream in(mp);
    json j = json::parse(in, nullptr, false);
    return j.is_discarded() ? json(nullptr) : j;
}

// Random for graphs, Minhash for indexes.
std::string default_init(const std::string& snapshot)
{
    const json m = snapshot_manifest(snapshot);
    if (m.is_object() && m.contains("mode") && m["mode"] == "postings")
        return "minhash";
    return "random";
}

InitStrategy init_of(const std::string& name)
{
    try {
        return parse_init_strategy(name);
    } catch (const Error&) {
        throw UsageError("unknown init strategy: " + name);
    }
}

void check_algo(const std::string& algo)
{
    for (const char* known : {"bp", "natural", "random", "bfs", "minhash"})
        if (algo == known)
            return;
    throw UsageError("unknown algorithm: " + algo);
}

ReorderConfig config_of(const ReorderOptions& opt, const std::string& init)
{
    ReorderConfig cfg;
    cfg.init_strategy = init_of(init);
    cfg.max_iters = opt.max_iters;
    cfg.depth_cutoff = opt.depth;
    cfg.seed = opt.seed;
    cfg.minhash_k = opt.minhash_k;
    return cfg;
}

Permutation compute(const BipartiteGraph& g, const ReorderOptions& opt, const std::string& init)
{
    if (opt.algo == "bp")
        return recursive_bisection(g, config_of(opt, init));
    if (opt.algo == "natural")
        return natural_order(g);
    if (opt.algo == "random")
        return random_order(g.num_data(), opt.seed);
    if (opt.algo == "bfs")
        return bfs_order(g);
    return minhash_order(g, opt.minhash_k, opt.seed);
}

/// Text permutation when it parses as "label rank" lines, binary otherwise.
Permutation load_permutation(const std::string& path, const BipartiteGraph& g)
{
    auto in = open_in(path);
    char head[4] = {};
    in.read(head, 4);
    in.clear();
    in.seekg(0);
    if (std::string_view(head, 4) == "BOPM")
        return read_permutation_binary(in);
    return read_permutation_text(in, g);
}

std::vector<Codec> codecs_of(const std::vector<std::string>& names)
{
    if (names.empty())
        return all_codecs();
    std::vector<Codec> out;
    for (const auto& n : names) {
        try {
            out.push_back(parse_codec(n));
        } catch (const Error&) {
            throw UsageError("unknown codec: " + n);
        }
    }
    return out;
}

json base_manifest(const char* command)
{
    json j;
    j["tool"] = kTool;
    j["version"] = BISECT_ORDER_VERSION;
    j["command"] = command;
    return j;
}

} // namespace

void require_readable(const std::string& path)
{
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec))
        throw UsageError("cannot open input file: " + path);
}

json convert_manifest(const ConvertOptions& opt)
{
    json j = base_manifest("convert");
    j["input"] = {{"path", opt.input}, {"format", opt.mode == "postings" ? "postings" : "edge-list"}};
    j["mode"] = opt.mode;
    j["directed"] = opt.directed;
    j["min_len"] = opt.min_len;
    j["outputs"] = {{"snapshot", opt.output}, {"labels", labels_path(opt.output)}};
    return j;
}

void run_convert(const ConvertOptions& opt)
{
    if (opt.mode != "per-edge" && opt.mode != "per-vertex" && opt.mode != "postings")
        throw UsageError("unknown mode: " + opt.mode);
    if (opt.mode == "per-edge" && opt.directed)
        throw UsageError("per-edge reduction needs an undirected graph");
    auto in = open_in(opt.input);

    BipartiteGraph g;
    if (opt.mode == "postings") {
        g = load_postings(in, opt.min_len);
    } else {
        const PlainGraph plain = load_edge_list(in, opt.directed);
        g = opt.mode == "per-edge" ? to_bipartite_per_edge(plain) : to_bipartite_per_vertex(plain);
    }

    auto out = open_out(opt.output);
    write_snapshot(out, g);
    close_out(out, opt.output);
    const std::string lp = labels_path(opt.output);
    auto lout = open_out(lp);
    write_labels(lout, g);
    close_out(lout, lp);

    json m = convert_manifest(opt);
    m["stats"] = {{"queries", g.num_queries()}, {"data", g.num_data()}, {"edges", g.num_edges()}};
    write_json(manifest_path(opt.output), m);
    std::fprintf(stderr, "convert: %zu queries, %zu data, %zu edges\n", g.num_queries(), g.num_data(),
                 g.num_edges());
}

json reorder_manifest(const ReorderOptions& opt)
{
    json j = base_manifest("reorder");
    j["input"] = {{"path", opt.snapshot}, {"format", "snapshot"}};
    const json source = snapshot_manifest(opt.snapshot);
    if (source.is_object()) {
        j["source"] = source.value("input", json(nullptr));
        j["mode"] = source.value("mode", json(nullptr));
    }
    j["algorithm"] = opt.algo;
    j["config"] = {{"init", opt.init.value_or(default_init(opt.snapshot))},
                   {"max_iters", opt.max_iters},
                   {"depth", opt.depth ? json(*opt.depth) : json(nullptr)},
                   {"minhash_k", opt.minhash_k}};
    j["seed"] = opt.seed;
    j["outputs"] = {{"permutation", opt.output}, {"permutation_binary", opt.output + ".bin"}};
    return j;
}

void run_reorder(const ReorderOptions& opt)
{
    check_algo(opt.algo);
    const std::string init = opt.init.value_or(default_init(opt.snapshot));
    init_of(init);
    const BipartiteGraph g = load_snapshot(opt.snapshot);

    const auto start = std::chrono::steady_clock::now();
    const Permutation p = compute(g, opt, init);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    auto out = open_out(opt.output);
    write_permutation_text(out, p, g);
    close_out(out, opt.output);
    const std::string bin = opt.output + ".bin";
    auto bout = open_out(bin);
    write_permutation_binary(bout, p);
    close_out(bout, bin);
    write_json(manifest_path(opt.output), reorder_manifest(opt));
    std::fprintf(stderr, "reorder: %s on %zu vertices in %.3f s\n", opt.algo.c_str(), g.num_data(),
                 elapsed.count());
}

void run_eval(const EvalOptions& opt)
{
    if (opt.perms.empty() && !opt.identity)
        throw UsageError("eval needs --perm or --identity");
    const std::vector<Codec> codecs = codecs_of(opt.codecs);
    const BipartiteGraph g = load_snapshot(opt.snapshot);
    std::optional<PlainGraph> plain;
    if (opt.graph) {
        auto in = open_in(*opt.graph);
        plain = load_edge_list(in, opt.directed);
    }

    std::vector<std::pair<std::string, Permutation>> perms;
    if (opt.identity)
        perms.emplace_back("identity", Permutation::identity(g.num_data()));
    for (const auto& path : opt.perms)
        perms.emplace_back(path, load_permutation(path, g));

    std::ofstream tsv;
    if (opt.tsv) {
        tsv = open_out(*opt.tsv);
        tsv << "permutation\tloggap_avg\tlog_avg";
        for (Codec c : codecs)
            tsv << "\tbits_" << codec_name(c);
        tsv << '\n';
    }
    for (const auto& [name, p] : perms) {
        const OrderingReport r = make_report(g, p, codecs, plain ? &*plain : nullptr, opt.include_headers);
        std::cout << to_json(r, {{"permutation", name}}) << '\n';
        if (opt.tsv) {
            tsv << name << '\t' << r.loggap_avg << '\t';
            if (r.log_avg)
                tsv << *r.log_avg;
            else
                tsv << "NA";
            for (Codec c : codecs)
                tsv << '\t' << r.bits_per_edge.at(std::string(codec_name(c)));
            tsv << '\n';
        }
    }
    std::cout.flush();
    if (opt.tsv)
        close_out(tsv, *opt.tsv);
}

void run_replay(const std::string& path)
{
    auto in = open_in(path);
    const json m = json::parse(in, nullptr, false);
    if (m.is_discarded() || !m.is_object() || m.value("tool", "") != kTool)
        throw UsageError("not a manifest: " + path);
    try {
        const std::string command = m.at("command");
        if (command == "convert") {
            ConvertOptions opt;
            opt.input = m.at("input").at("path");
            opt.mode = m.at("mode");
            opt.directed = m.at("directed");
            opt.min_len = m.at("min_len");
            opt.output = m.at("outputs").at("snapshot");
            run_convert(opt);
        } else if (command == "reorder") {
            ReorderOptions opt;
            opt.snapshot = m.at("input").at("path");
            opt.algo = m.at("algorithm");
            const json& cfg = m.at("config");
            opt.init = cfg.at("init").get<std::string>();
            opt.max_iters = cfg.at("max_iters");
            if (!cfg.at("depth").is_null())
                opt.depth = cfg.at("depth").get<std::size_t>();
            opt.minhash_k = cfg.at("minhash_k");
            opt.seed = m.at("seed");
            opt.output = m.at("outputs").at("permutation");
            run_reorder(opt);
        } else {
            throw UsageError("manifest has unknown command: " + command);
        }
    } catch (const json::exception& e) {
        throw UsageError("malformed manifest " + path + ": " + e.what());
    }
}

} // namespace bisect_order::cli
