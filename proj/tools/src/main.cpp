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

// bisect-order: convert inputs to snapshots, compute orderings, evaluate them.
//
//   bisect-order convert --input FILE --mode per-vertex --output G.snap
//   bisect-order reorder --snapshot G.snap --algo bp --seed 1 --output G.perm
//   bisect-order eval --snapshot G.snap --perm G.perm --codecs gamma,bic
//   bisect-order replay --manifest G.perm.manifest.json
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <tbb/global_control.h>
#include <tbb/task_arena.h>

#include "commands.hpp"

using namespace bisect_order;

int main(int argc, char** argv)
{
    CLI::App app{"Compression-friendly orderings by recursive graph bisection", "bisect-order"};
    app.require_subcommand(1);
    app.set_version_flag("--version", BISECT_ORDER_VERSION);
    app.fallthrough();

    std::size_t threads = 0;
    if (const char* env = std::getenv("BISECT_ORDER_THREADS"); env && *env) {
        const char* end = env + std::strlen(env);
        const auto [ptr, ec] = std::from_chars(env, end, threads);
        if (ec != std::errc{} || ptr != end) {
            std::fprintf(stderr, "bisect-order: BISECT_ORDER_THREADS is not a thread count: %s\n", env);
            return 2;
        }
    }
    app.add_option("--threads", threads, "Worker cap, default $BISECT_ORDER_THREADS; 0 lets the scheduler decide");

    cli::ConvertOptions conv;
    auto* convert = app.add_subcommand("convert", "Build a bipartite snapshot from an edge list or postings");
    convert->add_option("--input", conv.input, "Edge list, or postings with --mode postings")->required();
    convert->add_option("--mode", conv.mode, "per-edge, per-vertex or postings")->capture_default_str();
    convert->add_flag("--directed", conv.directed, "Edge list is directed");
    convert->add_option("--min-len", conv.min_len, "Drop postings lists shorter than this");
    convert->add_option("--output", conv.output, "Snapshot path")->required();

    cli::ReorderOptions ro;
    std::string init;
    std::size_t depth = 0;
    auto* reorder = app.add_subcommand("reorder", "Compute an ordering of the data vertices");
    reorder->add_option("--snapshot", ro.snapshot)->required();
    reorder->add_option("--algo", ro.algo, "bp, natural, random, bfs or minhash")->capture_default_str();
    auto* init_opt = reorder->add_option("--init", init, "Initial split for bp: random, natural, bfs, minhash");
    reorder->add_option("--max-iters", ro.max_iters)->capture_default_str();
    auto* depth_opt = reorder->add_option("--depth", depth, "Bisection levels (default ceil(log2 n) - 5)");
    reorder->add_option("--seed", ro.seed)->capture_default_str();
    reorder->add_option("--minhash-k", ro.minhash_k)->capture_default_str();
    reorder->add_option("--output", ro.output, "Text permutation; .bin and .manifest.json go next to it")
        ->required();

    cli::EvalOptions ev;
    std::string codecs;
    auto* eval = app.add_subcommand("eval", "Report LogGap, Log, gap histogram and bits per edge");
    eval->add_option("--snapshot", ev.snapshot)->required();
    eval->add_option("--perm", ev.perms, "Permutation file, text or binary; repeatable");
    eval->add_flag("--identity", ev.identity, "Also evaluate the identity ordering");
    eval->add_option("--graph", ev.graph, "Edge list for the Log metric");
    eval->add_flag("--directed", ev.directed, "Edge list for --graph is directed");
    eval->add_option("--codecs", codecs, "Comma list of varbyte, gamma, ef, bic (default all)");
    eval->add_flag("--include-headers", ev.include_headers, "Charge per-list count and universe");
    eval->add_option("--tsv", ev.tsv, "Also write one row per permutation to this file");

    std::string manifest;
    auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
    replay->add_option("--manifest", manifest)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto dispatch = [&] {
        if (*convert) {
            cli::run_convert(conv);
        } else if (*reorder) {
            if (*init_opt)
                ro.init = init;
            if (*depth_opt)
                ro.depth = depth;
            cli::run_reorder(ro);
        } else if (*eval) {
            for (std::size_t pos = 0; !codecs.empty();) {
                const std::size_t comma = codecs.find(',', pos);
                ev.codecs.push_back(codecs.substr(pos, comma - pos));
                if (comma == std::string::npos)
                    break;
                pos = comma + 1;
            }
            cli::run_eval(ev);
        } else if (*replay) {
            cli::run_replay(manifest);
        }
    };

    try {
        if (threads > 0) {
            // An explicit arena gets `threads` slots even when the machine has fewer cores.
            tbb::global_control cap(tbb::global_control::max_allowed_parallelism, threads);
            tbb::task_arena arena(static_cast<int>(threads));
            arena.execute(dispatch);
        } else {
            dispatch();
        }
    } catch (const cli::UsageError& e) {
        std::fprintf(stderr, "bisect-order: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "bisect-order: %s\n", e.what());
        return 1;
    }
    return 0;
}
