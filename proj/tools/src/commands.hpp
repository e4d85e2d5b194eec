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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace bisect_order::cli {

/// Bad flags, unknown names, unreadable inputs: exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ConvertOptions {
    std::string input;
    std::string mode = "per-vertex";  // per-edge | per-vertex | postings
    bool directed = false;
    std::size_t min_len = 0;
    std::string output;
};

struct ReorderOptions {
    std::string snapshot;
    std::string algo = "bp";  // bp | natural | random | bfs | minhash
    std::optional<std::string> init;  // unset: from the snapshot's mode
    std::size_t max_iters = 20;
    std::optional<std::size_t> depth;
    std::uint64_t seed = 0;
    std::size_t minhash_k = 10;
    std::string output;
};

struct EvalOptions {
    std::string snapshot;
    std::vector<std::string> perms;
    bool identity = false;
    std::optional<std::string> graph;
    bool directed = false;
    std::vector<std::string> codecs;  // empty: all
    bool include_headers = false;
    std::optional<std::string> tsv;
};

void run_convert(const ConvertOptions& opt);
void run_reorder(const ReorderOptions& opt);
void run_eval(const EvalOptions& opt);
/// Re-executes the command a manifest records.
void run_replay(const std::string& manifest_path);

nlohmann::json convert_manifest(const ConvertOptions& opt);
nlohmann::json reorder_manifest(const ReorderOptions& opt);

/// Throws UsageError naming `path` when it cannot be read.
void require_readable(const std::string& path);

} // namespace bisect_order::cli
