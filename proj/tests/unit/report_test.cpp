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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "bisect_order/baselines.hpp"
#include "bisect_order/error.hpp"
#include "bisect_order/permutation.hpp"
#include "bisect_order/report.hpp"
#include "corpus.hpp"

using namespace bisect_order;

TEST(Permutation, Basics)
{
    const auto p = Permutation::from_order({2, 0, 1});
    EXPECT_EQ(p.rank(2), 0u);
    EXPECT_EQ(p.rank(0), 1u);
    EXPECT_EQ(p.at(2), 1u);
    EXPECT_EQ(Permutation::from_ranks({1, 2, 0}), p);
    EXPECT_EQ(p.compose(Permutation::identity(3).reversed()), p.reversed());
    EXPECT_EQ(Permutation::identity(0).size(), 0u);
    EXPECT_THROW(Permutation::from_order({0, 0, 1}), ValidationError);
    EXPECT_THROW(Permutation::from_ranks({0, 3}), ValidationError);
}

TEST(Permutation, TextRoundTripUsesLabels)
{
    std::istringstream in("7 10 20 30\n");
    const auto g = load_postings(in, 0);  // labels 10, 20, 30
    const auto p = Permutation::from_order({2, 0, 1});
    std::stringstream text;
    write_permutation_text(text, p, g);
    EXPECT_EQ(text.str(), "10 1\n20 2\n30 0\n");
    EXPECT_EQ(read_permutation_text(text, g), p);
}

TEST(Permutation, TextValidation)
{
    const auto g = BipartiteGraph::from_lists(3, {{0, 1, 2}});
    std::istringstream dup("0 0\n0 1\n2 2\n");
    EXPECT_THROW(read_permutation_text(dup, g), ValidationError);
    std::istringstream missing("0 0\n1 1\n");
    EXPECT_THROW(read_permutation_text(missing, g), ValidationError);
    std::istringstream unknown("0 0\n1 1\n9 2\n");
    EXPECT_THROW(read_permutation_text(unknown, g), ValidationError);
    std::istringstream same_rank("0 0\n1 0\n2 2\n");
    EXPECT_THROW(read_permutation_text(same_rank, g), ValidationError);
    std::istringstream garbage("0 x\n");
    EXPECT_THROW(read_permutation_text(garbage, g), ParseError);
}

TEST(Permutation, BinaryRoundTrip)
{
    const auto p = random_order(1000, 3);
    std::stringstream bin;
    write_permutation_binary(bin, p);
    EXPECT_EQ(bin.str().size(), 4u + 4 + 8 + 4 * 1000);
    EXPECT_EQ(read_permutation_binary(bin), p);
    std::istringstream bad("BOBG");
    EXPECT_THROW(read_permutation_binary(bad), FormatError);
}

TEST(Report, FieldsAndJson)
{
    const auto plain = testkit::make_plain(4, {{0, 1}, {1, 2}, {2, 3}}, false);
    const auto g = to_bipartite_per_vertex(plain);
    const auto r = make_report(g, Permutation::identity(4), {Codec::Gamma, Codec::Interpolative}, &plain);
    // queries: {1}, {0,2}, {1,3}, {2}: two gaps of 2
    EXPECT_EQ(r.loggap_total, 4u);
    EXPECT_EQ(r.gap_count, 2u);
    EXPECT_DOUBLE_EQ(r.loggap_avg, 2.0);
    ASSERT_TRUE(r.log_avg.has_value());
    EXPECT_DOUBLE_EQ(*r.log_avg, 1.0);
    EXPECT_EQ(r.bits_per_edge.size(), 2u);

    const auto j = nlohmann::json::parse(to_json(r, {{"ordering", "natural"}}));
    EXPECT_EQ(j["ordering"], "natural");
    EXPECT_EQ(j["loggap_total"], 4);
    EXPECT_EQ(j["loggap_avg"], 2.0);
    EXPECT_EQ(j["log_avg"], 1.0);
    EXPECT_EQ(j["log_edges"], "undirected");
    EXPECT_EQ(j["histogram"], nlohmann::json::array({0, 2}));
    EXPECT_TRUE(j["bits_per_edge"].contains("gamma"));
    EXPECT_TRUE(j["bits_per_edge"].contains("bic"));
    EXPECT_FALSE(j["bits_per_edge"].contains("ef"));
}

TEST(Report, EmptyGraphIsAllZeros)
{
    const auto g = BipartiteGraph::from_lists(0, {});
    const auto r = make_report(g, Permutation::identity(0), all_codecs());
    EXPECT_EQ(r.loggap_total, 0u);
    EXPECT_EQ(r.loggap_avg, 0.0);
    EXPECT_FALSE(r.log_avg.has_value());
    for (const auto& [codec, bits] : r.bits_per_edge)
        EXPECT_EQ(bits, 0.0) << codec;
    const auto j = nlohmann::json::parse(to_json(r));
    EXPECT_TRUE(j["log_avg"].is_null());
    EXPECT_TRUE(j["histogram"].empty());
}

TEST(Report, SizeMismatch)
{
    const auto g = BipartiteGraph::from_lists(3, {{0, 1}});
    EXPECT_THROW(make_report(g, Permutation::identity(5), all_codecs()), ValidationError);
}
