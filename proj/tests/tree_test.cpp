#include <gtest/gtest.h>

#include "adim/solvers.hpp"
#include "adim/tree.hpp"
#include "test_util.hpp"

using namespace adim;

namespace {

DistanceMatrix metric(const Graph& g) { return all_pairs_shortest_paths(g); }

int measure(const DistanceMatrix& d, const AttackerSet& s) {
    return partition_by_representation(d, s).mu;
}

// root 0 with four equal-depth path branches: 0-a-b-c four times over
Graph four_equal_branches() {
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int b = 0; b < 4; ++b) {
        e.emplace_back(0, next);
        e.emplace_back(next, next + 1);
        e.emplace_back(next + 1, next + 2);
        next += 3;
    }
    return Graph::from_edges(next, e);
}

// root 0 with one depth-1 branch and four depth-2 branches; absorbing the
// shallow branch leaves the first level at size k' and the next absorption
// drops it to k'-1
Graph mixed_depth_branches() {
    std::vector<std::pair<int, int>> e;
    e.emplace_back(0, 1);  // shallow branch
    int next = 2;
    for (int b = 0; b < 4; ++b) {
        e.emplace_back(0, next);
        e.emplace_back(next, next + 1);
        next += 2;
    }
    return Graph::from_edges(next, e);
}

}  // namespace

TEST(IsTree, Detects) {
    EXPECT_TRUE(is_tree(metric(testutil::path(6))));
    EXPECT_TRUE(is_tree(metric(testutil::star(4))));
    EXPECT_FALSE(is_tree(metric(testutil::cycle(4))));
    EXPECT_FALSE(is_tree(metric(testutil::complete(4))));
}

TEST(RootedView, StarFromCenter) {
    Graph g = testutil::star(5);
    RootedView view = build_rooted_view(metric(g), 0, AttackerSet({0}, 6));
    ASSERT_EQ(view.children.size(), 5u);
    ASSERT_EQ(view.branches.size(), 5u);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_EQ(view.eccentricities[i], 1);
        EXPECT_EQ(view.branches[i].size(), 2u);  // the center plus one leaf
    }
    ASSERT_EQ(view.level_classes.size(), 1u);
    EXPECT_EQ(view.level_classes[0], (std::vector<int>{1, 2, 3, 4, 5}));
}

TEST(RootedView, BranchesPartitionBelowRoot) {
    Graph g = four_equal_branches();
    DistanceMatrix d = metric(g);
    RootedView view = build_rooted_view(d, 0, AttackerSet({0}, g.node_count()));
    ASSERT_EQ(view.branches.size(), 4u);
    for (const auto& branch : view.branches) EXPECT_EQ(branch.size(), 4u);
    EXPECT_EQ(view.eccentricities, (std::vector<int>{3, 3, 3, 3}));
    ASSERT_EQ(view.level_classes.size(), 3u);
    for (const auto& cls : view.level_classes) EXPECT_EQ(cls.size(), 4u);
    EXPECT_THROW(build_rooted_view(d, 1, AttackerSet({0}, g.node_count())),
                 std::invalid_argument);
}

TEST(DescendOne, StarCenter) {
    Graph g = testutil::star(5);
    DistanceMatrix d = metric(g);
    AttackerSet center({0}, 6);
    ASSERT_EQ(measure(d, center), 5);
    AttackerSet next = descend_one(d, center, 5);
    EXPECT_EQ(next.members(), (std::vector<int>{0, 1}));  // center plus one leaf
    EXPECT_EQ(measure(d, next), 4);
    // the four remaining leaves share the vector (1, 2)
    ClassPartition p = partition_by_representation(d, next);
    ASSERT_EQ(p.classes.size(), 1u);
    EXPECT_EQ(p.reprs[0].coords, (std::vector<std::uint16_t>{1, 2}));
}

TEST(DescendOne, EqualEccentricitiesAbsorbOneBranch) {
    Graph g = four_equal_branches();
    DistanceMatrix d = metric(g);
    AttackerSet root({0}, g.node_count());
    ASSERT_EQ(measure(d, root), 4);
    AttackerSet next = descend_one(d, root, 4);
    EXPECT_EQ(next.size(), 4);  // the root plus one whole branch
    EXPECT_EQ(measure(d, next), 3);
    EXPECT_TRUE(next.contains(0));
    for (int v : {1, 2, 3}) EXPECT_TRUE(next.contains(v));  // smallest branch wins
}

TEST(DescendOne, MixedEccentricitiesAbsorbTwice) {
    Graph g = mixed_depth_branches();
    DistanceMatrix d = metric(g);
    AttackerSet root({0}, g.node_count());
    ASSERT_EQ(measure(d, root), 4);
    AttackerSet next = descend_one(d, root, 4);
    // shallow branch {1} first, then the depth-2 branch {2,3}
    EXPECT_EQ(next.members(), (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(measure(d, next), 3);
}

TEST(DescendOne, InputValidation) {
    DistanceMatrix cycle = metric(testutil::cycle(5));
    EXPECT_THROW(descend_one(cycle, AttackerSet({0}, 5), 2), std::invalid_argument);

    DistanceMatrix star = metric(testutil::star(5));
    EXPECT_THROW(descend_one(star, AttackerSet({0}, 6), 3), std::invalid_argument);  // mu is 5
    EXPECT_THROW(descend_one(star, AttackerSet({0}, 6), 1), std::invalid_argument);
}

TEST(Chain, StarTargets) {
    Graph g = testutil::star(5);
    DistanceMatrix d = metric(g);
    AttackerSet three = antiresolving_chain(d, 3);
    EXPECT_EQ(measure(d, three), 3);
    AttackerSet top = antiresolving_chain(d, 5);
    EXPECT_EQ(top.members(), adim_kopt(d).witness.members());
    AttackerSet one = antiresolving_chain(d, 1);
    EXPECT_EQ(measure(d, one), 1);
}

TEST(Chain, PathTwo) {
    DistanceMatrix d = metric(testutil::path(5));
    AttackerSet s = antiresolving_chain(d, 2);
    EXPECT_EQ(measure(d, s), 2);
}

TEST(Chain, RejectsOutOfRange) {
    DistanceMatrix d = metric(testutil::star(5));
    EXPECT_THROW(antiresolving_chain(d, 6), std::invalid_argument);
    EXPECT_THROW(antiresolving_chain(d, 0), std::invalid_argument);
    EXPECT_THROW(antiresolving_chain(metric(testutil::cycle(5)), 1), std::invalid_argument);
}

TEST(Chain, FullChainMatchesPerTarget) {
    GenConfig cfg;
    cfg.model = GenModel::random_tree;
    cfg.n = 14;
    cfg.seed = 99;
    DistanceMatrix d = metric(gen_random_tree(cfg).graph);
    auto chain = full_antiresolving_chain(d);
    const int k_opt = adim_kopt(d).k_opt;
    ASSERT_EQ(chain.size(), static_cast<std::size_t>(k_opt));
    for (int k = 1; k <= k_opt; ++k) {
        EXPECT_EQ(chain[k - 1].k, k);
        EXPECT_EQ(measure(d, chain[k - 1].witness), k);
        EXPECT_EQ(chain[k - 1].witness.members(), antiresolving_chain(d, k).members());
    }
}

TEST(Chain, RandomTreesSmoke) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GenConfig cfg;
        cfg.model = GenModel::random_tree;
        cfg.n = 10 + static_cast<int>(seed % 16);
        cfg.seed = substream_seed(808, seed);
        DistanceMatrix d = metric(gen_random_tree(cfg).graph);
        const int k_opt = adim_kopt(d).k_opt;
        for (int k = 1; k <= k_opt; ++k) {
            AttackerSet s = antiresolving_chain(d, k);
            ASSERT_EQ(measure(d, s), k) << "n=" << cfg.n << " seed=" << seed << " k=" << k;
        }
    }
}

TEST(ConnectedSubtrees, AntiresolvingSetsInduceConnectedSubtrees) {
    // exhaustive over all attacker sets of small random trees
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenConfig cfg;
        cfg.model = GenModel::random_tree;
        cfg.n = 4 + static_cast<int>(seed % 7);
        cfg.seed = substream_seed(313, seed);
        Graph g = gen_random_tree(cfg).graph;
        DistanceMatrix d = metric(g);
        const int n = g.node_count();
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<int> members;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) members.push_back(v);
            AttackerSet s(members, n);
            if (partition_by_representation(d, s).mu >= 2)
                ASSERT_TRUE(testutil::induces_connected(g, members));
        }
    }
}

TEST(WheelCounterexample, NonTreeGapCannotDescend) {
    // W_{1,16} admits k-antiresolving sets only for k in {1,2,3,16}; the
    // tree construction must not be expected to bridge such gaps
    DistanceMatrix d = metric(testutil::wheel(16));
    EXPECT_FALSE(is_tree(d));
    EXPECT_THROW(antiresolving_chain(d, 5), std::invalid_argument);
}
