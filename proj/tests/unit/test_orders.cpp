#include <set>

#include "doctest.h"
#include "mapforge/errors.hpp"
#include "mapforge/orders.hpp"
#include "support/dot_checker.hpp"
#include "support/fixtures.hpp"
#include "support/random_maps.hpp"

using namespace mapforge;

TEST_CASE("surface order of the path graph: blocks (1,2,2,1), three gluings") {
    SurfaceOrderDescriptor d = build_surface_order(fixtures::path_graph());
    REQUIRE(d.blocks.size() == 4);
    CHECK(d.blocks[0].size == 1);
    CHECK(d.blocks[1].size == 2);
    CHECK(d.blocks[2].size == 2);
    CHECK(d.blocks[3].size == 1);
    CHECK(d.blocks[0].slot_darts == std::vector<Dart>{1});
    CHECK(d.blocks[1].slot_darts == std::vector<Dart>{2, 3});
    CHECK(d.blocks[2].slot_darts == std::vector<Dart>{4, 5});
    CHECK(d.blocks[3].slot_darts == std::vector<Dart>{6});
    REQUIRE(d.gluings.size() == 3);
    // the chain: block1 ~ block2, block2 ~ block3, block3 ~ block4
    CHECK(d.gluings[0].a == GluingEndpoint{1, 1});
    CHECK(d.gluings[0].b == GluingEndpoint{2, 1});
    CHECK(d.gluings[1].a == GluingEndpoint{2, 2});
    CHECK(d.gluings[1].b == GluingEndpoint{3, 1});
    CHECK(d.gluings[2].a == GluingEndpoint{3, 2});
    CHECK(d.gluings[2].b == GluingEndpoint{4, 1});
    CHECK(d.center_rank == 4);
    CHECK(d.normalization_type == std::vector<int>{2, 2, 1, 1});
}

TEST_CASE("surface order of the torus: two size-3 blocks, three gluings") {
    SurfaceOrderDescriptor d = build_surface_order(fixtures::torus());
    REQUIRE(d.blocks.size() == 2);
    CHECK(d.blocks[0].size == 3);
    CHECK(d.blocks[1].size == 3);
    CHECK(d.gluings.size() == 3);
    CHECK(d.center_rank == 2);
    CHECK(d.normalization_type == std::vector<int>{3, 3});
}

TEST_CASE("surface order of the one-edge sphere: one block, one self-gluing") {
    SurfaceOrderDescriptor d = build_surface_order(fixtures::atilde1());
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].size == 2);
    REQUIRE(d.gluings.size() == 1);
    CHECK(d.gluings[0].a == GluingEndpoint{1, 1});
    CHECK(d.gluings[0].b == GluingEndpoint{1, 2});
}

TEST_CASE("block entries form the triangular R/m pattern") {
    VertexOrderBlock block{1, 3, {1, 2, 3}};
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c)
            CHECK(block.entry(r, c) == (r >= c ? OrderSymbol::R : OrderSymbol::m));
}

TEST_CASE("projective columns have k-1 leading ideal entries") {
    VertexOrderBlock block{1, 3, {1, 2, 3}};
    CHECK(projective_column(block, 1) ==
          std::vector<OrderSymbol>{OrderSymbol::R, OrderSymbol::R, OrderSymbol::R});
    CHECK(projective_column(block, 3) ==
          std::vector<OrderSymbol>{OrderSymbol::m, OrderSymbol::m, OrderSymbol::R});
    VertexOrderBlock tiny{2, 1, {4}};
    CHECK(projective_column(tiny, 1) == std::vector<OrderSymbol>{OrderSymbol::R});
    CHECK_THROWS_AS(projective_column(block, 0), SlotOutOfRangeError);
    CHECK_THROWS_AS(projective_column(block, 4), SlotOutOfRangeError);

    // enumeration: every size up to 8, every slot
    for (int n = 1; n <= 8; ++n) {
        VertexOrderBlock b{1, n, std::vector<Dart>(static_cast<std::size_t>(n), 1)};
        for (int k = 1; k <= n; ++k) {
            auto col = projective_column(b, k);
            int leading = 0;
            while (leading < n && col[static_cast<std::size_t>(leading)] == OrderSymbol::m)
                ++leading;
            CHECK(leading == k - 1);
            for (int r = leading; r < n; ++r) CHECK(col[static_cast<std::size_t>(r)] == OrderSymbol::R);
        }
    }
}

TEST_CASE("sigma companion steps slots cyclically with a twist on wrap") {
    VertexOrderBlock block{1, 3, {1, 2, 3}};
    CHECK(apply_sigma_companion(block, 1).slot == 2);
    CHECK_FALSE(apply_sigma_companion(block, 1).twisted);
    CHECK(apply_sigma_companion(block, 3).slot == 1);
    CHECK(apply_sigma_companion(block, 3).twisted);
    VertexOrderBlock loop{2, 1, {9}};
    CHECK(apply_sigma_companion(loop, 1).slot == 1);
    CHECK(apply_sigma_companion(loop, 1).twisted);

    SigmaCompanion m = sigma_companion(block);
    CHECK(m.entry(1, 3) == SigmaCompanion::Entry::ideal);
    CHECK(m.entry(2, 1) == SigmaCompanion::Entry::one);
    CHECK(m.entry(3, 2) == SigmaCompanion::Entry::one);
    CHECK(m.entry(1, 1) == SigmaCompanion::Entry::zero);
    CHECK(m.entry(3, 3) == SigmaCompanion::Entry::zero);
}

TEST_CASE("companion cycles projective columns: full orbit returns with one twist") {
    VertexOrderBlock block{1, 4, {1, 2, 3, 4}};
    int slot = 1;
    int twists = 0;
    for (int step = 0; step < 4; ++step) {
        SlotStep next = apply_sigma_companion(block, slot);
        slot = next.slot;
        if (next.twisted) ++twists;
    }
    CHECK(slot == 1);
    CHECK(twists == 1);
}

TEST_CASE("structure invariants on random maps") {
    testgen::Rng rng(1234);
    for (int trial = 0; trial < 50; ++trial) {
        Constellation c = testgen::random_valid_map(30, rng);
        SurfaceOrderDescriptor d = build_surface_order(c);
        CHECK(d.normalization_type == c.sigma.cycle_type());
        CHECK(d.center_rank == c.sigma.cycle_count());
        CHECK(static_cast<int>(d.gluings.size()) == c.n_darts / 2);

        // every (block, slot) appears in exactly one gluing
        std::set<std::pair<int, int>> seen;
        for (const Gluing& g : d.gluings) {
            CHECK(seen.emplace(g.a.block, g.a.slot).second);
            CHECK(seen.emplace(g.b.block, g.b.slot).second);
        }
        std::size_t total_slots = 0;
        for (const auto& b : d.blocks) total_slots += static_cast<std::size_t>(b.size);
        CHECK(seen.size() == total_slots);

        // the gluing graph on blocks is connected (the map is transitive)
        std::vector<std::set<int>> adjacent(d.blocks.size() + 1);
        for (const Gluing& g : d.gluings) {
            adjacent[static_cast<std::size_t>(g.a.block)].insert(g.b.block);
            adjacent[static_cast<std::size_t>(g.b.block)].insert(g.a.block);
        }
        std::set<int> reached{1};
        std::vector<int> stack{1};
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            for (int nb : adjacent[static_cast<std::size_t>(b)])
                if (reached.insert(nb).second) stack.push_back(nb);
        }
        CHECK(reached.size() == d.blocks.size());
    }
}

TEST_CASE("gluing diagram exports") {
    SurfaceOrderDescriptor path = build_surface_order(fixtures::path_graph());

    std::string text = export_gluing_diagram(path, DiagramFormat::text);
    CHECK(text.find("block 1: size 1") != std::string::npos);
    CHECK(text.find("block 2: size 2") != std::string::npos);
    CHECK(text.find("[ R m ]") != std::string::npos);
    CHECK(text.find("[ R R ]") != std::string::npos);

    std::string dot = export_gluing_diagram(path, DiagramFormat::dot);
    auto checked = dotcheck::check(dot);
    REQUIRE_MESSAGE(checked.ok, checked.error);
    CHECK(checked.edges == 3);  // three chords
    CHECK(dot.find("cluster_4") != std::string::npos);

    std::string torus_dot = export_gluing_diagram(build_surface_order(fixtures::torus()),
                                                  DiagramFormat::dot);
    auto checked_torus = dotcheck::check(torus_dot);
    REQUIRE_MESSAGE(checked_torus.ok, checked_torus.error);
    CHECK(checked_torus.edges == 3);
    CHECK(torus_dot.find("cluster_2") != std::string::npos);
    CHECK(torus_dot.find("cluster_3") == std::string::npos);

    // minimal map: one cluster, one chord
    std::string tiny = export_gluing_diagram(build_surface_order(fixtures::atilde1()),
                                             DiagramFormat::dot);
    auto checked_tiny = dotcheck::check(tiny);
    REQUIRE_MESSAGE(checked_tiny.ok, checked_tiny.error);
    CHECK(checked_tiny.edges == 1);

    nlohmann::json j = surface_order_to_json(path);
    CHECK(j["blocks"].size() == 4);
    CHECK(j["gluings"].size() == 3);
    CHECK(j["center_rank"] == 4);

    CHECK_THROWS_AS(diagram_format_from_string("yaml"), UnsupportedFormatError);
    CHECK(diagram_format_from_string("dot") == DiagramFormat::dot);
}
