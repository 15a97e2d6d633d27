#include <doctest.h>

#include <algorithm>
#include <random>

#include "cogdist/model.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace cogdist;
using testsupport::thrown_code;

namespace {

PublicationProfile profile(std::string id, std::map<std::string, double> counts,
                           EntityKind kind = EntityKind::ResearchGroup) {
    PublicationProfile p;
    p.entity_id = std::move(id);
    p.kind = kind;
    p.counts = std::move(counts);
    return p;
}

}  // namespace

TEST_CASE("catalog rejects duplicates and empty labels") {
    CHECK_THROWS_AS(CategoryCatalog({"A", "A"}), Error);
    CHECK_THROWS_AS(CategoryCatalog({"A", ""}), Error);
    CHECK_THROWS_AS(CategoryCatalog({}), Error);
    CategoryCatalog cat({"A", "B"});
    CHECK(cat.size() == 2);
    CHECK(cat.find("B") == 1);
    CHECK(!cat.find("Z"));
}

TEST_CASE("align_profile places counts at catalog indices") {
    auto cat = std::make_shared<const CategoryCatalog>(std::vector<std::string>{"A", "B", "C"});
    DenseProfileVector v = align_profile(profile("G1", {{"A", 4.0}, {"B", 1.0}}), cat,
                                         AlignmentPolicy::Strict);
    CHECK(v.values()[0] == 4.0);
    CHECK(v.values()[1] == 1.0);
    CHECK(v.values()[2] == 0.0);
    CHECK(v.total() == 5.0);
    CHECK(v.entity_id() == "G1");
}

TEST_CASE("align_profile strict rejects unknown categories") {
    auto cat = std::make_shared<const CategoryCatalog>(std::vector<std::string>{"A", "B"});
    errc code = thrown_code([&] {
        align_profile(profile("G1", {{"A", 2.0}, {"Z", 5.0}}), cat, AlignmentPolicy::Strict);
    });
    CHECK(code == errc::unknown_category);
}

TEST_CASE("align_profile drop policy reports and can drop everything") {
    auto cat = std::make_shared<const CategoryCatalog>(std::vector<std::string>{"A", "B"});

    std::vector<DroppedCategory> dropped;
    DenseProfileVector v = align_profile(profile("G1", {{"A", 2.0}, {"Z", 5.0}}), cat,
                                         AlignmentPolicy::DropUnknown, &dropped);
    CHECK(v.values()[0] == 2.0);
    REQUIRE(dropped.size() == 1);
    CHECK(dropped[0].category == "Z");
    CHECK(dropped[0].count == 5.0);

    errc code = thrown_code([&] {
        align_profile(profile("G1", {{"Z", 5.0}}), cat, AlignmentPolicy::DropUnknown);
    });
    CHECK(code == errc::all_counts_dropped);
}

TEST_CASE("align_profile rejects profiles without a positive count") {
    auto cat = std::make_shared<const CategoryCatalog>(std::vector<std::string>{"A"});
    errc code =
        thrown_code([&] { align_profile(profile("G1", {{"A", 0.0}}), cat, AlignmentPolicy::Strict); });
    CHECK(code == errc::empty_profile);
}

TEST_CASE("aggregate_profiles sums counts category-wise") {
    PublicationProfile sum = aggregate_profiles(
        {profile("G1", {{"A", 1.0}}), profile("G2", {{"A", 2.0}, {"B", 3.0}})}, "Groups",
        EntityKind::AggregateGroups);
    CHECK(sum.counts.at("A") == 3.0);
    CHECK(sum.counts.at("B") == 3.0);
    CHECK(sum.entity_id == "Groups");

    PublicationProfile single =
        aggregate_profiles({profile("G1", {{"A", 4.0}, {"B", 1.0}})}, "S", EntityKind::AggregateGroups);
    CHECK(single.counts == std::map<std::string, double>{{"A", 4.0}, {"B", 1.0}});

    PublicationProfile disjoint = aggregate_profiles(
        {profile("G1", {{"A", 1.0}}), profile("G2", {{"B", 1.0}}), profile("G3", {{"C", 1.0}})},
        "D", EntityKind::AggregateGroups);
    CHECK(disjoint.counts == std::map<std::string, double>{{"A", 1.0}, {"B", 1.0}, {"C", 1.0}});

    CHECK_THROWS_AS(aggregate_profiles({}, "E", EntityKind::AggregateGroups), Error);
}

TEST_CASE("aggregate_profiles is order-independent") {
    gen::Rng rng(2024);
    std::uniform_real_distribution<double> count(0.0, 100.0);
    std::uniform_int_distribution<int> n_cats(1, 6);

    for (int trial = 0; trial < 50; ++trial) {
        std::vector<PublicationProfile> profiles;
        for (int p = 0; p < 5; ++p) {
            std::map<std::string, double> counts;
            int k = n_cats(rng);
            for (int c = 0; c < k; ++c) {
                counts["C" + std::to_string(c)] = count(rng);
            }
            profiles.push_back(profile("P" + std::to_string(p), std::move(counts)));
        }
        PublicationProfile forward = aggregate_profiles(profiles, "X", EntityKind::AggregateGroups);
        std::shuffle(profiles.begin(), profiles.end(), rng);
        PublicationProfile shuffled = aggregate_profiles(profiles, "X", EntityKind::AggregateGroups);
        CHECK(forward.counts == shuffled.counts);
    }
}

TEST_CASE("aligning an aggregate equals summing aligned members") {
    auto cat = gen::catalog(8);
    gen::Rng rng(99);
    std::uniform_int_distribution<int> whole(0, 20);

    std::vector<PublicationProfile> profiles;
    for (int p = 0; p < 4; ++p) {
        std::map<std::string, double> counts;
        for (std::size_t c = 0; c < cat->size(); ++c) {
            counts[cat->label(c)] = static_cast<double>(whole(rng));
        }
        counts[cat->label(0)] += 1.0;
        profiles.push_back(profile("P" + std::to_string(p), std::move(counts)));
    }

    DenseProfileVector aggregated = align_profile(
        aggregate_profiles(profiles, "X", EntityKind::AggregateGroups), cat, AlignmentPolicy::Strict);
    std::vector<double> summed(cat->size(), 0.0);
    double total = 0.0;
    for (const auto& p : profiles) {
        DenseProfileVector v = align_profile(p, cat, AlignmentPolicy::Strict);
        for (std::size_t i = 0; i < summed.size(); ++i) summed[i] += v[i];
        total += p.total();
    }
    for (std::size_t i = 0; i < summed.size(); ++i) {
        CHECK(aggregated[i] == summed[i]);  // exact for integer counts
    }
    CHECK(aggregated.total() == total);
}

TEST_CASE("similarity matrix validates its invariants") {
    auto cat = gen::catalog(2);
    CHECK_NOTHROW(SimilarityMatrix(cat, {1.0, 0.5, 0.5, 1.0}));

    // asymmetric
    CHECK_THROWS_AS(SimilarityMatrix(cat, {1.0, 0.5, 0.9, 1.0}), Error);
    // out of range
    CHECK_THROWS_AS(SimilarityMatrix(cat, {1.0, 2.0, 2.0, 1.0}), Error);
    // bad diagonal
    CHECK_THROWS_AS(SimilarityMatrix(cat, {0.5, 0.0, 0.0, 1.0}), Error);
    // unchecked path admits all of those for diagnostics
    CHECK_NOTHROW(SimilarityMatrix::unchecked(cat, {1.0, 2.0, 2.0, 1.0}));

    SimilarityMatrix id = SimilarityMatrix::identity(cat);
    CHECK(id.at(0, 0) == 1.0);
    CHECK(id.at(0, 1) == 0.0);
}

TEST_CASE("dense profile vector validates entries") {
    auto cat = gen::catalog(2);
    CHECK_THROWS_AS(DenseProfileVector(cat, "E", EntityKind::ResearchGroup, {1.0}), Error);
    CHECK_THROWS_AS(DenseProfileVector(cat, "E", EntityKind::ResearchGroup, {1.0, -0.5}), Error);
    CHECK_THROWS_AS(DenseProfileVector(cat, "E", EntityKind::ResearchGroup, {0.0, 0.0}), Error);
}
