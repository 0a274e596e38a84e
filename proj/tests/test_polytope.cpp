#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "schurseq/error.hpp"
#include "schurseq/polytope.hpp"

using namespace schurseq;

namespace {

SchurExpansion one_row_product(const std::vector<int>& sizes) {
    SchurExpansion f = SchurExpansion::basis(Partition{});
    for (int r : sizes) f = pieri_multiply(f, r);
    return f;
}

std::vector<std::vector<int>> sorted_alphas(int k, int max_entry) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int i, int hi) -> void {
        if (i == k) {
            out.push_back(cur);
            return;
        }
        for (int v = hi; v >= 0; --v) {
            cur[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, max_entry);
    return out;
}

}  // namespace

TEST_CASE("membership examples") {
    std::vector<int> alpha{0, 0};
    CHECK(is_member(PartialMatrix::from_rows({{2, 0}, {2}}), 2, alpha));
    CHECK_FALSE(is_member(PartialMatrix::from_rows({{2, 0}, {3}}), 2, alpha));
    CHECK(is_member(PartialMatrix::from_rows({{3, 2}, {0}}), 2, {1, 0}));
    CHECK_THROWS_AS(is_member(PartialMatrix::from_rows({{2, 0}, {2}}), 2, {0, 0, 0}), error);
    CHECK_THROWS_AS(is_member(PartialMatrix::from_rows({{2, 0}, {2}}), 2, {0, 1}), error);
}

TEST_CASE("staircase shape is validated") {
    CHECK_THROWS_AS(PartialMatrix::from_rows({{1, 2, 3}, {1}}), error);
    PartialMatrix a(3);
    CHECK_THROWS_AS(a.at(1, 4), error);
    CHECK_THROWS_AS(a.at(3, 2), error);
}

TEST_CASE("enumeration examples") {
    auto pts = enumerate_points(2, 2, {0, 0});
    REQUIRE(pts.size() == 3);
    std::set<std::string> seen;
    for (const auto& p : pts) seen.insert(p.to_string());
    CHECK(seen == std::set<std::string>{"[[2,0] [2]]", "[[2,1] [1]]", "[[2,2] [0]]"});

    auto single = enumerate_points(1, 3, {0});
    REQUIRE(single.size() == 1);
    CHECK(single[0].at(1, 1) == 3);

    auto zero = enumerate_points(3, 0, {0, 0, 0});
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == PartialMatrix(3));

    CHECK_THROWS_AS(enumerate_points(6, 1, {0, 0, 0, 0, 0, 0}), error);
}

TEST_CASE("enumeration is sorted row-major and members pass is_member") {
    for (int n = 0; n <= 4; ++n) {
        auto pts = enumerate_points(3, n, {2, 1, 0});
        for (std::size_t i = 0; i < pts.size(); ++i) {
            CHECK(is_member(pts[i], n, {2, 1, 0}));
            if (i > 0) CHECK(pts[i - 1] < pts[i]);
        }
    }
}

TEST_CASE("bijection with SSYT counts, k <= 3, n <= 5, alpha_1 <= 2") {
    for (int k = 1; k <= 3; ++k)
        for (const auto& alpha : sorted_alphas(k, 2))
            for (int n = 0; n <= 5; ++n) {
                std::vector<int> content;
                for (int i = 0; i < k; ++i) content.push_back(n + alpha[static_cast<std::size_t>(i)]);
                auto expected = oracle::ssyt_shape_counts(content);
                long long total = 0;
                for (const auto& [shape, cnt] : expected) total += cnt;
                auto pts = enumerate_points(k, n, alpha);
                CHECK(static_cast<long long>(pts.size()) == total);
                SchurExpansion hom = homogeneous_product(k, n, alpha);
                for (const auto& [shape, cnt] : expected) CHECK(hom.multiplicity(shape) == cnt);
                CHECK(static_cast<long long>(hom.term_count()) == static_cast<long long>(expected.size()));
            }
}

TEST_CASE("homogeneous product equals the iterated Pieri product, k <= 4, n <= 6") {
    for (int k = 1; k <= 4; ++k)
        for (const auto& alpha : sorted_alphas(k, 2))
            for (int n = 0; n <= 6; ++n) {
                std::vector<int> sizes;
                for (int i = 0; i < k; ++i) sizes.push_back(n + alpha[static_cast<std::size_t>(i)]);
                CHECK(homogeneous_product(k, n, alpha) == one_row_product(sizes));
            }
}

TEST_CASE("face filter examples") {
    auto pts = enumerate_points(2, 2, {0, 0});
    auto d1k = face_filter(pts, FaceId::d1k);
    REQUIRE(d1k.size() == 1);
    CHECK(d1k[0] == PartialMatrix::from_rows({{2, 2}, {0}}));
    // the injection count oracle: |P_{2,2}| - |P_{2,1}| = 3 - 2
    CHECK(pts.size() - enumerate_points(2, 1, {0, 0}).size() == d1k.size());

    auto d21 = face_filter(d1k, FaceId::d21);
    CHECK(d21.empty());

    auto k1 = face_filter(enumerate_points(1, 3, {0}), FaceId::d1k);
    CHECK(k1.empty());

    CHECK_THROWS_AS(face_filter(pts, FaceId::d22), error);
    CHECK_THROWS_AS(face_filter(enumerate_points(1, 2, {0}), FaceId::d21), error);
}

TEST_CASE("telescoping counts for the face injections, k <= 4, n <= 6") {
    std::vector<FaceId> d1k{FaceId::d1k};
    std::vector<FaceId> d21{FaceId::d1k, FaceId::d21};
    for (int k = 2; k <= 4; ++k)
        for (const auto& alpha : sorted_alphas(k, 2)) {
            for (int n = 1; n <= 6; ++n)
                CHECK(count_points(k, n, alpha, d1k) ==
                      count_points(k, n, alpha, {}) - count_points(k, n - 1, alpha, {}));
            for (int n = 2; n <= 6; ++n)
                CHECK(count_points(k, n, alpha, d21) ==
                      count_points(k, n, alpha, d1k) - count_points(k, n - 1, alpha, d1k));
        }
}

TEST_CASE("affine witnesses: k = 2 construction matches the displayed matrices") {
    auto w = affine_witnesses(2, 2, {1, 0});
    REQUIRE(w.size() == 2);
    CHECK(w[0] == PartialMatrix::from_rows({{3, 0}, {2}}));
    CHECK(w[1] == PartialMatrix::from_rows({{3, 2}, {0}}));
    CHECK(affine_dimension(w) == 1);
}

TEST_CASE("affine witnesses pass membership and span binom(k,2) dimensions") {
    for (int k = 2; k <= 5; ++k) {
        std::vector<int> zero(static_cast<std::size_t>(k), 0);
        std::vector<int> staggered(static_cast<std::size_t>(k), 0);
        staggered[0] = 2;
        if (k >= 2) staggered[1] = 1;
        for (const auto& alpha : {zero, staggered})
            for (int n = 1; n <= 3; ++n) {
                auto w = affine_witnesses(k, n, alpha);
                CHECK(static_cast<int>(w.size()) == k * (k - 1) / 2 + 1);
                for (const auto& p : w) CHECK(is_member(p, n, alpha));
                CHECK(affine_dimension(w) == k * (k - 1) / 2);
            }
    }
    CHECK_THROWS_AS(affine_witnesses(2, 0, {0, 0}), error);
}

TEST_CASE("centre enumeration") {
    auto trivial = enumerate_centres(3, Partition{});
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].shape.empty());
    CHECK(trivial[0].symbol_counts == std::vector<int>{0, 0, 0});

    auto k1 = enumerate_centres(1, Partition{1});
    REQUIRE(k1.size() == 2);
    // empty centre and the single cell "1" in row 2 of column 1
    CHECK(k1[0].shape == Partition{1});
    CHECK(k1[0].symbol_counts == std::vector<int>{0});
    CHECK(k1[1].shape == Partition{1, 1});
    CHECK(k1[1].filling == std::vector<std::vector<int>>{{}, {1}});
    CHECK(k1[1].symbol_counts == std::vector<int>{1});

    auto k2 = enumerate_centres(2, Partition{1});
    CHECK(k2.size() == 4);
    CHECK(enumerate_centres(2, Partition{1}) == k2);  // stable across runs
}

TEST_CASE("product with border: empty beta is the homogeneous product") {
    for (int n = 0; n <= 4; ++n)
        CHECK(product_with_border(2, n, {1, 0}, Partition{}) == homogeneous_product(2, n, {1, 0}));
}

TEST_CASE("product with border equals the general product, spot checks") {
    CHECK(product_with_border(2, 3, {0, 0}, Partition{1}) ==
          schur_multiply(homogeneous_product(2, 3, {0, 0}), SchurExpansion::basis(Partition{1})));
    CHECK(product_with_border(2, 3, {1, 0}, Partition{2, 1}) ==
          schur_multiply(homogeneous_product(2, 3, {1, 0}),
                         SchurExpansion::basis(Partition{2, 1})));
    CHECK_THROWS_AS(product_with_border(2, 0, {0, 0}, Partition{2, 2}), error);
}

TEST_CASE("product with border equals the general product, k <= 3, |beta| <= 4, n <= 6") {
    for (int k = 1; k <= 3; ++k) {
        std::vector<std::vector<int>> alphas = {std::vector<int>(static_cast<std::size_t>(k), 0)};
        std::vector<int> stag(static_cast<std::size_t>(k), 0);
        stag[0] = 2;
        if (k >= 2) stag[1] = 1;
        alphas.push_back(stag);
        for (const auto& alpha : alphas)
            for (long long b = 0; b <= 4; ++b)
                for (const auto& beta : oracle::partitions_of(b))
                    for (int n = 4; n <= 6; ++n) {
                        CAPTURE(k);
                        CAPTURE(beta.to_string());
                        CAPTURE(n);
                        CHECK(product_with_border(k, n, alpha, beta) ==
                              schur_multiply(homogeneous_product(k, n, alpha),
                                             SchurExpansion::basis(beta)));
                    }
    }
}
