#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schurseq/partition.hpp"
#include "schurseq/schur.hpp"

namespace schurseq {

// Staircase integer array a_{ij}, 1 <= i <= k, 1 <= j <= k-i+1; the ambient
// space of the polytope P_{k,n,alpha}.
class PartialMatrix {
public:
    explicit PartialMatrix(int k);
    static PartialMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int k() const { return k_; }
    int at(int i, int j) const { return entries_[index(i, j)]; }
    void set(int i, int j, int value) { entries_[index(i, j)] = value; }

    long long row_sum(int i) const;
    // (|a_1|, ..., |a_k|) with trailing zero rows stripped.
    Partition row_sum_shape() const;

    const std::vector<int>& entries() const { return entries_; }
    std::vector<std::vector<int>> rows() const;
    std::string to_string() const;

    bool operator==(const PartialMatrix&) const = default;
    // Row-major lexicographic; the canonical enumeration order.
    bool operator<(const PartialMatrix& rhs) const;

private:
    std::size_t index(int i, int j) const;
    int k_;
    std::vector<int> entries_;  // row-major
};

// Face conditions matching the applied difference operators.
enum class FaceId {
    d1k,          // a_{k,1} = 0
    d21,          // a_{1,k} = 0 or a_{k-1,1} = 0
    d211_second,  // k = 4 second (2,1,1) step
    d22,          // k = 4 (2,2) step
};
FaceId parse_face(std::string_view name);
std::string face_name(FaceId id);
bool face_condition(FaceId id, const PartialMatrix& a);

// Membership in P_{k,n,alpha}: box bounds 0 <= a_{ij} <= n+alpha_{i+j-1},
// row-prefix dominance, and antidiagonal sums n+alpha_m.
bool is_member(const PartialMatrix& a, int n, const std::vector<int>& alpha);

// All integer points, sorted row-major lexicographically.  k is capped at 5.
std::vector<PartialMatrix> enumerate_points(int k, int n, const std::vector<int>& alpha);

std::vector<PartialMatrix> face_filter(const std::vector<PartialMatrix>& points, FaceId id);

// Number of integer points satisfying all the given face conditions.
long long count_points(int k, int n, const std::vector<int>& alpha, std::span<const FaceId> faces);

// prod_i s_{(n+alpha_i)} = sum over integer points of s_{(|a_1|,...,|a_k|)}.
SchurExpansion homogeneous_product(int k, int n, const std::vector<int>& alpha);

// Same sum restricted to the points satisfying all given face conditions.
// Trailing zero rows are stripped, so with d1k in force this is the
// operator-telescoped sum of s_{(|a_1|,...,|a_{k-1}|)}.
SchurExpansion face_sum(int k, int n, const std::vector<int>& alpha, std::span<const FaceId> faces);

// The binom(k,2)+1 affine independent points from the diagonal-moving
// construction; requires n >= 1.
std::vector<PartialMatrix> affine_witnesses(int k, int n, const std::vector<int>& alpha);

// Dimension of the affine span, computed exactly over the rationals.
int affine_dimension(const std::vector<PartialMatrix>& points);

// A centre: semistandard filling, with entries in {1..k}, of shape/beta where
// the shape extends beta inside the first beta_1 columns.
struct CentreTableau {
    Partition shape;
    std::vector<std::vector<int>> filling;  // row r holds cells (r, beta_r+1 .. shape_r)
    std::vector<int> symbol_counts;         // c(1), ..., c(k)
    int full_rows;                          // max{ i : shape_i = beta_1 }, 0 if none

    bool operator==(const CentreTableau&) const = default;
};
std::vector<CentreTableau> enumerate_centres(int k, const Partition& beta);

// Centre/arm decomposition of the bordered product:
//   prod_i s_{(n+alpha_i)} * s_beta
//     = sum over centres c of (reduced product)_{<= full rows of c} + shape(c).
SchurExpansion product_with_border(int k, int n, const std::vector<int>& alpha,
                                   const Partition& beta);

}  // namespace schurseq
