#pragma once

#include <map>
#include <span>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "schurseq/partition.hpp"

namespace schurseq {

// Integer-coefficient Schur expansion, homogeneous of one degree.  Every
// stored key lambda satisfies |lambda| == degree and no zero coefficient is
// kept.  The zero expansion still tracks its degree so degree mismatches stay
// decidable.
class SchurExpansion {
public:
    using TermMap = std::map<Partition, long long, PartitionOrder>;

    SchurExpansion() = default;
    explicit SchurExpansion(long long degree) : degree_(degree) {}
    static SchurExpansion basis(Partition lambda, long long coeff = 1);

    long long degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    long long multiplicity(const Partition& lambda) const;

    // Accumulates coeff onto s_lambda; requires |lambda| == degree.
    SchurExpansion& add_term(const Partition& lambda, long long coeff);

    SchurExpansion& operator+=(const SchurExpansion& rhs);
    SchurExpansion& operator-=(const SchurExpansion& rhs);
    SchurExpansion scaled(long long c) const;

    // s_mu -> s_{mu + lambda} on every basis term.
    SchurExpansion shift(const Partition& lambda) const;

    // Splits into (terms with length <= l, terms with length > l).
    std::pair<SchurExpansion, SchurExpansion> restrict_length(int l) const;

    bool operator==(const SchurExpansion&) const = default;
    std::string to_string() const;

private:
    long long degree_ = 0;
    TermMap terms_;
};

SchurExpansion operator+(SchurExpansion lhs, const SchurExpansion& rhs);
SchurExpansion operator-(SchurExpansion lhs, const SchurExpansion& rhs);

// f * s_(r) by the Pieri rule (horizontal strips of r cells); r = 0 is the
// identity.
SchurExpansion pieri_multiply(const SchurExpansion& f, int r);

// General product in the Schur basis.  Each basis term of g is expanded by
// the Jacobi-Trudi identity into signed products of one-row functions, which
// are then applied to f by iterated Pieri multiplication.
SchurExpansion schur_multiply(const SchurExpansion& f, const SchurExpansion& g);

// sum of coeff * shift(f, lambda) over the summands; every summand must land
// in the given degree.
SchurExpansion shifted_sum(
    long long degree,
    std::span<const std::tuple<const SchurExpansion*, Partition, long long>> summands);

// One term of the first-row expansion of the Jacobi-Trudi determinant of
// s_{(n,mu)}: sign (-1)^offset, the row becomes s_{(n+offset)}, and minor is
// the Schur expansion of the complementary minor determinant (degree
// |mu| - offset).
struct JacobiTrudiTerm {
    int sign;
    int offset;
    SchurExpansion minor;
};
std::vector<JacobiTrudiTerm> jacobi_trudi_hook_terms(const Partition& mu);

std::ostream& operator<<(std::ostream& os, const SchurExpansion& f);

}  // namespace schurseq
