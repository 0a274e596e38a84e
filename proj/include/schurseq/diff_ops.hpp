#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schurseq/partition.hpp"
#include "schurseq/schur.hpp"

namespace schurseq {

// The operator Delta^lambda_m acting on sequences of slope |lambda|/m; m must
// divide |lambda| and the quotient is positive.
class DiffOp {
public:
    explicit DiffOp(Partition lambda, int step = 1);

    const Partition& lambda() const { return lambda_; }
    int step() const { return step_; }
    int slope() const { return static_cast<int>(lambda_.weight()) / step_; }

    // "m|(parts)", e.g. "2|(3,3)"; a bare "(parts)" means m = 1.
    static DiffOp parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const DiffOp&) const = default;

private:
    Partition lambda_;
    int step_;
};

std::vector<DiffOp> parse_ops(std::string_view text);  // ';'-separated list

// A sequence {f_n} with f_n of degree n*slope + offset for all n >= floor.
// Evaluations are memoized; copies share the cache.  A family and its cache
// belong to one task at a time; the verification grid hands each cell its
// own families.
class SequenceFamily {
public:
    SequenceFamily(std::string label, long long offset, int slope, int floor,
                   std::function<SchurExpansion(int)> eval);

    const std::string& label() const;
    long long offset() const;
    int slope() const;
    int floor() const;

    // Memoized evaluation; checks the degree grading and the floor.
    const SchurExpansion& at(int n) const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

// Families used by the checkers and the CLI.
SequenceFamily homogeneous_family(std::vector<int> alpha);
SequenceFamily hook_family(std::vector<int> alpha, std::vector<Partition> lambdas);
SequenceFamily border_family(std::vector<int> alpha, Partition beta);

// One summand of a slope-1 sequence: coeff * s_{(n+offset, lambda)}.
struct HookSummand {
    long long coeff;
    int offset;
    Partition lambda;
};
SequenceFamily hook_sum_family(std::vector<HookSummand> summands);

SequenceFamily linear_combination(std::vector<std::pair<long long, SequenceFamily>> parts);
SequenceFamily restrict_length_family(SequenceFamily base, int l);
SequenceFamily product_family(std::vector<SequenceFamily> factors);

// Pointwise value Delta^lambda_m f_n = f_n - (f_{n-m} + lambda).
SchurExpansion eval_pointwise(const DiffOp& op, const SequenceFamily& seq, int n);

// Literal nested application in the given order (leftmost outermost).  Kept
// order-sensitive on purpose: commutativity is a verified property, not an
// assumption of this routine.
SchurExpansion eval_nested(std::span<const DiffOp> ops, const SequenceFamily& seq, int n);

// Order-free evaluation through the inclusion-exclusion expansion of
// prod (1 - shift); grouped by total step and total shift.
SchurExpansion eval_composed(std::span<const DiffOp> ops, const SequenceFamily& seq, int n);

// The re-indexed action {f_n} -> {Delta^lambda_m f_{n+m}}.  The offset
// grows by |lambda| so the degree grading stays intact.
SequenceFamily apply(const DiffOp& op, const SequenceFamily& seq);

// Pointwise-convention composition as a family; value at n needs
// n >= floor + sum of steps.
SequenceFamily compose(std::vector<DiffOp> ops, const SequenceFamily& seq);

struct PointEvaluation {
    int n;
    bool zero;
    std::size_t term_count;
};

struct VanishingReport {
    int first_n = 0;  // smallest evaluable index
    std::vector<PointEvaluation> per_n;
    // Smallest N such that the value vanishes at every n with N < n <= n_max;
    // absent when the last evaluated point is nonzero.
    std::optional<int> onset;
};

VanishingReport vanishing_onset(std::span<const DiffOp> ops, const SequenceFamily& seq, int n_max);

// Church-Farb stabilization: smallest N with Delta^{(1)} f_n = 0 for all
// N < n <= n_max; requires slope 1.
std::optional<int> detect_stabilization(const SequenceFamily& seq, int n_max);

}  // namespace schurseq
