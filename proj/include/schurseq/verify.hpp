#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schurseq/diff_ops.hpp"
#include "schurseq/partition.hpp"

namespace schurseq {

enum class Verdict { pass, fail, supporting, counterexample };
std::string verdict_name(Verdict v);
int verdict_exit_code(Verdict v);

struct MinimalityEntry {
    std::string removed_op;
    int window_start = 0;
    int window_end = 0;
    bool window_nonzero = false;  // nonzero at every window point
    std::vector<PointEvaluation> window;
};

// Machine-checkable evidence for one claim: every evaluated index appears
// with its zero flag and term count; a pass verdict is never bare.
struct ClaimReport {
    std::string claim_id;
    nlohmann::ordered_json params;
    long long paper_bound = 0;        // verdict threshold: vanishing demanded for n > this
    nlohmann::ordered_json bounds;    // each bound formula evaluated, for slack visibility
    int first_n = 0;
    std::vector<PointEvaluation> per_n;
    std::optional<int> onset;
    std::vector<MinimalityEntry> minimality;
    Verdict verdict = Verdict::fail;
    std::vector<std::string> notes;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

// Operator multisets of the two theorems and the fourfold conjecture.
std::vector<DiffOp> pair_ops();        // {D^(2), D^(1,1)}
std::vector<DiffOp> triple_ops();      // {D_2^(3,3), D^(3), D^(2,1), D^(1,1,1)}
std::vector<DiffOp> conjecture_ops();  // the nine-element multiset

// D^(2)D^(1,1) on s_{(n+a1,l1)} s_{(n+a2,l2)}; bound |l1|+|l2|+1-a2, with
// single-removal minimality windows beyond the bound.
ClaimReport check_pair_theorem(int alpha1, int alpha2, const Partition& lambda1,
                               const Partition& lambda2, int n_max, int window = 8);

// The four-operator triple product check; the verdict threshold is the
// larger of the theorem bound and the homogeneous proposition bound.
ClaimReport check_triple_theorem(int alpha1, int alpha2, int alpha3, const Partition& lambda1,
                                 const Partition& lambda2, const Partition& lambda3, int n_max,
                                 int window = 8);

// After D^(3)D^(2,1)D^(1,1,1) on the homogeneous triple product the value is
// the parity-split two-row residual, and D_2^(3,3) annihilates it.
ClaimReport check_triple_residual(const std::array<int, 3>& alpha, int n);

// mult((2n+|alpha|, n), D_2^(3,3) D^(3) D^(1,1,1) (triple product)) equals
// 2 - min{1, alpha2} and in particular is >= 1.
ClaimReport check_multiplicity_count(int alpha1, int alpha2, int n);

// A slope-1 stabilizing input to the corollary checker.
struct StabilizingInput {
    SequenceFamily family;
    int declared_stab;  // N_i; verified via detect_stabilization
};

ClaimReport check_corollary(const std::vector<StabilizingInput>& inputs, int n_max,
                            int window = 8);

// Fourfold-product explorer.  Never returns pass: supporting evidence or a
// counterexample candidate only.
ClaimReport explore_conjecture(const std::array<int, 4>& alpha,
                               const std::optional<std::array<Partition, 4>>& lambdas, int n_max,
                               int window = 8, bool with_minimality = true);

}  // namespace schurseq
