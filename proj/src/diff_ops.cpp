#include "schurseq/diff_ops.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "schurseq/error.hpp"
#include "schurseq/polytope.hpp"

namespace schurseq {

DiffOp::DiffOp(Partition lambda, int step) : lambda_(std::move(lambda)), step_(step) {
    if (step_ < 1) fail(errc::parse, "operator step m must be positive");
    if (lambda_.empty()) fail(errc::parse, "operator partition must be nonempty");
    if (lambda_.weight() % step_ != 0)
        fail(errc::parse, "step " + std::to_string(step_) + " does not divide |" +
                              lambda_.to_string() + "| = " + std::to_string(lambda_.weight()));
}

DiffOp DiffOp::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    int step = 1;
    auto bar = text.find('|');
    if (bar != std::string_view::npos) {
        std::string_view head = trim(text.substr(0, bar));
        auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), step);
        if (ec != std::errc{} || ptr != head.data() + head.size())
            fail(errc::parse, "bad operator step \"" + std::string(head) + "\"");
        text = trim(text.substr(bar + 1));
    }
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
        text = trim(text.substr(1, text.size() - 2));
    return DiffOp(Partition::parse(text), step);
}

std::string DiffOp::to_string() const {
    return std::to_string(step_) + "|(" + lambda_.to_string() + ")";
}

std::vector<DiffOp> parse_ops(std::string_view text) {
    std::vector<DiffOp> ops;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto semi = text.find(';', pos);
        std::string_view tok =
            text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
        bool blank = tok.find_first_not_of(" \t") == std::string_view::npos;
        if (!blank) ops.push_back(DiffOp::parse(tok));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    if (ops.empty()) fail(errc::parse, "empty operator list");
    return ops;
}

struct SequenceFamily::State {
    std::string label;
    long long offset;
    int slope;
    int floor;
    std::function<SchurExpansion(int)> eval;
    std::map<int, SchurExpansion> memo;
};

SequenceFamily::SequenceFamily(std::string label, long long offset, int slope, int floor,
                               std::function<SchurExpansion(int)> eval)
    : state_(std::make_shared<State>(
          State{std::move(label), offset, slope, floor, std::move(eval), {}})) {
    if (slope < 1) fail(errc::slope_mismatch, "sequence slope must be positive");
}

const std::string& SequenceFamily::label() const { return state_->label; }
long long SequenceFamily::offset() const { return state_->offset; }
int SequenceFamily::slope() const { return state_->slope; }
int SequenceFamily::floor() const { return state_->floor; }

const SchurExpansion& SequenceFamily::at(int n) const {
    if (n < state_->floor)
        fail(errc::below_floor, state_->label + " is undefined at n = " + std::to_string(n) +
                                    " (floor " + std::to_string(state_->floor) + ")");
    auto it = state_->memo.find(n);
    if (it == state_->memo.end()) {
        SchurExpansion value = state_->eval(n);
        long long expected = static_cast<long long>(n) * state_->slope + state_->offset;
        if (value.degree() != expected)
            fail(errc::degree_mismatch, state_->label + " at n = " + std::to_string(n) +
                                            " has degree " + std::to_string(value.degree()) +
                                            ", grading demands " + std::to_string(expected));
        it = state_->memo.emplace(n, std::move(value)).first;
    }
    return it->second;
}

SequenceFamily homogeneous_family(std::vector<int> alpha) {
    int k = static_cast<int>(alpha.size());
    long long offset = std::accumulate(alpha.begin(), alpha.end(), 0LL);
    std::string label = "hom" + std::to_string(k) + ":alpha=";
    for (int i = 0; i < k; ++i) label += (i ? "," : "") + std::to_string(alpha[static_cast<std::size_t>(i)]);
    return SequenceFamily(label, offset, k, 0, [alpha = std::move(alpha), k](int n) {
        return homogeneous_product(k, n, alpha);
    });
}

namespace {

// One-row products repeat heavily across evaluations (the sizes differ only
// in small Jacobi-Trudi offsets), so they are served from a per-thread cache
// keyed by the sorted sizes.
const SchurExpansion& cached_one_row_product(const std::vector<int>& sorted_sizes) {
    thread_local std::map<std::vector<int>, SchurExpansion> cache;
    auto it = cache.find(sorted_sizes);
    if (it == cache.end()) {
        int k = static_cast<int>(sorted_sizes.size());
        int base = sorted_sizes.back();
        std::vector<int> shifted(sorted_sizes.size());
        for (std::size_t i = 0; i < sorted_sizes.size(); ++i)
            shifted[i] = sorted_sizes[i] - base;
        it = cache.emplace(sorted_sizes, homogeneous_product(k, base, shifted)).first;
    }
    return it->second;
}

}  // namespace

SequenceFamily hook_family(std::vector<int> alpha, std::vector<Partition> lambdas) {
    int k = static_cast<int>(alpha.size());
    if (static_cast<int>(lambdas.size()) != k)
        fail(errc::shape_mismatch, "need one lambda per alpha");
    long long offset = std::accumulate(alpha.begin(), alpha.end(), 0LL);
    int floor = 0;
    std::string label = "hook" + std::to_string(k) + ":";
    for (int i = 0; i < k; ++i) {
        offset += lambdas[static_cast<std::size_t>(i)].weight();
        floor = std::max(floor,
                         lambdas[static_cast<std::size_t>(i)].part(1) - alpha[static_cast<std::size_t>(i)]);
        label += (i ? " * " : "") + std::string("s(n+") +
                 std::to_string(alpha[static_cast<std::size_t>(i)]) + "," +
                 lambdas[static_cast<std::size_t>(i)].to_string() + ")";
    }

    // Expand each hook factor by Jacobi-Trudi:
    //   s_(n+a_q, l_q) = sum_i (-1)^i s_(n+a_q+i) det(M_{l_q,i}),
    // so the product is a sum over offset tuples of a one-row product times a
    // small n-independent expansion.  Tuples with one sorted offset vector
    // are merged; at evaluation the one-row factor comes from the cache and
    // only small multiplications remain.
    struct Grouped {
        std::vector<int> sorted_offsets;  // a_q + i_q, sorted nonincreasing
        SchurExpansion small;             // signed sum of minor products
    };
    std::vector<std::vector<JacobiTrudiTerm>> factor_terms;
    for (const auto& lam : lambdas) factor_terms.push_back(jacobi_trudi_hook_terms(lam));
    std::map<std::vector<int>, SchurExpansion> grouped;
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    auto collect = [&](auto&& self, int q) -> void {
        if (q == k) {
            int sign = 1;
            SchurExpansion minors = SchurExpansion::basis(Partition{});
            std::vector<int> offs(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) {
                const auto& t =
                    factor_terms[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
                sign *= t.sign;
                minors = schur_multiply(minors, t.minor);
                offs[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(i)] + t.offset;
            }
            std::sort(offs.begin(), offs.end(), std::greater<int>());
            auto it = grouped.find(offs);
            if (it == grouped.end())
                grouped.emplace(std::move(offs), minors.scaled(sign));
            else
                it->second += minors.scaled(sign);
            return;
        }
        for (std::size_t i = 0; i < factor_terms[static_cast<std::size_t>(q)].size(); ++i) {
            pick[static_cast<std::size_t>(q)] = i;
            self(self, q + 1);
        }
    };
    collect(collect, 0);
    std::vector<Grouped> groups;
    for (auto& [offs, small] : grouped)
        if (!small.is_zero()) groups.push_back(Grouped{offs, std::move(small)});

    long long total = offset;
    return SequenceFamily(label, offset, k, floor, [groups = std::move(groups), k, total](int n) {
        SchurExpansion value(static_cast<long long>(n) * k + total);
        for (const auto& g : groups) {
            std::vector<int> sizes(g.sorted_offsets.size());
            for (std::size_t i = 0; i < sizes.size(); ++i)
                sizes[i] = n + g.sorted_offsets[i];
            value += schur_multiply(cached_one_row_product(sizes), g.small);
        }
        return value;
    });
}

SequenceFamily border_family(std::vector<int> alpha, Partition beta) {
    int k = static_cast<int>(alpha.size());
    long long offset = std::accumulate(alpha.begin(), alpha.end(), 0LL) + beta.weight();
    std::string label = "border" + std::to_string(k) + ":beta=" + beta.to_string();
    return SequenceFamily(label, offset, k, 0,
                          [alpha = std::move(alpha), beta = std::move(beta), k](int n) {
                              return schur_multiply(homogeneous_product(k, n, alpha),
                                                    SchurExpansion::basis(beta));
                          });
}

SequenceFamily hook_sum_family(std::vector<HookSummand> summands) {
    if (summands.empty()) fail(errc::shape_mismatch, "empty hook sum");
    long long offset = summands.front().offset + summands.front().lambda.weight();
    int floor = 0;
    std::string label;
    for (const auto& s : summands) {
        if (s.offset + s.lambda.weight() != offset)
            fail(errc::degree_mismatch, "hook summands must share one degree offset");
        floor = std::max(floor, s.lambda.part(1) - s.offset);
        if (!label.empty()) label += " + ";
        if (s.coeff != 1) label += std::to_string(s.coeff) + "*";
        label += "s(n+" + std::to_string(s.offset) + "," + s.lambda.to_string() + ")";
    }
    return SequenceFamily(label, offset, 1, floor, [summands = std::move(summands), offset](int n) {
        SchurExpansion value(static_cast<long long>(n) + offset);
        for (const auto& s : summands)
            value += SchurExpansion::basis(prepend_row(n + s.offset, s.lambda), s.coeff);
        return value;
    });
}

SequenceFamily linear_combination(std::vector<std::pair<long long, SequenceFamily>> parts) {
    if (parts.empty()) fail(errc::shape_mismatch, "empty linear combination");
    long long offset = parts.front().second.offset();
    int slope = parts.front().second.slope();
    int floor = parts.front().second.floor();
    std::string label;
    for (const auto& [c, fam] : parts) {
        if (fam.offset() != offset || fam.slope() != slope)
            fail(errc::degree_mismatch, "combined families must share offset and slope");
        floor = std::max(floor, fam.floor());
        if (!label.empty()) label += " + ";
        label += std::to_string(c) + "*(" + fam.label() + ")";
    }
    return SequenceFamily(label, offset, slope, floor, [parts = std::move(parts)](int n) {
        SchurExpansion value = parts.front().second.at(n).scaled(parts.front().first);
        for (std::size_t i = 1; i < parts.size(); ++i)
            value += parts[i].second.at(n).scaled(parts[i].first);
        return value;
    });
}

SequenceFamily restrict_length_family(SequenceFamily base, int l) {
    std::string label = "(" + base.label() + ")_<=" + std::to_string(l);
    long long offset = base.offset();
    int slope = base.slope();
    int floor = base.floor();
    return SequenceFamily(label, offset, slope, floor, [base = std::move(base), l](int n) {
        return base.at(n).restrict_length(l).first;
    });
}

SequenceFamily product_family(std::vector<SequenceFamily> factors) {
    if (factors.empty()) fail(errc::shape_mismatch, "empty product family");
    long long offset = 0;
    int slope = 0, floor = 0;
    std::string label;
    for (const auto& f : factors) {
        offset += f.offset();
        slope += f.slope();
        floor = std::max(floor, f.floor());
        if (!label.empty()) label += " * ";
        label += "(" + f.label() + ")";
    }
    return SequenceFamily(label, offset, slope, floor, [factors = std::move(factors)](int n) {
        SchurExpansion value = factors.front().at(n);
        for (std::size_t i = 1; i < factors.size(); ++i)
            value = schur_multiply(value, factors[i].at(n));
        return value;
    });
}

namespace {

void check_slope(const DiffOp& op, const SequenceFamily& seq) {
    if (op.slope() != seq.slope())
        fail(errc::slope_mismatch, op.to_string() + " has slope " + std::to_string(op.slope()) +
                                       ", sequence " + seq.label() + " has slope " +
                                       std::to_string(seq.slope()));
}

}  // namespace

SchurExpansion eval_pointwise(const DiffOp& op, const SequenceFamily& seq, int n) {
    check_slope(op, seq);
    if (n < seq.floor() + op.step())
        fail(errc::below_floor, "pointwise value needs n >= floor + m = " +
                                    std::to_string(seq.floor() + op.step()));
    return seq.at(n) - seq.at(n - op.step()).shift(op.lambda());
}

SchurExpansion eval_nested(std::span<const DiffOp> ops, const SequenceFamily& seq, int n) {
    if (ops.empty()) return seq.at(n);
    const DiffOp& head = ops.front();
    check_slope(head, seq);
    auto rest = ops.subspan(1);
    return eval_nested(rest, seq, n) -
           eval_nested(rest, seq, n - head.step()).shift(head.lambda());
}

SchurExpansion eval_composed(std::span<const DiffOp> ops, const SequenceFamily& seq, int n) {
    for (const DiffOp& op : ops) check_slope(op, seq);
    int total_step = 0;
    for (const DiffOp& op : ops) total_step += op.step();
    if (n - total_step < seq.floor())
        fail(errc::below_floor, "composed value needs n >= floor + sum of steps = " +
                                    std::to_string(seq.floor() + total_step));
    // prod_op (1 - S_op) expanded over sub-multisets; shifts compose by
    // adding steps and componentwise-summing the partitions.
    struct GroupOrder {
        bool operator()(const std::pair<int, Partition>& a,
                        const std::pair<int, Partition>& b) const {
            if (a.first != b.first) return a.first < b.first;
            return PartitionOrder{}(a.second, b.second);
        }
    };
    std::map<std::pair<int, Partition>, long long, GroupOrder> groups;
    std::size_t r = ops.size();
    for (std::size_t mask = 0; mask < (1u << r); ++mask) {
        int steps = 0;
        Partition shift;
        for (std::size_t t = 0; t < r; ++t)
            if (mask & (1u << t)) {
                steps += ops[t].step();
                shift = componentwise_sum(shift, ops[t].lambda());
            }
        long long sign = __builtin_popcount(static_cast<unsigned>(mask)) % 2 == 0 ? 1 : -1;
        groups[{steps, std::move(shift)}] += sign;
    }
    std::vector<std::tuple<const SchurExpansion*, Partition, long long>> summands;
    for (const auto& [key, coeff] : groups) {
        if (coeff == 0) continue;
        summands.emplace_back(&seq.at(n - key.first), key.second, coeff);
    }
    return shifted_sum(static_cast<long long>(n) * seq.slope() + seq.offset(), summands);
}

SequenceFamily apply(const DiffOp& op, const SequenceFamily& seq) {
    check_slope(op, seq);
    std::string label = op.to_string() + "[" + seq.label() + "]";
    long long offset = seq.offset() + op.lambda().weight();
    return SequenceFamily(label, offset, seq.slope(), seq.floor(),
                          [op, seq](int n) { return eval_pointwise(op, seq, n + op.step()); });
}

SequenceFamily compose(std::vector<DiffOp> ops, const SequenceFamily& seq) {
    for (const DiffOp& op : ops) check_slope(op, seq);
    int total_step = 0;
    std::string label;
    for (const DiffOp& op : ops) {
        total_step += op.step();
        label += op.to_string();
    }
    label += "[" + seq.label() + "]";
    return SequenceFamily(label, seq.offset(), seq.slope(), seq.floor() + total_step,
                          [ops = std::move(ops), seq](int n) { return eval_composed(ops, seq, n); });
}

VanishingReport vanishing_onset(std::span<const DiffOp> ops, const SequenceFamily& seq, int n_max) {
    int total_step = 0;
    for (const DiffOp& op : ops) total_step += op.step();
    VanishingReport report;
    report.first_n = seq.floor() + total_step;
    if (n_max < report.first_n)
        fail(errc::below_floor, "n_max below the first evaluable index " +
                                    std::to_string(report.first_n));
    for (int n = report.first_n; n <= n_max; ++n) {
        SchurExpansion value = eval_composed(ops, seq, n);
        report.per_n.push_back(PointEvaluation{n, value.is_zero(), value.term_count()});
    }
    int last_nonzero = report.first_n - 1;
    for (const auto& p : report.per_n)
        if (!p.zero) last_nonzero = p.n;
    if (report.per_n.empty() || !report.per_n.back().zero)
        report.onset = std::nullopt;
    else
        report.onset = last_nonzero;
    return report;
}

std::optional<int> detect_stabilization(const SequenceFamily& seq, int n_max) {
    if (seq.slope() != 1)
        fail(errc::slope_mismatch, "stabilization detection needs a slope-1 sequence");
    std::vector<DiffOp> delta{DiffOp(Partition{1})};
    return vanishing_onset(delta, seq, n_max).onset;
}

}  // namespace schurseq
