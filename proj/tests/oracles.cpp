#include "oracles.hpp"

#include <algorithm>

namespace schurseq::oracle {

bool horizontal_strip_brute(const Partition& inner, const Partition& outer) {
    if (!contains(outer, inner)) return false;
    for (int c = 1; c <= outer.part(1); ++c) {
        int outer_col = 0, inner_col = 0;
        for (int r = 1; r <= outer.length(); ++r) {
            if (outer.part(r) >= c) ++outer_col;
            if (inner.part(r) >= c) ++inner_col;
        }
        if (outer_col - inner_col > 1) return false;
    }
    return true;
}

namespace {

void partitions_rec(long long n, int max_part, int max_len, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(std::vector<int>(acc)));
        return;
    }
    if (max_len == 0) return;
    for (int p = static_cast<int>(std::min<long long>(max_part, n)); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(n - p, p, max_len - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(long long n, int max_len) {
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, static_cast<int>(n), max_len < 0 ? static_cast<int>(n) : max_len, acc, out);
    return out;
}

std::vector<Partition> partitions_up_to(long long n, int max_len) {
    std::vector<Partition> out;
    for (long long m = 0; m <= n; ++m) {
        auto batch = partitions_of(m, max_len);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

std::map<Partition, long long, PartitionOrder> ssyt_shape_counts(const std::vector<int>& content) {
    std::map<Partition, long long, PartitionOrder> out;
    int k = static_cast<int>(content.size());
    long long cells = 0;
    for (int w : content) cells += w;

    for (const Partition& shape : partitions_of(cells, k)) {
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
        for (int r = 1; r <= shape.length(); ++r)
            rows[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(shape.part(r)), 0);
        std::vector<int> used(static_cast<std::size_t>(k), 0);
        long long count = 0;
        auto fill = [&](auto&& self, int r, int c) -> void {
            if (r > shape.length()) {
                ++count;  // used == content is forced: used <= content and all cells placed
                return;
            }
            if (c > shape.part(r)) {
                self(self, r + 1, 1);
                return;
            }
            int lo = 1;
            if (c > 1) lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 2)]);
            if (r > 1 && shape.part(r - 1) >= c)
                lo = std::max(lo, rows[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c - 1)] + 1);
            for (int v = lo; v <= k; ++v) {
                if (used[static_cast<std::size_t>(v - 1)] == content[static_cast<std::size_t>(v - 1)])
                    continue;
                rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = v;
                ++used[static_cast<std::size_t>(v - 1)];
                self(self, r, c + 1);
                --used[static_cast<std::size_t>(v - 1)];
            }
        };
        fill(fill, 1, 1);
        if (count != 0) out.emplace(shape, count);
    }
    return out;
}

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!contains(lambda, mu)) return 0;
    if (lambda.weight() != mu.weight() + nu.weight()) return 0;
    int rows = lambda.length();
    int symbols = nu.length();
    // Cells in reading order: top to bottom, right to left within a row, so
    // the lattice condition can be enforced prefix by prefix.
    struct Cell {
        int r, c;
    };
    std::vector<Cell> order;
    for (int r = 1; r <= rows; ++r)
        for (int c = lambda.part(r); c > mu.part(r); --c) order.push_back({r, c});

    std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows));
    for (int r = 1; r <= rows; ++r)
        grid[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(lambda.part(r)), 0);
    std::vector<int> counts(static_cast<std::size_t>(symbols), 0);
    long long total = 0;

    auto at = [&](int r, int c) -> int {  // 0 when (r,c) is not a filled cell
        if (r < 1 || r > rows) return 0;
        if (c <= mu.part(r) || c > lambda.part(r)) return 0;
        return grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
    };

    auto fill = [&](auto&& self, std::size_t idx) -> void {
        if (idx == order.size()) {
            ++total;
            return;
        }
        auto [r, c] = order[idx];
        for (int v = 1; v <= symbols; ++v) {
            if (counts[static_cast<std::size_t>(v - 1)] == nu.part(v)) continue;
            if (v >= 2 &&
                counts[static_cast<std::size_t>(v - 1)] + 1 > counts[static_cast<std::size_t>(v - 2)])
                continue;  // lattice word prefix condition
            int right = at(r, c + 1);
            if (right != 0 && v > right) continue;
            int above = at(r - 1, c);
            if (above != 0 && v <= above) continue;
            grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = v;
            ++counts[static_cast<std::size_t>(v - 1)];
            self(self, idx + 1);
            --counts[static_cast<std::size_t>(v - 1)];
            grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = 0;
        }
    };
    fill(fill, 0);
    return total;
}

SchurExpansion lr_product(const Partition& mu, const Partition& nu) {
    SchurExpansion out(mu.weight() + nu.weight());
    for (const Partition& lambda : partitions_of(mu.weight() + nu.weight(),
                                                 mu.length() + nu.length())) {
        long long c = lr_coefficient(lambda, mu, nu);
        if (c != 0) out.add_term(lambda, c);
    }
    return out;
}

}  // namespace schurseq::oracle
