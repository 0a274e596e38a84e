#include "schurseq/polytope.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "schurseq/error.hpp"

namespace schurseq {

namespace {

constexpr int kMaxK = 5;

void validate_alpha(int k, const std::vector<int>& alpha) {
    if (k < 1 || k > kMaxK)
        fail(errc::unsupported, "k = " + std::to_string(k) + " is outside the supported 1..5");
    if (static_cast<int>(alpha.size()) != k)
        fail(errc::shape_mismatch, "alpha has " + std::to_string(alpha.size()) +
                                       " entries, expected k = " + std::to_string(k));
    for (int i = 0; i < k; ++i) {
        if (alpha[static_cast<std::size_t>(i)] < 0)
            fail(errc::unsorted_alpha, "alpha entries must be nonnegative");
        if (i > 0 && alpha[static_cast<std::size_t>(i - 1)] < alpha[static_cast<std::size_t>(i)])
            fail(errc::unsorted_alpha, "alpha must be sorted nonincreasing");
    }
}

}  // namespace

PartialMatrix::PartialMatrix(int k) : k_(k) {
    if (k < 1) fail(errc::shape_mismatch, "k must be positive");
    entries_.assign(static_cast<std::size_t>(k) * (k + 1) / 2, 0);
}

std::size_t PartialMatrix::index(int i, int j) const {
    if (i < 1 || i > k_ || j < 1 || j > k_ - i + 1)
        fail(errc::shape_mismatch, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") outside the k = " + std::to_string(k_) + " staircase");
    // offset of row i: sum of row lengths k, k-1, ..., k-i+2
    std::size_t off = static_cast<std::size_t>(i - 1) * (2 * k_ - i + 2) / 2;
    return off + static_cast<std::size_t>(j - 1);
}

PartialMatrix PartialMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    int k = static_cast<int>(rows.size());
    PartialMatrix a(k);
    for (int i = 1; i <= k; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != k - i + 1)
            fail(errc::shape_mismatch,
                 "row " + std::to_string(i) + " must have " + std::to_string(k - i + 1) + " entries");
        for (int j = 1; j <= k - i + 1; ++j) a.set(i, j, row[static_cast<std::size_t>(j - 1)]);
    }
    return a;
}

long long PartialMatrix::row_sum(int i) const {
    long long s = 0;
    for (int j = 1; j <= k_ - i + 1; ++j) s += at(i, j);
    return s;
}

Partition PartialMatrix::row_sum_shape() const {
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(k_));
    for (int i = 1; i <= k_; ++i) parts.push_back(static_cast<int>(row_sum(i)));
    return Partition(std::move(parts));
}

std::vector<std::vector<int>> PartialMatrix::rows() const {
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= k_; ++i) {
        std::vector<int> row;
        for (int j = 1; j <= k_ - i + 1; ++j) row.push_back(at(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

std::string PartialMatrix::to_string() const {
    std::string out = "[";
    for (int i = 1; i <= k_; ++i) {
        if (i > 1) out += " ";
        out += "[";
        for (int j = 1; j <= k_ - i + 1; ++j) {
            if (j > 1) out += ",";
            out += std::to_string(at(i, j));
        }
        out += "]";
    }
    return out + "]";
}

bool PartialMatrix::operator<(const PartialMatrix& rhs) const {
    if (k_ != rhs.k_) return k_ < rhs.k_;
    return entries_ < rhs.entries_;
}

FaceId parse_face(std::string_view name) {
    if (name == "D1K") return FaceId::d1k;
    if (name == "D21") return FaceId::d21;
    if (name == "D211_SECOND") return FaceId::d211_second;
    if (name == "D22") return FaceId::d22;
    fail(errc::parse, "unknown face \"" + std::string(name) + "\"");
}

std::string face_name(FaceId id) {
    switch (id) {
        case FaceId::d1k: return "D1K";
        case FaceId::d21: return "D21";
        case FaceId::d211_second: return "D211_SECOND";
        case FaceId::d22: return "D22";
    }
    return "?";
}

namespace {

void validate_face(FaceId id, int k) {
    switch (id) {
        case FaceId::d1k:
            return;
        case FaceId::d21:
            if (k < 2) fail(errc::face_not_defined_for_k, "D21 needs k >= 2");
            return;
        case FaceId::d211_second:
        case FaceId::d22:
            if (k != 4) fail(errc::face_not_defined_for_k, face_name(id) + " is defined for k = 4 only");
            return;
    }
}

}  // namespace

bool face_condition(FaceId id, const PartialMatrix& a) {
    int k = a.k();
    validate_face(id, k);
    switch (id) {
        case FaceId::d1k:
            return a.at(k, 1) == 0;
        case FaceId::d21:
            return a.at(1, k) == 0 || a.at(k - 1, 1) == 0;
        case FaceId::d211_second:
            return a.at(1, 3) == 0 || a.at(3, 2) == 0 || a.at(3, 1) == a.at(2, 1) ||
                   a.at(2, 1) + a.at(2, 2) + a.at(2, 3) == a.at(1, 1) + a.at(1, 2) + a.at(1, 3);
        case FaceId::d22:
            return a.at(1, 2) == 0 || a.at(2, 2) == 0 || a.at(2, 3) == 0 ||
                   a.at(2, 1) + a.at(2, 2) == a.at(1, 1) + a.at(1, 2) ||
                   a.at(3, 1) + a.at(3, 2) == a.at(2, 1) + a.at(2, 2);
    }
    return false;
}

bool is_member(const PartialMatrix& a, int n, const std::vector<int>& alpha) {
    int k = a.k();
    validate_alpha(k, alpha);
    if (n < 0) fail(errc::unsupported, "n must be nonnegative");
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k - i + 1; ++j) {
            int v = a.at(i, j);
            if (v < 0 || v > n + alpha[static_cast<std::size_t>(i + j - 2)]) return false;
        }
    for (int i = 2; i <= k; ++i) {
        long long cur = 0, above = 0;
        for (int m = 1; m <= k - i + 1; ++m) {
            cur += a.at(i, m);
            above += a.at(i - 1, m);
            if (cur > above) return false;
        }
    }
    for (int m = 1; m <= k; ++m) {
        long long diag = 0;
        for (int i = 1; i <= m; ++i) diag += a.at(i, m + 1 - i);
        if (diag != n + alpha[static_cast<std::size_t>(m - 1)]) return false;
    }
    return true;
}

namespace {

// Recursive antidiagonal fill.  Antidiagonal d carries the equation
// sum_i a_{i,d+1-i} = n+alpha_d; cells are placed bottom row first so that
// every prefix-dominance constraint is checkable the moment a cell is set.
template <class Emit>
class Enumerator {
public:
    Enumerator(int k, int n, const std::vector<int>& alpha, Emit& emit)
        : k_(k), n_(n), alpha_(alpha), emit_(emit), scratch_(k), rowpref_(static_cast<std::size_t>(k) + 1, 0) {}

    void run() { fill_diag(1); }

private:
    void fill_diag(int d) {
        if (d > k_) {
            emit_(scratch_, rowpref_);
            return;
        }
        long long total = n_ + alpha_[static_cast<std::size_t>(d - 1)];
        std::array<long long, kMaxK + 1> cap{};
        std::array<long long, kMaxK + 1> ahead{};
        ahead[0] = 0;
        for (int i = 1; i <= d; ++i) {
            long long c = total;
            if (i >= 2)
                c = std::min(c, rowpref_[static_cast<std::size_t>(i - 1)] -
                                    rowpref_[static_cast<std::size_t>(i)]);
            cap[static_cast<std::size_t>(i)] = c;
            ahead[static_cast<std::size_t>(i)] = ahead[static_cast<std::size_t>(i - 1)] + c;
        }
        place(d, d, total, cap, ahead);
    }

    void place(int d, int i, long long rem, const std::array<long long, kMaxK + 1>& cap,
               const std::array<long long, kMaxK + 1>& ahead) {
        if (i == 0) {
            fill_diag(d + 1);
            return;
        }
        long long hi = std::min(cap[static_cast<std::size_t>(i)], rem);
        long long lo = std::max<long long>(0, rem - ahead[static_cast<std::size_t>(i - 1)]);
        int j = d + 1 - i;
        for (long long v = lo; v <= hi; ++v) {
            scratch_.set(i, j, static_cast<int>(v));
            rowpref_[static_cast<std::size_t>(i)] += v;
            place(d, i - 1, rem - v, cap, ahead);
            rowpref_[static_cast<std::size_t>(i)] -= v;
        }
        scratch_.set(i, j, 0);
    }

    int k_;
    int n_;
    const std::vector<int>& alpha_;
    Emit& emit_;
    PartialMatrix scratch_;
    std::vector<long long> rowpref_;  // current row prefix sums, final row sums at a leaf
};

template <class Emit>
void for_each_point(int k, int n, const std::vector<int>& alpha, Emit emit) {
    validate_alpha(k, alpha);
    if (n < 0) fail(errc::unsupported, "n must be nonnegative");
    Enumerator<Emit> e(k, n, alpha, emit);
    e.run();
}

Partition shape_from_rowsums(const std::vector<long long>& sums, int k) {
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) parts.push_back(static_cast<int>(sums[static_cast<std::size_t>(i)]));
    return Partition(std::move(parts));
}

}  // namespace

std::vector<PartialMatrix> enumerate_points(int k, int n, const std::vector<int>& alpha) {
    std::vector<PartialMatrix> out;
    for_each_point(k, n, alpha,
                   [&](const PartialMatrix& a, const std::vector<long long>&) { out.push_back(a); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PartialMatrix> face_filter(const std::vector<PartialMatrix>& points, FaceId id) {
    std::vector<PartialMatrix> out;
    for (const auto& a : points)
        if (face_condition(id, a)) out.push_back(a);
    return out;
}

long long count_points(int k, int n, const std::vector<int>& alpha, std::span<const FaceId> faces) {
    for (FaceId id : faces) validate_face(id, k);
    long long count = 0;
    for_each_point(k, n, alpha, [&](const PartialMatrix& a, const std::vector<long long>&) {
        for (FaceId id : faces)
            if (!face_condition(id, a)) return;
        ++count;
    });
    return count;
}

SchurExpansion homogeneous_product(int k, int n, const std::vector<int>& alpha) {
    long long degree = static_cast<long long>(k) * n + std::accumulate(alpha.begin(), alpha.end(), 0LL);
    SchurExpansion out(degree);
    for_each_point(k, n, alpha, [&](const PartialMatrix&, const std::vector<long long>& sums) {
        out.add_term(shape_from_rowsums(sums, k), 1);
    });
    return out;
}

SchurExpansion face_sum(int k, int n, const std::vector<int>& alpha, std::span<const FaceId> faces) {
    for (FaceId id : faces) validate_face(id, k);
    long long degree = static_cast<long long>(k) * n + std::accumulate(alpha.begin(), alpha.end(), 0LL);
    SchurExpansion out(degree);
    for_each_point(k, n, alpha, [&](const PartialMatrix& a, const std::vector<long long>& sums) {
        for (FaceId id : faces)
            if (!face_condition(id, a)) return;
        out.add_term(shape_from_rowsums(sums, k), 1);
    });
    return out;
}

namespace {

// Diagonal-move configuration: the last `tail` values of the first column are
// lifted out; value n+alpha_{k-tail+t} sits at row r_t (one diagonal
// left-down step per row), on its own antidiagonal.  Single-chain move
// sequences alone are affinely dependent for k >= 4, so the rank is
// completed greedily from the full staircase family, checking membership
// and exact rank as we go.
PartialMatrix tail_configuration(int k, int n, const std::vector<int>& alpha, int tail,
                                 const std::vector<int>& rows) {
    PartialMatrix a(k);
    for (int r = 1; r <= k - tail; ++r) a.set(r, 1, n + alpha[static_cast<std::size_t>(r - 1)]);
    for (int t = 1; t <= tail; ++t) {
        int r = rows[static_cast<std::size_t>(t - 1)];
        a.set(r, k - tail + t - (r - 1), n + alpha[static_cast<std::size_t>(k - tail + t - 1)]);
    }
    return a;
}

}  // namespace

std::vector<PartialMatrix> affine_witnesses(int k, int n, const std::vector<int>& alpha) {
    validate_alpha(k, alpha);
    if (n < 1) fail(errc::unsupported, "affine witnesses need n >= 1");
    int target = k * (k - 1) / 2 + 1;
    std::vector<PartialMatrix> out;
    for (int tail = 0; tail <= k - 1 && static_cast<int>(out.size()) < target; ++tail) {
        std::vector<std::vector<int>> staircases;
        std::vector<int> rows(static_cast<std::size_t>(tail));
        auto gen = [&](auto&& self, int t) -> void {
            if (t > tail) {
                staircases.push_back(rows);
                return;
            }
            // value t of the tail lives on antidiagonal k-tail+t
            for (int r = 1; r <= k - tail + t; ++r) {
                rows[static_cast<std::size_t>(t - 1)] = r;
                self(self, t + 1);
            }
        };
        gen(gen, 1);
        for (const auto& rs : staircases) {
            PartialMatrix cand = tail_configuration(k, n, alpha, tail, rs);
            if (!is_member(cand, n, alpha)) continue;
            out.push_back(cand);
            if (affine_dimension(out) + 1 < static_cast<int>(out.size()))
                out.pop_back();  // no new direction
            if (static_cast<int>(out.size()) == target) break;
        }
    }
    if (static_cast<int>(out.size()) != target)
        fail(errc::unsupported, "witness pool did not reach the full dimension for k = " +
                                    std::to_string(k));
    return out;
}

int affine_dimension(const std::vector<PartialMatrix>& points) {
    if (points.empty()) fail(errc::shape_mismatch, "affine dimension of an empty point set");
    const auto& base = points.front().entries();
    std::vector<std::vector<long long>> rows;
    for (std::size_t p = 1; p < points.size(); ++p) {
        if (points[p].k() != points.front().k())
            fail(errc::shape_mismatch, "affine dimension needs points of one staircase size");
        const auto& e = points[p].entries();
        std::vector<long long> row(e.size());
        for (std::size_t c = 0; c < e.size(); ++c) row[c] = e[c] - base[c];
        rows.push_back(std::move(row));
    }
    // Fraction-free (Bareiss) elimination; exact, 128-bit intermediates.
    std::size_t cols = base.size();
    int rank = 0;
    __int128 prev = 1;
    std::vector<std::vector<__int128>> m;
    for (auto& r : rows) m.emplace_back(r.begin(), r.end());
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t r = row + 1; r < m.size(); ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[row][col];
        ++rank;
        ++row;
    }
    return rank;
}

std::vector<CentreTableau> enumerate_centres(int k, const Partition& beta) {
    if (k < 1) fail(errc::shape_mismatch, "k must be positive");
    std::vector<CentreTableau> out;
    if (beta.empty()) {
        out.push_back(CentreTableau{Partition{}, {}, std::vector<int>(static_cast<std::size_t>(k), 0), 0});
        return out;
    }
    int width = beta.part(1);
    int max_rows = beta.length() + k;

    std::vector<int> shape_rows;
    std::vector<std::vector<int>> filling;
    std::vector<int> counts(static_cast<std::size_t>(k), 0);

    // Column-strictness against the row above only binds on filled cells;
    // cells of beta above a filled cell impose nothing.
    auto entry_above = [&](int r, int c) -> int {  // 0 when the cell above is not filled
        if (r == 1) return 0;
        int above_row = r - 2;  // 0-based into filling
        if (c <= beta.part(r - 1)) return 0;
        int first = beta.part(r - 1) + 1;
        return filling[static_cast<std::size_t>(above_row)][static_cast<std::size_t>(c - first)];
    };

    auto emit = [&]() {
        Partition shape{std::vector<int>(shape_rows)};
        int full = 0;
        for (int r = 1; r <= shape.length(); ++r)
            if (shape.part(r) == width) full = r;
        out.push_back(CentreTableau{std::move(shape), filling, counts, full});
    };

    auto fill_row = [&](auto&& self, int r, int c, int lo) -> void {
        int row_len = shape_rows[static_cast<std::size_t>(r - 1)];
        if (c > row_len) {
            if (r < static_cast<int>(shape_rows.size()))
                self(self, r + 1, beta.part(r + 1) + 1, 1);
            else
                emit();
            return;
        }
        int first = beta.part(r) + 1;
        for (int v = std::max(lo, entry_above(r, c) + 1); v <= k; ++v) {
            filling[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - first)] = v;
            ++counts[static_cast<std::size_t>(v - 1)];
            self(self, r, c + 1, v);
            --counts[static_cast<std::size_t>(v - 1)];
        }
    };

    auto grow_shape = [&](auto&& self, int r) -> void {
        if (static_cast<int>(shape_rows.size()) >= beta.length()) {
            // the shape chosen so far, rows 1..r-1, contains beta
            filling.assign(shape_rows.size(), {});
            for (std::size_t i = 0; i < shape_rows.size(); ++i)
                filling[i].assign(
                    static_cast<std::size_t>(shape_rows[i] - beta.part(static_cast<int>(i) + 1)), 0);
            if (shape_rows.empty())
                emit();
            else
                fill_row(fill_row, 1, beta.part(1) + 1, 1);
        }
        if (r > max_rows) return;
        int hi = r == 1 ? width : std::min(width, shape_rows[static_cast<std::size_t>(r - 2)]);
        int lo = std::max(beta.part(r), 1);
        for (int len = hi; len >= lo; --len) {
            shape_rows.push_back(len);
            self(self, r + 1);
            shape_rows.pop_back();
        }
    };

    grow_shape(grow_shape, 1);

    std::sort(out.begin(), out.end(), [](const CentreTableau& a, const CentreTableau& b) {
        if (a.shape.weight() != b.shape.weight()) return a.shape.weight() < b.shape.weight();
        PartitionOrder less;
        if (a.shape != b.shape) return less(a.shape, b.shape);
        return a.filling < b.filling;
    });
    return out;
}

namespace {

// Horizontal strip additions of `size` cells of one symbol, allowed only in
// rows where allowed_row holds.
void add_allowed_strips(const Partition& mu, int size, const std::vector<char>& allowed_row,
                        long long coeff, SchurExpansion& out) {
    int l = mu.length();
    int rows = static_cast<int>(allowed_row.size());
    int depth = std::min(l + 1, rows);
    std::vector<int> cap(static_cast<std::size_t>(depth) + 1, 0);
    for (int i = 1; i <= depth; ++i) {
        if (!allowed_row[static_cast<std::size_t>(i - 1)])
            cap[static_cast<std::size_t>(i)] = 0;
        else if (i == 1)
            cap[1] = size;
        else
            cap[static_cast<std::size_t>(i)] = mu.part(i - 1) - mu.part(i);
    }
    std::vector<long long> suffix(static_cast<std::size_t>(depth) + 2, 0);
    for (int i = depth; i >= 1; --i)
        suffix[static_cast<std::size_t>(i)] =
            suffix[static_cast<std::size_t>(i) + 1] + cap[static_cast<std::size_t>(i)];
    std::vector<int> nu(static_cast<std::size_t>(depth));
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == depth + 1) {
            if (rem != 0) return;
            std::vector<int> parts(nu.begin(), nu.end());
            for (int r = depth + 1; r <= l; ++r) parts.push_back(mu.part(r));
            out.add_term(Partition(std::move(parts)), coeff);
            return;
        }
        int hi = std::min<long long>(cap[static_cast<std::size_t>(i)], rem);
        long long ahead = suffix[static_cast<std::size_t>(i) + 1];
        int lo = ahead >= rem ? 0 : static_cast<int>(rem - ahead);
        for (int e = lo; e <= hi; ++e) {
            nu[static_cast<std::size_t>(i - 1)] = mu.part(i) + e;
            self(self, i + 1, rem - e);
        }
    };
    rec(rec, 1, size);
}

// Sum of s_shape over all SSYT with the given (not necessarily sorted)
// content, at most max_rows rows, and symbol d admitted in row r only when
// d >= row_min[r-1]: the arms compatible with one centre.
SchurExpansion constrained_arm_sum(const std::vector<long long>& content,
                                   const std::vector<int>& row_min, int max_rows) {
    long long degree = std::accumulate(content.begin(), content.end(), 0LL);
    int k = static_cast<int>(content.size());
    SchurExpansion cur = SchurExpansion::basis(Partition{});
    for (int d = 1; d <= k; ++d) {
        SchurExpansion next(cur.degree() + content[static_cast<std::size_t>(d - 1)]);
        std::vector<char> allowed(static_cast<std::size_t>(std::max(max_rows, 0)));
        for (int r = 1; r <= max_rows; ++r)
            allowed[static_cast<std::size_t>(r - 1)] =
                (r - 1 < static_cast<int>(row_min.size()) ? row_min[static_cast<std::size_t>(r - 1)]
                                                          : 1) <= d;
        for (const auto& [mu, coeff] : cur.terms())
            add_allowed_strips(mu, static_cast<int>(content[static_cast<std::size_t>(d - 1)]),
                               allowed, coeff, next);
        cur = std::move(next);
    }
    if (cur.degree() != degree) fail(errc::degree_mismatch, "arm sum degree drifted");
    return cur;
}

}  // namespace

SchurExpansion product_with_border(int k, int n, const std::vector<int>& alpha,
                                   const Partition& beta) {
    validate_alpha(k, alpha);
    if (n < 0) fail(errc::unsupported, "n must be nonnegative");
    long long degree = static_cast<long long>(k) * n +
                       std::accumulate(alpha.begin(), alpha.end(), 0LL) + beta.weight();
    SchurExpansion out(degree);
    int width = beta.part(1);
    for (const auto& centre : enumerate_centres(k, beta)) {
        std::vector<long long> content(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            content[static_cast<std::size_t>(i)] =
                static_cast<long long>(n) + alpha[static_cast<std::size_t>(i)] -
                centre.symbol_counts[static_cast<std::size_t>(i)];
            if (content[static_cast<std::size_t>(i)] < 0)
                fail(errc::negative_weight, "n too small: n + alpha_" + std::to_string(i + 1) +
                                                " - c(" + std::to_string(i + 1) + ") < 0");
        }
        // Arm rows sit on the full-width rows of the centre.  Row-weakness
        // across the column-width boundary demands that arm row r start at
        // or above the centre's boundary entry, so the arm sum is the
        // length-capped one-row product refined by those row minima.  (The
        // refinement is invisible for k <= 2 where it holds automatically.)
        int cap = beta.empty() ? k : centre.full_rows;
        std::vector<int> row_min(static_cast<std::size_t>(std::max(cap, 0)), 1);
        for (int r = 1; r <= cap; ++r) {
            if (beta.part(r) < width && centre.shape.part(r) == width) {
                const auto& row = centre.filling[static_cast<std::size_t>(r - 1)];
                if (!row.empty()) row_min[static_cast<std::size_t>(r - 1)] = row.back();
            }
        }
        out += constrained_arm_sum(content, row_min, cap).shift(centre.shape);
    }
    return out;
}

}  // namespace schurseq
