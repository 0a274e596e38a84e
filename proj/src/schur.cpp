#include "schurseq/schur.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <ostream>

#include "schurseq/error.hpp"

namespace schurseq {

SchurExpansion SchurExpansion::basis(Partition lambda, long long coeff) {
    SchurExpansion f(lambda.weight());
    f.add_term(lambda, coeff);
    return f;
}

long long SchurExpansion::multiplicity(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? 0 : it->second;
}

SchurExpansion& SchurExpansion::add_term(const Partition& lambda, long long coeff) {
    if (lambda.weight() != degree_)
        fail(errc::degree_mismatch, "term s(" + lambda.to_string() + ") has weight " +
                                        std::to_string(lambda.weight()) + ", expansion degree is " +
                                        std::to_string(degree_));
    if (coeff == 0) return *this;
    auto [it, inserted] = terms_.emplace(lambda, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& rhs) {
    if (degree_ != rhs.degree_)
        fail(errc::degree_mismatch, "cannot add expansions of degrees " + std::to_string(degree_) +
                                        " and " + std::to_string(rhs.degree_));
    for (const auto& [lambda, coeff] : rhs.terms_) add_term(lambda, coeff);
    return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& rhs) {
    if (degree_ != rhs.degree_)
        fail(errc::degree_mismatch, "cannot subtract expansions of degrees " +
                                        std::to_string(degree_) + " and " +
                                        std::to_string(rhs.degree_));
    for (const auto& [lambda, coeff] : rhs.terms_) add_term(lambda, checked_mul(coeff, -1));
    return *this;
}

SchurExpansion SchurExpansion::scaled(long long c) const {
    SchurExpansion out(degree_);
    if (c == 0) return out;
    for (const auto& [lambda, coeff] : terms_) out.terms_.emplace(lambda, checked_mul(coeff, c));
    return out;
}

SchurExpansion SchurExpansion::shift(const Partition& lambda) const {
    SchurExpansion out(degree_ + lambda.weight());
    for (const auto& [mu, coeff] : terms_) out.add_term(componentwise_sum(mu, lambda), coeff);
    return out;
}

std::pair<SchurExpansion, SchurExpansion> SchurExpansion::restrict_length(int l) const {
    SchurExpansion low(degree_), high(degree_);
    for (const auto& [lambda, coeff] : terms_)
        (lambda.length() <= l ? low : high).terms_.emplace(lambda, coeff);
    return {std::move(low), std::move(high)};
}

std::string SchurExpansion::to_string() const {
    if (terms_.empty()) return "0[deg " + std::to_string(degree_) + "]";
    std::string out;
    for (const auto& [lambda, coeff] : terms_) {
        if (out.empty()) {
            if (coeff < 0) out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        long long a = coeff < 0 ? -coeff : coeff;
        if (a != 1) out += std::to_string(a) + "*";
        out += "s(" + lambda.to_string() + ")";
    }
    return out;
}

SchurExpansion operator+(SchurExpansion lhs, const SchurExpansion& rhs) {
    lhs += rhs;
    return lhs;
}

SchurExpansion operator-(SchurExpansion lhs, const SchurExpansion& rhs) {
    lhs -= rhs;
    return lhs;
}

namespace {

// Flat accumulation for the multiplication hot paths: strip chains are
// enumerated into a vector and merged once, skipping intermediate maps.
using FlatTerms = std::vector<std::pair<Partition, long long>>;

// Partitions with at most 12 rows of size < 255 pack into one 128-bit key
// (top row in the highest field, so key order is the canonical order
// reversed); the hottest accumulation paths sort plain integers instead of
// vectors.
constexpr int kPackRows = 12;
constexpr int kPackLimit = 255;
using PackedKey = unsigned __int128;
using PackedTerms = std::vector<std::pair<PackedKey, long long>>;

inline bool pack_ok(int max_part, int rows) { return rows <= kPackRows && max_part < kPackLimit; }

inline PackedKey pack_parts(const int* p, int len) {
    PackedKey x = 0;
    for (int i = 0; i < len; ++i) x = (x << 8) | static_cast<unsigned>(p[i]);
    return x;
}

inline Partition unpack_parts(PackedKey x) {
    int buf[kPackRows];
    int n = 0;
    while (x != 0) {
        buf[n++] = static_cast<int>(x & 0xff);
        x >>= 8;
    }
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parts[static_cast<std::size_t>(i)] = buf[n - 1 - i];
    return Partition(std::move(parts));
}

SchurExpansion from_packed(long long degree, PackedTerms& acc) {
    std::sort(acc.begin(), acc.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SchurExpansion out(degree);
    std::size_t i = 0;
    while (i < acc.size()) {
        long long c = acc[i].second;
        std::size_t j = i + 1;
        while (j < acc.size() && acc[j].first == acc[i].first) {
            c = checked_add(c, acc[j].second);
            ++j;
        }
        if (c != 0) out.add_term(unpack_parts(acc[i].first), c);
        i = j;
    }
    return out;
}

template <class Sink>
void for_each_strip(const Partition& mu, int r, Sink&& sink) {
    int l = mu.length();
    // Row increments e_i, i = 1..l+1: e_1 is capped only by the budget,
    // e_i <= mu_{i-1} - mu_i keeps the strip horizontal, and the new bottom
    // row may not exceed mu_l.
    std::array<long long, 64> cap{}, suffix{};
    if (l + 3 > static_cast<int>(cap.size())) fail(errc::unsupported, "partition too long");
    cap[1] = r;
    for (int i = 2; i <= l + 1; ++i) cap[static_cast<std::size_t>(i)] = mu.part(i - 1) - mu.part(i);
    suffix[static_cast<std::size_t>(l) + 2] = 0;
    for (int i = l + 1; i >= 1; --i)
        suffix[static_cast<std::size_t>(i)] =
            suffix[static_cast<std::size_t>(i) + 1] + cap[static_cast<std::size_t>(i)];

    std::vector<int> nu(static_cast<std::size_t>(l) + 1);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == l + 2) {
            int len = l + 1;
            while (len > 0 && nu[static_cast<std::size_t>(len - 1)] == 0) --len;
            sink(nu.data(), len);
            return;
        }
        int hi = static_cast<int>(std::min<long long>(cap[static_cast<std::size_t>(i)], rem));
        long long ahead = suffix[static_cast<std::size_t>(i) + 1];
        int lo = ahead >= rem ? 0 : static_cast<int>(rem - ahead);
        for (int e = lo; e <= hi; ++e) {
            nu[static_cast<std::size_t>(i - 1)] = mu.part(i) + e;
            self(self, i + 1, rem - e);
        }
    };
    rec(rec, 1, r);
}


SchurExpansion from_flat(long long degree, FlatTerms& acc) {
    std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) {
        return PartitionOrder{}(a.first, b.first);
    });
    SchurExpansion out(degree);
    std::size_t i = 0;
    while (i < acc.size()) {
        long long c = acc[i].second;
        std::size_t j = i + 1;
        while (j < acc.size() && acc[j].first == acc[i].first) {
            c = checked_add(c, acc[j].second);
            ++j;
        }
        if (c != 0) out.add_term(acc[i].first, c);
        i = j;
    }
    return out;
}

// Signed multiset expansion of the determinant det(h_{rows[q] + cols[t]}):
// one entry per attained multiset of positive one-row sizes (h_0 = 1 is
// dropped, a negative index kills the permutation term).
using HMultisets = std::map<std::vector<int>, long long>;

HMultisets h_product_expansion(const std::vector<int>& rows, const std::vector<int>& cols) {
    HMultisets out;
    std::size_t l = rows.size();
    if (cols.size() != l) fail(errc::shape_mismatch, "determinant is not square");
    std::vector<std::size_t> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < l; ++a)
            for (std::size_t b = a + 1; b < l; ++b)
                if (perm[a] > perm[b]) ++inversions;
        std::vector<int> parts;
        bool vanishes = false;
        for (std::size_t q = 0; q < l && !vanishes; ++q) {
            int p = rows[q] + cols[perm[q]];
            if (p < 0) vanishes = true;
            else if (p > 0) parts.push_back(p);
        }
        if (vanishes) continue;
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        long long sign = inversions % 2 == 0 ? 1 : -1;
        auto [it, inserted] = out.emplace(std::move(parts), sign);
        if (!inserted) {
            it->second += sign;
            if (it->second == 0) out.erase(it);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

HMultisets jacobi_trudi_multisets(const Partition& nu) {
    std::vector<int> rows, cols;
    for (int q = 1; q <= nu.length(); ++q) rows.push_back(nu.part(q) - q);
    for (int c = 1; c <= nu.length(); ++c) cols.push_back(c);
    return h_product_expansion(rows, cols);
}

SchurExpansion pieri_chain(const SchurExpansion& f, const std::vector<int>& parts,
                           long long coeff) {
    SchurExpansion cur = f.scaled(coeff);
    for (int r : parts) cur = pieri_multiply(cur, r);
    return cur;
}

long long expansion_cost(const SchurExpansion& f) {
    long long cost = 0;
    for (const auto& [lambda, coeff] : f.terms()) {
        long long fact = 1;
        for (int i = 2; i <= lambda.length(); ++i) fact *= i;
        cost += fact;
    }
    return cost;
}

}  // namespace

SchurExpansion pieri_multiply(const SchurExpansion& f, int r) {
    if (r < 0) fail(errc::unsupported, "Pieri row must be nonnegative");
    if (r == 0) return f;
    FlatTerms acc;
    for (const auto& [mu, coeff] : f.terms()) {
        long long c = coeff;
        for_each_strip(mu, r, [&](const int* data, int len) {
            acc.emplace_back(Partition{std::vector<int>(data, data + len)}, c);
        });
    }
    return from_flat(f.degree() + r, acc);
}

namespace {

// Multiplication by a fixed small s_beta: the expansion of s_mu * s_beta
// depends on mu only through its gap profile clipped at |beta| (additions
// never exceed |beta| cells per row, so wider gaps are indistinguishable).
// Row-addition templates are built once per (beta, profile) on a small
// representative partition and then applied to every term directly.
struct AdditionTemplate {
    std::vector<std::pair<std::vector<int>, long long>> additions;
};

SchurExpansion schur_multiply_via_jt(const SchurExpansion& base, const SchurExpansion& expanded,
                                     long long out_degree);

const AdditionTemplate& basis_template(const Partition& beta, const Partition& mu) {
    thread_local std::map<PackedKey, AdditionTemplate> cache;
    int w = static_cast<int>(beta.weight());
    int l = mu.length();
    PackedKey key = 0;
    for (int i = 1; i <= beta.length(); ++i)
        key = (key << 4) | static_cast<unsigned>(beta.part(i));
    key = (key << 4) | 0xFu;
    key = (key << 4) | static_cast<unsigned>(l);
    for (int i = 1; i < l; ++i)
        key = (key << 4) | static_cast<unsigned>(std::min(mu.part(i) - mu.part(i + 1), w));
    if (l > 0) key = (key << 4) | static_cast<unsigned>(std::min(mu.part(l), w));

    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // representative with the same clipped profile; rows stay nonempty so
    // the addition vectors keep their row alignment
    std::vector<int> rep(static_cast<std::size_t>(std::max(l, 0)), 0);
    if (l > 0) {
        rep[static_cast<std::size_t>(l - 1)] = std::max(1, std::min(mu.part(l), w));
        for (int i = l - 1; i >= 1; --i)
            rep[static_cast<std::size_t>(i - 1)] =
                rep[static_cast<std::size_t>(i)] + std::min(mu.part(i) - mu.part(i + 1), w);
    }
    Partition rep_mu{std::vector<int>(rep)};
    SchurExpansion product = schur_multiply_via_jt(SchurExpansion::basis(rep_mu),
                                                   SchurExpansion::basis(beta),
                                                   rep_mu.weight() + beta.weight());
    AdditionTemplate entry;
    for (const auto& [nu, coeff] : product.terms()) {
        std::vector<int> add(static_cast<std::size_t>(nu.length()), 0);
        for (int i = 1; i <= nu.length(); ++i)
            add[static_cast<std::size_t>(i - 1)] = nu.part(i) - rep_mu.part(i);
        entry.additions.emplace_back(std::move(add), coeff);
    }
    return cache.emplace(std::move(key), std::move(entry)).first->second;
}

// beta weights up to this bound go through the template path; the profile
// key space stays tiny and each template is built once per thread.
constexpr long long kTemplateWeightBound = 8;

void multiply_basis_templated(const SchurExpansion& f, const Partition& beta, long long scale,
                              PackedTerms& acc) {
    if (beta.empty()) {
        for (const auto& [mu, coeff] : f.terms())
            acc.emplace_back(pack_parts(mu.parts().data(), mu.length()), checked_mul(coeff, scale));
        return;
    }
    int parts[kPackRows];
    for (const auto& [mu, coeff] : f.terms()) {
        const AdditionTemplate& entry = basis_template(beta, mu);
        long long c = checked_mul(coeff, scale);
        for (const auto& [add, mult] : entry.additions) {
            int len = static_cast<int>(add.size());
            for (int i = 0; i < len; ++i)
                parts[i] = mu.part(i + 1) + add[static_cast<std::size_t>(i)];
            acc.emplace_back(pack_parts(parts, len), checked_mul(c, mult));
        }
    }
}

// One signed h-monomial list for the whole expanded factor; map order groups
// common prefixes so chain steps are shared across monomials.
SchurExpansion schur_multiply_via_jt(const SchurExpansion& base, const SchurExpansion& expanded,
                                     long long out_degree) {
    SchurExpansion out(out_degree);
    HMultisets combined;
    for (const auto& [nu, c] : expanded.terms()) {
        for (const auto& [parts, cnt] : jacobi_trudi_multisets(nu)) {
            auto [it, inserted] = combined.emplace(parts, 0);
            it->second = checked_add(it->second, checked_mul(c, cnt));
            if (it->second == 0) combined.erase(it);
        }
    }
    std::vector<int> prefix;
    std::vector<SchurExpansion> stack{base};
    for (const auto& [parts, coeff] : combined) {
        std::size_t common = 0;
        while (common < prefix.size() && common < parts.size() &&
               prefix[common] == parts[common])
            ++common;
        prefix.resize(common);
        stack.resize(common + 1);
        for (std::size_t i = common; i < parts.size(); ++i) {
            stack.push_back(pieri_multiply(stack.back(), parts[i]));
            prefix.push_back(parts[i]);
        }
        out += stack.back().scaled(coeff);
    }
    return out;
}

}  // namespace

SchurExpansion schur_multiply(const SchurExpansion& f, const SchurExpansion& g) {
    SchurExpansion out(f.degree() + g.degree());
    if (f.is_zero() || g.is_zero()) return out;
    // Expand whichever factor is cheaper to push through Jacobi-Trudi.
    const SchurExpansion& base = expansion_cost(f) <= expansion_cost(g) ? g : f;
    const SchurExpansion& expanded = &base == &g ? f : g;

    if (expanded.degree() <= kTemplateWeightBound && expanded.degree() < base.degree()) {
        int max_part = 0, max_len = 0, max_blen = 0;
        for (const auto& [mu, c] : base.terms()) {
            max_part = std::max(max_part, mu.part(1));
            max_len = std::max(max_len, mu.length());
        }
        for (const auto& [b, c] : expanded.terms()) max_blen = std::max(max_blen, b.length());
        if (pack_ok(max_part + static_cast<int>(expanded.degree()), max_len + max_blen)) {
            PackedTerms acc;
            for (const auto& [beta, coeff] : expanded.terms())
                multiply_basis_templated(base, beta, coeff, acc);
            return from_packed(out.degree(), acc);
        }
    }
    return schur_multiply_via_jt(base, expanded, out.degree());
}

SchurExpansion shifted_sum(
    long long degree,
    std::span<const std::tuple<const SchurExpansion*, Partition, long long>> summands) {
    bool packed = true;
    std::size_t total = 0;
    for (const auto& [f, lam, c] : summands) {
        if (f->degree() + lam.weight() != degree)
            fail(errc::degree_mismatch, "shifted summand degree " +
                                            std::to_string(f->degree() + lam.weight()) +
                                            " does not match " + std::to_string(degree));
        int max_part = 0, max_len = lam.length();
        for (const auto& [mu, cmu] : f->terms()) {
            max_part = std::max(max_part, mu.part(1));
            max_len = std::max(max_len, mu.length());
        }
        if (!pack_ok(max_part + lam.part(1), max_len)) packed = false;
        total += f->term_count();
    }
    if (!packed) {
        SchurExpansion out(degree);
        for (const auto& [f, lam, c] : summands) out += f->shift(lam).scaled(c);
        return out;
    }
    PackedTerms acc;
    acc.reserve(total);
    int parts[kPackRows];
    for (const auto& [f, lam, c] : summands) {
        if (c == 0) continue;
        for (const auto& [mu, cmu] : f->terms()) {
            int len = std::max(mu.length(), lam.length());
            for (int i = 0; i < len; ++i) parts[i] = mu.part(i + 1) + lam.part(i + 1);
            acc.emplace_back(pack_parts(parts, len), checked_mul(cmu, c));
        }
    }
    return from_packed(degree, acc);
}

std::vector<JacobiTrudiTerm> jacobi_trudi_hook_terms(const Partition& mu) {
    int l = mu.length();
    std::vector<int> rows;
    for (int q = 1; q <= l; ++q) rows.push_back(mu.part(q) - q);
    std::vector<JacobiTrudiTerm> out;
    for (int i = 0; i <= l; ++i) {
        std::vector<int> cols;
        for (int c = 0; c <= l; ++c)
            if (c != i) cols.push_back(c);
        SchurExpansion minor(mu.weight() - i);
        for (const auto& [parts, cnt] : h_product_expansion(rows, cols))
            minor += pieri_chain(SchurExpansion::basis(Partition{}), parts, cnt);
        out.push_back(JacobiTrudiTerm{i % 2 == 0 ? 1 : -1, i, std::move(minor)});
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const SchurExpansion& f) { return os << f.to_string(); }

}  // namespace schurseq
