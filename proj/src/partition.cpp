#include "schurseq/partition.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "schurseq/error.hpp"

namespace schurseq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) fail(errc::parse, "partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            fail(errc::parse, "partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "-") return Partition{};
    if (text.empty()) fail(errc::parse, "empty partition text; use \"-\" for the empty partition");
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : comma - pos));
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            fail(errc::parse, "bad partition part \"" + std::string(tok) + "\"");
        if (value <= 0) fail(errc::parse, "partition parts must be positive");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

long long Partition::weight() const {
    long long w = 0;
    for (int p : parts_) w += p;
    return w;
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    int n = std::max(a.length(), b.length());
    for (int i = 1; i <= n; ++i) {
        if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
    }
    return false;
}

Partition componentwise_sum(const Partition& a, const Partition& b) {
    int n = std::max(a.length(), b.length());
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) parts[static_cast<std::size_t>(i - 1)] = a.part(i) + b.part(i);
    return Partition(std::move(parts));
}

Partition prepend_row(int n, const Partition& lambda) {
    if (n < 0) fail(errc::row_too_short, "prepended row must be nonnegative");
    if (n < lambda.part(1))
        fail(errc::row_too_short, "row " + std::to_string(n) + " shorter than first part of " +
                                      lambda.to_string());
    if (n == 0) return Partition{};  // lambda is empty here
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(lambda.length()) + 1);
    parts.push_back(n);
    parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
    return Partition(std::move(parts));
}

bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
    if (!contains(outer, inner)) return false;
    int n = std::max(inner.length(), outer.length());
    for (int i = 1; i <= n; ++i) {
        if (outer.part(i) < inner.part(i)) return false;
        if (inner.part(i) < outer.part(i + 1)) return false;
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

}  // namespace schurseq
