#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace schurseq {

// A number partition: weakly decreasing sequence of positive integers.  The
// empty partition is the unique partition of 0.  Trailing zeros are stripped
// on construction so that equality is canonical.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Text form "4,2,1"; "-" denotes the empty partition.  Rejects zeros and
    // sequences that increase anywhere.
    static Partition parse(std::string_view text);
    std::string to_string() const;

    long long weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based row access; rows beyond the length are 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Canonical order: descending lexicographic (so within one degree the output
// order is (4), (3,1), (2,2), (2,1,1), (1,1,1,1)).
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

Partition componentwise_sum(const Partition& a, const Partition& b);

// (n, lambda_1, ..., lambda_l); requires n >= lambda_1.
Partition prepend_row(int n, const Partition& lambda);

bool contains(const Partition& outer, const Partition& inner);

// outer/inner has at most one cell per column, i.e. the two interlace:
// outer_1 >= inner_1 >= outer_2 >= inner_2 >= ...
bool is_horizontal_strip(const Partition& inner, const Partition& outer);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace schurseq
