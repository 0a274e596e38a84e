#pragma once

#include <stdexcept>
#include <string>

namespace schurseq {

enum class errc {
    parse,
    row_too_short,
    degree_mismatch,
    slope_mismatch,
    below_floor,
    shape_mismatch,
    unsorted_alpha,
    face_not_defined_for_k,
    negative_weight,
    not_stabilizing,
    overflow,
    unsupported,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

// Coefficient arithmetic is exact 64-bit with hard overflow errors; silent
// wraparound would corrupt verification verdicts.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in addition");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in multiplication");
    return r;
}

}  // namespace schurseq
