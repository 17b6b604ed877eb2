#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace babi {

struct BoundResult {
    long long value = 0;
    enum class Kind { lower, exact, upper } kind = Kind::lower;
    std::string source;
};

namespace detail {

// 1 + x + x^2 + ... + x^e (e >= 0)
inline long long geometric_sum(long long x, long long e) {
    long long s = 0, p = 1;
    for (long long i = 0; i <= e; ++i) {
        s += p;
        p *= x;
    }
    return s;
}

inline long long exact_div(long long num, long long den, const char* what) {
    if (den == 0 || num % den != 0)
        throw std::logic_error(std::string("non-integral division in ") + what);
    return num / den;
}

}  // namespace detail

// Moore bound n0(k,g) for k-regular graphs of girth g, k > 2.
inline BoundResult moore(int k, int g) {
    if (k < 3) throw std::invalid_argument("moore: k >= 3 required");
    if (g < 3) throw std::invalid_argument("moore: g >= 3 required");
    long long v;
    if (g % 2) {
        v = 1 + 1LL * k * detail::geometric_sum(k - 1, (g - 3) / 2);
        // closed form (k(k-1)^((g-1)/2) - 2)/(k-2) must agree
        long long pw = 1;
        for (int i = 0; i < (g - 1) / 2; ++i) pw *= k - 1;
        if (v != detail::exact_div(1LL * k * pw - 2, k - 2, "moore"))
            throw std::logic_error("moore: closed form mismatch");
    } else {
        v = 2 * detail::geometric_sum(k - 1, g / 2 - 1);
        long long pw = 1;
        for (int i = 0; i < g / 2; ++i) pw *= k - 1;
        if (v != detail::exact_div(2 * pw - 2, k - 2, "moore"))
            throw std::logic_error("moore: closed form mismatch");
    }
    return {v, BoundResult::Kind::lower, "Moore bound"};
}

// Moore-tree lower bound on the order of an (r,s;g)-babi-graph, 2 <= r < s.
inline BoundResult babi_lower(int r, int s, int g) {
    if (r < 2 || s <= r) throw std::invalid_argument("babi_lower: 2 <= r < s required");
    if (g < 3) throw std::invalid_argument("babi_lower: g >= 3 required");
    long long v;
    if (g == 3) v = 1 + s;
    else if (g == 4) v = 2LL * s;
    else if (g % 2)
        v = 1 + s + (1LL * r * s + 1LL * (s - r) * (s - r) - s) *
                        detail::geometric_sum(r - 1, (g - 5) / 2);
    else
        v = 2 * (s + (1LL * r * s + 1LL * (s - r) * (s - r) - 2 * s + 1) *
                         detail::geometric_sum(r - 1, (g - 6) / 2));
    return {v, BoundResult::Kind::lower, "babi Moore-tree bound"};
}

// Exact babi-cage orders for girth 3: 2(s-r+1) when (s+1)/2 >= r, otherwise
// the four congruence cases s+1..s+4.
inline BoundResult babi_g3_exact(int r, int s) {
    if (r < 2 || s <= r) throw std::invalid_argument("babi_g3_exact: 2 <= r < s required");
    long long v;
    if (s + 1 >= 2 * r) v = 2LL * (s - r + 1);
    else if (s % 4 == 3 || (s % 4 == 1 && r % 2 == 1)) v = s + 1;
    else if (s % 4 == 2 || (s % 4 == 0 && r % 2 == 0)) v = s + 2;
    else if (s % 4 == 1) v = s + 3;  // r even
    else v = s + 4;                  // s = 0 mod 4, r odd
    return {v, BoundResult::Kind::exact, "girth-3 babi-cage theorem"};
}

// Exact babi-cage orders for girth 4.
inline BoundResult babi_g4_exact(int r, int s) {
    if (r < 2 || s <= r) throw std::invalid_argument("babi_g4_exact: 2 <= r < s required");
    long long v;
    if (s >= 2 * r) v = 4LL * (s - r);
    else if (s % 2 == 0) v = 2LL * s;
    else v = 2LL * (s + 1);
    return {v, BoundResult::Kind::exact, "girth-4 babi-cage theorem"};
}

// Semi-regular girth-5 lower bound (r > 2): r^2+r+4 or r^2+r+6 by r mod 4.
inline BoundResult semireg5_lower(int r) {
    if (r <= 2) throw std::invalid_argument("semireg5_lower: r > 2 required");
    long long base = 1LL * r * r + r;
    long long v = (r % 4 == 0 || r % 4 == 3) ? base + 4 : base + 6;
    return {v, BoundResult::Kind::lower, "semi-regular girth-5 lemma"};
}

// Semi-regular girth-6 lower bound (r >= 2).
inline BoundResult semireg6_lower(int r) {
    if (r < 2) throw std::invalid_argument("semireg6_lower: r >= 2 required");
    long long rr = 1LL * r * r;
    long long v;
    if (r == 2 || r == 4 || r == 6) v = 2 * (rr + 2);
    else if (r % 2 == 1) v = 2 * (rr + 3);
    else v = 2 * (rr + 4);  // even r >= 8
    return {v, BoundResult::Kind::lower, "semi-regular girth-6 theorem"};
}

// Can the Moore-tree bound be attained with equality?  For g = 5 only at
// (r,s) = (2,3).  For g = 6 the necessary condition is an integer d with
// 0 <= d <= min(r, s-r-1) solving s^2 - (3r+1)s + 4r^2 - 2d^2 + 1 = 0,
// together with the theorem's window (applied in exact integer form:
// 8d^2 >= 7r^2 - 6r + 3 via d <= s-r-1, and s < 2r-2).
struct EqualityFeasibility {
    bool feasible = false;
    std::optional<long long> witness_d;
};

inline EqualityFeasibility equality56_feasible(int r, int s, int g) {
    if (r < 2 || s <= r) throw std::invalid_argument("equality56: 2 <= r < s required");
    if (g == 5) return {r == 2 && s == 3, std::nullopt};
    if (g != 6) throw std::invalid_argument("equality56: g must be 5 or 6");
    long long dmax = std::min<long long>(r, s - r - 1);
    for (long long d = 0; d <= dmax; ++d) {
        long long lhs = 1LL * s * s - (3LL * r + 1) * s + 4LL * r * r - 2 * d * d + 1;
        if (lhs != 0) continue;
        if (8 * d * d <= 7LL * r * r - 6 * r + 3) continue;  // discriminant window (strict)
        if (s >= 2 * r - 2) continue;                       // theorem's conclusion
        return {true, d};
    }
    return {false, std::nullopt};
}

// At least v(s-r)/4 fat edges in any balanced biregular graph of order v
// (rounded up when fractional).
inline long long fat_edge_lower(long long v, int r, int s) {
    if (v % 2) throw std::invalid_argument("fat_edge_lower: order must be even");
    long long num = v * (s - r);
    return (num + 3) / 4;  // ceil
}

// Strict census caps for an (r,r+1;6)-babi-graph of order v = 2r^2 + c,
// c > 2: fewer than cv/8 fat and (c-2)v/8 thin edges.  Returned in exact
// eighths (a census value f violates the cap iff 8f >= fat_cap_eighths).
// The proposition's proof only supports the strict form for r >= 3; at r = 2
// the paper's own 12-vertex cage attains 8f = cv, so `validated` is false
// there and the cap should be read as non-strict.
struct CensusCaps {
    long long fat_cap_eighths = 0;
    long long thin_cap_eighths = 0;
    bool validated = true;
};

inline CensusCaps census_caps(long long v, int r, long long c) {
    if (v % 2) throw std::invalid_argument("census_caps: order must be even");
    if (c <= 2) throw std::invalid_argument("census_caps: c > 2 required");
    if (v != 2LL * r * r + c) throw std::invalid_argument("census_caps: v != 2r^2 + c");
    return {c * v, (c - 2) * v, r >= 3};
}

// The general existence theorem's upper bound
// 32 (sum_{t=1}^{g-2} (r-1)^t)(sum_{t=1}^{g-2} (s-1)^t).
inline BoundResult babi_upper(int r, int s, int g) {
    if (r < 2 || s <= r) throw std::invalid_argument("babi_upper: 2 <= r < s required");
    if (g < 3) throw std::invalid_argument("babi_upper: g >= 3 required");
    auto tail = [&](long long x) {
        return detail::geometric_sum(x, g - 2) - 1;  // sum from t=1
    };
    return {32 * tail(r - 1) * tail(s - 1), BoundResult::Kind::upper,
            "connection-through-switching existence theorem"};
}

}  // namespace babi
