#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace babi {

// Complete arithmetic tables for GF(q), q = p^k <= 32.  Elements are indexed
// 0..q-1; for extension fields the index encodes polynomial coefficients in
// base p (index = sum c_i * p^i), so 0 and 1 are the field's 0 and 1.
//
// The irreducible modulus polynomials are fixed constants so that the same q
// always yields the same tables.
class FieldTable {
public:
    explicit FieldTable(int q) : q_(q) {
        auto [p, k] = factor_prime_power(q);
        p_ = p;
        k_ = k;
        build_tables();
        check_axioms();
    }

    int order() const { return q_; }
    int characteristic() const { return p_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg_[b]); }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const {
        if (a == 0) throw std::invalid_argument("inverse of zero");
        return inv_[a];
    }

    bool is_nonzero_square(int a) const { return a != 0 && square_[a]; }

private:
    static std::pair<int, int> factor_prime_power(int q) {
        if (q < 2 || q > 32) throw std::invalid_argument("field order out of range [2,32]");
        for (int p = 2; p <= q; ++p) {
            bool prime = true;
            for (int d = 2; d * d <= p; ++d)
                if (p % d == 0) prime = false;
            if (!prime) continue;
            int k = 0, m = q;
            while (m % p == 0) { m /= p; ++k; }
            if (m == 1) return {p, k};
            if (q % p == 0) break;
        }
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    }

    // modulus polynomial coefficients, constant term first, degree k
    std::vector<int> modulus() const {
        switch (q_) {
            case 4: return {1, 1, 1};           // x^2+x+1
            case 8: return {1, 1, 0, 1};        // x^3+x+1
            case 9: return {1, 0, 1};           // x^2+1
            case 16: return {1, 1, 0, 0, 1};    // x^4+x+1
            case 25: return {2, 0, 1};          // x^2+2
            case 27: return {1, 2, 0, 1};       // x^3+2x+1
            case 32: return {1, 0, 1, 0, 0, 1}; // x^5+x^2+1
            default: throw std::logic_error("no modulus for this order");
        }
    }

    std::vector<int> digits(int a) const {
        std::vector<int> d(k_);
        for (int i = 0; i < k_; ++i) { d[i] = a % p_; a /= p_; }
        return d;
    }

    int undigits(const std::vector<int>& d) const {
        int a = 0;
        for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[i];
        return a;
    }

    void build_tables() {
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        square_.assign(q_, 0);
        if (k_ == 1) {
            for (int a = 0; a < q_; ++a) {
                neg_[a] = (q_ - a) % q_;
                for (int b = 0; b < q_; ++b) {
                    add_[a * q_ + b] = (a + b) % q_;
                    mul_[a * q_ + b] = (a * b) % q_;
                }
            }
        } else {
            auto mod = modulus();
            for (int a = 0; a < q_; ++a) {
                auto da = digits(a);
                for (int& c : da) c = (p_ - c) % p_;
                neg_[a] = undigits(da);
                for (int b = 0; b < q_; ++b) {
                    auto db = digits(b);
                    auto ds = digits(a);
                    for (int i = 0; i < k_; ++i) ds[i] = (ds[i] + db[i]) % p_;
                    add_[a * q_ + b] = undigits(ds);
                    // polynomial product reduced by the modulus
                    std::vector<int> prod(2 * k_ - 1, 0);
                    auto daa = digits(a);
                    for (int i = 0; i < k_; ++i)
                        for (int j = 0; j < k_; ++j)
                            prod[i + j] = (prod[i + j] + daa[i] * db[j]) % p_;
                    for (int d = 2 * k_ - 2; d >= k_; --d) {
                        int c = prod[d];
                        if (!c) continue;
                        prod[d] = 0;
                        for (int i = 0; i < k_; ++i)
                            prod[d - k_ + i] = ((prod[d - k_ + i] - c * mod[i]) % p_ + p_ * 32) % p_;
                    }
                    prod.resize(k_);
                    mul_[a * q_ + b] = undigits(prod);
                }
            }
        }
        for (int a = 1; a < q_; ++a) {
            for (int b = 1; b < q_; ++b)
                if (mul(a, b) == 1) inv_[a] = b;
            square_[mul(a, a)] = 1;
        }
    }

    void check_axioms() const {
        for (int a = 0; a < q_; ++a) {
            if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0)
                throw std::logic_error("field identity axiom failed");
            if (add(a, neg(a)) != 0) throw std::logic_error("additive inverse failed");
            if (a != 0 && mul(a, inv_[a]) != 1) throw std::logic_error("mult inverse failed");
            for (int b = 0; b < q_; ++b) {
                if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a))
                    throw std::logic_error("commutativity failed");
                for (int c = 0; c < q_; ++c) {
                    if (add(add(a, b), c) != add(a, add(b, c)))
                        throw std::logic_error("additive associativity failed");
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::logic_error("mult associativity failed");
                    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                        throw std::logic_error("distributivity failed");
                }
            }
        }
    }

    int q_, p_, k_;
    std::vector<int> add_, mul_, neg_, inv_;
    std::vector<char> square_;
};

inline const FieldTable& gf(int q) {
    static std::mutex m;
    static std::map<int, FieldTable> cache;  // node-based: references stay valid
    std::scoped_lock lock(m);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, FieldTable(q)).first;
    return it->second;
}

}  // namespace babi
