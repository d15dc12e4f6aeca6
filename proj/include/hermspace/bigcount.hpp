#ifndef HERMSPACE_BIGCOUNT_HPP
#define HERMSPACE_BIGCOUNT_HPP

#include <gmp.h>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

namespace hws {

// Arbitrary-precision non-negative counter.  Thin RAII wrapper over GMP's
// mpz_t; counts of eigenvalue sets can exceed 2^64 (at least 2^s for the
// unweighted space), so 64-bit accumulators are not an option.
class BigCount {
public:
    BigCount() { mpz_init(v_); }
    explicit BigCount(unsigned long value) { mpz_init_set_ui(v_, value); }
    BigCount(const BigCount& other) { mpz_init_set(v_, other.v_); }
    BigCount(BigCount&& other) noexcept {
        mpz_init(v_);
        mpz_swap(v_, other.v_);
    }
    BigCount& operator=(const BigCount& other) {
        if (this != &other) mpz_set(v_, other.v_);
        return *this;
    }
    BigCount& operator=(BigCount&& other) noexcept {
        mpz_swap(v_, other.v_);
        return *this;
    }
    ~BigCount() { mpz_clear(v_); }

    BigCount& operator+=(const BigCount& other) {
        mpz_add(v_, v_, other.v_);
        return *this;
    }
    BigCount& operator+=(unsigned long u) {
        mpz_add_ui(v_, v_, u);
        return *this;
    }
    BigCount& operator*=(const BigCount& other) {
        mpz_mul(v_, v_, other.v_);
        return *this;
    }

    static BigCount binomial(unsigned long n, unsigned long k) {
        BigCount b;
        mpz_bin_uiui(b.v_, n, k);
        return b;
    }

    static BigCount power_of_two(unsigned long e) {
        BigCount b(1);
        mpz_mul_2exp(b.v_, b.v_, e);
        return b;
    }

    bool fits_u64() const { return mpz_fits_ulong_p(v_) != 0; }
    std::uint64_t as_u64() const { return mpz_get_ui(v_); }

    // Rounded conversion; huge values saturate to +infinity.
    double as_double() const {
        if (mpz_sizeinbase(v_, 2) > 1020) return std::numeric_limits<double>::infinity();
        return mpz_get_d(v_);
    }

    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(s, out.size() + 1);
        return out;
    }

    int compare(const BigCount& other) const { return mpz_cmp(v_, other.v_); }
    int compare(unsigned long u) const { return mpz_cmp_ui(v_, u); }

    // Compares against a real threshold; +infinity compares above everything.
    bool exceeds(double threshold) const {
        if (threshold == std::numeric_limits<double>::infinity()) return false;
        mpz_t t;
        mpz_init_set_d(t, threshold);
        const bool result = mpz_cmp(v_, t) > 0;
        mpz_clear(t);
        return result;
    }

    friend bool operator==(const BigCount& a, const BigCount& b) { return a.compare(b) == 0; }
    friend bool operator<(const BigCount& a, const BigCount& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigCount& a, const BigCount& b) { return a.compare(b) <= 0; }

private:
    mpz_t v_;
};

} // namespace hws

#endif
