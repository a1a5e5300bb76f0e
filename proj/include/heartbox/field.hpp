#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "heartbox/error.hpp"

namespace heartbox {

// Exact base field: Q or GF(p) with p prime, 2 <= p < 2^61.
struct FieldSpec {
    enum class Kind : std::uint8_t { Q, Fp };

    Kind kind = Kind::Q;
    std::uint64_t p = 0; // modulus, present iff kind == Fp

    static FieldSpec rationals() { return FieldSpec{Kind::Q, 0}; }
    static FieldSpec prime(std::uint64_t p);

    bool is_q() const { return kind == Kind::Q; }
    bool is_fp() const { return kind == Kind::Fp; }
    bool operator==(const FieldSpec&) const = default;

    std::string to_string() const;
};

bool is_prime_u64(std::uint64_t n);

// Branchless Barrett reduction for a fixed odd-or-even prime p < 2^61.
// Products of reduced residues fit in 128 bits; the approximate quotient
// q = ((x >> (L-1)) * mu) >> (L+1) with mu = floor(2^(2L)/p) leaves a
// remainder in [0, 3p) fixed by two conditional subtractions.
class Barrett {
  public:
    Barrett() = default;
    explicit Barrett(std::uint64_t p);

    std::uint64_t p() const { return p_; }

    std::uint64_t reduce(unsigned __int128 x) const {
        unsigned __int128 q = ((x >> (shift_lo_)) * mu_) >> (shift_hi_);
        std::uint64_t r = static_cast<std::uint64_t>(x - q * p_);
        r -= p_ * (r >= p_);
        r -= p_ * (r >= p_);
        return r;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        s -= p_ * (s >= p_);
        return s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a - b;
        s += p_ * (a < b);
        return s;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return reduce(static_cast<unsigned __int128>(a) * b);
    }
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t from_int(long long v) const;

  private:
    std::uint64_t p_ = 0;
    std::uint64_t mu_ = 0;
    unsigned shift_lo_ = 0; // L - 1
    unsigned shift_hi_ = 0; // L + 1
};

// One exact scalar tagged with its field. Used at the orchestration level;
// tight loops run on the raw representations inside the matrix kernels.
class Scalar {
  public:
    Scalar() : fs_(FieldSpec::rationals()), q_(0) {}
    Scalar(FieldSpec fs, std::uint64_t fp_value) : fs_(fs), f_(fp_value) {}
    Scalar(FieldSpec fs, mpq_class q) : fs_(fs), q_(std::move(q)) {}

    static Scalar zero(const FieldSpec& fs);
    static Scalar one(const FieldSpec& fs);
    static Scalar from_int(const FieldSpec& fs, long long v);
    // Parses "n" or "n/d" for Q, decimal residue for Fp.
    static Scalar parse(const FieldSpec& fs, const std::string& text);

    const FieldSpec& field() const { return fs_; }
    std::uint64_t fp() const { return f_; }
    const mpq_class& q() const { return q_; }

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const Scalar& o) const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;

    std::string to_string() const;

  private:
    FieldSpec fs_;
    std::uint64_t f_ = 0;
    mpq_class q_;
};

} // namespace heartbox
