#include "heartbox/field.hpp"

#include <bit>

namespace heartbox {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    Barrett br(n);
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = br.pow(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = br.mul(x, x);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    check(p >= 2 && p < (1ull << 61), Errc::BadInput, "modulus out of range [2, 2^61)");
    check(is_prime_u64(p), Errc::BadInput, "modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{Kind::Fp, p};
}

std::string FieldSpec::to_string() const {
    return is_q() ? "Q" : ("GF(" + std::to_string(p) + ")");
}

Barrett::Barrett(std::uint64_t p) : p_(p) {
    unsigned l = std::bit_width(p);
    shift_lo_ = l - 1;
    shift_hi_ = l + 1;
    mu_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << (2 * l)) / p);
}

std::uint64_t Barrett::inv(std::uint64_t a) const {
    check(a % p_ != 0, Errc::BadInput, "inverse of zero in GF(p)");
    // Extended Euclid; p < 2^61 so all intermediates fit in int64.
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p_), newr = static_cast<long long>(a % p_);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<long long>(p_);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t Barrett::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Barrett::from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return static_cast<std::uint64_t>(m);
}

Scalar Scalar::zero(const FieldSpec& fs) { return from_int(fs, 0); }
Scalar Scalar::one(const FieldSpec& fs) { return from_int(fs, 1); }

Scalar Scalar::from_int(const FieldSpec& fs, long long v) {
    if (fs.is_fp()) return Scalar(fs, Barrett(fs.p).from_int(v));
    return Scalar(fs, mpq_class(static_cast<long>(v)));
}

Scalar Scalar::parse(const FieldSpec& fs, const std::string& text) {
    try {
        if (fs.is_fp()) {
            mpz_class z(text, 10);
            mpz_class r = z % mpz_class(static_cast<unsigned long>(fs.p));
            if (r < 0) r += mpz_class(static_cast<unsigned long>(fs.p));
            return Scalar(fs, r.get_ui());
        }
        mpq_class q(text, 10);
        q.canonicalize();
        return Scalar(fs, q);
    } catch (const std::invalid_argument&) {
        fail(Errc::BadInput, "bad scalar literal '" + text + "'");
    }
}

bool Scalar::is_zero() const { return fs_.is_fp() ? f_ == 0 : sgn(q_) == 0; }
bool Scalar::is_one() const { return fs_.is_fp() ? f_ == 1 % fs_.p : q_ == 1; }

bool Scalar::operator==(const Scalar& o) const {
    check(fs_ == o.fs_, Errc::FieldMismatch, "comparing scalars over different fields");
    return fs_.is_fp() ? f_ == o.f_ : q_ == o.q_;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check(fs_ == o.fs_, Errc::FieldMismatch, "scalar arithmetic across fields");
    if (fs_.is_fp()) return Scalar(fs_, Barrett(fs_.p).add(f_, o.f_));
    return Scalar(fs_, q_ + o.q_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check(fs_ == o.fs_, Errc::FieldMismatch, "scalar arithmetic across fields");
    if (fs_.is_fp()) return Scalar(fs_, Barrett(fs_.p).sub(f_, o.f_));
    return Scalar(fs_, q_ - o.q_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check(fs_ == o.fs_, Errc::FieldMismatch, "scalar arithmetic across fields");
    if (fs_.is_fp()) return Scalar(fs_, Barrett(fs_.p).mul(f_, o.f_));
    return Scalar(fs_, q_ * o.q_);
}

Scalar Scalar::operator-() const {
    if (fs_.is_fp()) return Scalar(fs_, Barrett(fs_.p).neg(f_));
    return Scalar(fs_, -q_);
}

Scalar Scalar::inv() const {
    if (fs_.is_fp()) return Scalar(fs_, Barrett(fs_.p).inv(f_));
    check(sgn(q_) != 0, Errc::BadInput, "inverse of zero");
    return Scalar(fs_, 1 / q_);
}

std::string Scalar::to_string() const {
    if (fs_.is_fp()) return std::to_string(f_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::AlgebraMismatch: return "AlgebraMismatch";
        case Errc::NotAssociative: return "NotAssociative";
        case Errc::UnitLawFails: return "UnitLawFails";
        case Errc::CharTooSmall: return "CharTooSmall";
        case Errc::SplitFailure: return "SplitFailure";
        case Errc::NoCover: return "NoCover";
        case Errc::DepthExceeded: return "DepthExceeded";
        case Errc::NotCommutative: return "NotCommutative";
        case Errc::NotFrobenius: return "NotFrobenius";
        case Errc::CatalogRequired: return "CatalogRequired";
        case Errc::NoNonzeroTau: return "NoNonzeroTau";
        case Errc::BadPrime: return "BadPrime";
        case Errc::CharTwo: return "CharTwo";
        case Errc::Internal: return "Internal";
        case Errc::BadInput: return "BadInput";
        case Errc::Io: return "Io";
    }
    return "Unknown";
}

} // namespace heartbox
