// Exact arithmetic for the finite field F_q = F_{p^n} (odd p, small q),
// the polynomial ring A = F_q[T], its primes, and irreducible counting.
#ifndef DFQ_GFQ_HPP
#define DFQ_GFQ_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dfq {

using BigInt = boost::multiprecision::cpp_int;

// Parameters of F_q = F_p[w]/(modulus).  Moduli come from a fixed table,
// so equal q always means the identical field object.
struct FieldSpec {
    uint32_t p = 0;                // odd prime
    uint32_t n = 0;                // extension degree >= 1
    uint32_t q = 0;                // p^n
    std::vector<uint8_t> modulus;  // ascending coeffs over F_p, degree n, monic
};

// Interned field F_q with full lookup tables (q <= 27).  Elements are
// indices 0..q-1 packing the coefficient vector in base p (power basis of
// the modulus).  All operations are pure table lookups.
class Fq {
public:
    // Supported q: 3, 5, 7, 9, 25, 27.  Throws std::invalid_argument otherwise.
    static const Fq& get(uint32_t q);

    const FieldSpec& spec() const { return spec_; }
    uint32_t p() const { return spec_.p; }
    uint32_t n() const { return spec_.n; }
    uint32_t q() const { return spec_.q; }

    uint8_t zero() const { return 0; }
    uint8_t one() const { return 1; }
    uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
    uint8_t inv(uint8_t a) const;
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }
    uint8_t pow(uint8_t a, long long e) const;
    // x -> x^p (arithmetic Frobenius of the prime field); x^q is the identity.
    uint8_t frob_p(uint8_t a) const { return pow(a, spec_.p); }
    // Smallest generator of F_q^* in index order.
    uint8_t gen() const { return gen_; }
    // Multiplicative order of a nonzero element.
    uint32_t mult_order(uint8_t a) const;

    // Element <-> coefficient vector over F_p (length n, ascending powers of w).
    std::vector<uint8_t> digits(uint8_t a) const;
    uint8_t from_digits(const std::vector<uint8_t>& d) const;

    // Element of the prime subfield from an integer residue.
    uint8_t from_int(long long v) const;

    std::string to_string(uint8_t a) const;          // canonical, e.g. "2" or "w^2+1"
    uint8_t parse_elem(const std::string& s) const;  // inverse of to_string (accepts spaces)

private:
    explicit Fq(FieldSpec spec);
    size_t idx(uint8_t a, uint8_t b) const { return size_t(a) * spec_.q + b; }

    FieldSpec spec_;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
    uint8_t gen_ = 0;
};

// An element carrying its field, for API-level arithmetic.  Inner loops use
// raw indices through Fq directly.
struct FqElem {
    const Fq* F = nullptr;
    uint8_t v = 0;

    FqElem() = default;
    FqElem(const Fq& f, uint8_t val) : F(&f), v(val) {}

    bool is_zero() const { return v == 0; }
    friend FqElem operator+(FqElem a, FqElem b) { a.check(b); return {*a.F, a.F->add(a.v, b.v)}; }
    friend FqElem operator-(FqElem a, FqElem b) { a.check(b); return {*a.F, a.F->sub(a.v, b.v)}; }
    friend FqElem operator*(FqElem a, FqElem b) { a.check(b); return {*a.F, a.F->mul(a.v, b.v)}; }
    friend FqElem operator/(FqElem a, FqElem b) { a.check(b); return {*a.F, a.F->div(a.v, b.v)}; }
    friend bool operator==(FqElem a, FqElem b) { return a.F == b.F && a.v == b.v; }
    void check(const FqElem& o) const {
        if (F != o.F) throw std::invalid_argument("FqElem: field mismatch");
    }
};

// Dense univariate polynomial over F_q in the variable T, coefficients
// ascending, highest stored coefficient nonzero (zero polynomial has an
// empty vector; its degree is a distinguished sentinel, not an integer).
class FqPoly {
public:
    FqPoly() : F_(nullptr) {}
    explicit FqPoly(const Fq& F) : F_(&F) {}
    FqPoly(const Fq& F, std::vector<uint8_t> coeffs) : F_(&F), c_(std::move(coeffs)) { normalize(); }

    static FqPoly zero(const Fq& F) { return FqPoly(F); }
    static FqPoly constant(const Fq& F, uint8_t v);
    static FqPoly variable(const Fq& F);  // T
    // c * T^k
    static FqPoly monomial(const Fq& F, uint8_t c, size_t k);

    const Fq& field() const;
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    // nullopt encodes deg(0) = -infinity
    std::optional<int> deg() const {
        if (c_.empty()) return std::nullopt;
        return int(c_.size()) - 1;
    }
    uint8_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    uint8_t lead() const;
    const std::vector<uint8_t>& coeffs() const { return c_; }

    friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
    FqPoly operator-() const;
    friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.F_ == b.F_ && a.c_ == b.c_; }

    // (quotient, remainder) with a = q*b + r, deg r < deg b.  Throws on b = 0.
    static std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b);
    friend FqPoly operator/(const FqPoly& a, const FqPoly& b) { return divrem(a, b).first; }
    friend FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divrem(a, b).second; }
    bool divides(const FqPoly& a) const;  // *this | a

    FqPoly monic() const;  // scale by lead^-1; zero stays zero
    static FqPoly gcd(FqPoly a, FqPoly b);  // monic gcd
    FqPoly pow(unsigned long long e) const;
    FqPoly powmod(BigInt e, const FqPoly& mod) const;
    FqPoly derivative() const;  // formal d/dT
    uint8_t eval(uint8_t x) const;
    // f(T)^(q^k): exponent spread T^i -> T^(i q^k); coefficients are fixed by x -> x^q.
    FqPoly qpow(unsigned k) const;

    // Canonical ordering: by degree, then coefficient indices from the top down.
    static int cmp(const FqPoly& a, const FqPoly& b);

    std::string to_string(const std::string& var = "T") const;
    static FqPoly parse(const Fq& F, const std::string& text, const std::string& var = "T");

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    static void check_same(const FqPoly& a, const FqPoly& b);

    const Fq* F_;
    std::vector<uint8_t> c_;
};

// A nonzero prime of A = F_q[T]: a monic irreducible generator.  The residue
// field k_l = F_q[T]/(l) has q_l = q^deg elements; v_l is normalized by
// v_l(a_l) = 1.
class PrimeOfA {
public:
    explicit PrimeOfA(FqPoly gen);  // validates monic + irreducible
    const FqPoly& gen() const { return gen_; }
    int degree() const { return deg_; }
    const Fq& field() const { return gen_.field(); }
    BigInt q_l() const;  // q^degree
    // Residue field parameters (p, n*degree); the concrete residue field is
    // built as an extension in extfield.hpp.
    uint32_t residue_p() const { return gen_.field().p(); }
    uint32_t residue_degree() const { return gen_.field().n() * uint32_t(deg_); }
    friend bool operator==(const PrimeOfA& a, const PrimeOfA& b) { return a.gen_ == b.gen_; }

private:
    FqPoly gen_;
    int deg_;
};

// --- free operations ---------------------------------------------------

// Largest k with l^k | f.  Throws on f = 0.
int valuation(const FqPoly& f, const PrimeOfA& l);
int valuation(const FqPoly& f, const FqPoly& l_gen);

bool is_irreducible(const FqPoly& f);

// Full factorization: monic irreducible factors with multiplicities, sorted
// canonically, plus the leading unit.  Distinct-degree split, then
// Cantor-Zassenhaus equal-degree split driven by a seeded PRNG.
struct Factorization {
    uint8_t unit;  // leading coefficient
    std::vector<std::pair<FqPoly, int>> factors;
};
Factorization factor(const FqPoly& f, uint64_t seed = 0x5eed0001u);

// Number of monic irreducibles of degree n: (1/n) sum_{d|n} mu(d) q^{n/d}.
BigInt count_irreducibles(const Fq& F, int n);
// All monic irreducibles of degree n in canonical order.
std::vector<FqPoly> enumerate_irreducibles(const Fq& F, int n);
// All primes of degree <= D in canonical order (degree, then lexicographic).
std::vector<PrimeOfA> primes_up_to_degree(const Fq& F, int D);

}  // namespace dfq

#endif
