#include "dfq/gfq.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace dfq {

namespace {

// Fixed moduli (Conway polynomials), ascending coefficients over F_p.
// Reproducible canonical representations for every supported q.
const std::map<uint32_t, FieldSpec> kFieldTable = {
    {3, {3, 1, 3, {1, 1}}},           // w + 1        (w = -1 is primitive? see note below)
    {5, {5, 1, 5, {3, 1}}},           // w + 3
    {7, {7, 1, 7, {4, 1}}},           // w + 4
    {9, {3, 2, 9, {2, 2, 1}}},        // w^2 + 2w + 2
    {25, {5, 2, 25, {2, 4, 1}}},      // w^2 + 4w + 2
    {27, {3, 3, 27, {1, 2, 0, 1}}},   // w^3 + 2w + 1
};

bool prime_modulus_irreducible(const FieldSpec& s) {
    // Degree <= 3 over F_p: irreducible iff no root in F_p.
    if (s.n == 1) return true;
    for (uint32_t x = 0; x < s.p; ++x) {
        uint64_t acc = 0, xp = 1;
        for (uint32_t i = 0; i <= s.n; ++i) {
            acc = (acc + uint64_t(s.modulus[i]) * xp) % s.p;
            xp = (xp * x) % s.p;
        }
        if (acc == 0) return false;
    }
    return true;
}

}  // namespace

Fq::Fq(FieldSpec spec) : spec_(std::move(spec)) {
    if (spec_.p % 2 == 0 || spec_.p < 3) throw std::invalid_argument("Fq: p must be an odd prime");
    if (!prime_modulus_irreducible(spec_))
        throw std::invalid_argument("Fq: modulus is reducible over F_p");
    const uint32_t q = spec_.q, p = spec_.p, n = spec_.n;
    add_.resize(size_t(q) * q);
    mul_.resize(size_t(q) * q);
    neg_.resize(q);
    inv_.assign(q, 0);

    // digits of index a in base p = coefficients in the power basis of w
    auto dig = [&](uint32_t a) {
        std::vector<uint32_t> d(n);
        for (uint32_t i = 0; i < n; ++i) { d[i] = a % p; a /= p; }
        return d;
    };
    auto undig = [&](const std::vector<uint32_t>& d) {
        uint32_t a = 0;
        for (uint32_t i = n; i-- > 0;) a = a * p + d[i];
        return a;
    };

    for (uint32_t a = 0; a < q; ++a) {
        auto da = dig(a);
        std::vector<uint32_t> dn(n);
        for (uint32_t i = 0; i < n; ++i) dn[i] = (p - da[i]) % p;
        neg_[a] = uint8_t(undig(dn));
        for (uint32_t b = 0; b < q; ++b) {
            auto db = dig(b);
            std::vector<uint32_t> ds(n);
            for (uint32_t i = 0; i < n; ++i) ds[i] = (da[i] + db[i]) % p;
            add_[idx(uint8_t(a), uint8_t(b))] = uint8_t(undig(ds));
            // multiply then reduce by modulus
            std::vector<uint32_t> prod(2 * n - 1, 0);
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = 0; j < n; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            for (uint32_t k = 2 * n - 1; k-- > n;) {
                uint32_t c = prod[k];
                if (c == 0) continue;
                prod[k] = 0;
                // T^k = T^(k-n) * (T^n), T^n = -modulus[0..n-1]
                for (uint32_t i = 0; i < n; ++i) {
                    uint32_t m = spec_.modulus[i];
                    prod[k - n + i] = (prod[k - n + i] + c * ((p - m) % p)) % p;
                }
            }
            std::vector<uint32_t> pr(prod.begin(), prod.begin() + n);
            mul_[idx(uint8_t(a), uint8_t(b))] = uint8_t(undig(pr));
        }
    }
    for (uint32_t a = 1; a < q; ++a)
        for (uint32_t b = 1; b < q; ++b)
            if (mul_[idx(uint8_t(a), uint8_t(b))] == 1) { inv_[a] = uint8_t(b); break; }
    // smallest multiplicative generator in index order
    for (uint32_t a = 2; a < q; ++a)
        if (mult_order(uint8_t(a)) == q - 1) { gen_ = uint8_t(a); break; }
}

const Fq& Fq::get(uint32_t q) {
    static std::map<uint32_t, Fq>* cache = new std::map<uint32_t, Fq>();
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache->find(q);
    if (it == cache->end()) {
        auto spec_it = kFieldTable.find(q);
        if (spec_it == kFieldTable.end())
            throw std::invalid_argument("Fq::get: unsupported q = " + std::to_string(q) +
                                        " (supported: 3, 5, 7, 9, 25, 27)");
        it = cache->emplace(q, Fq(spec_it->second)).first;
    }
    return it->second;
}

uint8_t Fq::inv(uint8_t a) const {
    if (a == 0) throw std::domain_error("Fq: inverse of zero");
    return inv_[a];
}

uint8_t Fq::pow(uint8_t a, long long e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("Fq: inverse of zero");
        return e == 0 ? 1 : 0;
    }
    long long m = e % (long long)(spec_.q - 1);
    if (m < 0) m += spec_.q - 1;
    uint8_t r = 1, base = a;
    while (m) {
        if (m & 1) r = mul(r, base);
        base = mul(base, base);
        m >>= 1;
    }
    return r;
}

uint32_t Fq::mult_order(uint8_t a) const {
    if (a == 0) throw std::domain_error("Fq: order of zero");
    uint32_t k = 1;
    uint8_t x = a;
    while (x != 1) { x = mul(x, a); ++k; }
    return k;
}

std::vector<uint8_t> Fq::digits(uint8_t a) const {
    std::vector<uint8_t> d(spec_.n);
    uint32_t v = a;
    for (uint32_t i = 0; i < spec_.n; ++i) { d[i] = uint8_t(v % spec_.p); v /= spec_.p; }
    return d;
}

uint8_t Fq::from_digits(const std::vector<uint8_t>& d) const {
    if (d.size() != spec_.n) throw std::invalid_argument("Fq: digit vector must have length n");
    uint32_t a = 0;
    for (uint32_t i = spec_.n; i-- > 0;) {
        if (d[i] >= spec_.p) throw std::invalid_argument("Fq: digit out of range");
        a = a * spec_.p + d[i];
    }
    return uint8_t(a);
}

uint8_t Fq::from_int(long long v) const {
    long long m = v % (long long)spec_.p;
    if (m < 0) m += spec_.p;
    return uint8_t(m);
}

std::string Fq::to_string(uint8_t a) const {
    if (spec_.n == 1) return std::to_string(a);
    auto d = digits(a);
    std::string out;
    for (uint32_t i = spec_.n; i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) { out += std::to_string(d[i]); continue; }
        if (d[i] != 1) { out += std::to_string(d[i]); out += '*'; }
        out += 'w';
        if (i > 1) { out += '^'; out += std::to_string(i); }
    }
    return out.empty() ? "0" : out;
}

uint8_t Fq::parse_elem(const std::string& s) const {
    std::string t;
    for (char c : s) if (!std::isspace((unsigned char)c)) t += c;
    if (t.empty()) throw std::invalid_argument("Fq: empty element");
    uint8_t acc = 0;
    size_t i = 0;
    bool neg = false;
    if (t[0] == '+' || t[0] == '-') { neg = t[0] == '-'; i = 1; }
    while (i <= t.size()) {
        size_t j = i;
        while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
        std::string term = t.substr(i, j - i);
        if (term.empty()) throw std::invalid_argument("Fq: bad element '" + s + "'");
        // term: digits | digits*w[^k] | w[^k]
        long long coef = 1;
        size_t wpos = term.find('w');
        std::string numpart = wpos == std::string::npos ? term : term.substr(0, wpos);
        if (!numpart.empty() && numpart.back() == '*') numpart.pop_back();
        if (!numpart.empty()) coef = std::stoll(numpart);
        uint32_t expo = 0;
        if (wpos != std::string::npos) {
            expo = 1;
            size_t caret = term.find('^', wpos);
            if (caret != std::string::npos) expo = uint32_t(std::stoul(term.substr(caret + 1)));
        }
        if (expo >= spec_.n && !(expo == 0))
            throw std::invalid_argument("Fq: exponent of w too large in '" + s + "'");
        std::vector<uint8_t> d(spec_.n, 0);
        long long cm = coef % (long long)spec_.p;
        if (cm < 0) cm += spec_.p;
        d[expo] = uint8_t(cm);
        uint8_t val = from_digits(d);
        if (neg) val = this->neg(val);
        acc = add(acc, val);
        if (j == t.size()) break;
        neg = t[j] == '-';
        i = j + 1;
    }
    return acc;
}

// --- FqPoly --------------------------------------------------------------

FqPoly FqPoly::constant(const Fq& F, uint8_t v) {
    FqPoly r(F);
    if (v) r.c_ = {v};
    return r;
}

FqPoly FqPoly::variable(const Fq& F) {
    FqPoly r(F);
    r.c_ = {0, 1};
    return r;
}

FqPoly FqPoly::monomial(const Fq& F, uint8_t c, size_t k) {
    FqPoly r(F);
    if (c) {
        r.c_.assign(k + 1, 0);
        r.c_[k] = c;
    }
    return r;
}

const Fq& FqPoly::field() const {
    if (!F_) throw std::logic_error("FqPoly: no field attached");
    return *F_;
}

uint8_t FqPoly::lead() const {
    if (c_.empty()) throw std::domain_error("FqPoly: leading coefficient of zero");
    return c_.back();
}

void FqPoly::check_same(const FqPoly& a, const FqPoly& b) {
    if (a.F_ != b.F_) throw std::invalid_argument("FqPoly: field mismatch");
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
    FqPoly::check_same(a, b);
    const Fq& F = a.field();
    FqPoly r(F);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F.add(a.coeff(i), b.coeff(i));
    r.normalize();
    return r;
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
    FqPoly::check_same(a, b);
    const Fq& F = a.field();
    FqPoly r(F);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F.sub(a.coeff(i), b.coeff(i));
    r.normalize();
    return r;
}

FqPoly FqPoly::operator-() const {
    FqPoly r(*this);
    for (auto& x : r.c_) x = F_->neg(x);
    return r;
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    FqPoly::check_same(a, b);
    const Fq& F = a.field();
    FqPoly r(F);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = F.add(r.c_[i + j], F.mul(a.c_[i], b.c_[j]));
    }
    r.normalize();
    return r;
}

std::pair<FqPoly, FqPoly> FqPoly::divrem(const FqPoly& a, const FqPoly& b) {
    check_same(a, b);
    if (b.is_zero()) throw std::domain_error("FqPoly: division by zero polynomial");
    const Fq& F = a.field();
    FqPoly q(F), r = a;
    if (a.c_.size() < b.c_.size()) return {q, r};
    q.c_.assign(a.c_.size() - b.c_.size() + 1, 0);
    uint8_t binv = F.inv(b.lead());
    while (!r.c_.empty() && r.c_.size() >= b.c_.size()) {
        size_t k = r.c_.size() - b.c_.size();
        uint8_t f = F.mul(r.c_.back(), binv);
        q.c_[k] = f;
        for (size_t i = 0; i < b.c_.size(); ++i)
            r.c_[i + k] = F.sub(r.c_[i + k], F.mul(f, b.c_[i]));
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

bool FqPoly::divides(const FqPoly& a) const { return divrem(a, *this).second.is_zero(); }

FqPoly FqPoly::monic() const {
    if (is_zero()) return *this;
    const Fq& F = field();
    uint8_t s = F.inv(lead());
    FqPoly r(*this);
    for (auto& x : r.c_) x = F.mul(x, s);
    return r;
}

FqPoly FqPoly::gcd(FqPoly a, FqPoly b) {
    check_same(a, b);
    while (!b.is_zero()) {
        FqPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FqPoly FqPoly::pow(unsigned long long e) const {
    FqPoly r = FqPoly::constant(field(), 1), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FqPoly FqPoly::powmod(BigInt e, const FqPoly& mod) const {
    if (e < 0) throw std::invalid_argument("FqPoly::powmod: negative exponent");
    FqPoly r = FqPoly::constant(field(), 1) % mod, base = *this % mod;
    while (e > 0) {
        if ((e & 1) != 0) r = (r * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return r;
}

FqPoly FqPoly::derivative() const {
    const Fq& F = field();
    FqPoly r(F);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        uint8_t k = F.from_int((long long)(i % F.p()));
        r.c_[i - 1] = F.mul(c_[i], k);
    }
    r.normalize();
    return r;
}

uint8_t FqPoly::eval(uint8_t x) const {
    const Fq& F = field();
    uint8_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c_[i]);
    return acc;
}

FqPoly FqPoly::qpow(unsigned k) const {
    // coefficients lie in F_q, so only exponents spread: T^i -> T^(i*q^k)
    if (k == 0 || is_zero()) return *this;
    const Fq& F = field();
    unsigned long long step = 1;
    for (unsigned i = 0; i < k; ++i) step *= F.q();
    FqPoly r(F);
    r.c_.assign((c_.size() - 1) * step + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * step] = c_[i];
    return r;
}

int FqPoly::cmp(const FqPoly& a, const FqPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
    for (size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
    }
    return 0;
}

std::string FqPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    const Fq& F = field();
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        uint8_t c = c_[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        std::string cs = F.to_string(c);
        bool composite = cs.find('+') != std::string::npos || cs.find('w') != std::string::npos;
        if (i == 0) {
            out += composite ? "(" + cs + ")" : cs;
            continue;
        }
        if (c != 1) {
            out += composite ? "(" + cs + ")" : cs;
            out += '*';
        }
        out += var;
        if (i > 1) { out += '^'; out += std::to_string(i); }
    }
    return out;
}

FqPoly FqPoly::parse(const Fq& F, const std::string& text, const std::string& var) {
    std::string t;
    for (char c : text) if (!std::isspace((unsigned char)c)) t += c;
    if (t.empty()) throw std::invalid_argument("FqPoly: empty input");
    FqPoly acc(F);
    size_t i = 0;
    bool neg = false;
    if (t[0] == '+' || t[0] == '-') { neg = t[0] == '-'; i = 1; }
    while (i <= t.size()) {
        // find end of term at top level (outside parens)
        size_t j = i;
        int depth = 0;
        while (j < t.size()) {
            char c = t[j];
            if (c == '(') ++depth;
            else if (c == ')') --depth;
            else if ((c == '+' || c == '-') && depth == 0) break;
            ++j;
        }
        if (depth != 0) throw std::invalid_argument("FqPoly: unbalanced parens in '" + text + "'");
        std::string term = t.substr(i, j - i);
        if (term.empty()) throw std::invalid_argument("FqPoly: empty term in '" + text + "'");
        // split term into coefficient part and variable part
        uint8_t coef = 1;
        size_t vpos = term.find(var);
        // guard: the coefficient letter 'w' must not be confused with var
        std::string cpart = vpos == std::string::npos ? term : term.substr(0, vpos);
        std::string vpart = vpos == std::string::npos ? "" : term.substr(vpos);
        if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
        if (!cpart.empty()) {
            if (cpart.front() == '(') {
                if (cpart.back() != ')') throw std::invalid_argument("FqPoly: bad coefficient in '" + text + "'");
                coef = F.parse_elem(cpart.substr(1, cpart.size() - 2));
            } else {
                coef = F.parse_elem(cpart);
            }
        }
        size_t expo = 0;
        if (!vpart.empty()) {
            expo = 1;
            if (vpart.size() > var.size()) {
                if (vpart[var.size()] != '^')
                    throw std::invalid_argument("FqPoly: bad monomial '" + term + "'");
                expo = std::stoul(vpart.substr(var.size() + 1));
            }
        }
        FqPoly mono = FqPoly::monomial(F, coef, expo);
        acc = neg ? acc - mono : acc + mono;
        if (j == t.size()) break;
        neg = t[j] == '-';
        i = j + 1;
    }
    return acc;
}

// --- PrimeOfA ------------------------------------------------------------

PrimeOfA::PrimeOfA(FqPoly gen) : gen_(std::move(gen)) {
    if (!gen_.is_monic() || !gen_.deg() || *gen_.deg() < 1)
        throw std::invalid_argument("PrimeOfA: generator must be monic of degree >= 1");
    if (!is_irreducible(gen_)) throw std::invalid_argument("PrimeOfA: generator is reducible");
    deg_ = *gen_.deg();
}

BigInt PrimeOfA::q_l() const {
    BigInt r = 1;
    for (int i = 0; i < deg_; ++i) r *= gen_.field().q();
    return r;
}

// --- operations ----------------------------------------------------------

int valuation(const FqPoly& f, const FqPoly& l_gen) {
    if (f.is_zero()) throw std::domain_error("valuation: zero polynomial");
    int v = 0;
    FqPoly cur = f;
    while (true) {
        auto [q, r] = FqPoly::divrem(cur, l_gen);
        if (!r.is_zero()) break;
        ++v;
        cur = q;
    }
    return v;
}

int valuation(const FqPoly& f, const PrimeOfA& l) { return valuation(f, l.gen()); }

bool is_irreducible(const FqPoly& f) {
    auto d = f.deg();
    if (!d || *d < 1) return false;
    int n = *d;
    const Fq& F = f.field();
    FqPoly fm = f.monic();
    FqPoly x = FqPoly::variable(F);
    // Rabin: x^(q^n) == x mod f, and gcd(x^(q^(n/t)) - x, f) = 1 for prime t | n
    BigInt qn = 1;
    for (int i = 0; i < n; ++i) qn *= F.q();
    FqPoly xq = x.powmod(qn, fm);
    if (!(xq - (x % fm)).is_zero()) return false;
    for (int t = 2; t <= n; ++t) {
        if (n % t) continue;
        bool t_prime = true;
        for (int u = 2; u * u <= t; ++u) if (t % u == 0) { t_prime = false; break; }
        if (!t_prime) continue;
        BigInt e = 1;
        for (int i = 0; i < n / t; ++i) e *= F.q();
        FqPoly g = FqPoly::gcd(x.powmod(e, fm) - (x % fm), fm);
        if (!(g.deg() && *g.deg() == 0)) return false;
    }
    return true;
}

namespace {

// x^(q^k) mod f, iterated q-th powers
FqPoly frob_power_mod(const FqPoly& f, int k) {
    const Fq& F = f.field();
    FqPoly x = FqPoly::variable(F) % f;
    FqPoly r = x;
    for (int i = 0; i < k; ++i) r = r.powmod(F.q(), f);
    return r;
}

// Cantor-Zassenhaus: split a monic squarefree product of irreducibles of
// equal degree d into its factors.
void equal_degree_split(const FqPoly& f, int d, std::mt19937_64& rng,
                        std::vector<FqPoly>& out) {
    const Fq& F = f.field();
    int n = *f.deg();
    if (n == d) {
        out.push_back(f);
        return;
    }
    BigInt qd = 1;
    for (int i = 0; i < d; ++i) qd *= F.q();
    BigInt e = (qd - 1) / 2;
    while (true) {
        // random nonzero h of degree < n
        FqPoly h(F);
        {
            std::vector<uint8_t> c(n);
            for (auto& x : c) x = uint8_t(rng() % F.q());
            h = FqPoly(F, std::move(c));
        }
        if (h.is_zero() || (h.deg() && *h.deg() == 0)) continue;
        FqPoly g = FqPoly::gcd(h, f);
        if (g.deg() && *g.deg() > 0 && *g.deg() < n) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f / g, d, rng, out);
            return;
        }
        FqPoly hp = h.powmod(e, f) - FqPoly::constant(F, 1);
        g = FqPoly::gcd(hp, f);
        if (g.deg() && *g.deg() > 0 && *g.deg() < n) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f / g, d, rng, out);
            return;
        }
    }
}

// p-th root of f when f'(T) = 0, i.e. f in F_q[T^p]: coefficients map by
// c -> c^(q/p).
FqPoly pth_root(const FqPoly& f) {
    const Fq& F = f.field();
    uint32_t p = F.p();
    long long e = 1;
    for (uint32_t i = 1; i < F.n(); ++i) e *= F.p();  // q/p
    std::vector<uint8_t> c((f.coeffs().size() - 1) / p + 1, 0);
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        if (i % p) throw std::logic_error("pth_root: polynomial not in F_q[T^p]");
        c[i / p] = F.pow(f.coeffs()[i], e);
    }
    return FqPoly(F, std::move(c));
}

void factor_squarefree_monic(const FqPoly& f, std::mt19937_64& rng,
                             std::vector<FqPoly>& out) {
    const Fq& F = f.field();
    FqPoly rem = f;
    FqPoly x = FqPoly::variable(F);
    int d = 0;
    while (rem.deg() && *rem.deg() > 0) {
        ++d;
        if (2 * d > *rem.deg()) {
            out.push_back(rem);
            break;
        }
        FqPoly xqd = frob_power_mod(rem, d);
        FqPoly g = FqPoly::gcd(xqd - (x % rem), rem);
        if (g.deg() && *g.deg() > 0) {
            equal_degree_split(g, d, rng, out);
            rem = rem / g;
        }
    }
}

}  // namespace

Factorization factor(const FqPoly& f, uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
    const Fq& F = f.field();
    Factorization result;
    result.unit = f.lead();
    FqPoly work = f.monic();
    if (*work.deg() == 0) return result;

    std::mt19937_64 rng(seed);
    // peel off squarefree layers: rad = work / gcd(work, work')
    std::vector<FqPoly> irreds;
    {
        FqPoly cur = work;
        while (cur.deg() && *cur.deg() > 0) {
            FqPoly der = cur.derivative();
            if (der.is_zero()) {
                cur = pth_root(cur);
                continue;
            }
            FqPoly g = FqPoly::gcd(cur, der);
            FqPoly rad = cur / g;
            std::vector<FqPoly> part;
            factor_squarefree_monic(rad, rng, part);
            for (auto& p : part) irreds.push_back(p);
            // strip every occurrence of the radical's factors and continue
            for (auto& p : part) {
                while (p.divides(cur)) cur = cur / p;
            }
        }
    }
    std::sort(irreds.begin(), irreds.end(),
              [](const FqPoly& a, const FqPoly& b) { return FqPoly::cmp(a, b) < 0; });
    irreds.erase(std::unique(irreds.begin(), irreds.end()), irreds.end());
    for (const auto& p : irreds) {
        int m = 0;
        FqPoly cur = work;
        while (p.divides(cur)) { cur = cur / p; ++m; }
        result.factors.emplace_back(p, m);
    }
    // sanity: product reproduces the input
    FqPoly check = FqPoly::constant(F, result.unit);
    for (auto& [p, m] : result.factors) check = check * p.pow(m);
    if (!(check == f)) throw std::logic_error("factor: internal consistency failure");
    return result;
}

BigInt count_irreducibles(const Fq& F, int n) {
    if (n < 1) throw std::invalid_argument("count_irreducibles: n >= 1 required");
    auto mu = [](int m) {
        int res = 1;
        for (int p = 2; p <= m; ++p) {
            if (m % p == 0) {
                int e = 0;
                while (m % p == 0) { m /= p; ++e; }
                if (e > 1) return 0;
                res = -res;
            }
        }
        return res;
    };
    BigInt s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        int m = mu(d);
        if (m == 0) continue;
        BigInt qe = 1;
        for (int i = 0; i < n / d; ++i) qe *= F.q();
        s += m * qe;
    }
    return s / n;
}

std::vector<FqPoly> enumerate_irreducibles(const Fq& F, int n) {
    if (n < 1) throw std::invalid_argument("enumerate_irreducibles: n >= 1 required");
    std::vector<FqPoly> out;
    // iterate lower coefficients in canonical (index-lex) order
    std::vector<uint8_t> c(n + 1, 0);
    c[n] = 1;
    while (true) {
        FqPoly f(F, c);
        if (is_irreducible(f)) out.push_back(f);
        // canonical order compares coefficients from the top down, so the
        // constant term varies fastest
        int i = 0;
        while (i < n) {
            if (++c[i] < F.q()) break;
            c[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return out;
}

std::vector<PrimeOfA> primes_up_to_degree(const Fq& F, int D) {
    std::vector<PrimeOfA> out;
    for (int d = 1; d <= D; ++d)
        for (auto& f : enumerate_irreducibles(F, d)) out.emplace_back(f);
    return out;
}

}  // namespace dfq
