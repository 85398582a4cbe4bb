#include "qcert/poly.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>

namespace qcert {

Polynomial Polynomial::constant(const Rational& r) {
    if (r.is_zero()) return Polynomial();
    return Polynomial(std::vector<Rational>{r});
}

Polynomial Polynomial::monomial(const Rational& coeff, int exp) {
    if (coeff.is_zero()) return Polynomial();
    std::vector<Rational> c(static_cast<size_t>(exp) + 1, Rational(0));
    c.back() = coeff;
    return Polynomial(std::move(c));
}

int Polynomial::nonzero_count() const {
    int n = 0;
    for (const auto& r : c_)
        if (!r.is_zero()) ++n;
    return n;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    // Schoolbook, iterating over the sparser operand.
    const Polynomial& outer = a.nonzero_count() <= b.nonzero_count() ? a : b;
    const Polynomial& inner = (&outer == &a) ? b : a;
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < outer.c_.size(); ++i) {
        if (outer.c_[i].is_zero()) continue;
        for (size_t j = 0; j < inner.c_.size(); ++j) {
            if (inner.c_[j].is_zero()) continue;
            r[i + j] += outer.c_[i] * inner.c_[j];
        }
    }
    return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const Rational& s) const {
    if (s.is_zero()) return Polynomial();
    Polynomial r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

Polynomial Polynomial::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> r(c_.size() + static_cast<size_t>(k), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::inflated(int d) const {
    if (is_zero() || d == 1) return *this;
    std::vector<Rational> r((c_.size() - 1) * d + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i * d] = c_[i];
    return Polynomial(std::move(r));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Rational Polynomial::content() const {
    if (is_zero()) return Rational(1);
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& r : c_) {
        if (r.is_zero()) continue;
        num_gcd = int_gcd(num_gcd, r.num());
        den_lcm = int_lcm(den_lcm, r.den());
    }
    return Rational(num_gcd, den_lcm);
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return *this;
    return scaled(content().inverse());
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (a.is_zero()) continue;
        Rational mag = a.abs();
        if (first) {
            if (a.sign() < 0) os << "-";
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        if (i == 0 || !mag.is_one()) os << mag.str();
        if (i > 0) {
            if (!mag.is_one()) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::vector<std::string> Polynomial::coeff_strings() const {
    std::vector<std::string> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x.str());
    return r;
}

std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw division_by_zero_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem(a.coeffs());
    int da = a.degree(), db = b.degree();
    std::vector<Rational> quot(static_cast<size_t>(da - db) + 1, Rational(0));
    Rational lb_inv = b.leading().inverse();
    for (int i = da; i >= db; --i) {
        if (rem[i].is_zero()) continue;
        Rational f = rem[i] * lb_inv;
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j) {
            const Rational& bc = b.coeff(j);
            if (!bc.is_zero()) rem[i - db + j] -= f * bc;
        }
    }
    rem.resize(db > 0 ? db : 0);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::optional<Polynomial> poly_divide_exact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

// ---------------------------------------------------------------------------
// Modular machinery: images of polynomials over Z_p for a word-size prime p,
// used to prove coprimality cheaply and to reconstruct gcds by CRT.
// ---------------------------------------------------------------------------
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __uint128_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

bool small_is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Fixed deterministic pool of 31-bit primes.
const std::vector<u64>& prime_pool() {
    static const std::vector<u64> pool = [] {
        std::vector<u64> v;
        for (u64 c = 2147483647ULL; v.size() < 64; c -= 2)
            if (small_is_prime(c)) v.push_back(c);
        return v;
    }();
    return pool;
}

using ZpPoly = std::vector<u64>; // coefficient i of x^i, trimmed

void zp_trim(ZpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

u64 mpz_mod_u64(const Integer& z, u64 p) {
    Integer r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

// Image of a rational-coefficient polynomial mod p; nullopt if some
// denominator vanishes mod p or the leading coefficient vanishes.
std::optional<ZpPoly> reduce_mod(const Polynomial& f, u64 p) {
    ZpPoly r(f.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) {
        const Rational& c = f.coeffs()[i];
        u64 d = mpz_mod_u64(c.den(), p);
        if (d == 0) return std::nullopt;
        r[i] = mulmod(mpz_mod_u64(c.num(), p), invmod(d, p), p);
    }
    if (!r.empty() && r.back() == 0) return std::nullopt; // degree dropped
    return r;
}

ZpPoly zp_rem(ZpPoly a, const ZpPoly& b, u64 p) {
    u64 ilb = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        u64 f = mulmod(a.back(), ilb, p);
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) {
            u64 t = mulmod(f, b[j], p);
            a[off + j] = (a[off + j] + p - t) % p;
        }
        zp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, u64 p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        ZpPoly r = zp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) { // monic
        u64 il = invmod(a.back(), p);
        for (auto& x : a) x = mulmod(x, il, p);
    }
    return a;
}

// Integer pseudo-remainder: lc(b)^(da-db+1) * a mod b, over integer polys
// given as mpz vectors.
using ZPoly = std::vector<Integer>;

void z_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly z_prem(ZPoly a, const ZPoly& b) {
    z_trim(a);
    int db = static_cast<int>(b.size()) - 1;
    const Integer& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        Integer la = a.back();
        size_t off = a.size() - b.size();
        for (auto& x : a) x *= lb;
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= la * b[j];
        z_trim(a);
    }
    return a;
}

ZPoly z_primitive(ZPoly f) {
    z_trim(f);
    if (f.empty()) return f;
    Integer g = 0;
    for (const auto& x : f) g = int_gcd(g, x);
    if (f.back() < 0) g = -g;
    for (auto& x : f) x /= g;
    return f;
}

ZPoly to_zpoly(const Polynomial& f) {
    Polynomial p = f.primitive_part();
    ZPoly r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.push_back(c.num()); // denominators are 1
    return r;
}

Polynomial from_zpoly(const ZPoly& f) {
    std::vector<Rational> c;
    c.reserve(f.size());
    for (const auto& x : f) c.emplace_back(x);
    return Polynomial(std::move(c));
}

// Primitive PRS; always correct, used as the fallback when modular
// reconstruction does not converge within the prime pool.
Polynomial gcd_prs(const Polynomial& a, const Polynomial& b) {
    ZPoly r0 = z_primitive(to_zpoly(a));
    ZPoly r1 = z_primitive(to_zpoly(b));
    if (r0.size() < r1.size()) std::swap(r0, r1);
    while (!r1.empty()) {
        ZPoly r2 = z_primitive(z_prem(r0, r1));
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return from_zpoly(r0).monic();
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero())
        throw division_by_zero_error("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Polynomial::one();

    // Integer primitive parts; gcd over Q equals gcd of these up to units.
    ZPoly az = to_zpoly(a), bz = to_zpoly(b);
    Integer lca = az.back(), lcb = bz.back();
    Integer glc = int_gcd(lca, lcb);

    // Modular images: deg gcd_p >= deg gcd, with equality for all but
    // finitely many primes. A constant image proves coprimality; otherwise
    // CRT-lift the images normalized to leading coefficient gcd(lc,lc) and
    // verify by exact division.
    int best_deg = -1;
    std::vector<Integer> crt;   // symmetric-range candidate, scaled to glc
    Integer crt_mod = 0;
    bool stable = false;

    for (u64 p : prime_pool()) {
        if (mpz_mod_u64(lca, p) == 0 || mpz_mod_u64(lcb, p) == 0) continue;
        ZpPoly ap(az.size()), bp(bz.size());
        for (size_t i = 0; i < az.size(); ++i) ap[i] = mpz_mod_u64(az[i], p);
        for (size_t i = 0; i < bz.size(); ++i) bp[i] = mpz_mod_u64(bz[i], p);
        ZpPoly gp = zp_gcd(ap, bp, p);
        int dg = static_cast<int>(gp.size()) - 1;
        if (dg == 0) return Polynomial::one();
        if (best_deg < 0 || dg < best_deg) {
            best_deg = dg;
            crt.assign(gp.size(), Integer(0));
            crt_mod = 0;
            stable = false;
        } else if (dg > best_deg) {
            continue; // unlucky prime
        }
        // normalize image to leading coefficient glc mod p
        u64 scale = mulmod(mpz_mod_u64(glc, p), invmod(gp.back(), p), p);
        bool changed = false;
        Integer new_mod = crt_mod == 0 ? Integer(static_cast<unsigned long>(p))
                                       : crt_mod * static_cast<unsigned long>(p);
        for (size_t i = 0; i < gp.size(); ++i) {
            u64 img = mulmod(gp[i], scale, p);
            Integer cur = crt[i];
            Integer next;
            if (crt_mod == 0) {
                next = Integer(static_cast<unsigned long>(img));
            } else {
                // next == cur (mod crt_mod), next == img (mod p)
                u64 cur_p = mpz_mod_u64(cur, p);
                u64 diff = (img + p - cur_p) % p;
                u64 minv = invmod(mpz_mod_u64(crt_mod, p), p);
                next = cur + crt_mod * static_cast<unsigned long>(mulmod(diff, minv, p));
            }
            // symmetric range
            if (2 * next > new_mod) next -= new_mod;
            if (2 * next <= -new_mod) next += new_mod;
            if (next != cur) changed = true;
            crt[i] = next;
        }
        crt_mod = new_mod;
        if (!changed && stable) {
            ZPoly cand(crt.begin(), crt.end());
            cand = z_primitive(cand);
            Polynomial C = from_zpoly(cand);
            if (poly_divide_exact(a, C) && poly_divide_exact(b, C)) return C.monic();
        }
        stable = !changed;
    }
    return gcd_prs(a, b);
}

ExtGcdResult poly_ext_gcd(const Polynomial& a, const Polynomial& m) {
    if (m.is_zero()) throw division_by_zero_error("ext_gcd with zero modulus");
    Polynomial r0 = a, r1 = m;
    Polynomial s0 = Polynomial::one(), s1 = Polynomial::zero();
    Polynomial t0 = Polynomial::zero(), t1 = Polynomial::one();
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) throw division_by_zero_error("ext_gcd of zero inputs");
    Rational lead = r0.leading();
    return {r0.monic(), s0.scaled(lead.inverse()), t0.scaled(lead.inverse())};
}

bool poly_coprime(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return false;
    if (a.degree() == 0 || b.degree() == 0) return true;
    int tried = 0;
    for (u64 p : prime_pool()) {
        auto ap = reduce_mod(a, p);
        auto bp = reduce_mod(b, p);
        if (!ap || !bp) continue;
        ZpPoly g = zp_gcd(*ap, *bp, p);
        if (g.size() == 1) return true; // proof: deg gcd_Q <= deg gcd_p = 0
        if (++tried >= 3) break;        // images look nontrivial; decide exactly
    }
    return poly_gcd(a, b).degree() == 0;
}

} // namespace qcert
