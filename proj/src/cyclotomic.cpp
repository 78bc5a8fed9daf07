#include "braidalg/cyclotomic.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "braidalg/errors.hpp"

namespace braidalg {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

// num = q*den + r with deg r < deg den; den must be nonzero.
void divmod(Poly num, const Poly& den, Poly& q, Poly& r) {
    q.assign(num.size() > den.size() ? num.size() - den.size() + 1 : 1, Rational(0));
    Rational lead = den.back();
    while (num.size() >= den.size() && !num.empty()) {
        Rational c = num.back() / lead;
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim(num);
        if (num.size() < den.size()) break;
    }
    trim(q);
    r = std::move(num);
    trim(r);
}

// Extended gcd over Q[x]: returns (g, s, t) with s*a + t*b = g, g monic.
void ext_gcd(Poly a, Poly b, Poly& g, Poly& s, Poly& t) {
    Poly s0 = {Rational(1)}, s1 = {};
    Poly t0 = {}, t1 = {Rational(1)};
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        Poly qs = mul(q, s1), qt = mul(q, t1);
        Poly ns = s0, nt = t0;
        ns.resize(std::max(ns.size(), qs.size()), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) ns[i] -= qs[i];
        nt.resize(std::max(nt.size(), qt.size()), Rational(0));
        for (size_t i = 0; i < qt.size(); ++i) nt[i] -= qt[i];
        trim(ns);
        trim(nt);
        s0 = std::move(s1);
        s1 = std::move(ns);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (a.empty()) throw NotInvertible("gcd of zero polynomials");
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : s0) c /= lead;
    for (auto& c : t0) c /= lead;
    g = std::move(a);
    s = std::move(s0);
    t = std::move(t0);
}

std::map<unsigned, Poly>& phi_cache() {
    static std::map<unsigned, Poly> cache;
    return cache;
}
std::mutex& phi_mutex() {
    static std::mutex m;
    return m;
}

// Phi_n via x^n - 1 = prod_{d | n} Phi_d.
const Poly& cyclotomic_poly(unsigned n) {
    std::lock_guard<std::mutex> lock(phi_mutex());
    auto& cache = phi_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<Poly(unsigned)> compute = [&](unsigned m) -> Poly {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        Poly num(m + 1, Rational(0));
        num[0] = Rational(-1);
        num[m] = Rational(1); // x^m - 1
        for (unsigned d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            Poly q, r;
            divmod(num, compute(d), q, r);
            num = std::move(q);
        }
        cache[m] = num;
        return num;
    };
    compute(n);
    return cache.at(n);
}

} // namespace

unsigned cyclotomic_degree(unsigned n) {
    return static_cast<unsigned>(cyclotomic_poly(n).size() - 1);
}

const std::vector<Rational>& Cyclotomic::phi(unsigned n) {
    return cyclotomic_poly(n);
}

void Cyclotomic::reduce() {
    const Poly& ph = phi(order_);
    trim(c_);
    if (c_.size() >= ph.size()) {
        Poly q, r;
        divmod(c_, ph, q, r);
        c_ = std::move(r);
    }
}

Cyclotomic Cyclotomic::rational(unsigned order, const Rational& r) {
    Cyclotomic x(order);
    if (r != 0) x.c_ = {r};
    x.reduce();
    return x;
}

Cyclotomic Cyclotomic::zeta_pow(unsigned order, long k) {
    long n = static_cast<long>(order);
    long e = ((k % n) + n) % n;
    Cyclotomic x(order);
    x.c_.assign(static_cast<size_t>(e) + 1, Rational(0));
    x.c_[static_cast<size_t>(e)] = Rational(1);
    x.reduce();
    return x;
}

bool Cyclotomic::is_zero() const {
    return c_.empty();
}

bool Cyclotomic::is_rational() const {
    return c_.size() <= 1;
}

Rational Cyclotomic::rational_value() const {
    if (c_.empty()) return Rational(0);
    if (c_.size() != 1) throw Error("cyclotomic value is not rational: " + str());
    return c_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (order_ != o.order_) {
        unsigned m = std::lcm(order_, o.order_);
        return embedded(m) + o.embedded(m);
    }
    Cyclotomic r(order_);
    r.c_ = c_;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    trim(r.c_);
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    return *this + (-o);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (order_ != o.order_) {
        unsigned m = std::lcm(order_, o.order_);
        return embedded(m) * o.embedded(m);
    }
    Cyclotomic r(order_);
    r.c_ = mul(c_, o.c_);
    r.reduce();
    return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (order_ != o.order_) {
        unsigned m = std::lcm(order_, o.order_);
        return embedded(m) == o.embedded(m);
    }
    return c_ == o.c_;
}

Cyclotomic Cyclotomic::conj() const {
    // zeta^k -> zeta^{N-k}; exponents first reduced mod N using zeta^N = 1.
    Cyclotomic r(order_);
    r.c_.assign(order_, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        size_t e = (order_ - (k % order_)) % order_;
        r.c_[e] += c_[k];
    }
    r.reduce();
    return r;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw NotInvertible("division by zero cyclotomic");
    Poly g, s, t;
    ext_gcd(phi(order_), c_, g, s, t);
    if (g.size() != 1) throw NotInvertible("element not invertible mod Phi_N");
    // t * c_ == g == 1 (after monic normalization g = [1])
    Cyclotomic r(order_);
    r.c_ = t;
    for (auto& c : r.c_) c /= g[0];
    r.reduce();
    return r;
}

Cyclotomic Cyclotomic::pow(long k) const {
    Cyclotomic base = k < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    Cyclotomic acc = Cyclotomic::rational(order_, Rational(1));
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Cyclotomic Cyclotomic::embedded(unsigned new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
        throw Error("cyclotomic re-embedding requires divisible orders");
    unsigned step = new_order / order_;
    Cyclotomic r(new_order);
    r.c_.assign(static_cast<size_t>(new_order), Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        size_t e = (k * step) % new_order;
        r.c_[e] += c_[k];
    }
    r.reduce();
    return r;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        double arg = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
        acc += c_[k].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return acc;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        Rational c = c_[k];
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool coeff_one = (c == 1);
        if (k == 0) {
            out << c.get_str();
        } else {
            if (!coeff_one) out << c.get_str() << "*";
            out << "zeta(" << order_ << ")";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

} // namespace braidalg
