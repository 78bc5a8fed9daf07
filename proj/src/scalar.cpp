#include "braidalg/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "braidalg/errors.hpp"

namespace braidalg {

std::optional<size_t> ScalarRingSpec::find_var(const std::string& name) const {
    for (size_t i = 0; i < unitary.size(); ++i)
        if (unitary[i] == name) return i;
    for (size_t i = 0; i < positive.size(); ++i)
        if (positive[i] == name) return unitary.size() + i;
    return std::nullopt;
}

ScalarRingPtr make_ring(unsigned zeta_order, std::vector<std::string> unitary,
                        std::vector<std::string> positive) {
    auto spec = std::make_shared<ScalarRingSpec>();
    spec->zeta_order = zeta_order == 0 ? 1 : zeta_order;
    spec->unitary = std::move(unitary);
    spec->positive = std::move(positive);
    for (size_t i = 0; i < spec->var_count(); ++i)
        for (size_t j = i + 1; j < spec->var_count(); ++j)
            if (spec->var_name(i) == spec->var_name(j))
                throw Error("duplicate formal variable name: " + spec->var_name(i));
    return spec;
}

void Scalar::check_ring(const Scalar& o) const {
    if (!ring_ || !o.ring_) throw RingMismatch("scalar without ring spec");
    if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
        throw RingMismatch("scalars belong to different ring specs");
}

void Scalar::add_term(const ExpVec& e, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar Scalar::one(const ScalarRingPtr& ring) {
    return from_rational(ring, Rational(1));
}

Scalar Scalar::from_rational(const ScalarRingPtr& ring, const Rational& r) {
    Scalar s(ring);
    if (r != 0) s.terms_.emplace(ExpVec(ring->var_count(), 0), Cyclotomic::rational(ring->zeta_order, r));
    return s;
}

Scalar Scalar::from_cyclotomic(const ScalarRingPtr& ring, const Cyclotomic& c) {
    Scalar s(ring);
    if (!c.is_zero()) s.terms_.emplace(ExpVec(ring->var_count(), 0), c.embedded(ring->zeta_order));
    return s;
}

Scalar Scalar::zeta_pow(const ScalarRingPtr& ring, long k) {
    return from_cyclotomic(ring, Cyclotomic::zeta_pow(ring->zeta_order, k));
}

Scalar Scalar::variable(const ScalarRingPtr& ring, const std::string& name, int32_t exp) {
    auto idx = ring->find_var(name);
    if (!idx) throw Error("unknown formal variable: " + name);
    return variable(ring, *idx, exp);
}

Scalar Scalar::variable(const ScalarRingPtr& ring, size_t idx, int32_t exp) {
    Scalar s(ring);
    ExpVec e(ring->var_count(), 0);
    e.at(idx) = exp;
    s.terms_.emplace(std::move(e), Cyclotomic::rational(ring->zeta_order, Rational(1)));
    return s;
}

bool Scalar::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; }) &&
           c.is_rational() && c.rational_value() == 1;
}

bool Scalar::is_unitary_monomial() const {
    if (!is_monomial()) return false;
    return (*this * conj()).is_one();
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_ring(o);
    Scalar r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    return *this + (-o);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_ring(o);
    Scalar r(ring_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e = e1;
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check_ring(o);
    return terms_ == o.terms_;
}

Scalar Scalar::conj() const {
    Scalar r(ring_);
    size_t nu = ring_->unitary.size();
    for (const auto& [e, c] : terms_) {
        ExpVec f = e;
        for (size_t i = 0; i < nu; ++i) f[i] = -f[i];
        r.add_term(f, c.conj());
    }
    return r;
}

Scalar Scalar::invert() const {
    if (terms_.size() != 1)
        throw NotInvertible("scalar with " + std::to_string(terms_.size()) +
                            " terms is not invertible: " + str());
    const auto& [e, c] = *terms_.begin();
    Scalar r(ring_);
    ExpVec f = e;
    for (auto& x : f) x = -x;
    r.terms_.emplace(std::move(f), c.inverse());
    return r;
}

Scalar Scalar::pow(long k) const {
    Scalar base = k < 0 ? invert() : *this;
    unsigned long n = static_cast<unsigned long>(k < 0 ? -k : k);
    Scalar acc = one(ring_);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::optional<Scalar> Scalar::try_divide(const Scalar& b) const {
    check_ring(b);
    if (b.is_zero()) return std::nullopt;
    if (b.is_monomial()) return *this * b.invert();
    // Long division by the lex-largest term of b; exact iff remainder empties.
    Scalar rem = *this;
    Scalar quot(ring_);
    auto lead = *b.terms_.rbegin();
    size_t guard = 4096;
    while (!rem.is_zero()) {
        if (guard-- == 0) return std::nullopt;
        auto rl = *rem.terms_.rbegin();
        ExpVec e = rl.first;
        for (size_t i = 0; i < e.size(); ++i) e[i] -= lead.first[i];
        Cyclotomic c = rl.second * lead.second.inverse();
        Scalar t(ring_);
        t.terms_.emplace(e, c);
        // In a Laurent ring the lead term always divides, so exactness shows
        // up as the remainder reaching zero before the degree stops dropping.
        Scalar next = rem - t * b;
        if (!next.is_zero() && !(next.terms_.rbegin()->first < rl.first)) return std::nullopt;
        quot = quot + t;
        rem = std::move(next);
    }
    return quot;
}

Scalar Scalar::substitute_power(size_t var_idx, int32_t k, const Scalar& value) const {
    Scalar r(ring_);
    for (const auto& [e, c] : terms_) {
        int32_t exp = e.at(var_idx);
        int32_t q = exp >= 0 ? exp / k : -((-exp + k - 1) / k);
        int32_t rr = exp - q * k;
        ExpVec f = e;
        f[var_idx] = rr;
        Scalar t(ring_);
        t.terms_.emplace(std::move(f), c);
        r = r + t * value.pow(q);
    }
    return r;
}

Scalar Scalar::substitute(size_t var_idx, const Scalar& value) const {
    Scalar r(ring_);
    for (const auto& [e, c] : terms_) {
        ExpVec f = e;
        int32_t exp = f[var_idx];
        f[var_idx] = 0;
        Scalar t(ring_);
        t.terms_.emplace(std::move(f), c);
        r = r + t * value.pow(exp);
    }
    return r;
}

Scalar Scalar::reringed(const ScalarRingPtr& new_ring) const {
    std::vector<size_t> where(ring_->var_count());
    for (size_t i = 0; i < ring_->var_count(); ++i) {
        auto idx = new_ring->find_var(ring_->var_name(i));
        if (!idx) throw RingMismatch("variable missing in target ring: " + ring_->var_name(i));
        bool was_unitary = ring_->is_unitary_var(i);
        if (was_unitary != new_ring->is_unitary_var(*idx))
            throw RingMismatch("variable kind changed in target ring: " + ring_->var_name(i));
        where[i] = *idx;
    }
    Scalar r(new_ring);
    for (const auto& [e, c] : terms_) {
        ExpVec f(new_ring->var_count(), 0);
        for (size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
        r.add_term(f, c.embedded(new_ring->zeta_order));
    }
    return r;
}

std::complex<double> Scalar::eval(const std::map<std::string, std::complex<double>>& vars) const {
    std::complex<double> acc(0, 0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = vars.find(ring_->var_name(i));
            if (it == vars.end()) throw Error("no numeric value for variable " + ring_->var_name(i));
            t *= std::pow(it->second, e[i]);
        }
        acc += t;
    }
    return acc;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string coeff = c.str();
        bool negated = false;
        if (first) {
            first = false;
        } else {
            if (!coeff.empty() && coeff[0] == '-' && c.is_rational()) {
                out << " - ";
                coeff = (-c).str();
                negated = true;
            } else {
                out << " + ";
            }
        }
        (void)negated;
        bool has_vars = std::any_of(e.begin(), e.end(), [](int32_t x) { return x != 0; });
        bool coeff_is_one = c.is_rational() && c.rational_value() == 1;
        bool coeff_needs_parens = c.coeffs().size() > 1 || (!c.is_rational());
        if (!has_vars) {
            out << (coeff_needs_parens ? "(" + coeff + ")" : coeff);
            continue;
        }
        if (!coeff_is_one) {
            out << (coeff_needs_parens ? "(" + coeff + ")" : coeff) << "*";
        }
        bool firstv = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!firstv) out << "*";
            firstv = false;
            out << ring_->var_name(i);
            if (e[i] != 1) out << "^" << e[i];
        }
    }
    return out.str();
}

// --- scalar expression parser -------------------------------------------

namespace {

struct ScalarParser {
    const ScalarRingPtr& ring;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("scalar parse error at position " + std::to_string(pos) + ": " + msg +
                         " in \"" + s + "\"");
    }

    long parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    Scalar parse_expr() {
        Scalar acc = parse_term();
        for (;;) {
            skip_ws();
            if (eat('+')) {
                acc = acc + parse_term();
            } else if (eat('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Scalar parse_term() {
        Scalar acc = parse_factor();
        for (;;) {
            skip_ws();
            if (pos >= s.size()) return acc;
            char c = s[pos];
            if (c == '*') {
                ++pos;
                acc = acc * parse_factor();
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    Scalar parse_factor() {
        Scalar base = parse_primary();
        skip_ws();
        if (eat('^')) {
            long e = parse_int();
            return base.pow(e);
        }
        return base;
    }

    Scalar parse_primary() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Scalar inner = parse_expr();
            if (!eat(')')) fail("expected )");
            return inner;
        }
        if (c == '-') {
            ++pos;
            return -parse_primary();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            // contiguous p/q is a rational literal
            if (pos < s.size() && s[pos] == '/' && pos + 1 < s.size() &&
                std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
                ++pos;
                size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                Rational r(s.substr(start, pos - start));
                r.canonicalize();
                (void)dstart;
                return Scalar::from_rational(ring, r);
            }
            Rational r(s.substr(start, pos - start));
            r.canonicalize();
            return Scalar::from_rational(ring, r);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == "zeta") {
                if (!eat('(')) fail("expected ( after zeta");
                long n = parse_int();
                if (!eat(')')) fail("expected ) after zeta order");
                if (n <= 0 || ring->zeta_order % static_cast<unsigned>(n) != 0)
                    fail("zeta order " + std::to_string(n) + " does not divide ring order " +
                         std::to_string(ring->zeta_order));
                return Scalar::zeta_pow(ring, static_cast<long>(ring->zeta_order) / n);
            }
            if (!ring->find_var(name)) fail("unknown variable " + name);
            return Scalar::variable(ring, name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Scalar parse_scalar(const ScalarRingPtr& ring, const std::string& text) {
    ScalarParser p{ring, text};
    Scalar r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

} // namespace braidalg
