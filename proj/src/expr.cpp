#include "braidalg/expr.hpp"

#include <cctype>

#include "braidalg/errors.hpp"

namespace braidalg {

namespace {

// One recursive-descent parser covers both the polynomial and group-algebra
// grammars; Value carries whichever algebra we are building into.
struct Value {
    // exactly one of the two is active, chosen by the entry point
    NCPoly poly;
    GroupAlgElem ga;
};

struct Parser {
    const SigPtr sig; // null for group-algebra parsing
    const FgAbelianGroup* group = nullptr;
    ScalarRingPtr ring;
    const std::string& s;
    size_t pos = 0;
    bool group_mode = false;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("parse error at position " + std::to_string(pos) + ": " + msg +
                         " in \"" + s + "\"");
    }

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

    bool peek_factor_start() {
        skip_ws();
        if (pos >= s.size()) return false;
        char c = s[pos];
        if (static_cast<unsigned char>(c) == 0xE2) return false; // tensor sign
        return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    long parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (digits == pos) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    std::string parse_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected identifier");
        return s.substr(start, pos - start);
    }

    bool at_tensor_sign() {
        skip_ws();
        // UTF-8 for the tensor product sign
        return pos + 2 < s.size() && static_cast<unsigned char>(s[pos]) == 0xE2 &&
               static_cast<unsigned char>(s[pos + 1]) == 0x8A &&
               static_cast<unsigned char>(s[pos + 2]) == 0x97;
    }

    Value make_scalar(const Scalar& c) {
        Value v;
        if (group_mode) {
            v.ga = GroupAlgElem::of(*group, ring, ge_zero(*group), c);
        } else {
            v.poly = NCPoly::scalar(sig, c);
        }
        return v;
    }

    Value mul(const Value& a, const Value& b) {
        Value v;
        if (group_mode)
            v.ga = a.ga * b.ga;
        else
            v.poly = a.poly * b.poly;
        return v;
    }

    Value add(const Value& a, const Value& b, bool minus) {
        Value v;
        if (group_mode)
            v.ga = minus ? a.ga - b.ga : a.ga + b.ga;
        else
            v.poly = minus ? a.poly - b.poly : a.poly + b.poly;
        return v;
    }

    Value neg(const Value& a) {
        Value v;
        if (group_mode)
            v.ga = a.ga.scaled(Scalar::from_int(ring, -1));
        else
            v.poly = -a.poly;
        return v;
    }

    Value pow(const Value& a, long k) {
        Value v = make_scalar(Scalar::one(ring));
        if (k < 0) {
            // negative powers only for scalar monomials and group-likes
            if (group_mode) {
                if (a.ga.terms().size() != 1) fail("negative power of a sum");
                const auto& [x, c] = *a.ga.terms().begin();
                GroupAlgElem r = GroupAlgElem::of(*group, ring, ge_smul(*group, k, x), c.pow(k));
                Value out;
                out.ga = r;
                return out;
            }
            if (a.poly.size() != 1 || !a.poly.terms().begin()->first.empty())
                fail("negative powers are only defined for scalars");
            Value out;
            out.poly = NCPoly::scalar(sig, a.poly.terms().begin()->second.pow(k));
            return out;
        }
        for (long i = 0; i < k; ++i) v = mul(v, a);
        return v;
    }

    Value star(const Value& a) {
        Value v;
        if (group_mode)
            v.ga = a.ga.star();
        else
            v.poly = a.poly.star();
        return v;
    }

    Value parse_expr() {
        skip_ws();
        bool lead_minus = eat('-');
        Value acc = parse_term();
        if (lead_minus) acc = neg(acc);
        for (;;) {
            skip_ws();
            if (eat('+')) {
                acc = add(acc, parse_term(), false);
            } else if (eat('-')) {
                acc = add(acc, parse_term(), true);
            } else {
                return acc;
            }
        }
    }

    Value parse_term() {
        Value acc = parse_factor();
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*' ) {
                ++pos;
                acc = mul(acc, parse_factor());
                continue;
            }
            if (at_tensor_sign()) {
                pos += 3;
                Value rhs = parse_factor();
                acc = mul(tensor_slot(acc, 0), tensor_slot(rhs, 1));
                continue;
            }
            if (peek_factor_start()) {
                acc = mul(acc, parse_factor());
                continue;
            }
            return acc;
        }
    }

    // place a base-signature polynomial into a slot of the slot signature
    Value tensor_slot(const Value& a, int slot) {
        if (group_mode) fail("tensor in group algebra expression");
        if (!sig->base) fail("tensor syntax requires a slot context");
        // a was parsed against the slot signature already; demand its words
        // use only un-slotted generators (slot 1) and shift them.
        NCPoly shifted(sig);
        int n = sig->base_size;
        for (const auto& [w, c] : a.poly.terms()) {
            Word nw;
            for (int32_t g : w) {
                if (g >= n) fail("tens(...) arguments must be slot-free");
                nw.push_back(g + slot * n);
            }
            shifted.add_term(nw, c);
        }
        Value v;
        v.poly = shifted;
        return v;
    }

    Value parse_factor() {
        Value base = parse_primary();
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == '\'') {
                ++pos;
                base = star(base);
                continue;
            }
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                long k = parse_int();
                base = pow(base, k);
                continue;
            }
            return base;
        }
    }

    Value parse_primary() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Value v = parse_expr();
            if (!eat(')')) fail("expected )");
            return v;
        }
        if (c == '-') {
            ++pos;
            return neg(parse_primary());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos < s.size() && s[pos] == '/' && pos + 1 < s.size() &&
                std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
                ++pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            }
            Rational r(s.substr(start, pos - start));
            r.canonicalize();
            return make_scalar(Scalar::from_rational(ring, r));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = parse_ident();
            if (name == "zeta") {
                if (!eat('(')) fail("expected ( after zeta");
                long n = parse_int();
                if (!eat(')')) fail("expected )");
                if (n <= 0 || ring->zeta_order % static_cast<unsigned>(n) != 0)
                    fail("zeta order must divide the ring's cyclotomic order");
                return make_scalar(Scalar::zeta_pow(ring, static_cast<long>(ring->zeta_order) / n));
            }
            if (name == "star") {
                if (!eat('(')) fail("expected ( after star");
                Value v = parse_expr();
                if (!eat(')')) fail("expected )");
                return star(v);
            }
            if (name == "tens") {
                if (!eat('(')) fail("expected ( after tens");
                Value a = parse_expr();
                if (!eat(',')) fail("expected , in tens");
                Value b = parse_expr();
                if (!eat(')')) fail("expected )");
                return mul(tensor_slot(a, 0), tensor_slot(b, 1));
            }
            if (group_mode && name == "t") {
                if (!eat('(')) fail("expected ( after t");
                std::vector<int64_t> e;
                if (!eat(')')) {
                    e.push_back(parse_int());
                    while (eat(',')) e.push_back(parse_int());
                    if (!eat(')')) fail("expected )");
                }
                if (e.size() != group->dim()) fail("character exponent vector has wrong length");
                Value v;
                v.ga = GroupAlgElem::of(*group, ring, ge_reduce(*group, e), Scalar::one(ring));
                return v;
            }
            if (!group_mode) {
                // resolve generator, optionally with @slot suffix
                std::string full = name;
                int slot = 0;
                skip_ws();
                if (pos < s.size() && s[pos] == '@') {
                    ++pos;
                    long k = parse_int();
                    if (k < 1 || k > sig->slot_count) fail("slot index out of range");
                    slot = static_cast<int>(k - 1);
                }
                int base_id = -1;
                const Signature& base_sig = sig->base ? *sig->base : *sig;
                base_id = base_sig.find(full);
                if (base_id >= 0) {
                    int id = base_id + slot * sig->base_size;
                    Value v;
                    v.poly = NCPoly::generator(sig, id);
                    return v;
                }
                if (slot != 0) fail("unknown generator " + full);
            }
            if (ring->find_var(name)) return make_scalar(Scalar::variable(ring, name));
            fail("unknown identifier " + name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

NCPoly parse_poly(const SigPtr& sig, const std::string& text) {
    Parser p{sig, nullptr, sig->ring, text};
    Value v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v.poly;
}

GroupAlgElem parse_group_alg(const FgAbelianGroup& group, const ScalarRingPtr& ring,
                             const std::string& text) {
    Parser p{nullptr, &group, ring, text};
    p.group_mode = true;
    Value v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v.ga;
}

} // namespace braidalg
