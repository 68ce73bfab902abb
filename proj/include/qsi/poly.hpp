#ifndef QSI_POLY_HPP
#define QSI_POLY_HPP

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

#include <qsi/rational.hpp>

namespace qsi {

// Sparse multivariate polynomial over the rationals, with string-named
// variables. Grammar for parsing: names, integer/rational coefficients,
// +, -, *, ^ and parentheses.
class Poly {
public:
    using Monomial = std::map<std::string, long long>; // var -> exponent > 0
    using Terms = std::map<Monomial, Rational>;

    Poly() = default;
    explicit Poly(const Rational& c) {
        if (c != 0) terms_[{}] = c;
    }
    static Poly var(const std::string& name) {
        Poly p;
        p.terms_[{{name, 1}}] = 1;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [v, e] : mb) m[v] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Poly pow(long long e) const {
        if (e < 0) throw std::invalid_argument("negative exponent");
        Poly r(Rational(1));
        for (long long i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    Poly derivative(const std::string& v) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(v);
            if (it == m.end()) continue;
            Monomial d = m;
            if (it->second == 1) d.erase(v);
            else --d[v];
            r.add_term(d, c * it->second);
        }
        return r;
    }

    template <class F, class EvalVar>
    F evaluate(const EvalVar& value_of, const F& zero) const {
        F acc = zero;
        for (const auto& [m, c] : terms_) {
            F t = zero + value_of_coeff<F>(c, zero);
            for (const auto& [v, e] : m)
                for (long long i = 0; i < e; ++i) t *= value_of(v);
            acc += t;
        }
        return acc;
    }

    Rational evaluate(const std::map<std::string, Rational>& point) const {
        return evaluate<Rational>(
            [&](const std::string& v) {
                auto it = point.find(v);
                if (it == point.end()) throw std::invalid_argument("unbound variable " + v);
                return it->second;
            },
            Rational(0));
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += to_string(c);
            for (const auto& [v, e] : m) {
                s += "*" + v;
                if (e > 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    static Poly parse(const std::string& src);

private:
    template <class F>
    static F value_of_coeff(const Rational& c, const F& zero);

    void add_term(const Monomial& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

template <>
inline Rational Poly::value_of_coeff<Rational>(const Rational& c, const Rational&) {
    return c;
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    Poly expr() {
        skip();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = get() == '-';
        Poly acc = term();
        if (neg) acc = Poly() - acc;
        for (;;) {
            skip();
            char c = peek();
            if (c != '+' && c != '-') return acc;
            get();
            Poly t = term();
            acc = c == '+' ? acc + t : acc - t;
        }
    }
    Poly term() {
        Poly acc = factor();
        for (;;) {
            skip();
            if (peek() != '*') return acc;
            get();
            acc = acc * factor();
        }
    }
    Poly factor() {
        Poly base = atom();
        skip();
        if (peek() == '^') {
            get();
            skip();
            std::string num;
            while (std::isdigit(static_cast<unsigned char>(peek()))) num += get();
            if (num.empty()) fail("exponent expected");
            base = base.pow(std::stoll(num));
        }
        return base;
    }
    Poly atom() {
        skip();
        char c = peek();
        if (c == '(') {
            get();
            Poly p = expr();
            skip();
            if (get() != ')') fail("')' expected");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (std::isdigit(static_cast<unsigned char>(peek()))) num += get();
            if (peek() == '/') {
                num += get();
                while (std::isdigit(static_cast<unsigned char>(peek()))) num += get();
            }
            return Poly(parse_rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                name += get();
            return Poly::var(name);
        }
        fail("unexpected character");
        return Poly();
    }

    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
    char get() { return i_ < s_.size() ? s_[i_++] : '\0'; }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(i_) + ": " + why + " in '" + s_ + "'");
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

} // namespace detail

inline Poly Poly::parse(const std::string& src) {
    return detail::PolyParser(src).parse();
}

} // namespace qsi

#endif
