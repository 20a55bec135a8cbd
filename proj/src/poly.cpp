#include "popcrit/poly.hpp"

#include <cctype>
#include <sstream>

namespace popcrit {

Poly::Poly(const Rat& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int k, const Rat& c) {
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return Poly(std::move(v));
}

Poly Poly::linear_root(const Rat& z) { return Poly(std::vector<Rat>{-z, 1}); }

namespace {

// "3/2*x^2 - x + 1/4"; whitespace is ignored.
Poly parse_expression(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    Poly out;
    std::size_t i = 0;
    if (t.empty()) throw std::invalid_argument("empty polynomial");
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            sign = t[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
        std::string term = t.substr(i, j - i);
        i = j;
        if (term.empty()) throw std::invalid_argument("bad polynomial: '" + text + "'");
        auto xpos = term.find('x');
        Rat c = 1;
        int k = 0;
        if (xpos == std::string::npos) {
            c = parse_rat(term);
        } else {
            std::string head = term.substr(0, xpos);
            if (!head.empty()) {
                if (head.back() != '*') throw std::invalid_argument("bad term: '" + term + "'");
                head.pop_back();
                c = parse_rat(head);
            }
            std::string tail = term.substr(xpos + 1);
            k = 1;
            if (!tail.empty()) {
                if (tail[0] != '^' || tail.size() < 2 ||
                    tail.find_first_not_of("0123456789", 1) != std::string::npos)
                    throw std::invalid_argument("bad exponent: '" + term + "'");
                k = std::stoi(tail.substr(1));
            }
        }
        out += Poly::monomial(k, sign * c);
    }
    return out;
}

}  // namespace

Poly Poly::parse(const std::string& text) {
    if (text.find('x') != std::string::npos) return parse_expression(text);
    // Ascending coefficient list, as written by str().
    std::istringstream in(text);
    std::vector<Rat> v;
    std::string tok;
    while (in >> tok) v.push_back(parse_rat(tok));
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return c_[k];
}

Rat Poly::lead() const { return c_.empty() ? Rat(0) : c_.back(); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    Rat t;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            t = a.c_[i] * b.c_[j];
            r[i + j] += t;
        }
    }
    return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& a : c_) a *= s;
    return *this;
}

Poly Poly::derivative(int k) const {
    Poly r = *this;
    for (int step = 0; step < k; ++step) {
        if (r.c_.size() <= 1) return Poly();
        std::vector<Rat> v(r.c_.size() - 1);
        for (std::size_t i = 1; i < r.c_.size(); ++i) v[i - 1] = r.c_[i] * static_cast<long>(i);
        r = Poly(std::move(v));
    }
    return r;
}

Rat Poly::eval(const Rat& t) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly Poly::pow(unsigned e) const {
    Poly r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    Rat inv = 1 / lead();
    return *this * inv;
}

Poly Poly::shift(const Rat& z) const {
    // Horner in the ring: p(x+z) = (((c_n)(x+z) + c_{n-1})(x+z) + ...)
    Poly xz(std::vector<Rat>{z, 1});
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xz + Poly(*it);
    return acc;
}

int Poly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ' ';
        s += c_[i].get_str();
    }
    return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> r = a.coeffs();
    const auto& d = b.coeffs();
    int db = b.degree();
    std::vector<Rat> q(a.degree() - db + 1, Rat(0));
    Rat inv = 1 / b.lead();
    Rat t;
    for (int k = a.degree(); k >= db; --k) {
        if (r[k] == 0) continue;
        Rat f = r[k] * inv;
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) {
            t = f * d[j];
            r[k - db + j] -= t;
        }
    }
    r.resize(db);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw NotDivisible("polynomial division leaves a remainder");
    return q;
}

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = u % v;
        u = std::move(v);
        v = r.is_zero() ? r : r.monic();
    }
    return u.is_zero() ? u : u.monic();
}

bool is_squarefree(const Poly& p) {
    if (p.is_zero()) return false;
    return gcd(p, p.derivative()).degree() == 0;
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.is_zero() ? p : Poly(1);
    return exact_div(p, gcd(p, p.derivative())).monic();
}

bool proportional(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    return a * b.lead() == b * a.lead();
}

std::optional<Poly> poly_sqrt(const Poly& p) {
    if (p.is_zero()) return Poly();
    if (p.degree() % 2) return std::nullopt;
    auto lc = rat_root(p.lead(), 2);
    if (!lc) return std::nullopt;
    int m = p.degree() / 2;
    std::vector<Rat> q(m + 1, Rat(0));
    q[m] = *lc;
    for (int k = m - 1; k >= 0; --k) {
        // coefficient of x^{m+k} in q^2 = 2 q_m q_k + sum_{k<i<m} q_i q_{m+k-i}
        Rat s = p.coeff(m + k);
        for (int i = k + 1; i < m; ++i) s -= q[i] * q[m + k - i];
        q[k] = s / (2 * q[m]);
    }
    Poly r(std::move(q));
    if (r * r != p) return std::nullopt;
    return r;
}

Poly product(const std::vector<Poly>& ps) {
    Poly r(1);
    for (const auto& p : ps) r *= p;
    return r;
}

}  // namespace popcrit
