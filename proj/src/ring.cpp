#include "ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace grhom {

namespace {
constexpr int kMaxDegree = 10000;
}

Monomial Monomial::var(int nvars, int i, int exp)
{
    Monomial m = one(nvars);
    m.e[i] = static_cast<uint16_t>(exp);
    m.deg = exp;
    return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i)
        r.e[i] = static_cast<uint16_t>(r.e[i] + b.e[i]);
    r.deg = a.deg + b.deg;
    if (r.deg > kMaxDegree)
        throw MathError("monomial degree overflow (> 10^4)");
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b)
{
    if (a.deg > b.deg)
        return false;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i])
            return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a)
{
    Monomial r = b;
    for (size_t i = 0; i < r.e.size(); ++i)
        r.e[i] = static_cast<uint16_t>(r.e[i] - a.e[i]);
    r.deg = b.deg - a.deg;
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    r.deg = 0;
    for (size_t i = 0; i < r.e.size(); ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b)
{
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] && b.e[i])
            return false;
    return true;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b)
{
    if (a.e.size() != b.e.size())
        throw MathError("grevlex_compare: mismatched variable counts");
    if (a.deg != b.deg)
        return a.deg <=> b.deg;
    // ties: scanning right to left, the smaller exponent wins
    for (int i = static_cast<int>(a.e.size()) - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i])
            return a.e[i] < b.e[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(int nvars, uint32_t c)
{
    if (c == 0)
        return zero();
    return Polynomial({PTerm{Monomial::one(nvars), c}});
}

Polynomial Polynomial::term(Monomial m, uint32_t c)
{
    if (c == 0)
        return zero();
    return Polynomial({PTerm{std::move(m), c}});
}

std::optional<int> Polynomial::degree() const
{
    if (t_.empty())
        return std::nullopt;
    return t_.front().m.deg;
}

bool Polynomial::is_homogeneous() const
{
    for (const auto& t : t_)
        if (t.m.deg != t_.front().m.deg)
            return false;
    return true;
}

bool Polynomial::operator==(const Polynomial& o) const
{
    if (t_.size() != o.t_.size())
        return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].c != o.t_[i].c || !(t_[i].m == o.t_[i].m))
            return false;
    return true;
}

Polynomial poly_add(const PrimeField& F, const Polynomial& a, const Polynomial& b)
{
    std::vector<PTerm> out;
    out.reserve(a.size() + b.size());
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    size_t i = 0, j = 0;
    while (i < ta.size() && j < tb.size()) {
        auto cmp = grevlex_compare(ta[i].m, tb[j].m);
        if (cmp == std::strong_ordering::greater)
            out.push_back(ta[i++]);
        else if (cmp == std::strong_ordering::less)
            out.push_back(tb[j++]);
        else {
            uint32_t c = F.add(ta[i].c, tb[j].c);
            if (c)
                out.push_back(PTerm{ta[i].m, c});
            ++i;
            ++j;
        }
    }
    while (i < ta.size())
        out.push_back(ta[i++]);
    while (j < tb.size())
        out.push_back(tb[j++]);
    return Polynomial(std::move(out));
}

Polynomial poly_neg(const PrimeField& F, const Polynomial& a)
{
    std::vector<PTerm> out = a.terms();
    for (auto& t : out)
        t.c = F.neg(t.c);
    return Polynomial(std::move(out));
}

Polynomial poly_sub(const PrimeField& F, const Polynomial& a, const Polynomial& b)
{
    return poly_add(F, a, poly_neg(F, b));
}

Polynomial poly_scale(const PrimeField& F, const Polynomial& a, uint32_t c)
{
    if (c == 0)
        return Polynomial::zero();
    std::vector<PTerm> out = a.terms();
    for (auto& t : out)
        t.c = F.mul(t.c, c);
    return Polynomial(std::move(out));
}

Polynomial poly_mul_term(const PrimeField& F, const Polynomial& a, const Monomial& m, uint32_t c)
{
    if (c == 0 || a.is_zero())
        return Polynomial::zero();
    std::vector<PTerm> out;
    out.reserve(a.size());
    for (const auto& t : a.terms())
        out.push_back(PTerm{mono_mul(t.m, m), F.mul(t.c, c)});
    return Polynomial(std::move(out)); // order is preserved by multiplication
}

Polynomial poly_mul(const PrimeField& F, const Polynomial& a, const Polynomial& b)
{
    Polynomial acc;
    for (const auto& t : b.terms())
        acc = poly_add(F, acc, poly_mul_term(F, a, t.m, t.c));
    return acc;
}

Ring make_polynomial_ring(uint32_t p, std::vector<std::string> vars)
{
    if (vars.empty())
        throw MathError("ring needs at least one variable");
    PrimeField f(p);
    return Ring(new RingData(f, std::move(vars)));
}

bool same_ring(const Ring& a, const Ring& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    if (!(a->field() == b->field()) || a->vars() != b->vars())
        return false;
    if (a->is_quotient() != b->is_quotient())
        return false;
    if (!a->is_quotient())
        return true;
    const auto& ga = a->quotient().gb;
    const auto& gb = b->quotient().gb;
    if (ga.size() != gb.size())
        return false;
    for (size_t i = 0; i < ga.size(); ++i)
        if (!(ga[i] == gb[i]))
            return false;
    return true;
}

Polynomial ring_normal_form(const Ring& r, const Polynomial& f)
{
    if (!r->is_quotient())
        return f;
    const PrimeField& F = r->field();
    const auto& gb = r->quotient().gb;
    Polynomial work = f;
    std::vector<PTerm> out;
    while (!work.is_zero()) {
        const PTerm lt = work.leading();
        const Polynomial* red = nullptr;
        for (const auto& g : gb)
            if (mono_divides(g.leading().m, lt.m)) {
                red = &g;
                break;
            }
        if (red) {
            Monomial q = mono_div(lt.m, red->leading().m);
            // gb elements are monic
            work = poly_sub(F, work, poly_mul_term(F, *red, q, lt.c));
        } else {
            out.push_back(lt);
            work = poly_sub(F, work, Polynomial::term(lt.m, lt.c));
        }
    }
    return Polynomial(std::move(out));
}

std::string monomial_to_string(const Ring& r, const Monomial& m)
{
    if (m.is_one())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < m.nvars(); ++i) {
        if (!m.e[i])
            continue;
        if (!first)
            os << "*";
        os << r->vars()[i];
        if (m.e[i] > 1)
            os << "^" << m.e[i];
        first = false;
    }
    return os.str();
}

std::string polynomial_to_string(const Ring& r, const Polynomial& f)
{
    if (f.is_zero())
        return "0";
    const uint32_t p = r->field().modulus();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        // print small negative residues as -c for readability
        long long c = t.c;
        if (c > p / 2)
            c -= p;
        long long ac = c < 0 ? -c : c;
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (ac != 1 || t.m.is_one()) {
            os << ac;
            if (!t.m.is_one())
                os << "*";
        }
        if (!t.m.is_one())
            os << monomial_to_string(r, t.m);
        first = false;
    }
    return os.str();
}

namespace {

struct PolyParser {
    const Ring& ring;
    const std::string& s;
    size_t i = 0;

    void skip_ws()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eof()
    {
        skip_ws();
        return i >= s.size();
    }
    char peek()
    {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg)
    {
        throw MathError("polynomial syntax error at position " + std::to_string(i) + ": " + msg);
    }

    long long parse_int()
    {
        skip_ws();
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
            ++j;
        if (j == i)
            fail("expected integer");
        long long v = std::stoll(s.substr(i, j - i));
        i = j;
        return v;
    }

    std::string parse_ident()
    {
        skip_ws();
        size_t j = i;
        if (j >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_'))
            fail("expected variable name");
        ++j;
        while (j < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
            ++j;
        std::string id = s.substr(i, j - i);
        i = j;
        return id;
    }

    /* term := factor (* factor)*, factor := int | var [^ int] */
    Polynomial parse_term()
    {
        const PrimeField& F = ring->field();
        int nv = ring->nvars();
        uint32_t coef = 1;
        Monomial mon = Monomial::one(nv);
        bool any = false;
        while (true) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coef = F.mul(coef, F.from_int(parse_int()));
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string id = parse_ident();
                const auto& vars = ring->vars();
                auto it = std::find(vars.begin(), vars.end(), id);
                if (it == vars.end())
                    fail("unknown variable '" + id + "'");
                int vi = static_cast<int>(it - vars.begin());
                int exp = 1;
                if (peek() == '^') {
                    ++i;
                    exp = static_cast<int>(parse_int());
                    if (exp < 0)
                        fail("negative exponent");
                }
                mon = mono_mul(mon, Monomial::var(nv, vi, exp));
                any = true;
            } else {
                break;
            }
            if (peek() == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!any)
            fail("empty term");
        return Polynomial::term(std::move(mon), coef);
    }

    Polynomial parse()
    {
        const PrimeField& F = ring->field();
        Polynomial acc;
        bool neg = false;
        char c = peek();
        if (c == '-') {
            neg = true;
            ++i;
        } else if (c == '+') {
            ++i;
        }
        while (true) {
            Polynomial t = parse_term();
            if (neg)
                t = poly_neg(F, t);
            acc = poly_add(F, acc, t);
            char op = peek();
            if (op == '+') {
                neg = false;
                ++i;
            } else if (op == '-') {
                neg = true;
                ++i;
            } else {
                break;
            }
        }
        if (!eof())
            fail("trailing characters");
        return acc;
    }
};

} // namespace

Polynomial parse_polynomial(const Ring& r, const std::string& text)
{
    PolyParser p{r, text};
    return p.parse();
}

std::vector<Monomial> monomials_of_degree(int nvars, int deg)
{
    std::vector<Monomial> out;
    if (deg < 0)
        return out;
    Monomial m = Monomial::one(nvars);
    m.deg = deg;
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == nvars - 1) {
            m.e[pos] = static_cast<uint16_t>(left);
            out.push_back(m);
            return;
        }
        for (int k = left; k >= 0; --k) {
            m.e[pos] = static_cast<uint16_t>(k);
            rec(pos + 1, left - k);
        }
    };
    if (nvars == 0)
        return out;
    rec(0, deg);
    return out;
}

} // namespace grhom
