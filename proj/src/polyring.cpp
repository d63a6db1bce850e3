#include "ddelta/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>

#include "ddelta/error.hpp"

namespace ddelta {

std::string_view to_string(TermOrder order)
{
    switch (order) {
    case TermOrder::degrevlex:
        return "degrevlex";
    case TermOrder::lex:
        return "lex";
    case TermOrder::grlex:
        return "grlex";
    }
    return "degrevlex";
}

TermOrder term_order_from_string(std::string_view name)
{
    if (name == "degrevlex")
        return TermOrder::degrevlex;
    if (name == "lex")
        return TermOrder::lex;
    if (name == "grlex")
        return TermOrder::grlex;
    throw DomainError("unknown term order '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// PrimeField

PrimeField::PrimeField(std::uint64_t p) : p_(p)
{
    if (p < 2 || p > (std::uint64_t{1} << 31) || !is_prime(p))
        throw DomainError("characteristic " + std::to_string(p) + " is not a prime in [2, 2^31]");
}

std::uint64_t PrimeField::reduce(std::int64_t value) const noexcept
{
    auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = value % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const noexcept
{
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const noexcept
{
    return a >= b ? a - b : a + p_ - b;
}

std::uint64_t PrimeField::neg(std::uint64_t a) const noexcept
{
    return a == 0 ? 0 : p_ - a;
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const noexcept
{
    // p <= 2^31, so the product fits in 62 bits.
    return (a * b) % p_;
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept
{
    std::uint64_t result = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1)
            result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const
{
    if (a % p_ == 0)
        throw DomainError("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// RingContext

namespace {

bool valid_variable_name(std::string_view name)
{
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
        return false;
    return std::all_of(name.begin(), name.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    });
}

}  // namespace

RingContext::RingContext(std::uint64_t p, std::vector<std::string> vars, TermOrder order)
    : field_(p), vars_(std::move(vars)), order_(order)
{
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!valid_variable_name(vars_[i]))
            throw DomainError("invalid variable name '" + vars_[i] + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (vars_[i] == vars_[j])
                throw DomainError("duplicate variable name '" + vars_[i] + "'");
    }
}

int RingContext::variable_index(std::string_view name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return static_cast<int>(i);
    return -1;
}

bool RingContext::operator==(const RingContext& other) const
{
    return characteristic() == other.characteristic() && vars_ == other.vars_ && order_ == other.order_;
}

RingPtr make_ring(std::uint64_t p, std::vector<std::string> vars, TermOrder order)
{
    return std::make_shared<const RingContext>(p, std::move(vars), order);
}

bool same_ring(const RingContext& a, const RingContext& b)
{
    return &a == &b || a == b;
}

void require_same_ring(const RingContext& a, const RingContext& b)
{
    if (!same_ring(a, b))
        throw ContextMismatch("operands belong to different polynomial rings");
}

// ---------------------------------------------------------------------------
// Monomial

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("exponent overflow");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("exponent overflow");
    return r;
}

}  // namespace

Monomial::Monomial(std::vector<std::uint64_t> exps) : exps_(std::move(exps))
{
    for (auto e : exps_)
        degree_ = checked_add(degree_, e);
}

void Monomial::set(std::size_t i, std::uint64_t e)
{
    std::uint64_t rest = degree_ - exps_[i];
    degree_ = checked_add(rest, e);
    exps_[i] = e;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] = checked_add(exps_[i], other.exps_[i]);
    r.degree_ = checked_add(degree_, other.degree_);
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const
{
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] = exps_[i] - other.exps_[i];
    r.degree_ = degree_ - other.degree_;
    return r;
}

bool Monomial::divides(const Monomial& other) const noexcept
{
    if (degree_ > other.degree_)
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const
{
    std::vector<std::uint64_t> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const noexcept
{
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0)
            return false;
    return true;
}

Monomial Monomial::scaled(std::uint64_t k) const
{
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] = checked_mul(exps_[i], k);
    r.degree_ = checked_mul(degree_, k);
    return r;
}

std::size_t Monomial::hash() const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto e : exps_) {
        h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

int compare(const Monomial& a, const Monomial& b, TermOrder order) noexcept
{
    const std::size_t n = a.size();
    switch (order) {
    case TermOrder::lex:
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i])
                return a[i] > b[i] ? 1 : -1;
        return 0;
    case TermOrder::grlex:
        if (a.degree() != b.degree())
            return a.degree() > b.degree() ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i])
                return a[i] > b[i] ? 1 : -1;
        return 0;
    case TermOrder::degrevlex:
        if (a.degree() != b.degree())
            return a.degree() > b.degree() ? 1 : -1;
        for (std::size_t i = n; i-- > 0;)
            if (a[i] != b[i])
                return a[i] < b[i] ? 1 : -1;
        return 0;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring))
{
    const auto& field = ring_->field();
    std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc;
    acc.reserve(terms.size());
    for (auto& t : terms) {
        if (t.monomial.size() != ring_->num_vars())
            throw ContextMismatch("monomial has the wrong number of variables");
        auto c = t.coeff % field.characteristic();
        auto [it, inserted] = acc.emplace(std::move(t.monomial), c);
        if (!inserted)
            it->second = field.add(it->second, c);
    }
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            terms_.push_back({m, c});
    const auto order = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [order](const Term& x, const Term& y) { return compare(x.monomial, y.monomial, order) > 0; });
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c)
{
    auto v = ring->field().reduce(c);
    Monomial one(ring->num_vars());
    std::vector<Term> t;
    if (v != 0)
        t.push_back({std::move(one), v});
    return Polynomial(std::move(ring), std::move(t), Canonical{});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index)
{
    if (index >= ring->num_vars())
        throw DomainError("variable index out of range");
    Monomial m(ring->num_vars());
    m.set(index, 1);
    return term(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, std::uint64_t coeff)
{
    if (m.size() != ring->num_vars())
        throw ContextMismatch("monomial has the wrong number of variables");
    coeff %= ring->characteristic();
    std::vector<Term> t;
    if (coeff != 0)
        t.push_back({std::move(m), coeff});
    return Polynomial(std::move(ring), std::move(t), Canonical{});
}

bool Polynomial::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

std::uint64_t Polynomial::total_degree() const noexcept
{
    std::uint64_t d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.monomial.degree());
    return d;
}

// this + other_scale * other, by merging the two sorted term lists.
Polynomial Polynomial::linear_combination(const Polynomial& other, std::uint64_t other_scale) const
{
    require_same_ring(*ring_, *other.ring_);
    const auto& field = ring_->field();
    const auto order = ring_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
        int cmp;
        if (i == terms_.size())
            cmp = -1;
        else if (j == other.terms_.size())
            cmp = 1;
        else
            cmp = compare(terms_[i].monomial, other.terms_[j].monomial, order);
        if (cmp > 0) {
            out.push_back(terms_[i++]);
        } else if (cmp < 0) {
            auto c = field.mul(other.terms_[j].coeff, other_scale);
            if (c != 0)
                out.push_back({other.terms_[j].monomial, c});
            ++j;
        } else {
            auto c = field.add(terms_[i].coeff, field.mul(other.terms_[j].coeff, other_scale));
            if (c != 0)
                out.push_back({terms_[i].monomial, c});
            ++i;
            ++j;
        }
    }
    return Polynomial(ring_, std::move(out), Canonical{});
}

Polynomial Polynomial::operator+(const Polynomial& other) const
{
    return linear_combination(other, 1);
}

Polynomial Polynomial::operator-(const Polynomial& other) const
{
    return linear_combination(other, ring_->characteristic() - 1);
}

Polynomial Polynomial::operator-() const
{
    return scaled(ring_->characteristic() - 1);
}

Polynomial Polynomial::operator*(const Polynomial& other) const
{
    require_same_ring(*ring_, *other.ring_);
    if (is_zero() || other.is_zero())
        return Polynomial(ring_);
    if (terms_.size() == 1)
        return other.mul_term(terms_[0].monomial, terms_[0].coeff);
    if (other.terms_.size() == 1)
        return mul_term(other.terms_[0].monomial, other.terms_[0].coeff);
    const auto& field = ring_->field();
    std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc;
    acc.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : other.terms_) {
            auto c = field.mul(a.coeff, b.coeff);
            auto [it, inserted] = acc.emplace(a.monomial * b.monomial, c);
            if (!inserted)
                it->second = field.add(it->second, c);
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            out.push_back({m, c});
    const auto order = ring_->order();
    std::sort(out.begin(), out.end(),
              [order](const Term& x, const Term& y) { return compare(x.monomial, y.monomial, order) > 0; });
    return Polynomial(ring_, std::move(out), Canonical{});
}

Polynomial Polynomial::scaled(std::uint64_t c) const
{
    const auto& field = ring_->field();
    c %= field.characteristic();
    if (c == 0)
        return Polynomial(ring_);
    std::vector<Term> out = terms_;
    for (auto& t : out)
        t.coeff = field.mul(t.coeff, c);
    return Polynomial(ring_, std::move(out), Canonical{});
}

// Multiplying by a monomial preserves the (monomial) term order, so the result stays sorted.
Polynomial Polynomial::mul_term(const Monomial& m, std::uint64_t c) const
{
    const auto& field = ring_->field();
    c %= field.characteristic();
    if (c == 0 || is_zero())
        return Polynomial(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        out.push_back({t.monomial * m, field.mul(t.coeff, c)});
    return Polynomial(ring_, std::move(out), Canonical{});
}

Polynomial Polynomial::pow(std::uint64_t e) const
{
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return *this;
    return scaled(ring_->field().inv(leading_coeff()));
}

bool Polynomial::operator==(const Polynomial& other) const
{
    if (!same_ring(*ring_, *other.ring_) || terms_.size() != other.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != other.terms_[i].coeff || !(terms_[i].monomial == other.terms_[i].monomial))
            return false;
    return true;
}

std::string monomial_to_string(const Monomial& m, const RingContext& ring)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ring.variables()[i];
        if (m[i] != 1) {
            out += '^';
            out += std::to_string(m[i]);
        }
    }
    return out;
}

std::string Polynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty())
            out += '+';
        if (t.monomial.is_one()) {
            out += std::to_string(t.coeff);
            continue;
        }
        if (t.coeff != 1) {
            out += std::to_string(t.coeff);
            out += '*';
        }
        out += monomial_to_string(t.monomial, *ring_);
    }
    return out;
}

Polynomial frobenius(const Polynomial& r, unsigned e)
{
    std::uint64_t q = 1;
    const auto p = r.ring().characteristic();
    for (unsigned i = 0; i < e; ++i)
        q = checked_mul(q, p);
    // Scaling every exponent by q preserves the order of monomials under all supported orders.
    std::vector<Term> terms;
    terms.reserve(r.size());
    for (const auto& t : r.terms())
        terms.push_back({t.monomial.scaled(q), t.coeff});
    return Polynomial(r.ring_ptr(), std::move(terms));
}

bool polynomial_less(const Polynomial& a, const Polynomial& b)
{
    const auto order = a.ring().order();
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int cmp = compare(a.terms()[i].monomial, b.terms()[i].monomial, order);
        if (cmp != 0)
            return cmp < 0;
        if (a.terms()[i].coeff != b.terms()[i].coeff)
            return a.terms()[i].coeff < b.terms()[i].coeff;
    }
    return a.size() < b.size();
}

// ---------------------------------------------------------------------------
// Parser
//
// poly   := sign? term (('+'|'-') term)*
// term   := coeff ('*' factor)* | factor ('*' factor)*
// factor := var ('^' uint)?

namespace {

class Parser {
public:
    Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

    Polynomial parse()
    {
        const auto& field = ring_->field();
        std::vector<Term> terms;
        skip_ws();
        if (at_end())
            throw ParseError("empty polynomial", pos_);
        std::uint64_t sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = peek() == '-' ? field.neg(1) : 1;
            ++pos_;
        }
        for (;;) {
            Term t = parse_term();
            t.coeff = field.mul(t.coeff, sign);
            if (t.coeff != 0)
                terms.push_back(std::move(t));
            skip_ws();
            if (at_end())
                break;
            if (peek() == '+')
                sign = 1;
            else if (peek() == '-')
                sign = field.neg(1);
            else
                throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
            ++pos_;
        }
        return Polynomial(ring_, std::move(terms));
    }

private:
    Term parse_term()
    {
        skip_ws();
        Monomial m(ring_->num_vars());
        std::uint64_t coeff = 1;
        if (at_end())
            throw ParseError("expected a term", pos_);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coeff();
        } else {
            parse_factor(m);
        }
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*')
                break;
            ++pos_;
            skip_ws();
            parse_factor(m);
        }
        return {std::move(m), coeff};
    }

    std::uint64_t parse_coeff()
    {
        const auto p = ring_->characteristic();
        std::uint64_t value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = (value * 10 + static_cast<std::uint64_t>(peek() - '0')) % p;
            ++pos_;
        }
        return value;
    }

    void parse_factor(Monomial& m)
    {
        if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
            throw ParseError("expected a variable", pos_);
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        auto name = text_.substr(start, pos_ - start);
        int index = ring_->variable_index(name);
        if (index < 0)
            throw ParseError("unknown variable '" + std::string(name) + "'", start);
        std::uint64_t exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            exp = parse_exponent();
        }
        auto i = static_cast<std::size_t>(index);
        std::uint64_t total;
        if (__builtin_add_overflow(m[i], exp, &total))
            throw ParseError("exponent overflow", start);
        m.set(i, total);
    }

    std::uint64_t parse_exponent()
    {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected an exponent", pos_);
        std::size_t start = pos_;
        std::uint64_t value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            auto digit = static_cast<std::uint64_t>(peek() - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
                throw ParseError("exponent overflow", start);
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring)
{
    return Parser(text, ring).parse();
}

}  // namespace ddelta
