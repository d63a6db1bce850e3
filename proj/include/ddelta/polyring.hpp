#pragma once

// Sparse multivariate polynomials over a prime field F_p.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ddelta {

enum class TermOrder { degrevlex, lex, grlex };

std::string_view to_string(TermOrder order);
TermOrder term_order_from_string(std::string_view name);

/// Arithmetic in F_p on least nonnegative residues.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t characteristic() const noexcept { return p_; }
    std::uint64_t reduce(std::int64_t value) const noexcept;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t neg(std::uint64_t a) const noexcept;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    std::uint64_t inv(std::uint64_t a) const;

private:
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// The ring F_p[vars] together with a term order. Shared immutably by its polynomials.
class RingContext {
public:
    RingContext(std::uint64_t p, std::vector<std::string> vars, TermOrder order = TermOrder::degrevlex);

    std::uint64_t characteristic() const noexcept { return field_.characteristic(); }
    const PrimeField& field() const noexcept { return field_; }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    std::size_t num_vars() const noexcept { return vars_.size(); }
    TermOrder order() const noexcept { return order_; }

    /// Index of a variable name, or -1.
    int variable_index(std::string_view name) const;

    bool operator==(const RingContext& other) const;

private:
    PrimeField field_;
    std::vector<std::string> vars_;
    TermOrder order_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(std::uint64_t p, std::vector<std::string> vars,
                  TermOrder order = TermOrder::degrevlex);

bool same_ring(const RingContext& a, const RingContext& b);
void require_same_ring(const RingContext& a, const RingContext& b);

/// Exponent vector. All arithmetic is overflow-checked.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint64_t> exps);

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint64_t operator[](std::size_t i) const noexcept { return exps_[i]; }
    std::span<const std::uint64_t> exponents() const noexcept { return exps_; }
    std::uint64_t degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    void set(std::size_t i, std::uint64_t e);

    Monomial operator*(const Monomial& other) const;
    /// Requires `other.divides(*this)`.
    Monomial operator/(const Monomial& other) const;
    bool divides(const Monomial& other) const noexcept;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const noexcept;
    Monomial scaled(std::uint64_t k) const;
    Monomial pow(std::uint64_t k) const { return scaled(k); }

    bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }
    std::size_t hash() const noexcept;

private:
    std::vector<std::uint64_t> exps_;
    std::uint64_t degree_ = 0;
};

/// Three-way comparison under `order`: negative if a < b.
int compare(const Monomial& a, const Monomial& b, TermOrder order) noexcept;

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
    Monomial monomial;
    std::uint64_t coeff;  // in [1, p-1]
};

/// Polynomial in canonical form: nonzero coefficients, terms strictly descending in the ring order.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring);
    Polynomial(RingPtr ring, std::vector<Term> terms);  // any order, duplicates summed

    static Polynomial constant(RingPtr ring, std::int64_t c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial term(RingPtr ring, Monomial m, std::uint64_t coeff = 1);

    const RingContext& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const Term& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().monomial; }
    std::uint64_t leading_coeff() const { return terms_.front().coeff; }
    std::uint64_t total_degree() const noexcept;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
    Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

    Polynomial scaled(std::uint64_t c) const;
    Polynomial mul_term(const Monomial& m, std::uint64_t c) const;
    Polynomial pow(std::uint64_t e) const;
    Polynomial monic() const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    struct Canonical {};
    Polynomial(RingPtr ring, std::vector<Term> terms, Canonical) : ring_(std::move(ring)), terms_(std::move(terms)) {}
    Polynomial linear_combination(const Polynomial& other, std::uint64_t other_scale) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// r^(p^e): exponents scaled by p^e, coefficients unchanged (Fermat).
Polynomial frobenius(const Polynomial& r, unsigned e = 1);

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

std::string monomial_to_string(const Monomial& m, const RingContext& ring);

/// Deterministic total order on polynomials (used for sorting generator lists).
bool polynomial_less(const Polynomial& a, const Polynomial& b);

}  // namespace ddelta
