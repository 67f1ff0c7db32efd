#ifndef SELBERG_MULTIVARIATE_HPP
#define SELBERG_MULTIVARIATE_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "selberg/errors.hpp"

namespace selberg {

/// Finite sum of monomials z_0^{e_0} ... z_{m-1}^{e_{m-1}} with coefficients
/// in C (Rational, or Poly for a spectator indeterminate). Exponents may be
/// negative; no zero coefficient is ever stored. This is the expansion
/// carrier for the brute-force averages.
template <class C>
class Expansion {
public:
    using Monomial = std::vector<int>;

    static constexpr std::size_t kDefaultTermLimit = 1000000;

    explicit Expansion(int nvars, std::size_t term_limit = kDefaultTermLimit)
        : nvars_(nvars), term_limit_(term_limit) {
        if (nvars < 0) throw std::invalid_argument("negative variable count");
    }

    static Expansion one(int nvars) {
        Expansion e(nvars);
        e.terms_[Monomial(static_cast<std::size_t>(nvars), 0)] = C(1);
        return e;
    }

    static Expansion variable(int nvars, int var) {
        Expansion e(nvars);
        Monomial m(static_cast<std::size_t>(nvars), 0);
        m.at(static_cast<std::size_t>(var)) = 1;
        e.terms_[m] = C(1);
        return e;
    }

    int nvars() const { return nvars_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, C>& terms() const { return terms_; }

    void add_term(const Monomial& mono, const C& coef) {
        if (static_cast<int>(mono.size()) != nvars_)
            throw std::invalid_argument("monomial arity mismatch");
        if (coef == C()) return;
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, coef);
            check_limit();
        } else {
            it->second += coef;
            if (it->second == C()) terms_.erase(it);
        }
    }

    Expansion& operator+=(const Expansion& rhs) {
        require_same_arity(rhs);
        for (const auto& [mono, coef] : rhs.terms_) add_term(mono, coef);
        return *this;
    }

    Expansion& operator-=(const Expansion& rhs) {
        require_same_arity(rhs);
        for (const auto& [mono, coef] : rhs.terms_) add_term(mono, C() - coef);
        return *this;
    }

    friend Expansion operator+(Expansion lhs, const Expansion& rhs) { return lhs += rhs; }
    friend Expansion operator-(Expansion lhs, const Expansion& rhs) { return lhs -= rhs; }

    friend Expansion operator*(const Expansion& lhs, const Expansion& rhs) {
        lhs.require_same_arity(rhs);
        Expansion out(lhs.nvars_, std::min(lhs.term_limit_, rhs.term_limit_));
        Monomial mono(static_cast<std::size_t>(lhs.nvars_));
        for (const auto& [ma, ca] : lhs.terms_)
            for (const auto& [mb, cb] : rhs.terms_) {
                for (std::size_t v = 0; v < mono.size(); ++v) mono[v] = ma[v] + mb[v];
                out.add_term(mono, ca * cb);
            }
        return out;
    }

    Expansion operator*(const C& scalar) const {
        Expansion out(nvars_, term_limit_);
        if (scalar == C()) return out;
        for (const auto& [mono, coef] : terms_) out.terms_[mono] = coef * scalar;
        return out;
    }

    bool operator==(const Expansion& rhs) const {
        return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
    }
    bool operator!=(const Expansion& rhs) const { return !(*this == rhs); }

    /// Renames variable v to perm[v] in every monomial.
    Expansion permuted(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != nvars_)
            throw std::invalid_argument("permutation arity mismatch");
        Expansion out(nvars_, term_limit_);
        Monomial mono(static_cast<std::size_t>(nvars_));
        for (const auto& [ma, coef] : terms_) {
            for (std::size_t v = 0; v < mono.size(); ++v)
                mono[static_cast<std::size_t>(perm[v])] = ma[v];
            out.add_term(mono, coef);
        }
        return out;
    }

    /// Lifts an m-variable expansion to m+1 variables, the new variable
    /// inserted (with exponent zero) at position pos. Used to form
    /// hat-deleted evaluations: an expansion in the deleted-variable set.
    Expansion with_inserted_var(int pos) const {
        if (pos < 0 || pos > nvars_) throw std::invalid_argument("bad insertion slot");
        Expansion out(nvars_ + 1, term_limit_);
        for (const auto& [ma, coef] : terms_) {
            Monomial mono;
            mono.reserve(ma.size() + 1);
            mono.insert(mono.end(), ma.begin(), ma.begin() + pos);
            mono.push_back(0);
            mono.insert(mono.end(), ma.begin() + pos, ma.end());
            out.terms_.emplace(std::move(mono), coef);
        }
        return out;
    }

    /// Exact quotient by (z_k - z_l); throws std::logic_error when the
    /// expansion is not divisible. Requires nonnegative exponents of z_k.
    Expansion divided_by_var_diff(int k, int l) const {
        if (k == l || k < 0 || l < 0 || k >= nvars_ || l >= nvars_)
            throw std::invalid_argument("bad variable pair");
        // View as a polynomial in z_k and divide synthetically at root z_l:
        // with P = sum_d c_d z_k^d,  q_{d-1} = c_d + z_l q_d (top down),
        // remainder c_0 + z_l q_0 must cancel.
        int max_deg = 0;
        for (const auto& [mono, coef] : terms_) {
            if (mono[static_cast<std::size_t>(k)] < 0)
                throw std::invalid_argument("division needs nonnegative exponents in z_k");
            max_deg = std::max(max_deg, mono[static_cast<std::size_t>(k)]);
        }
        std::vector<Expansion> by_deg(static_cast<std::size_t>(max_deg) + 1,
                                      Expansion(nvars_, term_limit_));
        for (const auto& [mono, coef] : terms_) {
            Monomial rest = mono;
            int d = rest[static_cast<std::size_t>(k)];
            rest[static_cast<std::size_t>(k)] = 0;
            by_deg[static_cast<std::size_t>(d)].add_term(rest, coef);
        }
        Expansion quotient(nvars_, term_limit_);
        Expansion carry(nvars_, term_limit_);
        for (int d = max_deg; d >= 1; --d) {
            Expansion cur = by_deg[static_cast<std::size_t>(d)] + carry;
            for (const auto& [mono, coef] : cur.terms_) {
                Monomial shifted = mono;
                shifted[static_cast<std::size_t>(k)] += d - 1;
                quotient.add_term(shifted, coef);
            }
            carry = cur.shifted_in_var(l, 1);
        }
        Expansion remainder = by_deg[0] + carry;
        if (!remainder.is_zero())
            throw std::logic_error("expansion not divisible by the variable difference");
        return quotient;
    }

private:
    Expansion shifted_in_var(int var, int by) const {
        Expansion out(nvars_, term_limit_);
        for (const auto& [mono, coef] : terms_) {
            Monomial shifted = mono;
            shifted[static_cast<std::size_t>(var)] += by;
            out.terms_.emplace(std::move(shifted), coef);
        }
        return out;
    }

    void require_same_arity(const Expansion& rhs) const {
        if (nvars_ != rhs.nvars_) throw std::invalid_argument("expansion arity mismatch");
    }

    void check_limit() const {
        if (terms_.size() > term_limit_)
            throw ExpansionLimit("expansion exceeds " + std::to_string(term_limit_) +
                                 " stored terms");
    }

    int nvars_;
    std::size_t term_limit_;
    std::map<Monomial, C> terms_;
};

} // namespace selberg

#endif
