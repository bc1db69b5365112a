#pragma once

// Exact sparse Laurent polynomials over the integers.
//
// One representation serves two variables: bracket values use exponents of A,
// Jones values use quarter powers of t (stored exponent 4 == t^1), so all
// arithmetic stays integral even for links with half-integer t powers.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

namespace edgenum {

enum class Var { A, TQuarter };

class Laurent {
public:
    Laurent() = default;
    explicit Laurent(long long constant) {
        if (constant != 0) coeff_[0] = constant;
    }

    static Laurent term(long long c, int exp) {
        Laurent p;
        if (c != 0) p.coeff_[exp] = c;
        return p;
    }

    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const { return coeff_.size() == 1 && coeff_.begin()->first == 0 && coeff_.begin()->second == 1; }

    const std::map<int, long long>& terms() const { return coeff_; }

    long long coeff(int exp) const {
        auto it = coeff_.find(exp);
        return it == coeff_.end() ? 0 : it->second;
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.coeff_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.coeff_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.coeff_)
            for (const auto& [eb, cb] : b.coeff_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, c] : coeff_) r.coeff_[e] = -c;
        return r;
    }

    Laurent pow(unsigned k) const {
        Laurent r(1), base = *this;
        while (k) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    // x -> x^-1; mirror images negate every exponent.
    Laurent negate_exponents() const {
        Laurent r;
        for (const auto& [e, c] : coeff_) r.coeff_[-e] = c;
        return r;
    }

    // multiply by c * x^exp
    Laurent& shift(long long c, int exp) {
        Laurent r;
        for (const auto& [e, co] : coeff_) r.coeff_[e + exp] = co * c;
        coeff_.swap(r.coeff_);
        return *this;
    }

    void add_term(int exp, long long c) {
        if (c == 0) return;
        auto [it, inserted] = coeff_.try_emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeff_.erase(it);
        }
    }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // Canonical text form, terms in ascending exponent order, e.g.
    //   -t^-4 + t^-3 + t^-1      (Var::TQuarter)
    //   A^7 - A^3 - A^-5         (Var::A)
    // Half and quarter powers of t print parenthesized in lowest terms: t^(1/2).
    std::string str(Var v) const {
        if (coeff_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeff_) {
            long long mag = c < 0 ? -c : c;
            if (first) {
                if (c < 0) os << '-';
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            std::string var = var_str(v, e);
            if (var.empty())
                os << mag;
            else {
                if (mag != 1) os << mag;
                os << var;
            }
        }
        return os.str();
    }

private:
    static std::string var_str(Var v, int exp) {
        if (exp == 0) return "";
        if (v == Var::A) {
            if (exp == 1) return "A";
            return "A^" + std::to_string(exp);
        }
        int g = std::gcd(std::abs(exp), 4);
        int num = exp / g, den = 4 / g;
        if (den == 1) {
            if (num == 1) return "t";
            return "t^" + std::to_string(num);
        }
        return "t^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
    }

    std::map<int, long long> coeff_;
};

}  // namespace edgenum
