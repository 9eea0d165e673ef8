#include "prefixpoly/exactmath.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace prefixpoly {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
            s.end());
    if (s.empty()) throw DomainError("empty rational literal");
    const auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
        Integer z;
        if (part.empty() || z.set_str(part, 10) != 0)
            throw DomainError("malformed rational literal '" + std::string(text) + "'");
        return z;
    };
    if (slash == std::string::npos) {
        // Also accept a terminating decimal such as 0.3.
        const auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(parse_int(s));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits == "-" || digits == "+" || digits.empty()) throw DomainError("malformed decimal");
        if (digits[0] == '+') digits.erase(0, 1);
        Integer den = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return make_rational(parse_int(digits), den);
    }
    return make_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational pow(const Rational& base, unsigned exponent) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    // Powers of a reduced fraction stay reduced; only a zero base needs a fix-up.
    out.canonicalize();
    return out;
}

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(const Integer& top, unsigned k) {
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
    return out;
}

Integer multichoose(const Integer& k, unsigned j) {
    if (j == 0) return 1;
    return binomial(k + j - 1, j);
}

Integer hook_count_rectangular(unsigned m, unsigned n) {
    if (m == 0 || n == 0) throw DomainError("hook_count_rectangular: empty rectangle");
    // Cell (i, j) of an n x m rectangle has hook length (m - j) + (n - i) - 1.
    Integer hooks = 1;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < m; ++j) hooks *= (m - j) + (n - i) - 1;
    return factorial(m * n) / hooks;
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const auto da = std::accumulate(a.begin(), a.end(), 0u);
    const auto db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw DimensionError("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(Exponents exps, const Rational& c) {
    Polynomial p(exps.size());
    p.add_term(exps, c);
    return p;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Polynomial::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::total_degree() const {
    // The first term in graded order has the largest degree.
    if (terms_.empty()) return 0;
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0u);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = total_degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
        return std::accumulate(t.first.begin(), t.first.end(), 0u) == d;
    });
}

Polynomial Polynomial::homogeneous_part(unsigned degree) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0u) == degree) out.terms_.emplace(e, c);
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_)
        throw DimensionError("evaluate: point has " + std::to_string(point.size()) +
                             " coordinates, polynomial has " + std::to_string(nvars_) + " variables");
    // Cache powers per variable up to the largest exponent used.
    std::vector<std::vector<Rational>> powers(nvars_, std::vector<Rational>{Rational(1)});
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            auto& pw = powers[i];
            while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
            if (e[i] > 0) term *= pw[e[i]];
        }
        sum += term;
    }
    return sum;
}

namespace {

// Lifts a zero-arity constant to the given arity; other mismatches are errors.
std::size_t common_arity(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() == b.nvars()) return a.nvars();
    if (a.nvars() == 0) return b.nvars();
    if (b.nvars() == 0) return a.nvars();
    throw DimensionError("polynomials over " + std::to_string(a.nvars()) + " and " +
                         std::to_string(b.nvars()) + " variables");
}

Exponents lifted(const Exponents& e, std::size_t arity) {
    if (e.size() == arity) return e;
    return Exponents(arity, 0);  // only zero-arity constants are lifted
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    const auto n = common_arity(*this, other);
    if (nvars_ != n) {
        Polynomial lifted_self(n);
        for (const auto& [e, c] : terms_) lifted_self.add_term(lifted(e, n), c);
        *this = std::move(lifted_self);
    }
    for (const auto& [e, c] : other.terms_) add_term(lifted(e, n), c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const auto n = common_arity(a, b);
    Polynomial out(n);
    Exponents e(n);
    for (const auto& [ea, ca] : a.terms_) {
        const auto la = lifted(ea, n);
        for (const auto& [eb, cb] : b.terms_) {
            const auto lb = lifted(eb, n);
            for (std::size_t i = 0; i < n; ++i) e[i] = la[i] + lb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (terms_.empty() || other.terms_.empty()) return terms_.empty() && other.terms_.empty();
    return nvars_ == other.nvars_ && terms_ == other.terms_;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
    if (var >= nvars_) throw DimensionError("substitute: variable index out of range");
    std::vector<Polynomial> powers{constant(nvars_, 1)};
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
        Exponents rest = e;
        rest[var] = 0;
        out += monomial(rest, c) * powers[e[var]];
    }
    return out;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    if (!names.empty() && names.size() != nvars_)
        throw DimensionError("to_string: wrong number of variable names");
    auto name = [&](std::size_t i) {
        return names.empty() ? "x" + std::to_string(i + 1) : names[i];
    };
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool constant_term = std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; });
        Rational mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        bool need_space = false;
        if (constant_term || mag != 1) {
            out << prefixpoly::to_string(mag);
            need_space = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_space) out << ' ';
            out << name(i);
            if (e[i] > 1) out << '^' << e[i];
            need_space = true;
        }
    }
    return out.str();
}

nlohmann::json Polynomial::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : terms_) terms.push_back({{"coeff", prefixpoly::to_string(c)}, {"exps", e}});
    return {{"nvars", nvars_}, {"terms", terms}};
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
    Polynomial p(j.at("nvars").get<std::size_t>());
    for (const auto& t : j.at("terms")) {
        auto e = t.at("exps").get<Exponents>();
        if (e.size() != p.nvars_) throw DimensionError("from_json: exponent vector length");
        p.add_term(e, parse_rational(t.at("coeff").get<std::string>()));
    }
    return p;
}

Polynomial multichoose(const Polynomial& k, unsigned j) {
    Polynomial out = Polynomial::constant(k.nvars(), 1);
    for (unsigned i = 0; i < j; ++i) out *= k + Polynomial::constant(k.nvars(), i);
    return out * make_rational(1, factorial(j));
}

Polynomial univariate(std::span<const Rational> coeffs) {
    Polynomial p(1);
    for (unsigned i = 0; i < coeffs.size(); ++i) p += Polynomial::monomial({i}, coeffs[i]);
    return p;
}

Polynomial interpolate_at_naturals(std::span<const Rational> values) {
    std::vector<Rational> diff(values.begin(), values.end());
    const auto r = Polynomial::variable(1, 0);
    Polynomial basis = Polynomial::constant(1, 1);  // binom(r, k)
    Polynomial out(1);
    for (std::size_t k = 0; k < diff.size(); ++k) {
        out += basis * diff[0];
        for (std::size_t i = 0; i + 1 < diff.size() - k; ++i) diff[i] = diff[i + 1] - diff[i];
        basis = basis * (r - Polynomial::constant(1, Rational(static_cast<long>(k)))) *
                make_rational(1, static_cast<unsigned long>(k + 1));
    }
    return out;
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Clear denominators row by row, then run Bareiss over the integers.
    Matrix<Integer> a(n, n);
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
        scale *= row_lcm;
    }
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return make_rational(sign * a(n - 1, n - 1), scale);
}

Polynomial determinant(const PolynomialMatrix& m) {
    std::size_t arity = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) arity = std::max(arity, m(i, j).nvars());
    return determinant_by_expansion(m, Polynomial(arity), Polynomial::constant(arity, 1));
}

}  // namespace prefixpoly
