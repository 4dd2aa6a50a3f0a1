#include "hforest/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace hforest {

namespace {

bool parse_int(std::string_view text, int32_t& out) {
    if (text.empty()) return false;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

// "<i>_<e>" with both parts non-negative integers.
bool parse_indexed_pair(std::string_view text, int32_t& i, int32_t& e) {
    auto sep = text.find('_');
    if (sep == std::string_view::npos) return false;
    return parse_int(text.substr(0, sep), i) && parse_int(text.substr(sep + 1), e) &&
           i >= 0 && e >= 0;
}

}  // namespace

std::string VarId::name() const {
    switch (kind) {
        case VarKind::T: return "t";
        case VarKind::Y: return "y";
        case VarKind::S: return "s";
        case VarKind::W: return "w" + std::to_string(index);
        case VarKind::Q: return "q" + std::to_string(index);
        case VarKind::X:
            return "x" + std::to_string(index) + "_" + std::to_string(spin);
        case VarKind::YV:
            return "yv" + std::to_string(index) + "_" + std::to_string(spin);
    }
    return "?";
}

std::optional<VarId> VarId::parse(std::string_view text) {
    if (text == "t") return t();
    if (text == "y") return y();
    if (text == "s") return s();
    int32_t i = 0;
    int32_t e = 0;
    if (text.size() > 2 && text.substr(0, 2) == "yv") {
        if (parse_indexed_pair(text.substr(2), i, e)) return yv(i, e);
        return std::nullopt;
    }
    if (text.size() > 1 && text[0] == 'x') {
        if (parse_indexed_pair(text.substr(1), i, e)) return x(i, e);
        return std::nullopt;
    }
    if (text.size() > 1 && text[0] == 'w') {
        if (parse_int(text.substr(1), i) && i >= 0) return w(i);
        return std::nullopt;
    }
    if (text.size() > 1 && text[0] == 'q') {
        if (parse_int(text.substr(1), i) && i >= 0) return q(i);
        return std::nullopt;
    }
    return std::nullopt;
}

Monomial Monomial::var(VarId v, int32_t exp) {
    Monomial m;
    if (exp != 0) m.exps_.emplace_back(v, exp);
    return m;
}

int32_t Monomial::exponent_of(VarId v) const {
    for (const auto& [var, exp] : exps_) {
        if (var == v) return exp;
        if (v < var) break;
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.exps_.reserve(exps_.size() + other.exps_.size());
    auto a = exps_.begin();
    auto b = other.exps_.begin();
    while (a != exps_.end() && b != other.exps_.end()) {
        if (a->first < b->first) {
            out.exps_.push_back(*a++);
        } else if (b->first < a->first) {
            out.exps_.push_back(*b++);
        } else {
            int32_t e = a->second + b->second;
            if (e != 0) out.exps_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    out.exps_.insert(out.exps_.end(), a, exps_.end());
    out.exps_.insert(out.exps_.end(), b, other.exps_.end());
    return out;
}

Monomial Monomial::without(VarId v) const {
    Monomial out;
    out.exps_.reserve(exps_.size());
    for (const auto& p : exps_) {
        if (p.first != v) out.exps_.push_back(p);
    }
    return out;
}

Monomial Monomial::pow(int32_t k) const {
    Monomial out;
    if (k == 0) return out;
    out.exps_.reserve(exps_.size());
    for (const auto& [var, exp] : exps_) out.exps_.emplace_back(var, exp * k);
    return out;
}

std::string Monomial::str() const {
    std::string out;
    for (const auto& [var, exp] : exps_) {
        if (!out.empty()) out += "*";
        out += var.name();
        if (exp != 1) out += "^" + std::to_string(exp);
    }
    return out;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    size_t i = 0;
    size_t j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first == eb[j].first) {
            if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second;
            ++i;
            ++j;
        } else if (ea[i].first < eb[j].first) {
            // b has exponent 0 on this variable.
            if (ea[i].second != 0) return ea[i].second > 0;
            ++i;
        } else {
            if (eb[j].second != 0) return eb[j].second < 0;
            ++j;
        }
    }
    while (i < ea.size()) {
        if (ea[i].second != 0) return ea[i].second > 0;
        ++i;
    }
    while (j < eb.size()) {
        if (eb[j].second != 0) return eb[j].second < 0;
        ++j;
    }
    return false;
}

Polynomial::Polynomial(long value) {
    if (value != 0) terms_.emplace(Monomial::unit(), BigInt(value));
}

Polynomial::Polynomial(BigInt value) {
    if (value != 0) terms_.emplace(Monomial::unit(), std::move(value));
}

Polynomial Polynomial::variable(VarId v) {
    return term(Monomial::var(v), 1);
}

Polynomial Polynomial::term(Monomial m, BigInt coeff) {
    Polynomial p;
    if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    out -= o;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& bindings) const {
    // Cache of positive binding powers, grown on demand.
    std::map<VarId, std::vector<Polynomial>> powers;
    auto binding_pow = [&](VarId v, const Polynomial& b, int32_t e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial(1));
        while (static_cast<int32_t>(cache.size()) <= e) {
            cache.push_back(cache.back() * b);
        }
        return cache[static_cast<size_t>(e)];
    };

    Polynomial out;
    for (const auto& [mono, coeff] : terms_) {
        Polynomial acc = Polynomial::term(Monomial::unit(), coeff);
        Monomial untouched;
        for (const auto& [var, exp] : mono.exponents()) {
            auto it = bindings.find(var);
            if (it == bindings.end()) {
                untouched = untouched * Monomial::var(var, exp);
                continue;
            }
            const Polynomial& b = it->second;
            if (exp > 0) {
                acc = acc * binding_pow(var, b, exp);
            } else {
                // Negative exponent: the binding must be invertible in the ring.
                if (b.term_count() != 1) {
                    throw NonInvertibleBinding("variable " + var.name() +
                                               " has negative exponent but its binding is not a monomial");
                }
                const auto& [bm, bc] = *b.terms().begin();
                if (bc != 1 && bc != -1) {
                    throw NonInvertibleBinding("variable " + var.name() +
                                               " has negative exponent but its binding has non-unit coefficient");
                }
                BigInt c = (bc == -1 && (exp % 2) != 0) ? BigInt(-1) : BigInt(1);
                acc = acc * Polynomial::term(bm.pow(exp), c);
            }
        }
        out += acc * Polynomial::term(untouched, 1);
    }
    return out;
}

Polynomial Polynomial::coefficient_of(VarId v, int32_t k) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.exponent_of(v) == k) out.add_term(m.without(v), c);
    }
    return out;
}

int32_t Polynomial::degree_in(VarId v) const {
    int32_t deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.exponent_of(v));
    return deg;
}

int32_t Polynomial::min_exponent_in(VarId v) const {
    int32_t deg = 0;
    for (const auto& [m, c] : terms_) deg = std::min(deg, m.exponent_of(v));
    return deg;
}

std::set<VarId> Polynomial::variables() const {
    std::set<VarId> vars;
    for (const auto& [m, c] : terms_) {
        for (const auto& [var, exp] : m.exponents()) vars.insert(var);
    }
    return vars;
}

std::string Polynomial::canonical_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        BigInt a = abs(c);
        if (m.is_unit()) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += m.str();
        }
    }
    return out;
}

Polynomial pow(const Polynomial& base, uint32_t exp) {
    Polynomial out(1);
    for (uint32_t i = 0; i < exp; ++i) out *= base;
    return out;
}

Polynomial exact_div(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw InexactDivision("division by the zero polynomial");
    if (num.is_zero()) return {};
    Polynomial rem = num;
    Polynomial quot;
    const auto& [dm, dc] = *den.terms().begin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms().begin();
        if (!divides(dc, rc)) {
            throw InexactDivision("leading coefficient " + rc.get_str() +
                                  " not divisible by " + dc.get_str());
        }
        Polynomial t = Polynomial::term(rm * dm.pow(-1), div_exact(rc, dc));
        quot += t;
        rem -= t * den;
    }
    return quot;
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
    const size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw Error("determinant: matrix is not square");
    }
    if (n == 0) return Polynomial(1);

    int sign = 1;
    Polynomial prev_pivot(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return {};
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev_pivot);
            }
            m[i][k] = Polynomial();
        }
        prev_pivot = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Polynomial resultant(const Polynomial& a, const Polynomial& b, VarId v) {
    if (a.min_exponent_in(v) < 0 || b.min_exponent_in(v) < 0) {
        throw Error("resultant: negative exponent in " + v.name());
    }
    if (a.is_zero() || b.is_zero()) {
        if (a.degree_in(v) == 0 && b.degree_in(v) == 0) {
            throw DegenerateResultant("resultant: both inputs constant in " + v.name());
        }
        return {};
    }
    const int32_t da = a.degree_in(v);
    const int32_t db = b.degree_in(v);
    if (da == 0 && db == 0) {
        throw DegenerateResultant("resultant: both inputs constant in " + v.name());
    }

    std::vector<Polynomial> ca(static_cast<size_t>(da) + 1);
    std::vector<Polynomial> cb(static_cast<size_t>(db) + 1);
    for (int32_t k = 0; k <= da; ++k) ca[static_cast<size_t>(k)] = a.coefficient_of(v, k);
    for (int32_t k = 0; k <= db; ++k) cb[static_cast<size_t>(k)] = b.coefficient_of(v, k);

    const size_t dim = static_cast<size_t>(da + db);
    std::vector<std::vector<Polynomial>> syl(dim, std::vector<Polynomial>(dim));
    // db rows of a's coefficients (descending), then da rows of b's.
    for (int32_t r = 0; r < db; ++r) {
        for (int32_t k = 0; k <= da; ++k) {
            syl[static_cast<size_t>(r)][static_cast<size_t>(r + da - k)] = ca[static_cast<size_t>(k)];
        }
    }
    for (int32_t r = 0; r < da; ++r) {
        for (int32_t k = 0; k <= db; ++k) {
            syl[static_cast<size_t>(db + r)][static_cast<size_t>(r + db - k)] = cb[static_cast<size_t>(k)];
        }
    }
    return determinant(std::move(syl));
}

}  // namespace hforest
