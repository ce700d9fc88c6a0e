#include "eg/poly.hpp"

#include <algorithm>
#include <sstream>

#include "eg/errors.hpp"

namespace eg {

Monomial Monomial::x(int i, int e) {
    Monomial m;
    if (e != 0) m.xe.emplace_back(i, e);
    return m;
}

Monomial Monomial::y(int i, int e) {
    Monomial m;
    if (e != 0) m.ye.emplace_back(i, e);
    return m;
}

namespace {
std::vector<std::pair<int, int>> merge_exponents(
    const std::vector<std::pair<int, int>>& a,
    const std::vector<std::pair<int, int>>& b) {
    std::vector<std::pair<int, int>> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e != 0) out.emplace_back(a[i].first, e);
            ++i;
            ++j;
        }
    }
    return out;
}

// Significance order for division: x-variables by ascending index, then
// y-variables. First differing exponent decides; bigger exponent wins.
// This order is multiplicative, so leading terms multiply.
int lex_compare(const std::vector<std::pair<int, int>>& a,
                const std::vector<std::pair<int, int>>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i < a.size() && j < b.size() && a[i].first == b[j].first) {
            if (a[i].second != b[j].second) return a[i].second < b[j].second ? -1 : 1;
            ++i;
            ++j;
        } else if (j == b.size() ||
                   (i < a.size() && a[i].first < b[j].first)) {
            return 1;  // a has an exponent at a more significant variable
        } else {
            return -1;
        }
    }
    return 0;
}

int lex_compare(const Monomial& a, const Monomial& b) {
    int c = lex_compare(a.xe, b.xe);
    if (c != 0) return c;
    return lex_compare(a.ye, b.ye);
}

bool exponents_divide(const std::vector<std::pair<int, int>>& den,
                      const std::vector<std::pair<int, int>>& num) {
    size_t i = 0;
    for (const auto& [idx, e] : den) {
        while (i < num.size() && num[i].first < idx) ++i;
        if (i == num.size() || num[i].first != idx || num[i].second < e) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> exponents_quotient(
    const std::vector<std::pair<int, int>>& num,
    const std::vector<std::pair<int, int>>& den) {
    std::vector<std::pair<int, int>> neg;
    neg.reserve(den.size());
    for (const auto& [idx, e] : den) neg.emplace_back(idx, -e);
    return merge_exponents(num, neg);
}
}  // namespace

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial m;
    m.xe = merge_exponents(xe, rhs.xe);
    m.ye = merge_exponents(ye, rhs.ye);
    return m;
}

long Monomial::degree() const {
    long d = 0;
    for (const auto& [idx, e] : xe) d += e;
    for (const auto& [idx, e] : ye) d += e;
    return d;
}

long Polynomial::total_degree() const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Int Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw NotDivisible("division by zero polynomial");
    // Leading term of q under the division order.
    auto lead = [](const Polynomial& f) {
        auto best = f.terms_.begin();
        for (auto it = std::next(f.terms_.begin()); it != f.terms_.end(); ++it)
            if (lex_compare(it->first, best->first) > 0) best = it;
        return best;
    };
    auto lq = lead(q);
    Polynomial r = p, result;
    while (!r.is_zero()) {
        auto lr = lead(r);
        if (!exponents_divide(lq->first.xe, lr->first.xe) ||
            !exponents_divide(lq->first.ye, lr->first.ye) ||
            lr->second % lq->second != 0)
            throw NotDivisible("remainder in exact division");
        Monomial qm;
        qm.xe = exponents_quotient(lr->first.xe, lq->first.xe);
        qm.ye = exponents_quotient(lr->first.ye, lq->first.ye);
        Polynomial t(qm, lr->second / lq->second);
        result += t;
        r -= t * q;
    }
    return result;
}

Polynomial specialize_x_to_y(const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms_) {
        Monomial nm;
        nm.ye = m.ye;
        for (const auto& [idx, e] : m.xe) {
            std::vector<std::pair<int, int>> one{{idx, e}};
            nm.ye = merge_exponents(nm.ye, one);
        }
        out.add_term(nm, c);
    }
    return out;
}

namespace {
std::vector<std::pair<int, int>> reflect_exponents(
    const std::vector<std::pair<int, int>>& e, long& parity) {
    std::vector<std::pair<int, int>> out;
    out.reserve(e.size());
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        out.emplace_back(1 - it->first, it->second);
        parity += it->second;
    }
    return out;
}
}  // namespace

Polynomial omega1(const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms_) {
        long parity = 0;
        Monomial nm;
        nm.xe = reflect_exponents(m.xe, parity);
        nm.ye = reflect_exponents(m.ye, parity);
        out.add_term(nm, parity % 2 == 0 ? c : -c);
    }
    return out;
}

Polynomial substitute_x_indices(const Polynomial& p, const std::map<int, int>& repl) {
    Polynomial out;
    for (const auto& [m, c] : p.terms_) {
        Monomial nm;
        nm.ye = m.ye;
        for (const auto& [idx, e] : m.xe) {
            auto it = repl.find(idx);
            int ni = it == repl.end() ? idx : it->second;
            std::vector<std::pair<int, int>> one{{ni, e}};
            nm.xe = merge_exponents(nm.xe, one);
        }
        out.add_term(nm, c);
    }
    return out;
}

Polynomial set_x_to_zero(const Polynomial& p, const std::vector<int>& idx) {
    Polynomial out;
    for (const auto& [m, c] : p.terms_) {
        bool kill = false;
        for (const auto& [i, e] : m.xe)
            if (std::find(idx.begin(), idx.end(), i) != idx.end()) kill = true;
        if (!kill) out.add_term(m, c);
    }
    return out;
}

Polynomial set_all_y_to_zero(const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms_)
        if (m.ye.empty()) out.add_term(m, c);
    return out;
}

namespace {
void print_var(std::ostream& os, char alph, int idx, int e) {
    os << alph << '_';
    if (idx < 0)
        os << '(' << idx << ')';
    else
        os << idx;
    if (e != 1) os << '^' << e;
}
}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1) && !m.is_one();
        if (!unit) os << a;
        bool sep = !unit;
        for (const auto& [idx, e] : m.xe) {
            if (sep) os << '*';
            print_var(os, 'x', idx, e);
            sep = true;
        }
        for (const auto& [idx, e] : m.ye) {
            if (sep) os << '*';
            print_var(os, 'y', idx, e);
            sep = true;
        }
    }
    return os.str();
}

Polynomial x_minus_y(int i, int j) { return Polynomial::x(i) - Polynomial::y(j); }

LinearForm::LinearForm(int i_, int j_) : i(i_), j(j_) {
    if (i == j || !ZOrder::less(i, j))
        throw TypeViolation("linear form indices must satisfy i < j in ZOrder");
}

FormType LinearForm::classify() const {
    if (0 < i && i < j) return FormType::Type1;
    if (i < j && j <= 0) return FormType::Type2;
    return FormType::Type3;  // j <= 0 < i
}

Polynomial LinearForm::expand() const { return Polynomial::y(i) - Polynomial::y(j); }

LinearForm omega1_form(const LinearForm& f) { return LinearForm(1 - f.j, 1 - f.i); }

FactorProduct::FactorProduct(std::vector<LinearForm> fs) : factors(std::move(fs)) {
    std::sort(factors.begin(), factors.end());
}

Polynomial FactorProduct::expand() const {
    Polynomial out = Polynomial::constant(1);
    for (const auto& f : factors) out = out * f.expand();
    return out;
}

FactorProduct FactorProduct::operator*(const FactorProduct& rhs) const {
    std::vector<LinearForm> fs = factors;
    fs.insert(fs.end(), rhs.factors.begin(), rhs.factors.end());
    return FactorProduct(std::move(fs));
}

Polynomial Certificate::expand() const {
    Polynomial out;
    for (const auto& s : summands) out += s.expand();
    return out;
}

Certificate Certificate::operator+(const Certificate& rhs) const {
    Certificate out = *this;
    out.summands.insert(out.summands.end(), rhs.summands.begin(), rhs.summands.end());
    return out;
}

Certificate Certificate::operator*(const Certificate& rhs) const {
    Certificate out;
    out.summands.reserve(summands.size() * rhs.summands.size());
    for (const auto& a : summands)
        for (const auto& b : rhs.summands) out.summands.push_back(a * b);
    return out;
}

long Certificate::empty_summand_count() const {
    long n = 0;
    for (const auto& s : summands)
        if (s.factors.empty()) ++n;
    return n;
}

AndersonReport anderson_check(const Certificate& c) {
    for (size_t k = 0; k < c.summands.size(); ++k) {
        const auto& fs = c.summands[k].factors;
        for (size_t a = 0; a < fs.size();) {
            size_t b = a;
            while (b < fs.size() && fs[b] == fs[a]) ++b;
            long mult = static_cast<long>(b - a);
            long cap = fs[a].classify() == FormType::Type3 ? 2 : 1;
            if (mult > cap) {
                std::ostringstream os;
                os << "summand " << k << ": factor (y_" << fs[a].i << " - y_"
                   << fs[a].j << ") has multiplicity " << mult << " > " << cap;
                return {false, os.str()};
            }
            a = b;
        }
    }
    return {};
}

std::string to_string(const Certificate& c) {
    std::ostringstream os;
    if (c.summands.empty()) return "0";
    for (size_t k = 0; k < c.summands.size(); ++k) {
        if (k) os << " + ";
        const auto& fs = c.summands[k].factors;
        if (fs.empty()) {
            os << "1";
            continue;
        }
        for (const auto& f : fs) os << "(y_" << f.i << " - y_" << f.j << ")";
    }
    return os.str();
}

}  // namespace eg
