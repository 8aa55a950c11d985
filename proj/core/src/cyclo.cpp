#include "grw/cyclo.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace grw::rep {

Cyclo Cyclo::root(int e, int64_t k)
{
    Cyclo r(e);
    int64_t m = ((k % e) + e) % e;
    r.c_[static_cast<size_t>(m)] = 1;
    return r;
}

Cyclo Cyclo::integer(int e, const mpq_class& n)
{
    Cyclo r(e);
    r.c_[0] = n;
    return r;
}

bool Cyclo::is_zero() const
{
    for (const auto& v : c_)
        if (v != 0)
            return false;
    return true;
}

Cyclo& Cyclo::operator+=(const Cyclo& o)
{
    if (e_ != o.e_)
        throw std::invalid_argument("cyclotomic modulus mismatch");
    for (int k = 0; k < e_; ++k)
        c_[k] += o.c_[k];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o)
{
    if (e_ != o.e_)
        throw std::invalid_argument("cyclotomic modulus mismatch");
    for (int k = 0; k < e_; ++k)
        c_[k] -= o.c_[k];
    return *this;
}

Cyclo Cyclo::operator*(const Cyclo& o) const
{
    if (e_ != o.e_)
        throw std::invalid_argument("cyclotomic modulus mismatch");
    Cyclo r(e_);
    for (int i = 0; i < e_; ++i) {
        if (c_[i] == 0)
            continue;
        for (int j = 0; j < e_; ++j) {
            if (o.c_[j] == 0)
                continue;
            r.c_[(i + j) % e_] += c_[i] * o.c_[j];
        }
    }
    return r;
}

Cyclo Cyclo::operator*(const mpq_class& s) const
{
    Cyclo r(e_);
    for (int k = 0; k < e_; ++k)
        r.c_[k] = c_[k] * s;
    return r;
}

Cyclo Cyclo::conj() const
{
    return subst_power(e_ - 1);
}

Cyclo Cyclo::subst_power(int64_t k) const
{
    Cyclo r(e_);
    for (int i = 0; i < e_; ++i) {
        if (c_[i] == 0)
            continue;
        r.c_[static_cast<size_t>((int64_t(i) * k % e_ + e_) % e_)] += c_[i];
    }
    return r;
}

namespace {

// Exact division of integer polynomials (quotient must be exact).
std::vector<mpz_class> poly_divide(std::vector<mpz_class> num, const std::vector<mpz_class>& den)
{
    std::vector<mpz_class> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    while (num.size() >= den.size()) {
        size_t shift = num.size() - den.size();
        mpz_class lead = num.back() / den.back();
        q[shift] = lead;
        for (size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= lead * den[i];
        while (!num.empty() && num.back() == 0)
            num.pop_back();
        if (num.empty())
            break;
    }
    for (const auto& c : num)
        if (c != 0)
            throw std::logic_error("inexact polynomial division");
    return q;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_poly(int e)
{
    static std::map<int, std::vector<mpz_class>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(e);
    if (it != cache.end())
        return it->second;

    // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d, computed bottom-up.
    for (int d = 1; d <= e; ++d) {
        if (e % d != 0 || cache.count(d))
            continue;
        std::vector<mpz_class> num(static_cast<size_t>(d) + 1, 0);
        num[0] = -1;
        num[static_cast<size_t>(d)] = 1;
        for (int dd = 1; dd < d; ++dd)
            if (d % dd == 0)
                num = poly_divide(std::move(num), cache.at(dd));
        cache.emplace(d, std::move(num));
    }
    return cache.at(e);
}

std::vector<mpq_class> Cyclo::primitive_part() const
{
    const auto& phi = cyclotomic_poly(e_);
    size_t deg = phi.size() - 1;  // phi is monic
    std::vector<mpq_class> rem(c_.begin(), c_.end());
    while (rem.size() > deg) {
        size_t shift = rem.size() - phi.size();
        mpq_class lead = rem.back();
        for (size_t i = 0; i < phi.size(); ++i)
            rem[shift + i] -= lead * mpq_class(phi[i]);
        while (rem.size() > 1 && rem.back() == 0)
            rem.pop_back();
        if (rem.size() <= deg)
            break;
    }
    rem.resize(deg == 0 ? 1 : deg, 0);
    return rem;
}

bool Cyclo::is_rational_value(mpq_class& q) const
{
    auto rem = primitive_part();
    q = rem[0];
    for (size_t i = 1; i < rem.size(); ++i)
        if (rem[i] != 0)
            return false;
    return true;
}

std::string Cyclo::str() const
{
    std::ostringstream os;
    bool any = false;
    for (int k = 0; k < e_; ++k) {
        if (c_[k] == 0)
            continue;
        if (any)
            os << " + ";
        any = true;
        os << c_[k].get_str();
        if (k > 0)
            os << "*z^" << k;
    }
    return any ? os.str() : "0";
}

}  // namespace grw::rep
