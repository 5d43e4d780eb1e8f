#include "spectre/rational.hpp"

#include <stdexcept>

namespace spectre {

Rat::Rat(Int n, Int d) : Rat(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d))) {}

Rat::Rat(const mpz_class& n, const mpz_class& d)
{
    if (d == 0)
        throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.v_ == 0)
        throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::parse(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(mpz_class(s, 10));
        return Rat(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

std::string Rat::str() const
{
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::decimal(int digits) const
{
    if (digits < 0)
        digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round half away from zero
    mpz_class n = abs(v_.get_num()) * scale * 2 + v_.get_den();
    mpz_class q = n / (v_.get_den() * 2);
    std::string body = q.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<size_t>(digits))
            body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<size_t>(digits), ".");
    }
    bool zero = (q == 0);
    return (sign() < 0 && !zero ? "-" : "") + body;
}

mpz_class floor(const Rat& x)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
    return q;
}

Rat frac(const Rat& x) { return x - Rat(floor(x)); }

Rat pow(const Rat& x, unsigned k)
{
    Rat r(1);
    for (unsigned i = 0; i < k; ++i)
        r *= x;
    return r;
}

} // namespace spectre
