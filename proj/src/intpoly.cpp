#include "e8/intpoly.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace e8 {

IntPoly IntPoly::from_ints(const std::vector<long>& v) {
    std::vector<mpz_class> c(v.size());
    for (size_t i = 0; i < v.size(); i++) c[i] = v[i];
    return IntPoly(std::move(c));
}

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

bool IntPoly::is_palindromic() const {
    int d = degree();
    for (int k = 0; 2 * k <= d; k++)
        if (coeff(k) != coeff(d - k)) return false;
    return d >= 0;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); i++) {
        if (i < a.c.size()) r[i] += a.c[i];
        if (i < b.c.size()) r[i] += b.c[i];
    }
    return IntPoly(std::move(r));
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); i++) {
        if (i < a.c.size()) r[i] += a.c[i];
        if (i < b.c.size()) r[i] -= b.c[i];
    }
    return IntPoly(std::move(r));
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> r(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); i++)
        for (size_t j = 0; j < b.c.size(); j++)
            r[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(r));
}

IntPoly derivative(const IntPoly& a) {
    if (a.c.size() <= 1) return IntPoly();
    std::vector<mpz_class> r(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); i++) r[i - 1] = a.c[i] * (long)i;
    return IntPoly(std::move(r));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (!b.is_monic()) throw std::invalid_argument("divide_exact: divisor must be monic");
    if (a.is_zero()) return IntPoly();
    int da = a.degree(), db = b.degree();
    if (da < db) throw std::domain_error("divide_exact: division not exact");
    std::vector<mpz_class> rem = a.c;
    std::vector<mpz_class> q(da - db + 1);
    for (int k = da - db; k >= 0; k--) {
        q[k] = rem[k + db];
        if (q[k] == 0) continue;
        for (int j = 0; j < db; j++) rem[k + j] -= q[k] * b.c[j];
        rem[k + db] = 0;
    }
    for (const auto& v : rem)
        if (v != 0) throw std::domain_error("divide_exact: division not exact");
    return IntPoly(std::move(q));
}

IntPoly strip_unit_eigenvalue(const IntPoly& a, int k) {
    IntPoly r = a;
    for (int i = 0; i < k; i++) {
        // synthetic division by (T - 1); remainder is r(1)
        if (r.is_zero()) throw std::domain_error("strip_unit_eigenvalue: zero polynomial");
        int d = r.degree();
        std::vector<mpz_class> q(d);
        mpz_class carry = 0;
        for (int j = d; j >= 1; j--) {
            carry += r.c[j];
            q[j - 1] = carry;
        }
        if (carry + r.c[0] != 0)
            throw std::domain_error("strip_unit_eigenvalue: (T-1) does not divide");
        r = IntPoly(std::move(q));
    }
    return r;
}

IntPoly reciprocal_transform(const IntPoly& a) {
    int d = a.degree();
    if (d < 0 || d % 2 != 0 || !a.is_palindromic())
        throw std::domain_error("reciprocal_transform: need palindromic even degree");
    int m = d / 2;
    // p[k](t) = T^k + T^-k written in t = T + 1/T:  p0 = 2, p1 = t,
    // p[k+1] = t*p[k] - p[k-1].  Then a(T)/T^m = c[m] + sum_{k>0} c[m+k]*p[k].
    std::vector<mpz_class> q(m + 1, 0);
    q[0] = a.coeff(m);
    std::vector<mpz_class> pprev{2};
    std::vector<mpz_class> pcur{0, 1};
    for (int k = 1; k <= m; k++) {
        for (size_t j = 0; j < pcur.size(); j++) q[j] += a.coeff(m + k) * pcur[j];
        if (k < m) {
            std::vector<mpz_class> pnext(k + 2, 0);
            for (size_t j = 0; j < pcur.size(); j++) pnext[j + 1] = pcur[j];
            for (size_t j = 0; j < pprev.size(); j++) pnext[j] -= pprev[j];
            pprev = std::move(pcur);
            pcur = std::move(pnext);
        }
    }
    return IntPoly(std::move(q));
}

std::string poly_to_text(const IntPoly& a) {
    std::ostringstream os;
    int d = a.degree() < 0 ? 0 : a.degree();
    os << "deg " << d << "\n";
    for (int k = 0; k <= d; k++) os << k << " " << a.coeff(k).get_str() << "\n";
    return os.str();
}

IntPoly poly_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    int d;
    if (!(is >> tag >> d) || tag != "deg" || d < 0)
        throw std::runtime_error("poly_from_text: bad header");
    std::vector<mpz_class> c(d + 1);
    for (int k = 0; k <= d; k++) {
        int idx;
        std::string coeff;
        if (!(is >> idx >> coeff) || idx != k)
            throw std::runtime_error("poly_from_text: bad coefficient line");
        c[k] = mpz_class(coeff);
    }
    return IntPoly(std::move(c));
}

void write_poly_file(const std::string& path, const IntPoly& a) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_poly_file: cannot open " + path);
    f << poly_to_text(a);
}

IntPoly read_poly_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("read_poly_file: cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return poly_from_text(ss.str());
}

}  // namespace e8
