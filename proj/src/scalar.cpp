#include "lca/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace lca {

double &float_tol() {
    static double tol = 1e-9;
    return tol;
}

namespace {

using Poly = std::vector<Rat>;  // ascending coefficients

void trim(Poly &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Euclidean division of polynomials over Q; returns quotient, leaves
// remainder in a (must be exact when used on cyclotomic factors).
Poly poly_div(Poly a, const Poly &b) {
    Poly q;
    trim(a);
    if (b.empty()) throw NumericError("polynomial division by zero");
    if (a.size() < b.size()) return {};
    q.assign(a.size() - b.size() + 1, Rat(0));
    for (long i = (long)a.size() - (long)b.size(); i >= 0; --i) {
        Rat f = a[i + b.size() - 1] / b.back();
        q[i] = f;
        if (f != 0)
            for (size_t j = 0; j < b.size(); ++j) a[i + j] -= f * b[j];
    }
    trim(a);
    if (!a.empty()) throw NumericError("inexact polynomial division");
    return q;
}

int euler_phi(int n) {
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

struct FieldData {
    int n = 1;
    int deg = 1;
    Poly phi;                        // cyclotomic polynomial
    std::vector<Poly> rows;          // zeta^k mod phi, k in [0, n)
};

std::map<int, FieldData> &field_cache() {
    static std::map<int, FieldData> cache;
    return cache;
}
std::mutex &field_mutex() {
    static std::mutex m;
    return m;
}

Poly cyclotomic_rec(int n, std::map<int, Poly> &memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Poly p(n + 1, Rat(0));
    p[0] = -1;
    p[n] = 1;  // x^n - 1
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div(p, cyclotomic_rec(d, memo));
    memo[n] = p;
    return p;
}

const FieldData &field(int n) {
    if (n < 1) throw NumericError("bad conductor");
    std::lock_guard<std::mutex> lock(field_mutex());
    auto &cache = field_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    FieldData fd;
    fd.n = n;
    static std::map<int, Poly> memo;
    fd.phi = cyclotomic_rec(n, memo);
    fd.deg = (int)fd.phi.size() - 1;
    if (fd.deg != euler_phi(n)) throw NumericError("cyclotomic degree mismatch");

    fd.rows.resize(n);
    Poly cur(1, Rat(1));  // zeta^0
    for (int k = 0; k < n; ++k) {
        Poly row = cur;
        row.resize(fd.deg, Rat(0));
        fd.rows[k] = row;
        // multiply by zeta, reduce
        Poly nxt(cur.size() + 1, Rat(0));
        for (size_t i = 0; i < cur.size(); ++i) nxt[i + 1] = cur[i];
        trim(nxt);
        while ((int)nxt.size() > fd.deg) {
            Rat lead = nxt.back();
            size_t top = nxt.size() - 1;
            for (int i = 0; i <= fd.deg; ++i)
                nxt[top - fd.deg + i] -= lead * fd.phi[i];
            trim(nxt);
        }
        cur = nxt;
    }
    return cache.emplace(n, std::move(fd)).first->second;
}

Poly reduce_mod(const Poly &raw, const FieldData &fd) {
    Poly out(fd.deg, Rat(0));
    for (size_t k = 0; k < raw.size(); ++k) {
        if (raw[k] == 0) continue;
        if ((int)k < fd.deg) {
            out[k] += raw[k];
            continue;
        }
        const Poly &row = fd.rows[k % fd.n];
        for (int i = 0; i < fd.deg; ++i)
            if (row[i] != 0) out[i] += raw[k] * row[i];
    }
    return out;
}

// extended gcd over Q[x]: returns (g, u) with u*a = g mod b, g constant
// when gcd(a, b) = 1.
std::pair<Poly, Poly> ext_gcd_mod(const Poly &a, const Poly &b) {
    Poly r0 = b, r1 = a;
    Poly u0 = {}, u1 = {Rat(1)};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        // quotient of r0 by r1
        Poly q;
        Poly rem = r0;
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - r1.size() + 1, Rat(0));
            for (long i = (long)rem.size() - (long)r1.size(); i >= 0; --i) {
                Rat f = rem[i + r1.size() - 1] / r1.back();
                q[i] = f;
                if (f != 0)
                    for (size_t j = 0; j < r1.size(); ++j) rem[i + j] -= f * r1[j];
            }
            trim(rem);
        }
        // u2 = u0 - q*u1
        Poly u2 = u0;
        u2.resize(std::max(u2.size(), q.size() + u1.size()), Rat(0));
        for (size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0)
                for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        trim(u2);
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = u2;
    }
    return {r0, u0};
}

}  // namespace

namespace cyclo {

const std::vector<Rat> &cyclotomic_poly(int n) { return field(n).phi; }
int degree(int n) { return field(n).deg; }
const std::vector<Rat> &power_row(int n, long k) {
    long r = k % n;
    if (r < 0) r += n;
    return field(n).rows[r];
}

}  // namespace cyclo

std::shared_ptr<const ExactVal> Scalar::zero_exact() {
    static auto z = std::make_shared<const ExactVal>(ExactVal{1, {Rat(0)}, true});
    return z;
}

Scalar Scalar::make_exact(int n, std::vector<Rat> c) {
    // shrink to conductor 1 when the value is rational and n > 1
    Scalar s;
    s.kind_ = Kind::Exact;
    bool rat = true;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) {
            rat = false;
            break;
        }
    if (rat && n != 1) {
        Rat c0 = c.empty() ? Rat(0) : c[0];
        bool z = c0 == 0;
        s.e_ = std::make_shared<const ExactVal>(ExactVal{1, {std::move(c0)}, z});
    } else {
        bool z = rat && (c.empty() || c[0] == 0);
        s.e_ = std::make_shared<const ExactVal>(ExactVal{n, std::move(c), z});
    }
    return s;
}

Scalar Scalar::rational(const Rat &r) {
    Rat rc = r;
    rc.canonicalize();
    return make_exact(1, {rc});
}

Scalar Scalar::zeta(int conductor, long power) {
    const auto &row = cyclo::power_row(conductor, power);
    return make_exact(conductor, row);
}

Scalar Scalar::complex_num(std::complex<double> z) {
    Scalar s;
    s.kind_ = Kind::Float;
    s.f_ = z;
    s.e_.reset();
    return s;
}

Scalar Scalar::of_backend_zero(Backend b) {
    return b == Backend::Exact ? Scalar() : complex_num({0.0, 0.0});
}
Scalar Scalar::of_backend_one(Backend b) {
    return b == Backend::Exact ? integer(1) : complex_num({1.0, 0.0});
}

bool Scalar::is_zero() const {
    if (kind_ == Kind::Exact) return e_->zero;
    return std::abs(f_) <= float_tol();
}

bool Scalar::is_one() const { return *this == of_backend_one(backend()); }

bool Scalar::is_rational() const {
    if (kind_ != Kind::Exact) return false;
    for (size_t i = 1; i < e_->c.size(); ++i)
        if (e_->c[i] != 0) return false;
    return true;
}

Rat Scalar::rational_value() const {
    if (!is_rational()) throw NumericError("scalar is not rational");
    return e_->c.empty() ? Rat(0) : e_->c[0];
}

std::complex<double> Scalar::to_complex() const {
    if (kind_ == Kind::Float) return f_;
    std::complex<double> acc{0.0, 0.0};
    const double two_pi = 6.283185307179586476925286766559;
    for (size_t k = 0; k < e_->c.size(); ++k) {
        if (e_->c[k] == 0) continue;
        double a = e_->c[k].get_d();
        double ang = two_pi * double(k) / double(e_->n);
        acc += a * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

Scalar lift_to(const Scalar &s, int n) {
    // embed Q(zeta_m) into Q(zeta_n), m | n; always returns the full
    // length-phi(n) coefficient vector (callers rely on that)
    int m = s.e_->n;
    if (m == n) return s;
    std::vector<Rat> out(cyclo::degree(n), Rat(0));
    long step = n / m;
    for (size_t k = 0; k < s.e_->c.size(); ++k) {
        if (s.e_->c[k] == 0) continue;
        const auto &row = cyclo::power_row(n, (long)k * step);
        for (size_t i = 0; i < out.size(); ++i) out[i] += s.e_->c[k] * row[i];
    }
    Scalar r;
    r.e_ = std::make_shared<const ExactVal>(ExactVal{n, std::move(out), s.e_->zero});
    return r;
}

Scalar Scalar::operator+(const Scalar &o) const {
    if (kind_ == Kind::Float || o.kind_ == Kind::Float)
        return complex_num(to_complex() + o.to_complex());
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (e_->n == o.e_->n) {
        std::vector<Rat> c = e_->c;
        c.resize(std::max(c.size(), o.e_->c.size()), Rat(0));
        for (size_t i = 0; i < o.e_->c.size(); ++i) c[i] += o.e_->c[i];
        return make_exact(e_->n, std::move(c));
    }
    int n = std::lcm(e_->n, o.e_->n);
    Scalar a = lift_to(*this, n), b = lift_to(o, n);
    std::vector<Rat> c = a.e_->c;
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.e_->c[i];
    return make_exact(n, std::move(c));
}

Scalar Scalar::operator-(const Scalar &o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    if (kind_ == Kind::Float) return complex_num(-f_);
    std::vector<Rat> c = e_->c;
    for (auto &x : c) x = -x;
    return make_exact(e_->n, std::move(c));
}

Scalar Scalar::operator*(const Scalar &o) const {
    if (kind_ == Kind::Float || o.kind_ == Kind::Float)
        return complex_num(to_complex() * o.to_complex());
    if (is_zero() || o.is_zero()) return Scalar();
    // rational factors just scale coefficients, no lift or reduction needed
    if (e_->n == 1 || o.e_->n == 1) {
        const Scalar &r = e_->n == 1 ? *this : o;
        const Scalar &s = e_->n == 1 ? o : *this;
        const Rat &f = r.e_->c[0];
        if (f == 1) return s;
        if (f == -1) return -s;
        std::vector<Rat> c = s.e_->c;
        for (auto &x : c) x *= f;
        return make_exact(s.e_->n, std::move(c));
    }
    if (e_->n == o.e_->n) {
        const auto &x = e_->c;
        const auto &y = o.e_->c;
        std::vector<Rat> raw(x.size() + y.size() - 1, Rat(0));
        for (size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < y.size(); ++j)
                if (y[j] != 0) raw[i + j] += x[i] * y[j];
        }
        return make_exact(e_->n, reduce_mod(raw, field(e_->n)));
    }
    int n = std::lcm(e_->n, o.e_->n);
    Scalar a = lift_to(*this, n), b = lift_to(o, n);
    const auto &x = a.e_->c;
    const auto &y = b.e_->c;
    std::vector<Rat> raw(x.size() + y.size() - 1, Rat(0));
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) raw[i + j] += x[i] * y[j];
    }
    return make_exact(n, reduce_mod(raw, field(n)));
}

Scalar Scalar::inv() const {
    if (kind_ == Kind::Float) {
        if (std::abs(f_) <= float_tol()) throw SingularMatrix("division by (near) zero");
        return complex_num(1.0 / f_);
    }
    if (is_zero()) throw SingularMatrix("division by zero");
    if (is_rational()) return rational(Rat(1) / e_->c[0]);
    const FieldData &fd = field(e_->n);
    Poly a = e_->c;
    trim(a);
    auto [g, u] = ext_gcd_mod(a, fd.phi);
    if (g.size() != 1) throw NumericError("non-invertible cyclotomic element");
    for (auto &x : u) x /= g[0];
    return make_exact(e_->n, reduce_mod(u, fd));
}

Scalar Scalar::operator/(const Scalar &o) const {
    if (kind_ == Kind::Float || o.kind_ == Kind::Float)
        return complex_num(to_complex() / o.to_complex());
    return *this * o.inv();
}

Scalar Scalar::conj() const {
    if (kind_ == Kind::Float) return complex_num(std::conj(f_));
    std::vector<Rat> raw;  // substitute zeta -> zeta^{n-1}
    const FieldData &fd = field(e_->n);
    std::vector<Rat> out(fd.deg, Rat(0));
    for (size_t k = 0; k < e_->c.size(); ++k) {
        if (e_->c[k] == 0) continue;
        const auto &row = cyclo::power_row(e_->n, (long)(e_->n - k) % e_->n);
        for (int i = 0; i < fd.deg; ++i) out[i] += e_->c[k] * row[i];
    }
    return make_exact(e_->n, std::move(out));
}

Scalar Scalar::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    Scalar acc = of_backend_one(backend()), base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar &o) const {
    if (kind_ == Kind::Exact && o.kind_ == Kind::Exact) {
        int n = std::lcm(e_->n, o.e_->n);
        Scalar a = lift_to(*this, n), b = lift_to(o, n);
        return a.e_->c == b.e_->c;
    }
    return std::abs(to_complex() - o.to_complex()) <= float_tol();
}

std::string Scalar::str() const {
    if (kind_ == Kind::Float) {
        std::ostringstream os;
        os << "(" << f_.real() << "," << f_.imag() << ")";
        return os.str();
    }
    std::ostringstream os;
    bool first = true;
    for (long k = (long)e_->c.size() - 1; k >= 0; --k) {
        const Rat &a = e_->c[k];
        if (a == 0) continue;
        Rat mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit_coeff = (mag == 1) && k > 0;
        if (!unit_coeff) os << mag.get_str();
        if (k > 0) {
            if (!unit_coeff) os << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

Scalar Scalar::parse(const std::string &s, int conductor) {
    std::vector<Rat> coeffs(cyclo::degree(conductor), Rat(0));
    std::vector<Rat> raw(conductor, Rat(0));
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    skip_ws();
    if (i == s.size()) throw NumericError("empty scalar string");
    bool any = false;
    while (i < s.size()) {
        skip_ws();
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw NumericError("malformed scalar string: " + s);
        }
        // coefficient (optional), then optional *z^k or z^k
        std::string num;
        while (i < s.size() && (std::isdigit((unsigned char)s[i]) || s[i] == '/')) num += s[i++];
        skip_ws();
        Rat coeff = num.empty() ? Rat(1) : Rat(num);
        coeff.canonicalize();
        long power = 0;
        if (i < s.size() && (s[i] == '*' || s[i] == 'z')) {
            if (s[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i >= s.size() || s[i] != 'z') throw NumericError("malformed scalar string: " + s);
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string p;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) p += s[i++];
                if (p.empty()) throw NumericError("malformed scalar string: " + s);
                power = std::stol(p);
            }
        } else if (num.empty()) {
            throw NumericError("malformed scalar string: " + s);
        }
        raw[power % conductor] += sign * coeff;
        any = true;
        skip_ws();
    }
    (void)coeffs;
    return make_exact(conductor, reduce_mod(raw, field(conductor)));
}

int conductor_for_sqrt(unsigned long m, int base) {
    int n = base;
    unsigned long s = m;
    // strip square factors
    for (unsigned long p = 2; p * p <= s; ++p)
        while (s % (p * p) == 0) s /= p * p;
    unsigned long t = s;
    for (unsigned long p = 2; p * p <= t; ++p) {
        if (t % p == 0) {
            while (t % p == 0) t /= p;
            n = (int)std::lcm<long>(n, p == 2 ? 8 : 4 * (long)p);
        }
    }
    if (t > 1) n = (int)std::lcm<long>(n, 4 * (long)t);
    return n;
}

Scalar sqrt_integer(unsigned long m, int conductor, Backend b) {
    if (b == Backend::Float) return Scalar::complex_num({std::sqrt((double)m), 0.0});
    if (m == 0) return Scalar();
    unsigned long k = 1, s = m;
    for (unsigned long p = 2; p * p <= s; ++p)
        while (s % (p * p) == 0) {
            s /= p * p;
            k *= p;
        }
    Scalar out = Scalar::integer((long)k);
    unsigned long t = s;
    auto sqrt_prime = [&](unsigned long p) -> Scalar {
        if (p == 2) {
            if (conductor % 8 != 0)
                throw NumericError("conductor lacks sqrt(2)");
            return Scalar::zeta(conductor, conductor / 8) +
                   Scalar::zeta(conductor, -(long)(conductor / 8));
        }
        if (conductor % (4 * p) != 0)
            throw NumericError("conductor lacks sqrt of prime");
        Scalar g = Scalar();
        for (unsigned long x = 0; x < p; ++x)
            g += Scalar::zeta(conductor, (long)((x * x % p) * (conductor / p)));
        if (p % 4 == 1) return g;
        // p = 3 mod 4: Gauss sum equals i*sqrt(p)
        return g / Scalar::zeta(conductor, conductor / 4);
    };
    for (unsigned long p = 2; p * p <= t; ++p)
        if (t % p == 0) {
            t /= p;
            out = out * sqrt_prime(p);
        }
    if (t > 1) out = out * sqrt_prime(t);
    return out;
}

}  // namespace lca
