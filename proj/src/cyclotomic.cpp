#include "realchar/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

namespace realchar {

namespace {

std::vector<std::pair<int, int>> factorize(int n) {
    std::vector<std::pair<int, int>> f;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

int ipow(int b, int e) {
    int r = 1;
    while (e--) r *= b;
    return r;
}

long gcd_l(long a, long b) { return std::gcd(a, b); }

long inv_mod(long a, long m) {
    long t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
    while (newr != 0) {
        long q = r / newr;
        std::swap(t, newt); newt -= q * t;
        std::swap(r, newr); newr -= q * r;
    }
    if (r != 1) throw std::logic_error("inv_mod: not invertible");
    return ((t % m) + m) % m;
}

// Zumbroich basis membership of the p-local coordinate jp of an exponent
// at conductor n, where pk = p^nu is the full p-power dividing n.
bool p_part_valid(int jp, int p, int pk) {
    if (p == 2) {
        if (pk == 2) return jp == 0;
        return jp < pk / 2;
    }
    int pk1 = pk / p;
    int b = jp % pk1;                     // lower digits, balanced representative
    if (b > (pk1 - 1) / 2) b -= pk1;
    int a = ((jp - b) / pk1) % p;
    if (a < 0) a += p;
    return a != 0;
}

// Rewrite the coefficient map so every exponent lies in the Zumbroich basis
// of Q(zeta_n). Uses the relations sum_{c=0}^{p-1} zeta_n^(j + c n/p) = 0.
void reduce_to_basis(int n, std::map<int, Rational>& m) {
    for (auto [p, nu] : factorize(n)) {
        int pk = ipow(p, nu);
        int np = n / p;
        // local coordinate of exponent j at p: j * inv(n/pk) mod pk
        long u = (n / pk == 1) ? 1 : inv_mod(n / pk, pk);
        std::map<int, Rational> out;
        for (auto& [j, c] : m) {
            if (c == 0) continue;
            int jp = static_cast<int>(((long)(j % pk) * u) % pk);
            if (p_part_valid(jp, p, pk)) {
                out[j] += c;
            } else if (p == 2) {
                out[(j + n / 2) % n] -= c;
            } else {
                for (int t = 1; t < p; ++t) out[(j + t * np) % n] -= c;
            }
        }
        m = std::move(out);
    }
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == 0) it = m.erase(it);
        else ++it;
    }
}

}  // namespace

void Cyclotomic::assign_rational(const Rational& v) {
    cond_ = 1;
    c_.clear();
    if (v != 0) c_[0] = v;
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
    if (n <= 0) throw std::invalid_argument("root_of_unity: conductor must be positive");
    long kk = k % n;
    if (kk < 0) kk += n;
    Cyclotomic z;
    z.canonicalize(n, {{static_cast<int>(kk), Rational(1)}});
    return z;
}

Cyclotomic Cyclotomic::from_terms(int n, const std::map<int, Rational>& terms) {
    if (n <= 0) throw std::invalid_argument("from_terms: conductor must be positive");
    std::map<int, Rational> m;
    for (auto& [j, c] : terms) {
        int jj = j % n;
        if (jj < 0) jj += n;
        m[jj] += c;
    }
    Cyclotomic z;
    z.canonicalize(n, std::move(m));
    return z;
}

// Full canonicalization: basis reduction at n, then conductor descent.
void Cyclotomic::canonicalize(int n, std::map<int, Rational> m) {
    reduce_to_basis(n, m);
    bool descended = true;
    while (descended && !m.empty() && n > 1) {
        descended = false;
        for (auto [p, nu] : factorize(n)) {
            if (p == 2 && nu == 1) {
                // Q(zeta_n) = Q(zeta_{n/2}) for n = 2 mod 4: zeta_n = -zeta_d^b
                int d = n / 2;
                long b = ((1 - (long)d) / 2) % d;
                if (b < 0) b += d;
                std::map<int, Rational> out;
                for (auto& [j, c] : m) {
                    int jj = static_cast<int>(((long)j * b) % d);
                    if (j % 2) out[jj] -= c;
                    else out[jj] += c;
                }
                n = d;
                reduce_to_basis(n, out);
                m = std::move(out);
                descended = true;
                break;
            }
            if (nu >= 2) {
                bool all = std::all_of(m.begin(), m.end(),
                                       [p](auto& kv) { return kv.first % p == 0; });
                if (!all) continue;
                std::map<int, Rational> out;
                for (auto& [j, c] : m) out[j / p] += c;
                n = n / p;
                reduce_to_basis(n, out);
                m = std::move(out);
                descended = true;
                break;
            }
            // p odd, p || n: the value descends iff for every residue class
            // mod n/p the p-1 fan coefficients are all equal.
            int np = n / p;
            std::map<int, std::vector<std::pair<int, Rational>>> fans;
            for (auto& [j, c] : m) fans[j % np].push_back({j, c});
            bool ok = true;
            for (auto& [r, terms] : fans) {
                if ((int)terms.size() != p - 1) { ok = false; break; }
                for (auto& t : terms)
                    if (t.second != terms[0].second) { ok = false; break; }
                if (!ok) break;
            }
            if (!ok) continue;
            std::map<int, Rational> out;
            for (auto& [r, terms] : fans) {
                // the fan sums to -lambda * zeta_n^{j0} with j0 = 0 mod p, j0 = r mod n/p
                long j0 = -1;
                for (long cand = r; cand < n; cand += np)
                    if (cand % p == 0) { j0 = cand; break; }
                if (j0 < 0) throw std::logic_error("cyclotomic: fan descent failed");
                out[static_cast<int>(j0 / p)] -= terms[0].second;
            }
            n = np;
            reduce_to_basis(n, out);
            m = std::move(out);
            descended = true;
            break;
        }
    }
    if (m.empty()) n = 1;
    cond_ = n;
    c_ = std::move(m);
}

std::optional<Rational> Cyclotomic::as_rational() const {
    if (cond_ != 1) return std::nullopt;
    if (c_.empty()) return Rational(0);
    return c_.begin()->second;
}

std::optional<Integer> Cyclotomic::as_integer() const {
    auto q = as_rational();
    if (!q || !is_integer(*q)) return std::nullopt;
    return numerator(*q);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& [j, c] : r.c_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (cond_ == 1 && o.cond_ == 1) {
        Cyclotomic r;
        r.assign_rational(as_rational().value() + o.as_rational().value());
        return r;
    }
    int n = static_cast<int>(std::lcm((long)cond_, (long)o.cond_));
    std::map<int, Rational> m;
    int s1 = n / cond_, s2 = n / o.cond_;
    for (auto& [j, c] : c_) m[j * s1] += c;
    for (auto& [j, c] : o.c_) m[j * s2] += c;
    Cyclotomic r;
    r.canonicalize(n, std::move(m));
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (is_zero() || o.is_zero()) return Cyclotomic();
    if (cond_ == 1 && o.cond_ == 1) {
        Cyclotomic r;
        r.assign_rational(as_rational().value() * o.as_rational().value());
        return r;
    }
    if (cond_ == 1) {  // rational scalar
        Cyclotomic r = o;
        const Rational& s = c_.begin()->second;
        for (auto& [j, c] : r.c_) c *= s;
        return r;
    }
    if (o.cond_ == 1) return o * *this;
    int n = static_cast<int>(std::lcm((long)cond_, (long)o.cond_));
    int s1 = n / cond_, s2 = n / o.cond_;
    std::map<int, Rational> m;
    for (auto& [j1, c1] : c_)
        for (auto& [j2, c2] : o.c_)
            m[static_cast<int>(((long)j1 * s1 + (long)j2 * s2) % n)] += c1 * c2;
    Cyclotomic r;
    r.canonicalize(n, std::move(m));
    return r;
}

Cyclotomic Cyclotomic::galois(long k) const {
    if (cond_ == 1) return *this;
    long kk = k % cond_;
    if (kk < 0) kk += cond_;
    if (gcd_l(kk, cond_) != 1)
        throw std::invalid_argument("galois: exponent not coprime to conductor");
    std::map<int, Rational> m;
    for (auto& [j, c] : c_) m[static_cast<int>(((long)j * kk) % cond_)] += c;
    Cyclotomic r;
    r.canonicalize(cond_, std::move(m));
    return r;
}

Cyclotomic Cyclotomic::conjugate() const {
    if (cond_ == 1) return *this;
    return galois(cond_ - 1);
}

bool Cyclotomic::is_real() const { return *this == conjugate(); }

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("cyclotomic: division by zero");
    if (cond_ == 1) {
        Cyclotomic r;
        r.assign_rational(Rational(1) / c_.begin()->second);
        return r;
    }
    // product of the nontrivial Galois conjugates; v * w is the rational norm
    Cyclotomic w(Rational(1));
    for (int k = 2; k < cond_; ++k)
        if (gcd_l(k, cond_) == 1) w *= galois(k);
    Cyclotomic norm = *this * w;
    auto nq = norm.as_rational();
    if (!nq || *nq == 0) throw std::logic_error("cyclotomic: norm computation failed");
    return w * Cyclotomic(Rational(1) / *nq);
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
    if (o.is_zero()) throw std::domain_error("cyclotomic: division by zero");
    if (o.cond_ == 1) {
        Cyclotomic r = *this;
        const Rational& s = o.c_.begin()->second;
        for (auto& [j, c] : r.c_) c /= s;
        return r;
    }
    return *this * o.inverse();
}

std::string Cyclotomic::str() const {
    if (c_.empty()) return "0";
    if (cond_ == 1) return to_string(c_.begin()->second);
    std::string out;
    bool first = true;
    for (auto& [j, c] : c_) {
        Rational a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string term = "z" + std::to_string(cond_);
        if (j != 1) term += "^" + std::to_string(j);
        if (a == 1) out += term;
        else out += to_string(a) + "*" + term;
    }
    return out;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.cond_ != b.cond_) return a.cond_ < b.cond_ ? -1 : 1;
    auto ia = a.c_.begin(), ib = b.c_.begin();
    while (ia != a.c_.end() && ib != b.c_.end()) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        ++ia; ++ib;
    }
    if (ia != a.c_.end()) return 1;
    if (ib != b.c_.end()) return -1;
    return 0;
}

}  // namespace realchar
