#include "rackcert/matgrp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rackcert/errors.hpp"

namespace rackcert {

namespace {

std::uint32_t reduce(std::int64_t x, std::uint32_t p)
{
    std::int64_t r = x % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t submod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return a >= b ? a - b : a + (p - b);
}

std::uint32_t addmod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n)
{
    std::vector<std::uint32_t> fs;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        fs.push_back(n);
    return fs;
}

bool is_generator(std::uint32_t g, std::uint32_t p)
{
    if (g == 0 || g >= p)
        return false;
    for (auto q : prime_factors(p - 1))
        if (mod_pow(g, (p - 1) / q, p) == 1)
            return false;
    return true;
}

/// Row echelon elimination on a copy; returns the determinant.
std::uint32_t determinant(std::vector<std::uint32_t> a, std::size_t n, std::uint32_t p)
{
    std::uint32_t det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * n + col] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != col) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(a[piv * n + k], a[col * n + k]);
            det = submod(0, det, p);
        }
        const std::uint32_t pv = a[col * n + col];
        det = mulmod(det, pv, p);
        const std::uint32_t inv = mod_inverse(pv, p);
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::uint32_t f = mulmod(a[r * n + col], inv, p);
            if (f == 0)
                continue;
            for (std::size_t k = col; k < n; ++k)
                a[r * n + k] = submod(a[r * n + k], mulmod(f, a[col * n + k], p), p);
        }
    }
    return det;
}

} // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U)
            result = static_cast<std::uint64_t>(static_cast<unsigned __int128>(result) * base % m);
        base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % m);
        exp >>= 1U;
    }
    return result;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p)
{
    if (a % p == 0)
        throw InputError("zero has no inverse mod " + std::to_string(p));
    return static_cast<std::uint32_t>(mod_pow(a, p - 2, p));
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::uint32_t primitive_root(std::uint32_t p)
{
    if (!is_prime(p))
        throw InputError(std::to_string(p) + " is not prime");
    if (p == 2)
        return 1;
    for (std::uint32_t g = 2; g < p; ++g)
        if (is_generator(g, p))
            return g;
    throw DefectError("no primitive root found mod " + std::to_string(p));
}

std::optional<std::uint32_t> primitive_cube_root(std::uint32_t p)
{
    if (!is_prime(p) || (p - 1) % 3 != 0)
        return std::nullopt;
    for (std::uint32_t w = 2; w < p; ++w)
        if (mod_pow(w, 3, p) == 1)
            return w;
    return std::nullopt;
}

void PrimeFieldMatrix::check_modulus(std::uint32_t p)
{
    if (p >= (1U << 31U) || !is_prime(p))
        throw InputError("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

void PrimeFieldMatrix::check_compatible(const PrimeFieldMatrix& other) const
{
    if (p_ != other.p_ || n_ != other.n_)
        throw InputError("matrix mismatch: GL(" + std::to_string(n_) + "," + std::to_string(p_) + ") vs GL(" +
                         std::to_string(other.n_) + "," + std::to_string(other.p_) + ")");
}

PrimeFieldMatrix PrimeFieldMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows)
{
    check_modulus(p);
    const std::size_t n = rows.size();
    if (n == 0)
        throw InputError("matrix must have at least one row");
    std::vector<std::uint32_t> e;
    e.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n)
            throw InputError("matrix is not square");
        for (auto x : row)
            e.push_back(reduce(x, p));
    }
    if (determinant(e, n, p) == 0)
        throw InputError("matrix is singular mod " + std::to_string(p));
    return PrimeFieldMatrix(p, n, std::move(e));
}

PrimeFieldMatrix PrimeFieldMatrix::identity_matrix(std::uint32_t p, std::size_t n)
{
    check_modulus(p);
    if (n == 0)
        throw InputError("dimension must be positive");
    std::vector<std::uint32_t> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        e[i * n + i] = 1;
    return PrimeFieldMatrix(p, n, std::move(e));
}

PrimeFieldMatrix PrimeFieldMatrix::diagonal(std::uint32_t p, const std::vector<std::int64_t>& values)
{
    std::vector<std::vector<std::int64_t>> rows(values.size(), std::vector<std::int64_t>(values.size(), 0));
    for (std::size_t i = 0; i < values.size(); ++i)
        rows[i][i] = values[i];
    return from_rows(p, rows);
}

PrimeFieldMatrix PrimeFieldMatrix::direct_sum(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b)
{
    if (a.p_ != b.p_)
        throw InputError("direct sum of matrices over different fields");
    const std::size_t n = a.n_ + b.n_;
    std::vector<std::uint32_t> e(n * n, 0);
    for (std::size_t r = 0; r < a.n_; ++r)
        for (std::size_t c = 0; c < a.n_; ++c)
            e[r * n + c] = a.at(r, c);
    for (std::size_t r = 0; r < b.n_; ++r)
        for (std::size_t c = 0; c < b.n_; ++c)
            e[(a.n_ + r) * n + a.n_ + c] = b.at(r, c);
    return PrimeFieldMatrix(a.p_, n, std::move(e));
}

std::vector<std::vector<std::int64_t>> PrimeFieldMatrix::rows() const
{
    std::vector<std::vector<std::int64_t>> out(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c)
            out[r].push_back(at(r, c));
    return out;
}

PrimeFieldMatrix PrimeFieldMatrix::operator*(const PrimeFieldMatrix& other) const
{
    check_compatible(other);
    std::vector<std::uint32_t> e(n_ * n_, 0);
    for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t k = 0; k < n_; ++k) {
            const std::uint32_t a = at(r, k);
            if (a == 0)
                continue;
            for (std::size_t c = 0; c < n_; ++c)
                e[r * n_ + c] = addmod(e[r * n_ + c], mulmod(a, other.at(k, c), p_), p_);
        }
    }
    return PrimeFieldMatrix(p_, n_, std::move(e));
}

PrimeFieldMatrix PrimeFieldMatrix::inverse() const
{
    const std::size_t n = n_;
    std::vector<std::uint32_t> a = entries_;
    std::vector<std::uint32_t> inv = identity().entries_;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * n + col] == 0)
            ++piv;
        if (piv == n)
            throw InputError("matrix is singular");
        if (piv != col) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a[piv * n + k], a[col * n + k]);
                std::swap(inv[piv * n + k], inv[col * n + k]);
            }
        }
        const std::uint32_t s = mod_inverse(a[col * n + col], p_);
        for (std::size_t k = 0; k < n; ++k) {
            a[col * n + k] = mulmod(a[col * n + k], s, p_);
            inv[col * n + k] = mulmod(inv[col * n + k], s, p_);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r * n + col] == 0)
                continue;
            const std::uint32_t f = a[r * n + col];
            for (std::size_t k = 0; k < n; ++k) {
                a[r * n + k] = submod(a[r * n + k], mulmod(f, a[col * n + k], p_), p_);
                inv[r * n + k] = submod(inv[r * n + k], mulmod(f, inv[col * n + k], p_), p_);
            }
        }
    }
    return PrimeFieldMatrix(p_, n, std::move(inv));
}

bool PrimeFieldMatrix::is_identity() const
{
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c)
            if (at(r, c) != (r == c ? 1U : 0U))
                return false;
    return true;
}

std::uint32_t PrimeFieldMatrix::det() const
{
    return determinant(entries_, n_, p_);
}

std::uint32_t PrimeFieldMatrix::trace() const
{
    std::uint32_t t = 0;
    for (std::size_t i = 0; i < n_; ++i)
        t = addmod(t, at(i, i), p_);
    return t;
}

std::vector<std::uint32_t> PrimeFieldMatrix::characteristic_polynomial() const
{
    const std::size_t n = n_;
    const std::uint32_t p = p_;
    std::vector<std::uint32_t> h = entries_;
    auto H = [&](std::size_t r, std::size_t c) -> std::uint32_t& { return h[r * n + c]; };

    // Similarity transform to upper Hessenberg form.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && H(piv, j) == 0)
            ++piv;
        if (piv == n)
            continue;
        if (piv != j + 1) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(H(piv, k), H(j + 1, k));
            for (std::size_t k = 0; k < n; ++k)
                std::swap(H(k, piv), H(k, j + 1));
        }
        const std::uint32_t inv = mod_inverse(H(j + 1, j), p);
        for (std::size_t r = j + 2; r < n; ++r) {
            const std::uint32_t u = mulmod(H(r, j), inv, p);
            if (u == 0)
                continue;
            for (std::size_t k = 0; k < n; ++k)
                H(r, k) = submod(H(r, k), mulmod(u, H(j + 1, k), p), p);
            for (std::size_t k = 0; k < n; ++k)
                H(k, j + 1) = addmod(H(k, j + 1), mulmod(u, H(k, r), p), p);
        }
    }

    // polys[m] = characteristic polynomial of the leading m×m block.
    std::vector<std::vector<std::uint32_t>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<std::uint32_t> next(m + 1, 0);
        const auto& prev = polys[m - 1];
        const std::uint32_t diag = H(m - 1, m - 1);
        for (std::size_t d = 0; d < prev.size(); ++d) {
            next[d + 1] = addmod(next[d + 1], prev[d], p);
            next[d] = submod(next[d], mulmod(diag, prev[d], p), p);
        }
        std::uint32_t sub = 1;
        for (std::size_t i = 1; i < m; ++i) {
            sub = mulmod(sub, H(m - i, m - i - 1), p);
            const std::uint32_t coeff = mulmod(H(m - i - 1, m - 1), sub, p);
            if (coeff == 0)
                continue;
            const auto& q = polys[m - i - 1];
            for (std::size_t d = 0; d < q.size(); ++d)
                next[d] = submod(next[d], mulmod(coeff, q[d], p), p);
        }
        polys[m] = std::move(next);
    }
    return polys[n];
}

std::string PrimeFieldMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < n_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < n_; ++c)
            os << (c ? "," : "") << at(r, c);
        os << ']';
    }
    os << "] mod " << p_;
    return os.str();
}

DetCharacter DetCharacter::make(std::uint32_t p, std::int64_t h, std::optional<std::uint32_t> generator)
{
    if (p == 2)
        throw InputError("p = 2 has no character value −1 distinct from 1");
    if (p > 10000 || !is_prime(p))
        throw InputError("character modulus must be an odd prime at most 10^4, got " + std::to_string(p));
    const std::uint32_t g = generator ? *generator : primitive_root(p);
    if (!is_generator(g, p))
        throw InputError(std::to_string(g) + " does not generate GF(" + std::to_string(p) + ")^×");
    std::vector<std::uint32_t> table(p, 0);
    std::uint32_t x = 1;
    for (std::uint32_t e = 0; e + 1 < p; ++e) {
        table[x] = e;
        x = mulmod(x, g, p);
    }
    DetCharacter chi;
    chi.p_ = p;
    chi.gamma_ = g;
    const std::int64_t order = p - 1;
    chi.h_ = ((h % order) + order) % order;
    chi.dlog_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(table));
    return chi;
}

std::uint32_t DetCharacter::dlog(std::uint32_t x) const
{
    if (x % p_ == 0)
        throw InputError("dlog of zero");
    return (*dlog_)[x % p_];
}

std::uint32_t DetCharacter::scalar_exponent(std::uint32_t x) const
{
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(h_) * dlog(x) % (p_ - 1));
}

std::uint32_t det_char_value(const DetCharacter& chi, const PrimeFieldMatrix& a)
{
    if (a.modulus() != chi.modulus())
        throw InputError("character and matrix over different fields");
    return chi.scalar_exponent(a.det());
}

DpFamily<PrimeFieldMatrix> gl2_d3_family(std::uint32_t p, std::uint32_t omega, std::int64_t c)
{
    if (!is_prime(p) || p < 3 || (p - 1) % 3 != 0)
        throw InputError("need a prime p with 3 | p − 1, got " + std::to_string(p));
    omega %= p;
    if (omega == 1 || mod_pow(omega, 3, p) != 1)
        throw InputError(std::to_string(omega) + " is not a primitive cube root of 1 mod " + std::to_string(p));
    const std::uint32_t cc = reduce(c, p);
    if (cc == 0)
        throw InputError("c must be nonzero");
    std::vector<PrimeFieldMatrix> mu;
    for (std::uint32_t i = 0; i < 3; ++i) {
        const auto wi = static_cast<std::int64_t>(mod_pow(omega, i, p));
        const auto w2ic = static_cast<std::int64_t>(mulmod(static_cast<std::uint32_t>(mod_pow(omega, 2 * i, p)), cc, p));
        mu.push_back(PrimeFieldMatrix::from_rows(p, {{0, wi}, {w2ic, 0}}));
    }
    auto fam = verify_dp(std::move(mu), 3);
    require_identity(fam.value.has_value(), "GL(2) triple is not of type D_3: " + fam.diagnosis.message);
    return *fam.value;
}

GlnFamily gln_d3sq_family(std::uint32_t p, std::uint32_t omega, const std::vector<std::int64_t>& lambda)
{
    const std::size_t n = lambda.size();
    if (n <= 3)
        throw InputError("need N > 3, got " + std::to_string(n));
    std::vector<std::uint32_t> lam;
    for (auto x : lambda)
        lam.push_back(reduce(x, p));
    for (auto x : lam)
        if (x == 0)
            throw InputError("diagonal entries must be nonzero");
    if (addmod(lam[0], lam[1], p) != 0)
        throw InputError("need λ_1 = −λ_2");
    if (lam[2] == lam[3])
        throw InputError("need λ_3 ≠ λ_4");
    const std::uint32_t c = mulmod(lam[0], lam[0], p);
    const auto base = gl2_d3_family(p, omega, c);

    std::vector<std::int64_t> tail_s(lam.begin() + 2, lam.end());
    std::vector<std::int64_t> tail_t = tail_s;
    std::swap(tail_t[0], tail_t[1]);
    const auto ds = PrimeFieldMatrix::diagonal(p, tail_s);
    const auto dt = PrimeFieldMatrix::diagonal(p, tail_t);
    std::vector<PrimeFieldMatrix> sigma;
    std::vector<PrimeFieldMatrix> tau;
    for (const auto& m : base.members) {
        sigma.push_back(PrimeFieldMatrix::direct_sum(m, ds));
        tau.push_back(PrimeFieldMatrix::direct_sum(m, dt));
    }
    std::vector<std::vector<std::int64_t>> grows(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        grows[i][i] = 1;
    grows[2][2] = grows[3][3] = 0;
    grows[2][3] = grows[3][2] = 1;
    const auto g = PrimeFieldMatrix::from_rows(p, grows);

    auto fam = verify_dp2(std::move(sigma), std::move(tau), std::optional<PrimeFieldMatrix>(g), 3);
    require_identity(fam.value.has_value(), "GL(N) sextuple is not of type D_3^(2): " + fam.diagnosis.message);
    require_identity((g * g).is_identity(), "swap g is not an involution");
    return GlnFamily{*fam.value, g, c, omega % p, lam};
}

GlnCriterionReport gln_criterion_report(std::uint32_t p, const std::vector<std::int64_t>& lambda,
                                        std::optional<std::uint32_t> generator)
{
    const auto chi = DetCharacter::make(p, 1, generator);
    std::uint32_t det = 1;
    for (auto x : lambda) {
        const std::uint32_t r = reduce(x, p);
        if (r == 0)
            throw InputError("diagonal entries must be nonzero");
        det = mulmod(det, r, p);
    }
    GlnCriterionReport rep;
    rep.p = p;
    rep.generator = chi.generator();
    rep.det_lambda = det;
    rep.dlog_det = chi.dlog(det);
    const std::uint32_t half = (p - 1) / 2;
    for (std::uint32_t h = 0; h + 1 < p; ++h)
        if (static_cast<std::uint64_t>(h) * rep.dlog_det % (p - 1) == half)
            rep.minus_one_twists.push_back(h);
    return rep;
}

std::optional<PrimeFieldMatrix> find_gl_conjugator(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b,
                                                   std::uint64_t limit)
{
    if (a.modulus() != b.modulus() || a.dim() != b.dim())
        throw InputError("conjugator search needs matrices of one shape and modulus");
    const std::uint32_t p = a.modulus();
    const std::size_t n = a.dim();
    const std::size_t vars = n * n;
    // equation (r, c) of X a = b X, unknown X_{rk} at column r·n + k
    std::vector<std::vector<std::uint32_t>> eqs;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<std::uint32_t> row(vars, 0);
            for (std::size_t k = 0; k < n; ++k) {
                row[r * n + k] = addmod(row[r * n + k], a.at(k, c), p);
                row[k * n + c] = submod(row[k * n + c], b.at(r, k), p);
            }
            eqs.push_back(std::move(row));
        }
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < vars && rank < eqs.size(); ++col) {
        std::size_t piv = rank;
        while (piv < eqs.size() && eqs[piv][col] == 0)
            ++piv;
        if (piv == eqs.size())
            continue;
        std::swap(eqs[piv], eqs[rank]);
        const std::uint32_t inv = mod_inverse(eqs[rank][col], p);
        for (auto& x : eqs[rank])
            x = mulmod(x, inv, p);
        for (std::size_t r = 0; r < eqs.size(); ++r) {
            if (r == rank || eqs[r][col] == 0)
                continue;
            const std::uint32_t f = eqs[r][col];
            for (std::size_t k = 0; k < vars; ++k)
                eqs[r][k] = submod(eqs[r][k], mulmod(f, eqs[rank][k], p), p);
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t col = 0, next = 0; col < vars; ++col) {
        if (next < pivot_cols.size() && pivot_cols[next] == col)
            ++next;
        else
            free_cols.push_back(col);
    }
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t f : free_cols) {
        std::vector<std::uint32_t> v(vars, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            v[pivot_cols[r]] = submod(0, eqs[r][f], p);
        basis.push_back(std::move(v));
    }
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        combos *= p;
        if (combos > limit)
            throw InputError("conjugator search space exceeds " + std::to_string(limit));
    }
    std::vector<std::uint32_t> coeff(basis.size(), 0);
    for (std::uint64_t code = 1; code < combos; ++code) {
        std::uint64_t rest = code;
        for (auto& c : coeff) {
            c = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        std::vector<std::uint32_t> x(vars, 0);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (coeff[i] != 0)
                for (std::size_t k = 0; k < vars; ++k)
                    x[k] = addmod(x[k], mulmod(coeff[i], basis[i][k], p), p);
        if (determinant(x, n, p) == 0)
            continue;
        std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k)
                rows[r][k] = x[r * n + k];
        return PrimeFieldMatrix::from_rows(p, rows);
    }
    return std::nullopt;
}

bool is_diagonalizable_with(const PrimeFieldMatrix& x, const std::vector<std::uint32_t>& eigenvalues)
{
    const std::uint32_t p = x.modulus();
    const std::size_t n = x.dim();
    if (eigenvalues.size() != n)
        return false;
    std::vector<std::uint32_t> poly{1};
    for (std::uint32_t lam : eigenvalues) {
        std::vector<std::uint32_t> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = addmod(next[i + 1], poly[i], p);
            next[i] = submod(next[i], mulmod(lam % p, poly[i], p), p);
        }
        poly = std::move(next);
    }
    if (x.characteristic_polynomial() != poly)
        return false;
    std::vector<std::uint32_t> distinct(eigenvalues.begin(), eigenvalues.end());
    for (auto& v : distinct)
        v %= p;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    // product of (x − λ I) over distinct eigenvalues must vanish
    std::vector<std::uint32_t> acc(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        acc[i * n + i] = 1;
    for (std::uint32_t lam : distinct) {
        std::vector<std::uint32_t> shifted(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                shifted[r * n + c] = r == c ? submod(x.at(r, c), lam, p) : x.at(r, c);
        std::vector<std::uint32_t> next(n * n, 0);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) {
                if (acc[r * n + k] == 0)
                    continue;
                for (std::size_t c = 0; c < n; ++c)
                    next[r * n + c] = addmod(next[r * n + c], mulmod(acc[r * n + k], shifted[k * n + c], p), p);
            }
        acc = std::move(next);
    }
    return std::all_of(acc.begin(), acc.end(), [](std::uint32_t v) { return v == 0; });
}

} // namespace rackcert
