#include "gfw/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gfw {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// Polynomials over Z_p as coefficient vectors, constant term first.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        // b is monic, so the quotient digit is just the leading coefficient.
        int q = a[da];
        for (int j = 0; j <= db; ++j) {
            int& c = a[da - db + j];
            c = ((c - q * b[j]) % p + p) % p;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

bool is_irreducible(const std::vector<int>& m, int p) {
    int n = static_cast<int>(m.size()) - 1;
    if (n == 1) return true;
    // Trial division by every monic polynomial of degree 1..n/2.
    for (int deg = 1; deg <= n / 2; ++deg) {
        long long count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<int> f(deg + 1, 0);
            long long v = idx;
            for (int i = 0; i < deg; ++i) {
                f[i] = static_cast<int>(v % p);
                v /= p;
            }
            f[deg] = 1;
            if (poly_mod(m, f, p).empty()) return false;
        }
    }
    return true;
}

const std::map<std::pair<int, int>, std::vector<int>>& default_poly_table() {
    // Fixed defaults so that outputs are reproducible across runs.
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 2}, {1, 1, 1}},           // x^2 + x + 1
        {{2, 3}, {1, 1, 0, 1}},        // x^3 + x + 1
        {{2, 4}, {1, 1, 0, 0, 1}},     // x^4 + x + 1
        {{2, 5}, {1, 0, 1, 0, 0, 1}},  // x^5 + x^2 + 1
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
        {{3, 2}, {2, 1, 1}},           // x^2 + x + 2
        {{3, 3}, {1, 2, 0, 1}},        // x^3 + 2x + 1
        {{5, 2}, {2, 1, 1}},           // x^2 + x + 2
        {{7, 2}, {3, 1, 1}},           // x^2 + x + 3
    };
    return table;
}

}  // namespace

FieldElement FieldSpec::element(int id) const {
    if (id < 0 || id >= d) fail(Errc::DimensionMismatch, "element id out of range");
    return FieldElement{this, id};
}

FieldElement FieldSpec::generator_pow(long long k) const {
    if (d == 2) return one();
    long long m = k % (d - 1);
    if (m < 0) m += d - 1;
    return element(pow_t_[static_cast<int>(m)]);
}

FieldElement FieldSpec::from_coeffs(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != n) fail(Errc::LengthMismatch, "coefficient count");
    int id = 0, w = 1;
    for (int j = 0; j < n; ++j) {
        int c = ((coeffs[j] % p) + p) % p;
        id += c * w;
        w *= p;
    }
    return element(id);
}

std::vector<int> FieldSpec::coeffs(FieldElement a) const {
    require_field(*this, a);
    std::vector<int> out(n);
    int v = a.id;
    for (int j = 0; j < n; ++j) {
        out[j] = v % p;
        v /= p;
    }
    return out;
}

int FieldSpec::inv_id(int a) const {
    if (a == 0) fail(Errc::ZeroInverse, "inverse of zero");
    return inv_t_[a];
}

int FieldSpec::multiplicative_order(FieldElement a) const {
    require_field(*this, a);
    if (a.is_zero()) fail(Errc::ZeroInverse, "order of zero");
    int ord = 1, v = a.id;
    while (v != 1) {
        v = mul_id(v, a.id);
        ++ord;
    }
    return ord;
}

int FieldSpec::dlog(FieldElement a) const {
    require_field(*this, a);
    if (a.is_zero()) fail(Errc::ZeroInverse, "dlog of zero");
    return dlog_t_[a.id];
}

std::string FieldSpec::to_string(FieldElement a) const {
    require_field(*this, a);
    if (a.id == 0) return "0";
    if (a.id == 1) return "1";
    int k = dlog_t_[a.id];
    if (k == 1) return "t";
    return "t^" + std::to_string(k);
}

FieldElement FieldSpec::parse_element(const std::string& text) const {
    if (text.empty()) fail(Errc::ConfigParse, "empty element string");
    if (text == "0") return zero();
    if (text == "1") return one();
    if (text == "t") return generator();
    if (text.rfind("t^", 0) == 0) {
        try {
            long long k = std::stoll(text.substr(2));
            return generator_pow(k);
        } catch (const std::exception&) {
            fail(Errc::ConfigParse, "bad element string '" + text + "'");
        }
    }
    // Bare integers name the radix index over the polynomial basis; for prime
    // fields this is the natural value.
    try {
        size_t pos = 0;
        int id = std::stoi(text, &pos);
        if (pos != text.size() || id < 0 || id >= d)
            fail(Errc::ConfigParse, "bad element string '" + text + "'");
        return element(id);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(Errc::ConfigParse, "bad element string '" + text + "'");
    }
}

void FieldSpec::build_tables() {
    add_t_.assign(static_cast<size_t>(d) * d, 0);
    mul_t_.assign(static_cast<size_t>(d) * d, 0);
    neg_t_.assign(d, 0);
    inv_t_.assign(d, 0);
    trace_t_.assign(d, 0);
    dlog_t_.assign(d, 0);

    auto digits = [&](int id) {
        std::vector<int> c(n);
        for (int j = 0; j < n; ++j) {
            c[j] = id % p;
            id /= p;
        }
        return c;
    };
    auto undigits = [&](const std::vector<int>& c) {
        int id = 0, w = 1;
        for (int j = 0; j < static_cast<int>(c.size()) && j < n; ++j) {
            id += (c[j] % p) * w;
            w *= p;
        }
        return id;
    };

    for (int a = 0; a < d; ++a) {
        auto ca = digits(a);
        for (int b = 0; b < d; ++b) {
            auto cb = digits(b);
            std::vector<int> sum(n);
            for (int j = 0; j < n; ++j) sum[j] = (ca[j] + cb[j]) % p;
            add_t_[a * d + b] = undigits(sum);

            std::vector<int> prod(2 * n - 1, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            auto rem = poly_mod(prod, poly, p);
            rem.resize(n, 0);
            mul_t_[a * d + b] = undigits(rem);
        }
        std::vector<int> neg(n);
        for (int j = 0; j < n; ++j) neg[j] = (p - ca[j]) % p;
        neg_t_[a] = undigits(neg);
    }

    for (int a = 1; a < d; ++a)
        for (int b = 1; b < d; ++b)
            if (mul_t_[a * d + b] == 1) {
                inv_t_[a] = b;
                break;
            }

    // tr(a) = a + a^p + ... + a^(p^(n-1)), always in the prime subfield.
    for (int a = 0; a < d; ++a) {
        int acc = 0, frob = a;
        for (int k = 0; k < n; ++k) {
            acc = add_t_[acc * d + frob];
            int next = 1;
            for (int e = 0; e < p; ++e) next = mul_t_[next * d + frob];
            frob = next;
        }
        trace_t_[a] = acc;  // ids < p are the prime-subfield values
    }

    // Designated primitive element: first in radix order with order d-1.
    generator_id_ = 1;
    for (int a = 1; a < d; ++a) {
        int ord = 1, v = a;
        while (v != 1) {
            v = mul_t_[v * d + a];
            ++ord;
        }
        if (ord == d - 1) {
            generator_id_ = a;
            break;
        }
    }

    pow_t_.assign(std::max(d - 1, 1), 1);
    int v = 1;
    for (int k = 0; k < d - 1; ++k) {
        pow_t_[k] = v;
        v = mul_t_[v * d + generator_id_];
    }
    for (int k = 1; k <= d - 1; ++k) dlog_t_[pow_t_[k % (d - 1)]] = k;
}

Field make_field(int p, int n, std::optional<std::vector<int>> poly, int max_dim) {
    if (!is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p));
    if (n < 1) fail(Errc::UnsupportedSize, "extension degree must be >= 1");
    long long d = 1;
    for (int i = 0; i < n; ++i) {
        d *= p;
        if (d > max_dim)
            fail(Errc::UnsupportedSize,
                 "p^n exceeds the configured bound " + std::to_string(max_dim));
    }

    std::vector<int> m;
    if (poly) {
        m = *poly;
    } else if (n == 1) {
        m = {0, 1};
    } else {
        auto it = default_poly_table().find({p, n});
        if (it == default_poly_table().end())
            fail(Errc::UnsupportedSize, "no default modulus for this (p, n)");
        m = it->second;
    }
    if (static_cast<int>(m.size()) != n + 1)
        fail(Errc::WrongDegree, "expected degree " + std::to_string(n));
    for (int& c : m) c = ((c % p) + p) % p;
    if (m.back() != 1) fail(Errc::WrongDegree, "modulus must be monic");
    if (!is_irreducible(m, p))
        fail(Errc::ReduciblePolynomial, "modulus factors over Z_" + std::to_string(p));

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p = p;
    spec->n = n;
    spec->d = static_cast<int>(d);
    spec->poly = std::move(m);
    spec->build_tables();
    return spec;
}

void require_same_field(FieldElement a, FieldElement b) {
    if (a.field == nullptr || b.field == nullptr)
        fail(Errc::MixedFields, "element without a field");
    if (a.field != b.field && !a.field->same_as(*b.field))
        fail(Errc::MixedFields, "elements from different fields");
}

void require_field(const FieldSpec& spec, FieldElement a) {
    if (a.field == nullptr) fail(Errc::MixedFields, "element without a field");
    if (a.field != &spec && !a.field->same_as(spec))
        fail(Errc::MixedFields, "element from a different field");
}

FieldElement operator+(FieldElement a, FieldElement b) {
    require_same_field(a, b);
    return FieldElement{a.field, a.field->add_id(a.id, b.id)};
}

FieldElement operator-(FieldElement a, FieldElement b) {
    require_same_field(a, b);
    return FieldElement{a.field, a.field->sub_id(a.id, b.id)};
}

FieldElement operator*(FieldElement a, FieldElement b) {
    require_same_field(a, b);
    return FieldElement{a.field, a.field->mul_id(a.id, b.id)};
}

FieldElement operator-(FieldElement a) { return FieldElement{a.field, a.field->neg_id(a.id)}; }

bool operator==(FieldElement a, FieldElement b) {
    require_same_field(a, b);
    return a.id == b.id;
}

bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

FieldElement inv(FieldElement a) { return FieldElement{a.field, a.field->inv_id(a.id)}; }

FieldElement pow(FieldElement a, long long k) {
    if (a.is_zero()) {
        if (k <= 0) fail(Errc::ZeroInverse, "0 to a nonpositive power");
        return a;
    }
    const FieldSpec& spec = *a.field;
    long long m = k % (spec.d - 1);
    if (m < 0) m += spec.d - 1;
    int acc = 1, base = a.id;
    for (long long e = m; e > 0; e >>= 1) {
        if (e & 1) acc = spec.mul_id(acc, base);
        base = spec.mul_id(base, base);
    }
    return FieldElement{a.field, acc};
}

int trace(FieldElement a) { return a.field->trace_id(a.id); }

UnitPhase character(FieldElement a) {
    return UnitPhase::make(a.field->character_exponent(a.id), a.field->phase_den());
}

// ---------------------------------------------------------------------------
// Bases

namespace {

// Gaussian elimination over Z_p. Returns the solution of A x = rhs, where A is
// n x n column-major (A[j] is column j); throws SingularSystem if singular.
std::vector<int> solve_mod_p(std::vector<std::vector<int>> cols, std::vector<int> rhs, int p) {
    int n = static_cast<int>(rhs.size());
    // Build augmented row-major matrix.
    std::vector<std::vector<int>> m(n, std::vector<int>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = cols[j][i] % p;
        m[i][n] = rhs[i] % p;
    }
    auto inv_mod = [&](int a) {
        for (int x = 1; x < p; ++x)
            if (a * x % p == 1) return x;
        return 0;
    };
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) fail(Errc::SingularSystem, "dependent vectors");
        std::swap(m[col], m[piv]);
        int s = inv_mod(m[col][col]);
        for (int j = col; j <= n; ++j) m[col][j] = m[col][j] * s % p;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            int f = m[r][col];
            for (int j = col; j <= n; ++j) m[r][j] = ((m[r][j] - f * m[col][j]) % p + p) % p;
        }
    }
    std::vector<int> x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

}  // namespace

Basis make_basis(const FieldSpec& spec, std::vector<FieldElement> elements, BasisKind kind) {
    if (static_cast<int>(elements.size()) != spec.n)
        fail(Errc::LengthMismatch, "a basis needs n elements");
    std::vector<std::vector<int>> cols;
    for (auto e : elements) {
        require_field(spec, e);
        cols.push_back(spec.coeffs(e));
    }
    // Solvability for an arbitrary rhs certifies independence.
    std::vector<int> rhs(spec.n, 0);
    rhs[0] = 1;
    solve_mod_p(cols, rhs, spec.p);
    return Basis{&spec, std::move(elements), kind};
}

Basis polynomial_basis(const FieldSpec& spec) {
    std::vector<FieldElement> els;
    int id = 1;  // 1, t, t^2, ... as radix ids p^j
    for (int j = 0; j < spec.n; ++j) {
        els.push_back(spec.element(id));
        id *= spec.p;
    }
    return Basis{&spec, std::move(els), BasisKind::Polynomial};
}

bool is_self_dual(const Basis& b) {
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            if (trace(b.elements[i] * b.elements[j]) != (i == j ? 1 : 0)) return false;
    return true;
}

std::vector<Basis> catalog_bases(const FieldSpec& spec) {
    std::vector<Basis> out;
    out.push_back(polynomial_basis(spec));
    if (spec.p == 2 && spec.n >= 2) {
        // Normal basis generated by Frobenius orbits; kept when self-dual.
        for (int k = 1; k < spec.d - 1; ++k) {
            std::vector<FieldElement> els;
            long long e = k;
            for (int j = 0; j < spec.n; ++j) {
                els.push_back(spec.generator_pow(e));
                e = e * spec.p % (spec.d - 1);
            }
            try {
                Basis cand = make_basis(spec, els, BasisKind::SelfDual);
                if (is_self_dual(cand)) {
                    out.push_back(cand);
                    break;
                }
            } catch (const Error&) {
                continue;
            }
        }
    }
    return out;
}

Basis dual_basis(const Basis& b) {
    const FieldSpec& spec = *b.field;
    int n = spec.n;
    // For each j solve tr(b_i * x) = delta_ij; x expanded in the polynomial
    // basis gives n linear equations over Z_p.
    std::vector<std::vector<int>> cols(n, std::vector<int>(n));
    Basis poly = polynomial_basis(spec);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) cols[c][r] = trace(b.elements[r] * poly.elements[c]);
    std::vector<FieldElement> duals;
    for (int j = 0; j < n; ++j) {
        std::vector<int> rhs(n, 0);
        rhs[j] = 1;
        auto x = solve_mod_p(cols, rhs, spec.p);
        duals.push_back(spec.from_coeffs(x));
    }
    BasisKind kind = BasisKind::Custom;
    if (duals == b.elements) kind = b.kind;
    return Basis{&spec, std::move(duals), kind};
}

std::vector<int> expand(FieldElement a, const Basis& b) {
    const FieldSpec& spec = *b.field;
    require_field(spec, a);
    std::vector<std::vector<int>> cols;
    for (auto e : b.elements) cols.push_back(spec.coeffs(e));
    return solve_mod_p(cols, spec.coeffs(a), spec.p);
}

FieldElement combine(const std::vector<int>& coeffs, const Basis& b) {
    if (coeffs.size() != b.elements.size()) fail(Errc::LengthMismatch, "coefficient count");
    const FieldSpec& spec = *b.field;
    FieldElement acc = spec.zero();
    for (size_t j = 0; j < coeffs.size(); ++j) {
        int c = ((coeffs[j] % spec.p) + spec.p) % spec.p;
        FieldElement term = b.elements[j];
        FieldElement scaled = spec.zero();
        for (int k = 0; k < c; ++k) scaled = scaled + term;
        acc = acc + scaled;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Orderings

const char* strategy_name(OrderingStrategy s) {
    switch (s) {
        case OrderingStrategy::PrimitivePower: return "primitive";
        case OrderingStrategy::Radix: return "radix";
        case OrderingStrategy::TraceMajor: return "trace";
    }
    return "?";
}

Ordering make_ordering(const FieldSpec& spec, OrderingStrategy strategy, const Basis* basis,
                       std::optional<FieldElement> primitive) {
    Ordering ord;
    ord.strategy = strategy;
    ord.index_of.assign(spec.d, 0);
    ord.element_at.assign(spec.d, 0);

    FieldElement gen = spec.generator();
    if (primitive) {
        require_field(spec, *primitive);
        if (primitive->is_zero() || spec.multiplicative_order(*primitive) != spec.d - 1)
            fail(Errc::MissingPrimitive, "supplied element is not primitive");
        gen = *primitive;
    }

    switch (strategy) {
        case OrderingStrategy::PrimitivePower: {
            if (spec.n == 1) {
                // Prime fields keep their natural ordering.
                for (int id = 0; id < spec.d; ++id) ord.index_of[id] = id;
                break;
            }
            ord.index_of[0] = 0;
            FieldElement v = gen;
            for (int k = 1; k <= spec.d - 1; ++k) {
                ord.index_of[v.id] = k;
                v = v * gen;
            }
            break;
        }
        case OrderingStrategy::Radix: {
            if (basis == nullptr) fail(Errc::MissingBasis, "radix ordering needs a basis");
            for (int id = 0; id < spec.d; ++id) {
                auto c = expand(spec.element(id), *basis);
                int idx = 0, w = 1;
                for (int j = 0; j < spec.n; ++j) {
                    idx += c[j] * w;
                    w *= spec.p;
                }
                ord.index_of[id] = idx;
            }
            break;
        }
        case OrderingStrategy::TraceMajor: {
            // Ties inside a trace class break by power of the primitive
            // element, with zero ahead of everything.
            std::vector<int> power_of(spec.d, -1);
            FieldElement v = gen;
            for (int k = 1; k <= spec.d - 1; ++k) {
                power_of[v.id] = k;
                v = v * gen;
            }
            std::vector<std::pair<std::pair<int, int>, int>> keys;
            for (int id = 0; id < spec.d; ++id)
                keys.push_back({{spec.trace_id(id), power_of[id]}, id});
            std::sort(keys.begin(), keys.end());
            for (int idx = 0; idx < spec.d; ++idx) ord.index_of[keys[idx].second] = idx;
            break;
        }
    }
    for (int id = 0; id < spec.d; ++id) ord.element_at[ord.index_of[id]] = id;
    return ord;
}

}  // namespace gfw
