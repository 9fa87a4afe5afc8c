#ifndef GFW_FIELD_HPP
#define GFW_FIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gfw/error.hpp"
#include "gfw/phase.hpp"

namespace gfw {

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

// An element of GF(p^n), identified by its radix index over the polynomial
// basis {1, t, ..., t^(n-1)}: id = c0 + c1*p + ... + c(n-1)*p^(n-1).
// Elements carry a pointer to their owning FieldSpec; mixing fields is a
// detected error, not silent corruption.
struct FieldElement {
    const FieldSpec* field = nullptr;
    int id = 0;

    bool is_zero() const { return id == 0; }
};

FieldElement operator+(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a, FieldElement b);
FieldElement operator*(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a);
bool operator==(FieldElement a, FieldElement b);
bool operator!=(FieldElement a, FieldElement b);
FieldElement inv(FieldElement a);
FieldElement pow(FieldElement a, long long k);
int trace(FieldElement a);
UnitPhase character(FieldElement a);

// Exact arithmetic in GF(p^n). Immutable after construction; all operations
// are table lookups, so a FieldSpec can be shared freely across threads.
class FieldSpec {
  public:
    int p = 2;               // prime characteristic
    int n = 1;               // extension degree
    int d = 2;               // order p^n
    std::vector<int> poly;   // monic irreducible modulus, constant term first

    int phase_den() const { return 4 * p; }

    FieldElement element(int id) const;
    FieldElement zero() const { return element(0); }
    FieldElement one() const { return element(1); }

    // The designated primitive element: first in radix order over the
    // polynomial basis with multiplicative order exactly d-1.
    FieldElement generator() const { return element(generator_id_); }
    FieldElement generator_pow(long long k) const;

    FieldElement from_coeffs(const std::vector<int>& coeffs) const;
    std::vector<int> coeffs(FieldElement a) const;

    // Hot-loop interface on raw ids.
    int add_id(int a, int b) const { return add_t_[a * d + b]; }
    int sub_id(int a, int b) const { return add_t_[a * d + neg_t_[b]]; }
    int mul_id(int a, int b) const { return mul_t_[a * d + b]; }
    int neg_id(int a) const { return neg_t_[a]; }
    int inv_id(int a) const;
    int trace_id(int a) const { return trace_t_[a]; }
    int character_exponent(int a) const { return 4 * trace_t_[a]; }

    // Multiplicative order and discrete log w.r.t. the designated generator;
    // dlog is in [1, d-1] with dlog(1) = d-1, matching the primitive-power
    // ordering convention. Undefined for zero.
    int multiplicative_order(FieldElement a) const;
    int dlog(FieldElement a) const;

    std::string to_string(FieldElement a) const;
    FieldElement parse_element(const std::string& text) const;

    bool same_as(const FieldSpec& o) const { return p == o.p && n == o.n && poly == o.poly; }

  private:
    friend Field make_field(int, int, std::optional<std::vector<int>>, int);
    FieldSpec() = default;
    void build_tables();

    std::vector<int> add_t_;
    std::vector<int> mul_t_;
    std::vector<int> neg_t_;
    std::vector<int> inv_t_;
    std::vector<int> trace_t_;
    std::vector<int> dlog_t_;
    std::vector<int> pow_t_;  // generator powers, index 0..d-2
    int generator_id_ = 1;
};

constexpr int kDefaultMaxDim = 64;

// Constructs GF(p^n). When poly is absent a built-in table supplies a default
// irreducible polynomial for each supported (p, n).
Field make_field(int p, int n, std::optional<std::vector<int>> poly = std::nullopt,
                 int max_dim = kDefaultMaxDim);

void require_same_field(FieldElement a, FieldElement b);
void require_field(const FieldSpec& spec, FieldElement a);

// ---------------------------------------------------------------------------
// Bases of GF(p^n) viewed as an n-dimensional vector space over Z_p.

enum class BasisKind { Polynomial, Normal, SelfDual, Custom };

struct Basis {
    const FieldSpec* field = nullptr;
    std::vector<FieldElement> elements;
    BasisKind kind = BasisKind::Custom;

    int size() const { return static_cast<int>(elements.size()); }
};

// Validates linear independence; throws SingularSystem otherwise.
Basis make_basis(const FieldSpec& spec, std::vector<FieldElement> elements,
                 BasisKind kind = BasisKind::Custom);
Basis polynomial_basis(const FieldSpec& spec);
bool is_self_dual(const Basis& b);

// Named bases shipped with the library: the polynomial basis always, plus the
// normal self-dual basis for GF(4) and GF(8) when it checks out under the
// chosen modulus.
std::vector<Basis> catalog_bases(const FieldSpec& spec);

// The unique basis b' with tr(b_i * b'_j) = delta_ij.
Basis dual_basis(const Basis& b);

std::vector<int> expand(FieldElement a, const Basis& b);
FieldElement combine(const std::vector<int>& coeffs, const Basis& b);

// ---------------------------------------------------------------------------
// Orderings of the field elements onto axis indices 0..d-1.

enum class OrderingStrategy { PrimitivePower, Radix, TraceMajor };

const char* strategy_name(OrderingStrategy s);

struct Ordering {
    OrderingStrategy strategy = OrderingStrategy::PrimitivePower;
    std::vector<int> index_of;    // element id -> axis index
    std::vector<int> element_at;  // axis index -> element id

    int dim() const { return static_cast<int>(index_of.size()); }
    int index(FieldElement a) const { return index_of[a.id]; }

    bool operator==(const Ordering& o) const {
        return strategy == o.strategy && index_of == o.index_of;
    }
    bool operator!=(const Ordering& o) const { return !(*this == o); }
};

Ordering make_ordering(const FieldSpec& spec, OrderingStrategy strategy,
                       const Basis* basis = nullptr,
                       std::optional<FieldElement> primitive = std::nullopt);

}  // namespace gfw

#endif
