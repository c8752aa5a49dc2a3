#pragma once

// The Li-symbol layer: Q[P^1(F)]_m for F = Q or Q(t), the maps delta and
// res, and the one-parameter generator factory for the functional-equation
// subspace.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowpoly/valuation.hpp"
#include "chowpoly/wedge.hpp"

namespace chowpoly {

// a point of P^1(F), F = Q or Q(t)
struct PPoint {
    enum class Kind { Zero, Inf, Value };
    Kind kind = Kind::Zero;
    FactoredRational value;  // Kind::Value only (nonzero)

    static PPoint zero() { return {}; }
    static PPoint inf() { return {Kind::Inf, FactoredRational()}; }
    static PPoint of(FactoredRational v) { return {Kind::Value, std::move(v)}; }
    static PPoint of_rat(const Rat& c);  // 0 maps to the zero marker

    bool is_value() const { return kind == Kind::Value; }
    static int compare(const PPoint& a, const PPoint& b);
    bool operator<(const PPoint& o) const { return compare(*this, o) < 0; }
    bool operator==(const PPoint& o) const { return compare(*this, o) == 0; }
    std::string to_string() const;
};

int compare_factored(const FactoredRational& a, const FactoredRational& b);

class LiSymbol {
public:
    explicit LiSymbol(int weight = 2) : weight_(weight) {}

    int weight() const { return weight_; }
    const std::map<PPoint, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Rat& c, const PPoint& p);
    LiSymbol operator+(const LiSymbol& o) const;
    LiSymbol operator-(const LiSymbol& o) const;
    LiSymbol operator*(const Rat& c) const;
    bool operator==(const LiSymbol& o) const;

    // true when every point is constant (no function-field variables)
    bool over_constants() const;

    std::string to_string() const;

private:
    int weight_;
    std::map<PPoint, Rat> terms_;
};

// image of delta: a wedge for m = 2, a formal sum of ({h}_{m-1} (x) atom)
// pairs for m > 2 (the tensor factor expanded over Q)
struct DeltaImage {
    int weight = 2;
    WedgeElement wedge{2};                        // m == 2
    std::map<std::pair<PPoint, Atom>, Rat> tensor;  // m > 2

    bool is_zero() const { return wedge.is_zero() && tensor.empty(); }
    std::string to_string() const;
};

DeltaImage delta(const LiSymbol& s);

// specialization at a Q-point or infinity of the t-line
LiSymbol res(const Valuation& v, const LiSymbol& s);

enum class Evidence { Proved, Certified, Numeric };
std::string evidence_name(Evidence e);

struct EvidenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// one certificate row: coeff * (registered generator (x) atom)
struct CertificateRow {
    Rat coeff;
    LiSymbol generator;  // a previously accepted weight m-1 generator
    Atom tensor_atom;
};

struct RmGenerator {
    LiSymbol symbol;  // res_0(alpha) - res_inf(alpha), over Q
    Evidence evidence;
};

// numeric necessary-condition check for ker(delta) at weight m > 2;
// returns an error description on failure
using NumericKernelCheck =
    std::function<std::optional<std::string>(const LiSymbol& alpha)>;

// validates that alpha lies in ker(delta) (exactly for m = 2, by
// certificate or numeric evidence for m > 2) and returns the generator;
// throws EvidenceError when validation fails
RmGenerator r_m_generator(const LiSymbol& alpha,
                          const std::vector<CertificateRow>& certificate = {},
                          const NumericKernelCheck& numeric = nullptr);

}  // namespace chowpoly
