#pragma once

#include "isodeg/fp.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace isodeg {

// |GL2(F_p)| = p(p-1)^2(p+1).
u64 gl2_order(u64 p);

// An element of GL2(F_p). Entries are canonical residues, row-major
// (m11 m12 / m21 m22); invertibility is enforced at construction.
struct Matrix {
    u64 p = 0;
    std::array<u64, 4> m{};  // {m11, m12, m21, m22}

    Matrix() = default;
    Matrix(u64 p_, u64 m11, u64 m12, u64 m21, u64 m22);

    u64 det() const;
    u64 trace() const;
    bool is_identity() const;

    // Packed key for hash-set membership; injective for fixed p.
    u64 key() const { return ((m[0] * p + m[1]) * p + m[2]) * p + m[3]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix identity(u64 p);
Matrix multiply(const Matrix& x, const Matrix& y);
Matrix inverse(const Matrix& x);
Matrix matrix_pow(Matrix x, u64 e);

// Least k >= 1 with x^k = I, via the factored exponent p(p-1)^2(p+1).
u64 element_order(const Matrix& x);

// BFS closure of a generating set under multiplication. Throws if the closure
// exceeds |GL2(F_p)| (impossible for correct input) or element_cap.
std::vector<Matrix> closure(const std::vector<Matrix>& generators, u64 element_cap = 8'000'000);

// A subgroup of GL2(F_p), given by generators. The full element set is
// materialized lazily; catalog constructors may supply the order up front so
// large groups never need materializing.
class Subgroup {
public:
    Subgroup(std::vector<Matrix> generators, std::string label = "",
             std::optional<u64> known_order = std::nullopt);

    // Wraps an already-closed element set (stabilizers, oracle output).
    static Subgroup from_elements(std::vector<Matrix> elements, std::string label = "");

    u64 modulus() const { return generators_[0].p; }
    const std::string& label() const { return label_; }
    const std::vector<Matrix>& generators() const { return generators_; }

    bool materialized() const { return !elements_.empty(); }
    std::optional<u64> known_order() const { return order_; }
    const std::vector<Matrix>& elements() const;  // materializes on first use
    u64 order() const;                            // known order, else materializes

    bool contains(const Matrix& x) const;  // materializes

    // Element-set equality.
    bool same_elements(const Subgroup& other) const;

private:
    std::vector<Matrix> generators_;
    std::string label_;
    mutable std::optional<u64> order_;
    mutable std::vector<Matrix> elements_;
};

// Subgroup generated by m * g * m^-1 for each generator g; same order.
Subgroup conjugate_subgroup(const Subgroup& g, const Matrix& m);

}  // namespace isodeg
