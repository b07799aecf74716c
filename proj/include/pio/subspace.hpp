#pragma once

#include "pio/matrix.hpp"

#include <cstddef>

namespace pio {

// Subspace of rational n-space. The basis is kept in a canonical
// column-reduced form (its transpose is in reduced row echelon form), so two
// Subspace values are equal exactly when they describe the same subspace.
class Subspace {
public:
    // The zero subspace has an n x 0 basis.
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    // Canonicalizes the span of the given columns.
    static Subspace from_spanning(std::size_t ambient_dim, const Mat& columns);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.cols(); }
    const Mat& basis() const { return basis_; }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    Subspace(std::size_t ambient_dim, Mat basis)
        : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

    std::size_t ambient_dim_ = 0;
    Mat basis_; // ambient_dim_ rows, dim columns, linearly independent

};

Subspace image(const Mat& a);
Subspace kernel(const Mat& a);

// {x : Ax in S}; read off the first block of ker [A  -basis(S)].
Subspace preimage(const Mat& a, const Subspace& s);

Subspace intersect(const Subspace& s, const Subspace& t);
Subspace sum(const Subspace& s, const Subspace& t);

// contains(s, t) decides t is a subset of s via rank of the stacked bases.
bool contains(const Subspace& s, const Subspace& t);
bool contains_vector(const Subspace& s, const Mat& v);
bool equals(const Subspace& s, const Subspace& t);
std::size_t dim(const Subspace& s);

} // namespace pio
