#pragma once

#include <optional>

#include "intlin/matrix.hpp"

namespace intlin {

/// Smith normal form U*A*V = D with U, V unimodular and D diagonal with
/// d_1 | d_2 | ... Uinv and Vinv are the tracked inverses, so
/// A = Uinv * D * Vinv.
struct SmithForm {
    IntMatrix U, Uinv, D, V, Vinv;
    int rank = 0;

    Int diag(int i) const { return (i < D.rows() && i < D.cols()) ? D.at(i, i) : Int(0); }
};

/// Deterministic SNF: pivot = smallest nonzero absolute value, ties broken by
/// lowest row then lowest column.
SmithForm smith_normal_form(const IntMatrix& a);

int rank(const IntMatrix& a);

/// Columns form a basis of ker(a); the basis is primitive (the kernel is a
/// saturated sublattice), a property of SNF kernels.
IntMatrix kernel_basis(const IntMatrix& a);

/// Basis (columns) of the saturation of the column space of `a` inside Z^rows.
IntMatrix image_saturation_basis(const IntMatrix& a);

/// Solve a*X = b exactly over Z; nullopt if no integer solution.
std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b);

/// Solve a*X = b where a solution is known to exist.
IntMatrix solve_must(const IntMatrix& a, const IntMatrix& b);

/// Projection Z^ambient ->> Z^ambient / span(s) written in a free basis of the
/// quotient; only valid when span(s) is saturated (SNF kernels and
/// image_saturation_basis outputs are).
IntMatrix saturation_quotient(const IntMatrix& s, int ambient);
/// A right inverse of saturation_quotient(s, ambient).
IntMatrix saturation_quotient_section(const IntMatrix& s, int ambient);

}  // namespace intlin
