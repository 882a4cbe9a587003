#include "qlin/dual.hpp"

namespace qlin {

Rational Covector::operator()(const Matrix& column_vector) const {
    if (column_vector.rows() != dim() || column_vector.cols() != 1)
        throw DimensionError("covector applied to a vector of wrong size");
    return (row_ * column_vector)(0, 0);
}

Transition dual_transition(const Transition& tr) {
    // Dual coordinate columns move by the transposed inverse blocks.
    return {tr.t.transpose(), tr.s.transpose()};
}

Covector covector_change_coordinates(const Covector& f, const Transition& tr,
                                     Direction dir) {
    // Invariance of the pairing: row_old * s = row_new.
    return Covector(dir == Direction::old_to_new ? f.row() * tr.s
                                                 : f.row() * tr.t);
}

DualSubspace annihilator(const Subspace& u) {
    return DualSubspace::span_rows(nullspace(u.row_basis()).transpose());
}

Subspace annihilator_of_dual(const DualSubspace& w) {
    return Subspace::span_cols(nullspace(w.row_basis()));
}

ConjugateMap conjugate_map(const Matrix& f) {
    ConjugateMap out{
        f.transpose(),
        Subspace::span_cols(nullspace(f)),
        Subspace::span_cols(f),
        DualSubspace::span_rows(nullspace(f.transpose()).transpose()),
        DualSubspace::span_rows(f),
        false, false, false, false,
    };
    out.kernel_is_image_annihilator = out.dual_kernel == annihilator(out.image);
    out.image_is_kernel_annihilator = out.dual_image == annihilator(out.kernel);
    out.kernel_from_dual_image = out.kernel == annihilator_of_dual(out.dual_image);
    out.image_from_dual_kernel = out.image == annihilator_of_dual(out.dual_kernel);
    return out;
}

} // namespace qlin
