// A guided tour on one 7-gon: the walk-count matrix, its determinant by two
// routes, the integer forms, and the fully symbolic diagonalization.

#include <iostream>

#include "frieze/frieze.hpp"

using namespace frieze;

int main() {
    const Dissection d = build_dissection(7, {{2, 7}, {3, 6}, {4, 6}});
    const VarNames names(d.var_set(), {"a", "b", "c", "d"});

    std::cout << "pieces of the 7-gon with diagonals (2,7), (3,6), (4,6):\n";
    for (int l = 1; l <= d.piece_count(); ++l) {
        std::cout << "  " << names.name(piece_var(l)) << " = {";
        for (size_t k = 0; k < d.pieces[l - 1].size(); ++k)
            std::cout << (k ? "," : "") << d.pieces[l - 1][k];
        std::cout << "}  degree " << d.degree(l) << "\n";
    }

    const WeightMatrix counts = weight_matrix(d, Flavor::arithmetic);
    std::cout << "\nwalk counts v_ij (row i, column j):\n";
    for (int i = 1; i <= 7; ++i) {
        for (int j = 1; j <= 7; ++j) std::cout << " " << counts.at(i, j).str(names);
        std::cout << "\n";
    }

    std::cout << "\ndeterminant, closed form:  " << det_formula(d, Flavor::arithmetic).str(names) << "\n";
    std::cout << "determinant, expansion:    " << det_expand(counts.matrix()).str(names) << "\n";

    const SmithForm sf = smith_normal_form(to_int_matrix(counts.matrix()));
    std::cout << "\nsmith normal form diagonal: ";
    for (const auto& x : sf.s.diagonal()) std::cout << x.get_str() << " ";
    const TheoremForm tf = theorem_diagonal_form(d);
    std::cout << "\ndegree diagonal form:       ";
    for (const auto& x : tf.s.diagonal()) std::cout << x.get_str() << " ";
    std::cout << "\n";

    const DiagonalForm f = diagonalize(d, Flavor::x);
    std::cout << "\nsymbolic diagonalization (piece weights only):\n";
    for (int i = 1; i <= 7; ++i) std::cout << "  D[" << i << "] = " << f.d.at(i, i).str(names) << "\n";
    std::cout << "det P = " << f.det_p.str(names) << ", det Q = " << f.det_q.str(names) << "\n";
    std::cout << "P * W * Q = D verified exactly, " << f.row_ops.size() << " row ops, " << f.col_ops.size()
              << " column ops\n";
    return 0;
}
