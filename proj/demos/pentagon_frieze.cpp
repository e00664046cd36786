// Friezes of a dissected pentagon: the integer pattern, its polynomial
// deformation, and the zig-zag behind one adjacent minor.

#include <iostream>

#include "frieze/frieze.hpp"

using namespace frieze;

int main() {
    const Dissection d = build_dissection(5, {{2, 4}, {2, 5}});
    const VarNames names(d.var_set());

    std::cout << "integer frieze of the pentagon dissected by (2,4) and (2,5):\n\n";
    std::cout << render_frieze(build_frieze(d, Flavor::arithmetic), names) << "\n";

    std::cout << "the same pattern with piece weights:\n\n";
    std::cout << render_frieze(build_frieze(d, Flavor::x), names, {.periods = 1, .max_entry_width = 16}) << "\n";

    const WeightMatrix w = weight_matrix(d, Flavor::xq);
    std::cout << "adjacent minor d(e_1, e_3) = " << frieze_minor(w, 1, 3).str(names) << "\n";
    if (const auto z = find_zigzag(d, 1, 3)) {
        std::cout << "zig-zag:";
        for (const auto& [a, b] : z->sequence) std::cout << " (" << a << "," << b << ")";
        std::cout << "\n";
    }
    std::cout << "closed form agrees: " << (frieze_minor(w, 1, 3) == minor_formula(d, 1, 3) ? "yes" : "NO") << "\n";
    return 0;
}
