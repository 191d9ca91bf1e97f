// Zeros of the adjoint character of G2: first on the principal torus, then on the
// whole maximal torus.

#include <charzeros/cyclopoints.hpp>
#include <charzeros/principal.hpp>

#include <iostream>

using namespace charzeros;

int main() {
    const RootSystem g2 = RootSystem::build(CartanType::parse("G2"));
    const PrincipalCharacter pc = principal_character(g2, g2.adjoint_weight());
    std::cout << "chi(u) = " << pc.poly_u()->to_string('u') << "\n";
    for (const auto& f : cyclo_factor(*pc.poly_u()).factors) std::cout << "  Phi_" << f.index << "(u)\n";

    const CycloSolveReport r = solve(g2_adjoint_poly());
    for (std::size_t k = 0; k < r.points.size(); ++k) {
        const CycloPoint& p = r.points[k];
        std::cout << "x = z^" << p.a << ", y = z^" << p.b << ", z of order " << p.modulus << "  -> t of order "
                  << p.element_order() << "  (" << r.orbit_sizes[k] << " conjugates)\n";
    }
    std::cout << "orders:";
    for (auto n : r.element_orders()) std::cout << " " << n;
    std::cout << "\n";
}
