// Which Laurent polynomials t^-m + ... + t^m are >= 0 on the unit circle, and which are
// squares of SU2 characters.

#include <charzeros/parser.hpp>
#include <charzeros/scharacter.hpp>

#include <iostream>

using namespace charzeros;

int main(int argc, char** argv) {
    std::vector<std::string> inputs{"t^-2 + 2 + t^2", "t^-1 + t", "t^-4 + 2*t^-2 + 3 + 2*t^2 + t^4", "-t^-3 + 2 - t^3"};
    if (argc > 1) inputs.assign(argv + 1, argv + argc);
    for (const auto& text : inputs) {
        const SymmetricLaurent f(parse_laurent(text));
        const PositivityResult r = is_positive_on_circle(f);
        std::cout << f.poly() << ": ";
        if (!r.positive) {
            std::cout << "negative at cos(theta) = " << r.witness->lo << "\n";
            continue;
        }
        std::cout << "nonnegative, SU2 mean " << su2_mean(f);
        try {
            const auto n = su2_decompose(f);
            std::cout << ", equals g_" << n << "^2";
        } catch (const DomainError&) {
        }
        std::cout << "\n";
    }
}
