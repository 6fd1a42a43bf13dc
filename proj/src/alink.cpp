#include "ribbon/alink.hpp"

#include "ribbon/errors.hpp"
#include "ribbon/exactla.hpp"

namespace ribbon {

InducedMap::InducedMap(IntMatrix m) : m_(std::move(m)) {
    if (m_.rows() != 2)
        throw DimensionError("induced map must have 2 rows (target H^1(T^2) = Z^2), got " +
                             std::to_string(m_.rows()));
}

Integer alinking(const InducedMap& iota) {
    const Cokernel c = cokernel(iota.matrix());
    if (c.free_rank == 2) return 0;
    if (c.free_rank == 1 && c.torsion.empty()) return 1;
    if (c.free_rank == 1 && c.torsion.size() == 1) return c.torsion.front();

    std::string shape = c.free_rank ? "Z" : "";
    for (const auto& d : c.torsion) shape += (shape.empty() ? "Z" : " ⊕ Z") + d.get_str();
    if (shape.empty()) shape = "0";
    throw ClassificationError("cokernel " + shape + " is outside the alinking classification");
}

int mod2_alinking(const InducedMap& iota) {
    return mpz_odd_p(alinking(iota).get_mpz_t()) ? 1 : 0;
}

} // namespace ribbon
