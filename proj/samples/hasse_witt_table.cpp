#include <iomanip>
#include <iostream>

#include <hwmt/hwmt.hpp>

// Hasse-Witt invariant next to the truncated hypergeometric series, per family.
int main() {
    for (auto id : {hwmt::FamilyId::Quartic, hwmt::FamilyId::Sextic, hwmt::FamilyId::GroupI, hwmt::FamilyId::GroupII}) {
        const auto& fam = hwmt::family(id);
        std::cout << fam.label << "  " << fam.hypergeometric.to_string() << "\n";
        for (std::uint64_t p : {5, 7, 11, 13}) {
            std::cout << "  p=" << std::setw(2) << p << ":";
            for (long psi = 1; psi <= 3; ++psi) {
                if (!hwmt::is_smooth_member(fam, psi)) {
                    std::cout << "  psi=" << psi << " singular";
                    continue;
                }
                const auto r = hwmt::truncation_relation_check(fam, psi, p);
                std::cout << "  psi=" << psi << " hw=" << std::setw(2) << r.hasse_witt << (r.holds ? "" : " (mismatch)");
            }
            std::cout << "\n";
        }
    }
}
