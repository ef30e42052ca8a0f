#include <iostream>

#include <hwmt/hwmt.hpp>

int main() {
    const hwmt::LatticePolytope simplex({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-3, -1, -1}});
    const auto dual = hwmt::polar_dual(simplex);
    std::cout << "dual vertices:";
    for (const auto& v : dual.vertices()) std::cout << " " << hwmt::to_string(v);
    std::cout << "\nkernel of simplex: " << hwmt::to_string(hwmt::vertex_kernel(simplex))
              << "\nkernel of dual:    " << hwmt::to_string(hwmt::vertex_kernel(dual))
              << "\nmirror kernel pair: " << std::boolalpha << hwmt::is_mirror_kernel_pair(simplex, dual).holds << "\n";
}
