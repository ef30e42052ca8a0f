#include <iostream>

#include <hwmt/hwmt.hpp>

int main(int argc, char** argv) {
    const std::string path = argc > 1 ? argv[1] : HWMT_FIXTURE_DIR "/tables3d.txt";
    try {
        const auto census = hwmt::run_census(hwmt::load_polytopes(path));
        std::cout << hwmt::report(census, "markdown");
    } catch (const hwmt::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
