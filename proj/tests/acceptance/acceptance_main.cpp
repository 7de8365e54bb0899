// Acceptance suite: one pass/fail line per criterion. Run through ctest or
// directly: swiper_acceptance --cli <path-to-swiper-binary> [--data DIR].

#include "criteria.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    acceptance::Context ctx;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) {
            ctx.cli_path = argv[++i];
        } else if (arg == "--data" && i + 1 < argc) {
            ctx.data_dir = argv[++i];
        } else if (arg == "--only" && i + 1 < argc) {
            ctx.only = std::stoi(argv[++i]);
        } else {
            std::cerr << "usage: swiper_acceptance [--cli PATH] [--data DIR] [--only N]\n";
            return 2;
        }
    }
    if (ctx.cli_path.empty()) {
        if (const char* env = std::getenv("SWIPER_CLI")) ctx.cli_path = env;
    }

    const auto criteria = acceptance::all_criteria();
    int failures = 0;
    for (const auto& criterion : criteria) {
        if (ctx.only != 0 && ctx.only != criterion.id) continue;
        try {
            const std::string note = criterion.run(ctx);
            std::cout << "[PASS] " << criterion.id << ". " << criterion.name;
            if (!note.empty()) std::cout << " (" << note << ")";
            std::cout << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] " << criterion.id << ". " << criterion.name << ": " << e.what()
                      << "\n";
        }
        std::cout.flush();
    }
    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
