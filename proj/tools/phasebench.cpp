#include "phasebench/commands.hpp"

#include <iostream>
#include <string_view>
#include <vector>

int main(int argc, char** argv) {
    phasebench::CliHooks hooks;
    std::vector<const char*> args(argv, argv + argc);
#ifdef PHASEBENCH_TEST_HOOKS
    // Negative-control build: --sabotage-qprime sends every symmetric word to +1.
    std::erase_if(args, [&](const char* a) {
        if (std::string_view(a) != "--sabotage-qprime")
            return false;
        hooks.tieBreak = [](const phasebench::Word&) { return +1; };
        return true;
    });
#endif
    return phasebench::run_cli(static_cast<int>(args.size()), args.data(), std::cout, std::cerr, hooks);
}
