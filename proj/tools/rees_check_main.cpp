#include <vector>

#include "rees/cli.hpp"

int main(int argc, char** argv) {
    return rees::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
