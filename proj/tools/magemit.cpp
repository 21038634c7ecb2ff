#include <string>
#include <vector>

#include "magemit/cli.hpp"

int main(int argc, char** argv) {
    return magemit::cli::parse_and_dispatch(std::vector<std::string>(argv, argv + argc));
}
