#include "suite.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

// acceptance [criterion...]; no arguments runs all of them
int main(int argc, char ** argv)
{
    ordram::suite::Options options;
    if (auto * p = std::getenv("ORDRAM_PARALLEL"))
        options.parallel = std::max(1, std::atoi(p));

    std::vector<int> ids;
    for (int a = 1 ; a < argc ; ++a)
        ids.push_back(std::stoi(argv[a]));
    if (ids.empty())
        for (int id = 1 ; id <= ordram::suite::criterion_count ; ++id)
            ids.push_back(id);

    bool all = true;
    for (auto id : ids) {
        auto outcome = ordram::suite::run(id, options);
        std::cout << ordram::suite::format(outcome) << std::endl;
        all = all && outcome.pass;
    }
    return all ? 0 : 1;
}
