// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Usage: acceptance [workers]

#include <treeconn/suites.hpp>

#include <algorithm>
#include <iostream>
#include <string>

using namespace treeconn;

int main(int argc, char** argv)
{
    int workers = argc > 1 ? std::stoi(argv[1]) : 0;
    std::vector<SuiteInfo> order = suite_catalog();
    std::sort(order.begin(), order.end(), [](const SuiteInfo& a, const SuiteInfo& b) { return a.criterion < b.criterion; });
    bool all = true;
    for (const SuiteInfo& info : order) {
        SuiteReport r = run_suite(info.name, std::nullopt, workers);
        all = all && r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << info.criterion << " " << info.name << ": "
                  << r.summary << " (" << r.seconds << " s)" << std::endl;
        for (std::size_t i = 0; i < r.problems.size() && i < 5; ++i) std::cout << "    " << r.problems[i] << '\n';
    }
    return all ? 0 : 1;
}
