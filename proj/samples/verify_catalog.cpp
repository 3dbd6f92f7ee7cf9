// Runs the built-in catalog at a modest order and prints a short summary.
#include <cstdio>

#include "qverify/catalog.hpp"

int main() {
    const auto reports = qv::verify_all(30, 2);
    std::size_t passed = 0;
    for (const auto& r : reports) {
        if (r.pass) ++passed;
        else std::printf("FAIL %s %s\n", r.id.c_str(), r.error.c_str());
    }
    std::printf("%zu/%zu identities verified to order q^30\n", passed, reports.size());
    return passed == reports.size() ? 0 : 1;
}
