// Evaluates a handful of expressions and prints their q-expansions.
#include <cstdio>

#include "qverify/eval.hpp"

int main() {
    const char* exprs[] = {
        "phi(q)",
        "m(q; q^10; q)",
        "f(2,3,2; q^2, q^2; q)",
        "J(1,5)*J(12,30) - q*J(2,5)*J(6,30)",
        "D(2; -q^2; q^5; q; -1)",
    };
    for (const char* text : exprs) {
        const qv::Series s = qv::eval_expr(std::string(text), 12).truncated(13);
        std::printf("%-42s = %s\n", text, s.to_string().c_str());
    }
    return 0;
}
