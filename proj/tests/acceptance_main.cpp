// tests/acceptance_main.cpp — one pass/fail line per published claim.  Wraps the built-in
// verification suite and strengthens the classification check with the brute-force
// enumeration oracle (which lives on the test side only).
#include <algorithm>
#include <cstdio>
#include <string>

#include "orbirr/report.hpp"
#include "oracle_baskets.hpp"

int main() {
    using namespace orbirr;
    auto results = run_verification();

    for (CheckResult& c : results) {
        if (c.number != 3) continue;  // basket classification
        bool agree = true;
        for (long iX : {5L, 8L, 10L})
            agree = agree && enumerate_baskets(1, iX) == oracle::enumerate(1, iX);
        // At index 12 the numerical search finds one extra multiset that the
        // classification rules out; everything classified must still be found.
        const auto arith12 = oracle::enumerate(1, 12);
        const auto fams12 = enumerate_baskets(1, 12);
        agree = agree && arith12.size() == fams12.size() + 1 &&
                std::includes(arith12.begin(), arith12.end(), fams12.begin(), fams12.end());
        c.detail += agree ? "; brute-force oracle agrees" : "; brute-force oracle DISAGREES";
        if (!agree) c.pass = false;
    }

    std::fputs(render_verification(results, OutputFormat::text).c_str(), stdout);
    return all_pass(results) ? 0 : 1;
}
