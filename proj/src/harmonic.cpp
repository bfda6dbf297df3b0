#include "zetaforge/harmonic.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace zetaforge {

namespace {

struct HarmonicCache {
    std::mutex mutex;
    // table[a][j] = H_j^(a); table[a][0] = 0
    std::vector<std::vector<BigRational>> table;
};

HarmonicCache& cache()
{
    static HarmonicCache c;
    return c;
}

}  // namespace

BigRational harmonic(unsigned j, unsigned a)
{
    if (a == 0)
        throw std::invalid_argument("harmonic order must be positive");
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    if (c.table.size() <= a)
        c.table.resize(a + 1);
    auto& row = c.table[a];
    if (row.empty())
        row.emplace_back(0);
    while (row.size() <= j) {
        BigInt denom = ipow(BigInt(static_cast<unsigned long>(row.size())), a);
        row.push_back(row.back() + make_rational(BigInt(1), denom));
    }
    return row[j];
}

BigInt lcm_upto(unsigned n)
{
    if (n == 0)
        throw std::invalid_argument("lcm_upto needs n >= 1");
    BigInt acc(1);
    for (unsigned i = 2; i <= n; ++i)
        mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);
    return acc;
}

}  // namespace zetaforge
