#include "rpart/fib.hpp"

#include <cctype>
#include <mutex>
#include <shared_mutex>

namespace rpart {

Count parse_count(const std::string& text)
{
    if (text.empty())
        throw input_error("expected a nonnegative integer, got an empty string");
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw input_error("expected a nonnegative integer, got '" + text + "'");
    return Count(text);
}

namespace {

std::shared_mutex fib_mutex;
// fib_table[k] == F(k); entries 0, 1, 2 seeded.
std::vector<Count> fib_table{0, 1, 1};

} // namespace

Count fib(std::int64_t i)
{
    if (i <= 0)
        return 0;
    auto const idx = static_cast<std::size_t>(i);
    {
        std::shared_lock lock(fib_mutex);
        if (idx < fib_table.size())
            return fib_table[idx];
    }
    std::unique_lock lock(fib_mutex);
    while (fib_table.size() <= idx) {
        auto const k = fib_table.size();
        fib_table.push_back(fib_table[k - 1] + fib_table[k - 2]);
    }
    return fib_table[idx];
}

std::vector<LemmaVerdict> check_lemma_identities(int n_max)
{
    if (n_max < 1)
        throw input_error("lemma check needs n_max >= 1");

    std::vector<LemmaVerdict> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        Count odd = 0, even = 0, alt = 0;
        for (int i = 0; i <= n; ++i) {
            odd += fib(2 * i + 1);
            even += fib(2 * i);
        }
        for (int i = 0; i <= n / 2; ++i)
            alt += fib(n - 2 * i);

        LemmaVerdict v;
        v.n = n;
        v.odd_index_sum = odd == fib(2 * n + 2);
        v.even_index_sum = even == fib(2 * n + 1) - 1;
        v.alternating_sum = alt <= fib(n + 1);
        out.push_back(v);
    }
    return out;
}

} // namespace rpart
